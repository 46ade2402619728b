#include <doctest.h>

#include <algorithm>

#include "bredon/cog.hpp"
#include "bredon/corpus.hpp"

using namespace bredon;
namespace bc = bredon::corpus;

namespace {

CohomologyGroup z(long long b)
{
    return {b, {}};
}

Permutation cyc(std::size_t d, std::vector<std::vector<std::uint32_t>> cs)
{
    return Permutation::from_cycles(d, cs);
}

std::vector<std::vector<std::string>> singletons(const FinitePoset& q)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& e : q.elements())
        out.push_back({e});
    return out;
}

std::optional<int> max_degree(const DecompositionReport& r)
{
    std::optional<int> m;
    for (const auto& d : r.degrees)
        if (!d.left.is_zero())
            m = d.n;
    return m;
}

}  // namespace

TEST_CASE("validation")
{
    CHECK(validate(bc::s3_chain()).ok());
    auto q = FinitePoset::build({"U", "T"}, {{"U", "T"}});
    auto s3 = bc::symmetric_group(3);
    auto same = SimpleComplexOfGroups::finite(q, s3, {{"U", s3}, {"T", s3}});
    auto r = validate(same);
    REQUIRE_FALSE(r.ok());
    CHECK(r.issues[0].kind == ValidationIssue::Kind::NotStrict);
    CHECK_THROWS_AS(require_valid(same), ValidationError);

    auto wrong = SimpleComplexOfGroups::finite(
        q, s3, {{"U", PermGroup(3, {cyc(3, {{0, 1}})})}, {"T", PermGroup(3, {cyc(3, {{1, 2}})})}});
    CHECK(validate(wrong).issues.at(0).kind == ValidationIssue::Kind::NotASubgroupAlongEdge);

    auto outside = SimpleComplexOfGroups::finite(
        q, PermGroup(3, {cyc(3, {{0, 1, 2}})}), {{"U", PermGroup(3, {})}, {"T", s3}});
    CHECK(validate(outside).issues.at(0).kind == ValidationIssue::Kind::NotInGroup);

    auto chain = SimpleComplexOfGroups::abstract(q, {{"U", "T"}});
    CHECK(validate(chain).issues.at(0).kind == ValidationIssue::Kind::ClassNotAntichain);
    auto missing = SimpleComplexOfGroups::abstract(q, {{"U"}});
    CHECK(validate(missing).issues.at(0).kind == ValidationIssue::Kind::NotAPartition);
    auto empty = SimpleComplexOfGroups::abstract(q, {{"U"}, {"T"}, {}});
    CHECK(validate(empty).issues.at(0).kind == ValidationIssue::Kind::EmptyClass);
}

TEST_CASE("Omega partitions")
{
    CHECK(omega_partition(bc::s3_chain()) == std::vector<std::vector<std::string>>{{"U"}, {"T"}});
    CHECK(omega_partition(bc::s3_antichain()) == std::vector<std::vector<std::string>>{{"U", "V"}});
    CHECK(omega_partition(bc::s4_branch()).size() == 4);
}

TEST_CASE("dimension from Omega")
{
    for (unsigned n = 3; n <= 8; ++n) {
        auto q = bc::ngon_poset(n);
        auto r = cd_from_omega(q, singletons(q));
        CHECK(r.dimension == 2);
    }
    auto dinf = FinitePoset::build({"e", "a", "b"}, {{"e", "a"}, {"e", "b"}});
    auto r = cd_from_omega(dinf, singletons(dinf));
    CHECK(r.dimension == 1);
    CHECK(r.entries.at(0).label == "e");
    CHECK(r.entries.at(0).nonzero.at(0).group == z(1));
    auto one = FinitePoset::build({"v"}, {});
    CHECK(cd_from_omega(one, singletons(one)).dimension == 0);
    CHECK_THROWS_AS(cd_from_omega(one, {{"v"}, {}}), EmptyClass);
    CHECK_THROWS_AS(cd_from_omega(one, {{"w"}}), UnknownElement);
}

TEST_CASE("S3 chain development")
{
    auto dev = develop(bc::s3_chain());
    const auto& x = dev.complex();
    CHECK(x.num_vertices() == 4);
    CHECK(x.num_faces(1) == 3);
    CHECK(x.dimension() == 1);
    CHECK(dev.num_cosets(dev.q().index_of("U")) == 3);
    CHECK(dev.num_cosets(dev.q().index_of("T")) == 1);
    CHECK(dev.fundamental_domain().num_vertices() == 2);
    for (const auto& g : reduced_cohomology_all(x))
        CHECK(g.is_zero());
}

TEST_CASE("one element with the whole group")
{
    auto q = FinitePoset::build({"J"}, {});
    auto s3 = bc::symmetric_group(3);
    auto dev = develop(SimpleComplexOfGroups::finite(q, s3, {{"J", s3}}));
    CHECK(dev.complex().num_vertices() == 1);
    CHECK(check_acyclicity(dev).ok());
}

TEST_CASE("size cap")
{
    DevelopOptions opts;
    opts.cap = 10;
    CHECK_THROWS_AS(develop(bc::s4_branch(), opts), SizeCapExceeded);
}

TEST_CASE("antichain development is disconnected")
{
    auto dev = develop(bc::s3_antichain());
    CHECK(dev.complex().num_vertices() == 6);
    CHECK(dev.complex().num_faces(1) == 0);
}

TEST_CASE("group action, lifts and projections")
{
    for (const auto& scog : {bc::s3_chain(), bc::s4_branch(), bc::d4_square()}) {
        auto dev = develop(scog);
        const auto& x = dev.complex();
        const auto& g = dev.group();
        for (int n = 0; n <= x.dimension(); ++n)
            for (const auto& s : x.faces(n)) {
                // Stabilizer admissibility: the pointwise stabilizer of a chain
                // is the stabilizer of its smallest vertex.
                CHECK(dev.simplex_stabilizer(s) == dev.stabilizer(s.front()));
                for (std::uint32_t a = 0; a < g.order(); ++a)
                    CHECK(x.contains(dev.translate(a, s)));
                auto chain = dev.project(s);
                CHECK(std::is_sorted(chain.begin(), chain.end()));
            }
        for (std::uint32_t a = 0; a < g.order(); ++a)
            for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
                auto v = dev.lift(a, {j});
                CHECK(dev.vertex_type(v[0]) == j);
                CHECK(dev.coset_of(j, a) == dev.vertex_coset(v[0]));
            }
    }
}

TEST_CASE("fixed pair of a trivial local group")
{
    auto dev = develop(bc::d4_square());
    auto j = dev.q().index_of("0");
    auto fp = fixed_pair(dev, j);
    CHECK(fp.pair.total().total_faces() == dev.complex().total_faces());
    for (std::size_t p = 0; p < fp.fixed_vertices.size(); ++p)
        CHECK(static_cast<bool>(fp.singular[p]) == (dev.stabilizer(fp.fixed_vertices[p]).size() > 1));
}

TEST_CASE("L(J) members")
{
    for (const auto& scog : {bc::s3_chain(), bc::s4_branch(), bc::d4_square(), bc::s3_antichain()}) {
        auto dev = develop(scog);
        const auto& g = dev.group();
        for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
            auto l = l_set(dev, j);
            const auto& pj = dev.local(j);
            for (const auto& m : l.members) {
                // Largest of its right coset.
                for (auto h : pj.elements)
                    CHECK(dev.rank(g.mul(h, m.g)) <= dev.rank(m.g));
                REQUIRE_FALSE(m.omega.empty());
                auto conj = g.conjugate(pj, m.g);
                for (auto u : m.omega)
                    CHECK(dev.local(u) == conj);
                CHECK(dev.q().is_antichain(m.omega));
            }
            for (std::size_t a = 1; a < l.members.size(); ++a)
                CHECK(dev.rank(l.members[a - 1].g) < dev.rank(l.members[a].g));
        }
    }
}

TEST_CASE("rho on the S3 chain")
{
    auto dev = develop(bc::s3_chain());
    auto t = dev.q().index_of("T");
    Decomposition d(dev, t);
    REQUIRE(d.lset().members.size() == 1);
    const auto& k = d.member_pair(0).total();
    std::vector<Int> f(k.num_faces(0), 0);
    CHECK(d.rho(0, 0, f) == std::vector<Int>(d.fixed().pair.total().num_faces(0), 0));
    auto tv = k.vertex_index("T");
    REQUIRE(tv);
    f[*tv] = 1;
    auto image = d.rho(0, 0, f);
    const auto& fixed = d.fixed().pair.total();
    REQUIRE(image.size() == fixed.num_faces(0));
    for (std::size_t p = 0; p < image.size(); ++p) {
        const auto xv = d.fixed().fixed_vertices[fixed.faces(0)[p][0]];
        CHECK(image[p] == (dev.vertex_type(xv) == t ? 1 : 0));
    }
}

TEST_CASE("rho rejects cochains that do not vanish on the subcomplex")
{
    auto dev = develop(bc::s3_chain());
    Decomposition d(dev, dev.q().index_of("U"));
    REQUIRE(d.lset().members.size() == 1);
    const auto& pair = d.member_pair(0);
    std::vector<Int> f(pair.total().num_faces(0), 0);
    bool has_sub = false;
    for (std::size_t k = 0; k < f.size(); ++k)
        if (pair.in_sub(pair.total().faces(0)[k])) {
            f[k] = 1;
            has_sub = true;
        }
    REQUIRE(has_sub);
    CHECK_THROWS_AS(d.rho(0, 0, f), NotRelative);
}

TEST_CASE("verification on the named instances")
{
    for (const auto& scog : {bc::s3_chain(), bc::s4_branch(), bc::d4_square(), bc::s3_antichain(), bc::two_points()}) {
        auto dev = develop(scog);
        for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
            CHECK(verify_decomposition(dev, j).ok());
            CHECK(verify_bredon(dev, j).ok());
            CHECK(verify_cell_identities(dev, j).ok());
        }
    }
    auto dev = develop(bc::s3_chain());
    auto u = verify_decomposition(dev, dev.q().index_of("U"));
    for (const auto& d : u.degrees)
        CHECK(d.left.is_zero());
    auto t = verify_decomposition(dev, dev.q().index_of("T"));
    CHECK(t.degrees.at(0).left == z(1));
}

TEST_CASE("acyclicity")
{
    CHECK(check_acyclicity(develop(bc::s3_chain())).ok());
    auto r = check_acyclicity(develop(bc::two_points()));
    CHECK_FALSE(r.ok());
    CHECK(r.rows.at(0).label == "1");
    CHECK_FALSE(r.rows.at(0).nonzero.empty());
}

TEST_CASE("Bredon complex is a cochain complex with matching basis sizes")
{
    auto dev = develop(bc::s4_branch());
    for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
        auto cx = bredon_cochain_complex(dev, j);  // delta o delta = 0 is checked on construction
        auto fp = relative_cochain_complex(fixed_pair(dev, j).pair);
        for (int n = 0; n <= dev.complex().dimension(); ++n)
            CHECK(cx.basis_size(n) == fp.basis_size(n));
    }
}

TEST_CASE("cell orbits cover every face")
{
    auto dev = develop(bc::d4_square());
    auto orbits = cell_orbits(dev);
    const auto& x = dev.complex();
    for (int n = 0; n <= x.dimension(); ++n) {
        std::size_t total = 0;
        for (const auto& o : orbits.by_degree[n])
            total += dev.group().order() / o.stabilizer.size();
        CHECK(total == x.num_faces(n));
        for (std::size_t k = 0; k < x.num_faces(n); ++k) {
            auto [orbit, t] = orbits.locate[n][k];
            CHECK(dev.translate(t, orbits.by_degree[n][orbit].rep) == x.faces(n)[k]);
        }
    }
}

TEST_CASE("random instances: validity, bounds and the two dimension computations agree")
{
    for (std::uint64_t seed = 51; seed <= 150; ++seed) {
        auto r = bc::random_instance(seed);
        CHECK(validate(r.scog).ok());
        CHECK(r.scog.q.size() <= 6);
        CHECK(r.scog.group.order() <= 120);
        auto dev = develop(r.scog);
        std::optional<int> best;
        for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
            auto rep = verify_decomposition(dev, j);
            CHECK_MESSAGE(rep.ok(), "seed ", seed, " J=", rep.label);
            if (auto m = max_degree(rep); m && (!best || *m > *best))
                best = m;
        }
        CHECK_MESSAGE(cd_from_omega(r.scog.q, omega_partition(r.scog)).dimension == best, "seed ", seed);
    }
}

TEST_CASE("random instances are reproducible")
{
    auto a = bc::random_instance(7);
    auto b = bc::random_instance(7);
    CHECK(a.group_name == b.group_name);
    CHECK(a.scog.q.elements() == b.scog.q.elements());
    for (std::size_t i = 0; i < a.scog.locals.size(); ++i)
        CHECK(subgroup_equal(a.scog.locals[i], b.scog.locals[i]));
}

TEST_CASE("random total orders")
{
    auto r = random_order(24, 3);
    auto s = r;
    std::sort(s.begin(), s.end());
    for (std::uint32_t i = 0; i < 24; ++i)
        CHECK(s[i] == i);
    CHECK(random_order(24, 3) == r);
}
