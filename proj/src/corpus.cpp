#include "bredon/corpus.hpp"

#include <algorithm>
#include <random>

namespace bredon::corpus {

FinitePoset ngon_poset(unsigned n)
{
    if (n < 3)
        throw std::invalid_argument("an n-gon needs n >= 3");
    std::vector<std::string> el{"f"};
    std::vector<std::pair<std::string, std::string>> rel;
    for (unsigned i = 0; i < n; ++i)
        el.push_back("e" + std::to_string(i));
    for (unsigned i = 0; i < n; ++i)
        el.push_back("v" + std::to_string(i));
    for (unsigned i = 0; i < n; ++i) {
        const auto e = "e" + std::to_string(i);
        rel.emplace_back("f", e);
        rel.emplace_back(e, "v" + std::to_string(i));
        rel.emplace_back(e, "v" + std::to_string((i + 1) % n));
    }
    return FinitePoset::build(el, rel);
}

namespace {

std::vector<std::string> gens(unsigned n)
{
    std::vector<std::string> out;
    for (unsigned i = 1; i <= n; ++i)
        out.push_back("s" + std::to_string(i));
    return out;
}

std::vector<std::vector<unsigned>> all_commuting(unsigned n)
{
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
    for (unsigned i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

CoxeterMatrix path_matrix(const std::vector<unsigned>& labels)
{
    const auto n = static_cast<unsigned>(labels.size() + 1);
    auto m = all_commuting(n);
    for (unsigned i = 0; i + 1 < n; ++i)
        m[i][i + 1] = m[i + 1][i] = labels[i];
    return CoxeterMatrix(gens(n), m);
}

}  // namespace

CoxeterMatrix type_a(unsigned n)
{
    return path_matrix(std::vector<unsigned>(n - 1, 3));
}

CoxeterMatrix type_b(unsigned n)
{
    std::vector<unsigned> l(n - 1, 3);
    l[0] = 4;
    return path_matrix(l);
}

CoxeterMatrix type_d(unsigned n)
{
    // Path s1 - ... - s_{n-1} with s_n attached to s_{n-2}.
    auto m = all_commuting(n);
    for (unsigned i = 0; i + 2 < n; ++i)
        m[i][i + 1] = m[i + 1][i] = 3;
    m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
    return CoxeterMatrix(gens(n), m);
}

CoxeterMatrix type_h3()
{
    return path_matrix({5, 3});
}

CoxeterMatrix dihedral(unsigned m)
{
    return path_matrix({m});
}

CoxeterMatrix affine_a2()
{
    return CoxeterMatrix(gens(3), {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
}

CoxeterMatrix affine_c2()
{
    return path_matrix({4, 4});
}

CoxeterMatrix affine_g2()
{
    return path_matrix({6, 3});
}

CoxeterMatrix right_angled_cycle(unsigned n)
{
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, CoxeterMatrix::kInfinity));
    for (unsigned i = 0; i < n; ++i) {
        m[i][i] = 1;
        m[i][(i + 1) % n] = m[(i + 1) % n][i] = 2;
    }
    return CoxeterMatrix(gens(n), m);
}

std::vector<NamedCoxeter> coxeter_corpus()
{
    std::vector<NamedCoxeter> out;
    for (unsigned n = 1; n <= 4; ++n)
        out.push_back({"A" + std::to_string(n), type_a(n)});
    out.push_back({"B3", type_b(3)});
    out.push_back({"H3", type_h3()});
    for (unsigned m : {3u, 4u, 5u})
        out.push_back({"I2(" + std::to_string(m) + ")", dihedral(m)});
    out.push_back({"D_inf", dihedral(0)});
    out.push_back({"affine_A2", affine_a2()});
    out.push_back({"affine_C2", affine_c2()});
    out.push_back({"affine_G2", affine_g2()});
    for (unsigned n = 4; n <= 8; ++n)
        out.push_back({"cycle" + std::to_string(n), right_angled_cycle(n)});
    return out;
}

PermGroup group_from_cycles(std::size_t degree, const std::vector<std::vector<std::vector<std::uint32_t>>>& gens)
{
    std::vector<Permutation> ps;
    for (const auto& g : gens)
        ps.push_back(Permutation::from_cycles(degree, g));
    return PermGroup(degree, std::move(ps));
}

PermGroup symmetric_group(unsigned n)
{
    if (n < 2)
        return PermGroup(n, {});
    std::vector<std::uint32_t> cyc(n);
    for (unsigned i = 0; i < n; ++i)
        cyc[i] = i;
    return group_from_cycles(n, {{{0, 1}}, {cyc}});
}

namespace {

SimpleComplexOfGroups finite_instance(const std::vector<std::string>& el,
                                      const std::vector<std::pair<std::string, std::string>>& rel, PermGroup g,
                                      std::map<std::string, PermGroup> locals)
{
    auto s = SimpleComplexOfGroups::finite(FinitePoset::build(el, rel), std::move(g), locals);
    require_valid(s);
    return s;
}

}  // namespace

SimpleComplexOfGroups s3_chain()
{
    return finite_instance({"U", "T"}, {{"U", "T"}}, symmetric_group(3),
                           {{"U", group_from_cycles(3, {{{0, 1}}})}, {"T", symmetric_group(3)}});
}

SimpleComplexOfGroups s4_branch()
{
    return finite_instance({"A", "B", "C", "T"}, {{"A", "B"}, {"B", "T"}, {"C", "T"}}, symmetric_group(4),
                           {{"A", group_from_cycles(4, {{{0, 1}}})},
                            {"B", group_from_cycles(4, {{{0, 1}}, {{2, 3}}})},
                            {"C", group_from_cycles(4, {{{0, 1, 2}}})},
                            {"T", symmetric_group(4)}});
}

SimpleComplexOfGroups d4_square()
{
    auto d4 = group_from_cycles(4, {{{0, 1, 2, 3}}, {{1, 3}}});
    return finite_instance({"0", "a", "b", "T"}, {{"0", "a"}, {"0", "b"}, {"a", "T"}, {"b", "T"}}, d4,
                           {{"0", PermGroup(4, {})},
                            {"a", group_from_cycles(4, {{{1, 3}}})},
                            {"b", group_from_cycles(4, {{{0, 1}, {2, 3}}})},
                            {"T", d4}});
}

SimpleComplexOfGroups two_points()
{
    return finite_instance({"J"}, {}, group_from_cycles(2, {{{0, 1}}}), {{"J", PermGroup(2, {})}});
}

SimpleComplexOfGroups s3_antichain()
{
    auto t = group_from_cycles(3, {{{0, 1}}});
    return finite_instance({"U", "V"}, {}, symmetric_group(3), {{"U", t}, {"V", t}});
}

std::vector<NamedGroup> group_catalog()
{
    std::vector<NamedGroup> out;
    out.push_back({"S3", symmetric_group(3)});
    out.push_back({"D4", group_from_cycles(4, {{{0, 1, 2, 3}}, {{1, 3}}})});
    out.push_back({"A4", group_from_cycles(4, {{{0, 1, 2}}, {{1, 2, 3}}})});
    out.push_back({"S4", symmetric_group(4)});
    out.push_back({"Z2^3", group_from_cycles(6, {{{0, 1}}, {{2, 3}}, {{4, 5}}})});
    out.push_back({"D6", group_from_cycles(6, {{{0, 1, 2, 3, 4, 5}}, {{1, 5}, {2, 4}}})});
    out.push_back({"S3xS3", group_from_cycles(6, {{{0, 1}}, {{0, 1, 2}}, {{3, 4}}, {{3, 4, 5}}})});
    out.push_back({"S4xZ2", group_from_cycles(6, {{{0, 1}}, {{0, 1, 2, 3}}, {{4, 5}}})});
    out.push_back({"D4xS3", group_from_cycles(7, {{{0, 1, 2, 3}}, {{1, 3}}, {{4, 5}}, {{4, 5, 6}}})});
    out.push_back({"A5", group_from_cycles(5, {{{0, 1, 2}}, {{0, 1, 2, 3, 4}}})});
    out.push_back({"S5", symmetric_group(5)});
    return out;
}

namespace {

struct Draft {
    std::vector<std::uint32_t> gens;  // element indices
    Subgroup sub;
};

bool strictly_above_all(const Subgroup& h, const std::vector<const Subgroup*>& below)
{
    return std::all_of(below.begin(), below.end(),
                       [&](const Subgroup* b) { return b->is_subset_of(h) && b->size() < h.size(); });
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, std::size_t max_elements)
{
    std::mt19937_64 rng(seed);
    const auto catalog = group_catalog();
    for (;;) {
        const auto& named = catalog[std::uniform_int_distribution<std::size_t>(0, catalog.size() - 1)(rng)];
        IndexedGroup g(named.group);
        const auto m = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_elements))(rng);
        const double p = std::uniform_real_distribution<double>(0.25, 0.6)(rng);

        std::vector<std::string> el;
        for (std::size_t i = 0; i < m; ++i)
            el.push_back("q" + std::to_string(i));
        std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
        std::bernoulli_distribution coin(p);
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = i + 1; j < m; ++j)
                if (coin(rng))
                    rel.emplace_back(i, j);
        auto q = FinitePoset::build_indexed(el, rel);

        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g.order() - 1));
        std::vector<Draft> drafts(m);
        bool ok = true;
        for (std::uint32_t j = 0; j < m && ok; ++j) {
            std::vector<const Subgroup*> below;
            std::vector<std::uint32_t> gens;
            for (auto b : q.below(j)) {
                below.push_back(&drafts[b].sub);
                gens.insert(gens.end(), drafts[b].gens.begin(), drafts[b].gens.end());
            }
            std::vector<std::uint32_t> incomparable;
            for (std::uint32_t i = 0; i < j; ++i)
                if (!q.comparable(i, j))
                    incomparable.push_back(i);

            if (!incomparable.empty() && std::bernoulli_distribution(0.3)(rng)) {
                const auto src = incomparable[std::uniform_int_distribution<std::size_t>(0, incomparable.size() - 1)(rng)];
                const auto x = std::bernoulli_distribution(0.5)(rng) ? g.identity() : pick(rng);
                std::vector<std::uint32_t> cg;
                for (auto s : drafts[src].gens)
                    cg.push_back(g.conj(s, x));
                auto h = g.generate(cg);
                if (strictly_above_all(h, below)) {
                    drafts[j] = {std::move(cg), std::move(h)};
                    continue;
                }
            }

            auto h = g.generate(gens);
            const auto extra = std::uniform_int_distribution<int>(below.empty() ? 0 : 1, 2)(rng);
            for (int k = 0; k < extra || !strictly_above_all(h, below); ++k) {
                if (h.size() == g.order()) {
                    ok = strictly_above_all(h, below);
                    break;
                }
                std::uint32_t x;
                do
                    x = pick(rng);
                while (h.contains(x));
                gens.push_back(x);
                h = g.generate(gens);
                if (k > 8) {
                    ok = strictly_above_all(h, below);
                    break;
                }
            }
            drafts[j] = {std::move(gens), std::move(h)};
        }
        if (!ok)
            continue;

        std::map<std::string, PermGroup> locals;
        for (std::uint32_t j = 0; j < m; ++j) {
            std::vector<Permutation> ps;
            for (auto x : drafts[j].gens)
                ps.push_back(g.element(x));
            locals.emplace(q.id(j), PermGroup(g.degree(), std::move(ps)));
        }
        auto scog = SimpleComplexOfGroups::finite(q, named.group, locals);
        if (!validate(scog).ok())
            continue;
        return {named.name, seed, std::move(scog)};
    }
}

}  // namespace bredon::corpus
