#include "bredon/cog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "bredon/parallel.hpp"

namespace bredon {

SimpleComplexOfGroups SimpleComplexOfGroups::abstract(FinitePoset q, std::vector<std::vector<std::string>> classes)
{
    SimpleComplexOfGroups s;
    s.q = std::move(q);
    s.mode = CogMode::AbstractOmega;
    s.omega_classes = std::move(classes);
    return s;
}

SimpleComplexOfGroups SimpleComplexOfGroups::finite(FinitePoset q, PermGroup group,
                                                    const std::map<std::string, PermGroup>& locals)
{
    SimpleComplexOfGroups s;
    s.mode = CogMode::FiniteEmbedded;
    for (const auto& [id, _] : locals)
        q.index_of(id);
    for (const auto& id : q.elements()) {
        auto it = locals.find(id);
        if (it == locals.end())
            throw std::invalid_argument("no local group given for '" + id + "'");
        s.locals.push_back(it->second);
    }
    s.q = std::move(q);
    s.group = std::move(group);
    return s;
}

std::string to_string(ValidationIssue::Kind k)
{
    switch (k) {
    case ValidationIssue::Kind::NotStrict:
        return "NotStrict";
    case ValidationIssue::Kind::NotASubgroupAlongEdge:
        return "NotASubgroupAlongEdge";
    case ValidationIssue::Kind::NotInGroup:
        return "NotInGroup";
    case ValidationIssue::Kind::ClassNotAntichain:
        return "ClassNotAntichain";
    case ValidationIssue::Kind::NotAPartition:
        return "NotAPartition";
    case ValidationIssue::Kind::EmptyClass:
        return "EmptyClass";
    }
    return "Unknown";
}

namespace {

void check_classes(const FinitePoset& q, const std::vector<std::vector<std::string>>& classes,
                   ValidationReport& report, bool require_cover)
{
    std::vector<int> seen(q.size(), 0);
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto& cls = classes[k];
        if (cls.empty()) {
            report.issues.push_back({ValidationIssue::Kind::EmptyClass, "class " + std::to_string(k) + " is empty"});
            continue;
        }
        std::vector<std::uint32_t> idx;
        for (const auto& id : cls) {
            auto i = q.find(id);
            if (!i) {
                report.issues.push_back(
                    {ValidationIssue::Kind::NotAPartition, "class member '" + id + "' is not a poset element"});
                continue;
            }
            idx.push_back(*i);
            ++seen[*i];
        }
        for (auto a : idx)
            for (auto b : idx)
                if (q.less(a, b))
                    report.issues.push_back({ValidationIssue::Kind::ClassNotAntichain,
                                             "class contains '" + q.id(a) + "' < '" + q.id(b) + "'"});
    }
    for (std::uint32_t i = 0; i < q.size(); ++i) {
        if (seen[i] > 1)
            report.issues.push_back(
                {ValidationIssue::Kind::NotAPartition, "'" + q.id(i) + "' lies in more than one class"});
        else if (seen[i] == 0 && require_cover)
            report.issues.push_back({ValidationIssue::Kind::NotAPartition, "'" + q.id(i) + "' lies in no class"});
    }
}

}  // namespace

ValidationReport validate(const SimpleComplexOfGroups& scog)
{
    ValidationReport report;
    const auto& q = scog.q;
    if (scog.mode == CogMode::AbstractOmega) {
        check_classes(q, scog.omega_classes, report, true);
        return report;
    }
    if (scog.locals.size() != q.size()) {
        report.issues.push_back({ValidationIssue::Kind::NotInGroup, "expected one local group per poset element"});
        return report;
    }
    bool in_group = true;
    for (std::uint32_t i = 0; i < q.size(); ++i) {
        const auto& p = scog.locals[i];
        if (p.degree() != scog.group.degree()) {
            report.issues.push_back({ValidationIssue::Kind::NotInGroup,
                                     "local group at '" + q.id(i) + "' acts on " + std::to_string(p.degree()) +
                                         " points, G on " + std::to_string(scog.group.degree())});
            in_group = false;
            continue;
        }
        for (const auto& g : p.generators())
            if (!scog.group.contains(g)) {
                report.issues.push_back({ValidationIssue::Kind::NotInGroup,
                                         "generator " + g.to_string() + " of the local group at '" + q.id(i) +
                                             "' is not in G"});
                in_group = false;
            }
    }
    if (!in_group)
        return report;
    // Containment and strictness along covers imply them along every relation.
    for (auto [a, b] : q.covers()) {
        const auto& pa = scog.locals[a];
        const auto& pb = scog.locals[b];
        if (!subgroup_le(pa, pb))
            report.issues.push_back({ValidationIssue::Kind::NotASubgroupAlongEdge,
                                     "P_" + q.id(a) + " is not contained in P_" + q.id(b)});
        else if (pa.order() == pb.order())
            report.issues.push_back(
                {ValidationIssue::Kind::NotStrict, "P_" + q.id(a) + " = P_" + q.id(b) + " although " + q.id(a) +
                                                       " < " + q.id(b)});
    }
    return report;
}

void require_valid(const SimpleComplexOfGroups& scog)
{
    auto r = validate(scog);
    if (!r.ok())
        throw ValidationError(r.issues.front());
}

std::vector<std::vector<std::string>> omega_partition(const SimpleComplexOfGroups& scog)
{
    if (scog.mode == CogMode::AbstractOmega)
        return scog.omega_classes;
    std::vector<std::vector<std::string>> classes;
    std::vector<std::uint32_t> first;
    for (std::uint32_t i = 0; i < scog.q.size(); ++i) {
        bool placed = false;
        for (std::size_t k = 0; k < first.size() && !placed; ++k)
            if (subgroup_equal(scog.locals[first[k]], scog.locals[i])) {
                classes[k].push_back(scog.q.id(i));
                placed = true;
            }
        if (!placed) {
            first.push_back(i);
            classes.push_back({scog.q.id(i)});
        }
    }
    return classes;
}

ComplexPair omega_pair(const FinitePoset& q, const std::vector<std::uint32_t>& omega)
{
    auto up = q.upper_set(std::span<const std::uint32_t>(omega), false);
    auto up_strict = q.upper_set(std::span<const std::uint32_t>(omega), true);
    return make_pair(order_complex(q, std::span<const std::uint32_t>(up)),
                     order_complex(q, std::span<const std::uint32_t>(up_strict)));
}

namespace {

std::string class_label(const std::vector<std::string>& cls)
{
    if (cls.size() == 1)
        return cls.front();
    std::string out = "{";
    for (std::size_t i = 0; i < cls.size(); ++i)
        out += (i ? "," : "") + cls[i];
    return out + "}";
}

std::vector<DegreeWitness> witnesses(const std::vector<CohomologyGroup>& groups, int lo)
{
    std::vector<DegreeWitness> out;
    for (std::size_t k = 0; k < groups.size(); ++k)
        if (!groups[k].is_zero())
            out.push_back({lo + static_cast<int>(k), groups[k]});
    return out;
}

}  // namespace

DimensionReport cd_from_omega(const FinitePoset& q, const std::vector<std::vector<std::string>>& classes,
                              unsigned jobs)
{
    std::vector<std::vector<std::uint32_t>> idx(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].empty())
            throw EmptyClass("Omega class " + std::to_string(k) + " is empty");
        for (const auto& id : classes[k])
            idx[k].push_back(q.index_of(id));
        for (auto a : idx[k])
            for (auto b : idx[k])
                if (q.less(a, b))
                    throw ValidationError({ValidationIssue::Kind::ClassNotAntichain,
                                           "class contains '" + q.id(a) + "' < '" + q.id(b) + "'"});
    }
    DimensionReport report;
    report.entries.resize(classes.size());
    parallel_for(classes.size(), jobs, [&](std::size_t k) {
        auto& e = report.entries[k];
        e.label = class_label(classes[k]);
        e.members = classes[k];
        e.nonzero = witnesses(relative_cohomology_all(omega_pair(q, idx[k])), 0);
    });
    report.recompute_dimension();
    return report;
}

Development Development::build(const SimpleComplexOfGroups& scog, const DevelopOptions& opts)
{
    if (scog.mode != CogMode::FiniteEmbedded)
        throw std::invalid_argument("a development needs a finite-mode complex of groups");
    require_valid(scog);

    Development d;
    d.q_ = std::make_shared<const FinitePoset>(scog.q);
    d.group_ = std::make_shared<const IndexedGroup>(scog.group, opts.cap);
    const auto& g = *d.group_;
    const auto n = static_cast<std::uint32_t>(g.order());
    const auto& q = *d.q_;

    if (opts.rank.empty()) {
        d.rank_.resize(n);
        std::iota(d.rank_.begin(), d.rank_.end(), 0u);
    } else {
        if (opts.rank.size() != n)
            throw std::invalid_argument("total order has the wrong number of elements");
        std::vector<char> seen(n, 0);
        for (auto r : opts.rank) {
            if (r >= n || seen[r])
                throw std::invalid_argument("total order is not a permutation of ranks");
            seen[r] = 1;
        }
        d.rank_ = opts.rank;
    }
    std::vector<std::uint32_t> by_rank(n);
    for (std::uint32_t x = 0; x < n; ++x)
        by_rank[d.rank_[x]] = x;

    const auto m = static_cast<std::uint32_t>(q.size());
    for (std::uint32_t j = 0; j < m; ++j)
        d.locals_.push_back(g.subgroup(scog.locals[j]));

    d.coset_of_.assign(m, std::vector<std::uint32_t>(n, UINT32_MAX));
    d.coset_rep_.resize(m);
    d.coset_members_.resize(m);
    std::uint32_t total = 0;
    for (std::uint32_t j = 0; j < m; ++j) {
        d.offset_.push_back(total);
        for (auto x : by_rank) {
            if (d.coset_of_[j][x] != UINT32_MAX)
                continue;
            const auto c = static_cast<std::uint32_t>(d.coset_rep_[j].size());
            d.coset_rep_[j].push_back(x);
            std::vector<std::uint32_t> members;
            for (auto p : d.locals_[j].elements) {
                auto y = g.mul(x, p);
                d.coset_of_[j][y] = c;
                members.push_back(y);
            }
            std::sort(members.begin(), members.end());
            d.coset_members_[j].push_back(std::move(members));
        }
        total += static_cast<std::uint32_t>(d.coset_rep_[j].size());
        d.type_.insert(d.type_.end(), d.coset_rep_[j].size(), j);
    }

    std::vector<std::string> ids;
    ids.reserve(total);
    d.stab_.reserve(total);
    for (std::uint32_t j = 0; j < m; ++j)
        for (auto rep : d.coset_rep_[j]) {
            ids.push_back("(" + g.element(rep).to_string() + "," + q.id(j) + ")");
            d.stab_.push_back(g.conjugate(d.locals_[j], g.inverse(rep)));
        }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
    for (auto [a, b] : q.covers())
        for (std::uint32_t c = 0; c < d.coset_rep_[a].size(); ++c)
            rel.emplace_back(d.vertex(a, c), d.vertex(b, d.coset_of_[b][d.coset_rep_[a][c]]));
    d.poset_ = FinitePoset::build_indexed(ids, rel);
    for (std::uint32_t v = 0; v < total; ++v)
        if (d.poset_.input_position(v) != v)
            throw std::logic_error("development vertices are not in a linear extension");
    d.x_ = order_complex(d.poset_);
    d.k_ = order_complex(q);
    return d;
}

Development develop(const SimpleComplexOfGroups& scog, const DevelopOptions& opts)
{
    return Development::build(scog, opts);
}

Subgroup Development::simplex_stabilizer(const Simplex& s) const
{
    auto mask = stab_[s.front()].mask;
    for (auto v : s)
        mask &= stab_[v].mask;
    std::vector<std::uint32_t> el;
    for (auto b = mask.find_first(); b != boost::dynamic_bitset<>::npos; b = mask.find_next(b))
        el.push_back(static_cast<std::uint32_t>(b));
    return group_->make_subgroup(std::move(el));
}

Simplex Development::translate(std::uint32_t x, const Simplex& s) const
{
    Simplex out;
    out.reserve(s.size());
    for (auto v : s) {
        const auto j = type_[v];
        out.push_back(vertex(j, coset_of_[j][group_->mul(x, coset_rep_[j][v - offset_[j]])]));
    }
    return out;
}

Simplex Development::lift(std::uint32_t g, const std::vector<std::uint32_t>& chain) const
{
    Simplex out;
    out.reserve(chain.size());
    for (auto j : chain)
        out.push_back(vertex(j, coset_of_[j][g]));
    return out;
}

std::vector<std::uint32_t> Development::project(const Simplex& s) const
{
    std::vector<std::uint32_t> out;
    out.reserve(s.size());
    for (auto v : s)
        out.push_back(type_[v]);
    return out;
}

std::vector<std::uint32_t> random_order(std::size_t group_order, std::uint64_t seed)
{
    std::vector<std::uint32_t> rank(group_order);
    std::iota(rank.begin(), rank.end(), 0u);
    std::mt19937_64 rng(seed);
    std::shuffle(rank.begin(), rank.end(), rng);
    return rank;
}

FixedPair fixed_pair(const Development& dev, std::uint32_t j)
{
    const auto& pj = dev.local(j);
    const auto& x = dev.complex();
    std::vector<char> keep(x.num_vertices(), 0);
    FixedPair out;
    for (std::uint32_t v = 0; v < x.num_vertices(); ++v)
        if (pj.is_subset_of(dev.stabilizer(v))) {
            keep[v] = 1;
            out.fixed_vertices.push_back(v);
            out.singular.push_back(dev.stabilizer(v).size() > pj.size());
        }
    auto fixed = induced_subcomplex(x, keep);
    auto sing = induced_subcomplex(fixed, out.singular);
    out.pair = make_pair(std::move(fixed), std::move(sing));
    return out;
}

namespace {

// Right cosets P_J x, numbered by their least index.
std::vector<std::uint32_t> right_cosets(const Development& dev, std::uint32_t j)
{
    const auto& g = dev.group();
    std::vector<std::uint32_t> rc(g.order(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
        if (rc[x] != UINT32_MAX)
            continue;
        for (auto p : dev.local(j).elements)
            rc[g.mul(p, x)] = next;
        ++next;
    }
    return rc;
}

}  // namespace

LSet l_set(const Development& dev, std::uint32_t j)
{
    const auto& g = dev.group();
    const auto rc = right_cosets(dev, j);
    const auto count = *std::max_element(rc.begin(), rc.end()) + 1;
    std::vector<std::uint32_t> best(count, UINT32_MAX);
    for (std::uint32_t x = 0; x < g.order(); ++x)
        if (best[rc[x]] == UINT32_MAX || dev.rank(x) > dev.rank(best[rc[x]]))
            best[rc[x]] = x;

    LSet out;
    out.j = j;
    for (auto x : best) {
        auto h = g.conjugate(dev.local(j), x);
        LSet::Member mem{x, {}};
        for (std::uint32_t u = 0; u < dev.q().size(); ++u)
            if (dev.local(u) == h)
                mem.omega.push_back(u);
        if (!mem.omega.empty())
            out.members.push_back(std::move(mem));
    }
    std::sort(out.members.begin(), out.members.end(),
              [&](const auto& a, const auto& b) { return dev.rank(a.g) < dev.rank(b.g); });
    return out;
}

namespace {

// Q-chain -> (face index in K_Omega, relative column or -1).
using ChainIndex = std::unordered_map<Simplex, std::pair<std::uint32_t, std::int64_t>, SimplexHash>;

struct OmegaData {
    std::shared_ptr<const ComplexPair> pair;
    std::shared_ptr<const std::vector<std::uint32_t>> carrier;
    ChainIndex index;
};

OmegaData make_omega_data(const FinitePoset& q, const std::vector<std::uint32_t>& omega)
{
    OmegaData d;
    d.carrier = std::make_shared<const std::vector<std::uint32_t>>(
        q.upper_set(std::span<const std::uint32_t>(omega), false));
    d.pair = std::make_shared<const ComplexPair>(omega_pair(q, omega));
    const auto& total = d.pair->total();
    for (int n = 0; n <= total.dimension(); ++n) {
        const auto& faces = total.faces(n);
        std::int64_t col = 0;
        for (std::uint32_t f = 0; f < faces.size(); ++f) {
            Simplex chain;
            for (auto k : faces[f])
                chain.push_back((*d.carrier)[k]);
            const bool relative = !d.pair->in_sub(faces[f]);
            d.index.emplace(std::move(chain), std::make_pair(f, relative ? col++ : -1));
        }
    }
    return d;
}

}  // namespace

Decomposition::Decomposition(const Development& dev, std::uint32_t j)
    : dev_(&dev), j_(j), fixed_(fixed_pair(dev, j)), lset_(l_set(dev, j))
{
    const auto& fixed = fixed_.pair.total();

    std::map<std::vector<std::uint32_t>, OmegaData> cache;
    std::vector<const OmegaData*> data;
    for (const auto& mem : lset_.members) {
        auto it = cache.find(mem.omega);
        if (it == cache.end())
            it = cache.emplace(mem.omega, make_omega_data(dev.q(), mem.omega)).first;
        data.push_back(&it->second);
        pairs_.push_back(it->second.pair);
        carriers_.push_back(it->second.carrier);
    }

    top_ = std::max(fixed.dimension(), 0);
    for (const auto& p : pairs_)
        top_ = std::max(top_, p->total().dimension());

    const auto rc = right_cosets(dev, j);
    const auto members = lset_.members.size();
    rho_.assign(members, {});
    for (std::size_t i = 0; i < members; ++i)
        for (int n = 0; n <= top_; ++n)
            rho_[i].emplace_back(fixed.num_faces(n), relative_basis(*pairs_[i], n).size());

    for (int n = 0; n <= fixed.dimension(); ++n) {
        const auto& faces = fixed.faces(n);
        for (std::uint32_t r = 0; r < faces.size(); ++r) {
            Simplex xs;
            for (auto k : faces[r])
                xs.push_back(fixed_.fixed_vertices[k]);
            const auto chain = dev.project(xs);
            // rho(f)(v sigma) asks whether v lies in P_J g; v ranges over
            // every element with v sigma = this face, i.e. the coset of the
            // smallest vertex.
            std::set<std::uint32_t> hit;
            for (auto v : dev.coset_members(dev.vertex_type(xs.front()), dev.vertex_coset(xs.front())))
                hit.insert(rc[v]);
            for (std::size_t i = 0; i < members; ++i) {
                auto it = data[i]->index.find(chain);
                if (it == data[i]->index.end() || it->second.second < 0)
                    continue;
                if (!hit.count(rc[lset_.members[i].g]))
                    continue;
                if (hit.size() > 1)
                    well_defined_ = false;
                rho_[i][static_cast<std::size_t>(n)].add(r, static_cast<std::size_t>(it->second.second), Int(1));
            }
        }
    }
}

std::vector<Int> Decomposition::rho(std::size_t i, int n, const std::vector<Int>& f) const
{
    const auto& pair = *pairs_.at(i);
    const auto& faces = pair.total().faces(n);
    if (f.size() != faces.size())
        throw std::invalid_argument("cochain has " + std::to_string(f.size()) + " entries, expected " +
                                    std::to_string(faces.size()));
    std::vector<Int> restricted;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        if (pair.in_sub(faces[k])) {
            if (f[k] != 0)
                throw NotRelative("cochain is nonzero on " + pair.total().render(faces[k]) + " in K_{>Omega}");
        } else {
            restricted.push_back(f[k]);
        }
    }
    if (n < 0 || n > top_)
        return std::vector<Int>(fixed_.pair.total().num_faces(n));
    return rho_[i][static_cast<std::size_t>(n)].apply(restricted);
}

namespace {

std::vector<CohomologyGroup> padded(std::vector<CohomologyGroup> v, std::size_t n)
{
    v.resize(std::max(v.size(), n));
    return v;
}

}  // namespace

DecompositionReport verify_decomposition(const Decomposition& d, const Development& dev)
{
    DecompositionReport rep;
    rep.label = dev.q().id(d.lset().j);
    rep.l_size = d.lset().members.size();
    const auto top = static_cast<std::size_t>(d.top_degree());
    const auto& fixed = d.fixed().pair.total();

    auto left = padded(relative_cohomology_all(d.fixed().pair), top + 1);
    std::vector<std::vector<CohomologyGroup>> parts(top + 1);
    std::map<const ComplexPair*, std::vector<CohomologyGroup>> memo;
    for (std::size_t i = 0; i < rep.l_size; ++i) {
        const auto* key = &d.member_pair(i);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, padded(relative_cohomology_all(*key), top + 1)).first;
        for (std::size_t n = 0; n <= top; ++n)
            parts[n].push_back(it->second[n]);
    }
    rep.cohomology_match = true;
    for (std::size_t n = 0; n < left.size(); ++n) {
        DegreeComparison c;
        c.n = static_cast<int>(n);
        c.left = left[n];
        c.right = n < parts.size() ? direct_sum(parts[n]) : CohomologyGroup{};
        c.match = c.left == c.right;
        rep.cohomology_match = rep.cohomology_match && c.match;
        rep.degrees.push_back(std::move(c));
    }

    rep.sing_rows_zero = true;
    rep.basis_bijection = true;
    for (std::size_t n = 0; n <= top; ++n) {
        const int dn = static_cast<int>(n);
        const auto& faces = fixed.faces(dn);
        std::vector<int> row_hits(faces.size(), 0);
        std::size_t columns = 0;
        for (std::size_t i = 0; i < rep.l_size; ++i) {
            const auto& r = d.rho_matrix(i, dn);
            columns += r.cols();
            std::vector<int> col_hits(r.cols(), 0);
            for (std::size_t row = 0; row < r.rows(); ++row)
                for (const auto& e : r.row(row)) {
                    row_hits[row] += e.value == 1 ? 1 : 2;
                    col_hits[e.col] += e.value == 1 ? 1 : 2;
                }
            if (std::any_of(col_hits.begin(), col_hits.end(), [](int h) { return h != 1; }))
                rep.basis_bijection = false;
        }
        std::size_t relative_rows = 0;
        for (std::size_t row = 0; row < faces.size(); ++row) {
            if (d.fixed().pair.in_sub(faces[row])) {
                if (row_hits[row] != 0)
                    rep.sing_rows_zero = false;
            } else {
                ++relative_rows;
                if (row_hits[row] != 1)
                    rep.basis_bijection = false;
            }
        }
        if (relative_rows != columns)
            rep.basis_bijection = false;
    }

    rep.chain_map = true;
    for (std::size_t i = 0; i < rep.l_size && rep.chain_map; ++i) {
        auto rel = relative_cochain_complex(d.member_pair(i));
        for (int n = 0; n < d.top_degree(); ++n) {
            auto lhs = coboundary_matrix(fixed, n) * d.rho_matrix(i, n);
            auto rhs = d.rho_matrix(i, n + 1) * rel.coboundary(n);
            if (!(lhs == rhs)) {
                rep.chain_map = false;
                break;
            }
        }
    }
    rep.well_defined = d.well_defined();
    return rep;
}

DecompositionReport verify_decomposition(const Development& dev, std::uint32_t j)
{
    Decomposition d(dev, j);
    return verify_decomposition(d, dev);
}

bool CellIdentityReport::ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.union_ok && r.intersection_ok; });
}

CellIdentityReport verify_cell_identities(const Development& dev, std::uint32_t j)
{
    CellIdentityReport rep;
    rep.label = dev.q().id(j);
    const auto fp = fixed_pair(dev, j);
    std::vector<char> fixed(dev.complex().num_vertices(), 0), sing(dev.complex().num_vertices(), 0);
    for (std::size_t k = 0; k < fp.fixed_vertices.size(); ++k) {
        fixed[fp.fixed_vertices[k]] = 1;
        sing[fp.fixed_vertices[k]] = fp.singular[k];
    }
    const auto& kq = dev.fundamental_domain();
    const auto lset = l_set(dev, j);
    for (const auto& mem : lset.members) {
        const auto& q = dev.q();
        auto up = q.upper_set(std::span<const std::uint32_t>(mem.omega), false);
        auto up_strict = q.upper_set(std::span<const std::uint32_t>(mem.omega), true);
        std::vector<char> in_up(q.size(), 0), in_strict(q.size(), 0);
        for (auto u : up)
            in_up[u] = 1;
        for (auto u : up_strict)
            in_strict[u] = 1;

        std::set<Simplex> a, b, c, dd;
        for (int n = 0; n <= kq.dimension(); ++n)
            for (const auto& sigma : kq.faces(n)) {
                // K's vertex positions are Q indices.
                std::vector<std::uint32_t> chain(sigma.begin(), sigma.end());
                auto xs = dev.lift(mem.g, chain);
                auto all = [&](const std::vector<char>& mask, const auto& pts) {
                    return std::all_of(pts.begin(), pts.end(), [&](auto p) { return mask[p] != 0; });
                };
                if (all(sing, xs))
                    a.insert(xs);
                if (all(in_up, chain))
                    b.insert(xs);
                if (all(fixed, xs))
                    c.insert(xs);
                if (all(in_strict, chain))
                    dd.insert(xs);
            }
        std::set<Simplex> uni = a, inter;
        uni.insert(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(inter, inter.begin()));
        rep.rows.push_back({mem.g, uni == c, inter == dd});
    }
    return rep;
}

bool AcyclicityReport::ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.nonzero.empty(); });
}

AcyclicityReport check_acyclicity(const Development& dev)
{
    const auto& g = dev.group();
    std::vector<std::pair<std::string, Subgroup>> tests;
    const std::uint32_t id[] = {g.identity()};
    tests.emplace_back("1", g.generate(id));
    for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
        const auto& pj = dev.local(j);
        bool seen = false;
        for (const auto& [_, h] : tests) {
            if (h.size() != pj.size())
                continue;
            for (std::uint32_t x = 0; x < g.order() && !seen; ++x)
                if (g.conjugate(pj, x) == h)
                    seen = true;
            if (seen)
                break;
        }
        if (!seen)
            tests.emplace_back(dev.q().id(j), pj);
    }

    AcyclicityReport rep;
    const auto& x = dev.complex();
    for (const auto& [label, h] : tests) {
        std::vector<char> keep(x.num_vertices(), 0);
        std::size_t count = 0;
        for (std::uint32_t v = 0; v < x.num_vertices(); ++v)
            if (h.is_subset_of(dev.stabilizer(v))) {
                keep[v] = 1;
                ++count;
            }
        AcyclicityReport::Row row;
        row.label = label;
        row.subgroup_order = h.size();
        row.fixed_vertices = count;
        row.nonzero = witnesses(reduced_cohomology_all(induced_subcomplex(x, keep)), -1);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace bredon
