#include "bredon/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "bredon/parallel.hpp"

namespace bredon {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<unsigned>> m)
    : generators_(std::move(generators)), m_(std::move(m))
{
    const auto n = generators_.size();
    if (n > kMaxRank)
        throw InvalidCoxeterMatrix("at most 64 generators are supported");
    std::set<std::string> seen;
    for (const auto& g : generators_)
        if (!seen.insert(g).second)
            throw InvalidCoxeterMatrix("duplicate generator '" + g + "'");
    if (m_.size() != n)
        throw InvalidCoxeterMatrix("matrix has " + std::to_string(m_.size()) + " rows, expected " +
                                   std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n)
            throw InvalidCoxeterMatrix("row " + std::to_string(i) + " has wrong length");
        if (m_[i][i] != 1)
            throw InvalidCoxeterMatrix("diagonal entry m_" + std::to_string(i) + std::to_string(i) + " must be 1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (m_[i][j] != m_[j][i])
                throw InvalidCoxeterMatrix("matrix is not symmetric at (" + generators_[i] + ", " + generators_[j] + ")");
            if (m_[i][j] == 1)
                throw InvalidCoxeterMatrix("off-diagonal entry 1 at (" + generators_[i] + ", " + generators_[j] + ")");
        }
}

GeneratorSet CoxeterMatrix::all() const
{
    return rank() == 64 ? ~GeneratorSet{0} : ((GeneratorSet{1} << rank()) - 1);
}

GeneratorSet CoxeterMatrix::subset(const std::vector<std::string>& names) const
{
    GeneratorSet out = 0;
    for (const auto& name : names) {
        auto it = std::find(generators_.begin(), generators_.end(), name);
        if (it == generators_.end())
            throw UnknownGenerator("unknown generator '" + name + "'");
        out |= GeneratorSet{1} << (it - generators_.begin());
    }
    return out;
}

std::vector<std::string> CoxeterMatrix::names(GeneratorSet j) const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rank(); ++i)
        if (j >> i & 1)
            out.push_back(generators_[i]);
    return out;
}

std::string CoxeterMatrix::render(GeneratorSet j) const
{
    std::string out = "{";
    bool first = true;
    for (const auto& n : names(j)) {
        if (!first)
            out += ",";
        out += n;
        first = false;
    }
    return out + "}";
}

CoxeterMatrix CoxeterMatrix::without_generator(std::size_t i) const
{
    auto gens = generators_;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    auto m = m_;
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto& row : m)
        row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));
    return CoxeterMatrix(std::move(gens), std::move(m));
}

namespace {

// Labeled diagram: lab[i][j] = 0 means no edge, otherwise the Coxeter label.
struct Diagram {
    std::size_t n = 0;
    std::vector<std::vector<unsigned>> lab;

    explicit Diagram(std::size_t k) : n(k), lab(k, std::vector<unsigned>(k, 0)) {}
    void edge(std::size_t a, std::size_t b, unsigned m) { lab[a][b] = lab[b][a] = m; }
    std::size_t degree(std::size_t v) const
    {
        return static_cast<std::size_t>(std::count_if(lab[v].begin(), lab[v].end(), [](unsigned x) { return x != 0; }));
    }
    std::vector<unsigned> label_multiset() const
    {
        std::vector<unsigned> out;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (lab[i][j])
                    out.push_back(lab[i][j]);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(degree(i));
        std::sort(out.begin(), out.end());
        return out;
    }
};

Diagram path(const std::vector<unsigned>& labels)
{
    Diagram d(labels.size() + 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        d.edge(i, i + 1, labels[i]);
    return d;
}

// Centre 0 with three legs of the given lengths, all labels 3.
Diagram star(std::size_t a, std::size_t b, std::size_t c)
{
    Diagram d(1 + a + b + c);
    std::size_t next = 1;
    for (auto len : {a, b, c}) {
        std::size_t prev = 0;
        for (std::size_t k = 0; k < len; ++k) {
            d.edge(prev, next, 3);
            prev = next++;
        }
    }
    return d;
}

struct CatalogEntry {
    std::string name;
    Diagram diagram;
};

std::vector<CatalogEntry> candidates(std::size_t k, const std::vector<unsigned>& labels)
{
    std::vector<CatalogEntry> out;
    out.push_back({"A" + std::to_string(k), path(std::vector<unsigned>(k - 1, 3))});
    if (k >= 2) {
        std::vector<unsigned> b(k - 1, 3);
        b[0] = 4;
        out.push_back({"B" + std::to_string(k), path(b)});
    }
    if (k >= 4)
        out.push_back({"D" + std::to_string(k), star(1, 1, k - 3)});
    if (k >= 6 && k <= 8)
        out.push_back({"E" + std::to_string(k), star(1, 2, k - 4)});
    if (k == 4) {
        out.push_back({"F4", path({3, 4, 3})});
        out.push_back({"H4", path({5, 3, 3})});
    }
    if (k == 3)
        out.push_back({"H3", path({5, 3})});
    if (k == 2 && labels.size() == 1 && labels[0] >= 5)
        out.push_back({"I2(" + std::to_string(labels[0]) + ")", path({labels[0]})});
    return out;
}

bool extend(const Diagram& a, const Diagram& b, std::vector<std::size_t>& order, std::size_t depth,
            std::vector<std::int64_t>& map, std::vector<char>& used)
{
    if (depth == order.size())
        return true;
    const auto v = order[depth];
    for (std::size_t w = 0; w < b.n; ++w) {
        if (used[w] || a.degree(v) != b.degree(w))
            continue;
        bool ok = true;
        for (std::size_t u = 0; u < a.n && ok; ++u)
            if (map[u] >= 0 && a.lab[v][u] != b.lab[w][static_cast<std::size_t>(map[u])])
                ok = false;
        if (!ok)
            continue;
        map[v] = static_cast<std::int64_t>(w);
        used[w] = 1;
        if (extend(a, b, order, depth + 1, map, used))
            return true;
        map[v] = -1;
        used[w] = 0;
    }
    return false;
}

bool isomorphic(const Diagram& a, const Diagram& b)
{
    if (a.n != b.n || a.label_multiset() != b.label_multiset() || a.degrees() != b.degrees())
        return false;
    std::vector<std::size_t> order(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return a.degree(x) > a.degree(y); });
    std::vector<std::int64_t> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    return extend(a, b, order, 0, map, used);
}

std::optional<std::string> classify_component(const CoxeterMatrix& m, const std::vector<std::size_t>& verts)
{
    Diagram d(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            unsigned l = m.label(verts[i], verts[j]);
            if (l == CoxeterMatrix::kInfinity)
                return std::nullopt;
            if (l >= 3)
                d.edge(i, j, l);
        }
    // Every finite-type diagram is a tree.
    if (d.label_multiset().size() + 1 != d.n)
        return std::nullopt;
    for (auto& c : candidates(d.n, d.label_multiset()))
        if (isomorphic(d, c.diagram))
            return c.name;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::string>> finite_type_components(const CoxeterMatrix& m, GeneratorSet j)
{
    std::vector<std::string> out;
    GeneratorSet left = j;
    while (left) {
        std::vector<std::size_t> comp;
        GeneratorSet frontier = left & (~left + 1);
        left &= ~frontier;
        while (frontier) {
            auto v = static_cast<std::size_t>(std::countr_zero(frontier));
            frontier &= frontier - 1;
            comp.push_back(v);
            for (GeneratorSet rest = left; rest; rest &= rest - 1) {
                auto u = static_cast<std::size_t>(std::countr_zero(rest));
                unsigned l = m.label(v, u);
                if (l == CoxeterMatrix::kInfinity || l >= 3) {
                    frontier |= GeneratorSet{1} << u;
                    left &= ~(GeneratorSet{1} << u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        auto name = classify_component(m, comp);
        if (!name)
            return std::nullopt;
        out.push_back(*name);
    }
    return out;
}

bool is_finite_type(const CoxeterMatrix& m, GeneratorSet j)
{
    return finite_type_components(m, j).has_value();
}

bool is_finite_type(const CoxeterMatrix& m, const std::vector<std::string>& j)
{
    return is_finite_type(m, m.subset(j));
}

std::uint32_t SphericalPoset::index_of(GeneratorSet j) const
{
    auto it = std::find(subsets.begin(), subsets.end(), j);
    if (it == subsets.end())
        throw UnknownElement("subset is not spherical");
    return static_cast<std::uint32_t>(it - subsets.begin());
}

SphericalPoset spherical_poset(const CoxeterMatrix& m)
{
    std::vector<GeneratorSet> found{0};
    std::unordered_set<GeneratorSet> known{0};
    std::vector<GeneratorSet> level{0};
    while (!level.empty()) {
        std::vector<GeneratorSet> next;
        for (auto j : level) {
            const std::size_t start = j ? static_cast<std::size_t>(64 - std::countl_zero(j)) : 0;
            for (std::size_t s = start; s < m.rank(); ++s) {
                GeneratorSet cand = j | (GeneratorSet{1} << s);
                bool heredity = true;
                for (GeneratorSet rest = cand; rest && heredity; rest &= rest - 1)
                    heredity = known.count(cand & ~(rest & (~rest + 1))) > 0;
                if (heredity && is_finite_type(m, cand))
                    next.push_back(cand);
            }
        }
        std::sort(next.begin(), next.end());
        for (auto j : next) {
            known.insert(j);
            found.push_back(j);
        }
        level = std::move(next);
    }

    std::unordered_map<GeneratorSet, std::uint32_t> pos;
    std::vector<std::string> ids;
    for (std::uint32_t i = 0; i < found.size(); ++i) {
        pos[found[i]] = i;
        ids.push_back(m.render(found[i]));
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
    for (std::uint32_t i = 0; i < found.size(); ++i)
        for (GeneratorSet rest = found[i]; rest; rest &= rest - 1)
            rel.emplace_back(pos.at(found[i] & ~(rest & (~rest + 1))), i);

    SphericalPoset out;
    out.poset = FinitePoset::build_indexed(ids, rel);
    out.subsets.resize(found.size());
    for (std::uint32_t i = 0; i < out.poset.size(); ++i)
        out.subsets[i] = found[out.poset.input_position(i)];
    return out;
}

Nerve nerve(const CoxeterMatrix& m, const SphericalPoset& q)
{
    std::vector<std::vector<Simplex>> faces;
    for (auto j : q.subsets) {
        if (!j)
            continue;
        const auto dim = static_cast<std::size_t>(std::popcount(j)) - 1;
        if (faces.size() <= dim)
            faces.resize(dim + 1);
        Simplex s;
        for (GeneratorSet rest = j; rest; rest &= rest - 1)
            s.push_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
        faces[dim].push_back(std::move(s));
    }
    for (auto& f : faces)
        std::sort(f.begin(), f.end());
    return Nerve{SimplicialComplex::from_closed_faces(m.generators(), std::move(faces))};
}

Nerve nerve(const CoxeterMatrix& m)
{
    return nerve(m, spherical_poset(m));
}

namespace {

Simplex to_simplex(GeneratorSet j)
{
    Simplex s;
    for (GeneratorSet rest = j; rest; rest &= rest - 1)
        s.push_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
    return s;
}

SimplicialComplex link_complex(const SimplicialComplex& l, GeneratorSet j)
{
    return j ? link(l, to_simplex(j)) : l;
}

SimplicialComplex above_complex(const SphericalPoset& q, std::uint32_t idx)
{
    std::uint32_t one[] = {idx};
    auto up = q.poset.upper_set(std::span<const std::uint32_t>(one), true);
    return order_complex(q.poset, std::span<const std::uint32_t>(up));
}

// reduced H^{n-1} != 0  <=>  n in the witness list; groups[k] is reduced H^{k-1}.
ClassEntry entry_from(const CoxeterMatrix& m, GeneratorSet j, const std::vector<CohomologyGroup>& groups)
{
    ClassEntry e;
    e.label = m.render(j);
    e.members = {e.label};
    for (std::size_t k = 0; k < groups.size(); ++k)
        if (!groups[k].is_zero())
            e.nonzero.push_back({static_cast<int>(k), groups[k]});
    return e;
}

}  // namespace

DimensionReport vcd_link_formula(const CoxeterMatrix& m, unsigned jobs)
{
    const auto q = spherical_poset(m);
    const auto l = nerve(m, q).complex;
    DimensionReport r;
    r.entries.resize(q.subsets.size());
    parallel_for(q.subsets.size(), jobs, [&](std::size_t i) {
        r.entries[i] = entry_from(m, q.subsets[i], reduced_cohomology_all(link_complex(l, q.subsets[i])));
    });
    r.recompute_dimension();
    return r;
}

DimensionReport cd_building_formula(const CoxeterMatrix& m, unsigned jobs)
{
    const auto q = spherical_poset(m);
    DimensionReport r;
    r.entries.resize(q.subsets.size());
    parallel_for(q.subsets.size(), jobs, [&](std::size_t i) {
        r.entries[i] = entry_from(m, q.subsets[i],
                                  reduced_cohomology_all(above_complex(q, static_cast<std::uint32_t>(i))));
    });
    r.recompute_dimension();
    return r;
}

namespace {

bool same_groups(std::vector<CohomologyGroup> a, std::vector<CohomologyGroup> b)
{
    const auto n = std::max(a.size(), b.size());
    a.resize(n);
    b.resize(n);
    return a == b;
}

}  // namespace

bool RouteComparison::all_match() const
{
    return subdivision_match && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match; });
}

RouteComparison compare_routes(const CoxeterMatrix& m, unsigned jobs)
{
    const auto q = spherical_poset(m);
    const auto l = nerve(m, q).complex;
    RouteComparison out;
    out.rows.resize(q.subsets.size());
    parallel_for(q.subsets.size(), jobs, [&](std::size_t i) {
        auto& row = out.rows[i];
        row.label = m.render(q.subsets[i]);
        row.building = reduced_cohomology_all(above_complex(q, static_cast<std::uint32_t>(i)));
        row.link = reduced_cohomology_all(link_complex(l, q.subsets[i]));
        row.match = same_groups(row.building, row.link);
    });
    const auto sd = barycentric_subdivision(l);
    const auto k_above_empty = above_complex(q, q.index_of(0));
    out.subdivision_match = sd.f_vector() == k_above_empty.f_vector() &&
                            same_groups(reduced_cohomology_all(sd), reduced_cohomology_all(k_above_empty));
    return out;
}

CoxeterMatrix graph_product_to_coxeter(const std::vector<GraphVertex>& vertices,
                                       const std::vector<std::pair<std::string, std::string>>& edges)
{
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> idx;
    for (const auto& v : vertices) {
        if (v.order < 2)
            throw InvalidOrder("vertex '" + v.name + "' has group order " + std::to_string(v.order) + " < 2");
        if (!idx.emplace(v.name, names.size()).second)
            throw InvalidGraph("duplicate vertex '" + v.name + "'");
        names.push_back(v.name);
    }
    const auto n = names.size();
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, CoxeterMatrix::kInfinity));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end())
            throw InvalidGraph("edge (" + a + ", " + b + ") references an unknown vertex");
        if (ia->second == ib->second)
            throw InvalidGraph("self-loop at '" + a + "'");
        m[ia->second][ib->second] = m[ib->second][ia->second] = 2;
    }
    return CoxeterMatrix(std::move(names), std::move(m));
}

}  // namespace bredon
