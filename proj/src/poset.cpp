#include "bredon/poset.hpp"

#include <algorithm>
#include <queue>

namespace bredon {

FinitePoset FinitePoset::build(const std::vector<std::string>& elements,
                               const std::vector<std::pair<std::string, std::string>>& relations)
{
    std::unordered_map<std::string, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < elements.size(); ++i)
        if (!pos.emplace(elements[i], i).second)
            throw std::invalid_argument("duplicate poset element '" + elements[i] + "'");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
    rel.reserve(relations.size());
    for (const auto& [a, b] : relations) {
        auto ia = pos.find(a);
        auto ib = pos.find(b);
        if (ia == pos.end())
            throw UnknownElement("relation references unknown element '" + a + "'");
        if (ib == pos.end())
            throw UnknownElement("relation references unknown element '" + b + "'");
        rel.emplace_back(ia->second, ib->second);
    }
    return build_indexed(elements, rel);
}

FinitePoset FinitePoset::build_indexed(const std::vector<std::string>& elements,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& relations)
{
    const std::size_t n = elements.size();
    {
        std::unordered_map<std::string, std::uint32_t> seen;
        for (std::uint32_t i = 0; i < n; ++i)
            if (!seen.emplace(elements[i], i).second)
                throw std::invalid_argument("duplicate poset element '" + elements[i] + "'");
    }
    std::vector<boost::dynamic_bitset<>> lt(n, boost::dynamic_bitset<>(n));
    for (auto [a, b] : relations) {
        if (a >= n || b >= n)
            throw UnknownElement("relation index out of range");
        if (a == b)
            throw CycleError("relation '" + elements[a] + "' < '" + elements[a] + "' is reflexive");
        lt[a].set(b);
    }
    // Warshall closure on bit rows.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (lt[i][k])
                lt[i] |= lt[k];
    for (std::size_t i = 0; i < n; ++i)
        if (lt[i][i])
            throw CycleError("order relation has a cycle through '" + elements[i] + "'");

    // Kahn's algorithm, smallest input position first.
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (auto b = lt[a].find_first(); b != boost::dynamic_bitset<>::npos; b = lt[a].find_next(b))
            ++indeg[b];
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for (std::uint32_t i = 0; i < n; ++i)
        if (indeg[i] == 0)
            ready.push(i);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        auto a = ready.top();
        ready.pop();
        order.push_back(a);
        for (auto b = lt[a].find_first(); b != boost::dynamic_bitset<>::npos; b = lt[a].find_next(b))
            if (--indeg[b] == 0)
                ready.push(static_cast<std::uint32_t>(b));
    }

    std::vector<std::uint32_t> new_index(n);
    for (std::uint32_t k = 0; k < n; ++k)
        new_index[order[k]] = k;

    FinitePoset p;
    p.ids_.resize(n);
    p.input_pos_.resize(n);
    p.lt_.assign(n, boost::dynamic_bitset<>(n));
    for (std::uint32_t k = 0; k < n; ++k) {
        const auto old = order[k];
        p.ids_[k] = elements[old];
        p.input_pos_[k] = old;
        p.index_.emplace(elements[old], k);
        for (auto b = lt[old].find_first(); b != boost::dynamic_bitset<>::npos; b = lt[old].find_next(b))
            p.lt_[k].set(new_index[b]);
    }
    return p;
}

std::optional<std::uint32_t> FinitePoset::find(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::uint32_t FinitePoset::index_of(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        throw UnknownElement("unknown poset element '" + id + "'");
    return it->second;
}

std::vector<std::uint32_t> FinitePoset::above(std::size_t i) const
{
    std::vector<std::uint32_t> out;
    for (auto b = lt_[i].find_first(); b != boost::dynamic_bitset<>::npos; b = lt_[i].find_next(b))
        out.push_back(static_cast<std::uint32_t>(b));
    return out;
}

std::vector<std::uint32_t> FinitePoset::below(std::size_t i) const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a < i; ++a)
        if (lt_[a][i])
            out.push_back(a);
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FinitePoset::covers() const
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < size(); ++a)
        for (auto b = lt_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = lt_[a].find_next(b)) {
            // b covers a unless some c with a < c < b exists.
            auto between = lt_[a];
            bool covered = true;
            for (auto c = between.find_first(); c != boost::dynamic_bitset<>::npos; c = between.find_next(c))
                if (lt_[c][b]) {
                    covered = false;
                    break;
                }
            if (covered)
                out.emplace_back(a, static_cast<std::uint32_t>(b));
        }
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> FinitePoset::relation_pairs() const
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < size(); ++a)
        for (auto b : above(a))
            out.emplace_back(a, b);
    return out;
}

bool FinitePoset::is_antichain(std::span<const std::uint32_t> subset) const
{
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            if (i != j && (subset[i] == subset[j] || less(subset[i], subset[j])))
                return false;
    return true;
}

std::size_t FinitePoset::height() const
{
    // Longest chain ending at each element; indices are a linear extension.
    std::vector<std::size_t> best(size(), 1);
    std::size_t h = 0;
    for (std::size_t b = 0; b < size(); ++b) {
        for (std::size_t a = 0; a < b; ++a)
            if (lt_[a][b])
                best[b] = std::max(best[b], best[a] + 1);
        h = std::max(h, best[b]);
    }
    return h;
}

std::vector<std::uint32_t> FinitePoset::upper_set(std::span<const std::uint32_t> omega, bool strict) const
{
    boost::dynamic_bitset<> in(size());
    for (auto u : omega) {
        if (u >= size())
            throw UnknownElement("upper_set: element index out of range");
        in |= lt_[u];
        if (!strict)
            in.set(u);
    }
    std::vector<std::uint32_t> out;
    for (auto b = in.find_first(); b != boost::dynamic_bitset<>::npos; b = in.find_next(b))
        out.push_back(static_cast<std::uint32_t>(b));
    return out;
}

std::vector<std::string> FinitePoset::upper_set(const std::vector<std::string>& omega, bool strict) const
{
    std::vector<std::uint32_t> idx;
    for (const auto& id : omega)
        idx.push_back(index_of(id));
    std::vector<std::string> out;
    for (auto i : upper_set(idx, strict))
        out.push_back(ids_[i]);
    return out;
}

SimplicialComplex order_complex(const FinitePoset& p, std::optional<std::span<const std::uint32_t>> carrier)
{
    std::vector<std::uint32_t> verts;
    if (carrier) {
        verts.assign(carrier->begin(), carrier->end());
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (!verts.empty() && verts.back() >= p.size())
            throw UnknownElement("order_complex: carrier element out of range");
    } else {
        verts.resize(p.size());
        for (std::uint32_t i = 0; i < p.size(); ++i)
            verts[i] = i;
    }

    const std::size_t n = verts.size();
    std::vector<std::string> ids;
    ids.reserve(n);
    for (auto v : verts)
        ids.push_back(p.id(v));

    // succ[k]: carrier positions strictly above position k.
    std::vector<std::vector<std::uint32_t>> succ(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (p.less(verts[a], verts[b]))
                succ[a].push_back(b);

    std::vector<std::vector<Simplex>> faces;
    Simplex chain;
    // Depth-first enumeration of increasing chains; every prefix is a face.
    auto extend = [&](auto&& self, std::uint32_t last) -> void {
        const std::size_t d = chain.size() - 1;
        if (faces.size() <= d)
            faces.resize(d + 1);
        faces[d].push_back(chain);
        for (auto next : succ[last]) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::uint32_t a = 0; a < n; ++a) {
        chain.assign(1, a);
        extend(extend, a);
    }
    for (auto& level : faces)
        std::sort(level.begin(), level.end());
    return SimplicialComplex::from_closed_faces(std::move(ids), std::move(faces));
}

SimplicialComplex order_complex(const FinitePoset& p, const std::vector<std::string>& carrier)
{
    std::vector<std::uint32_t> idx;
    idx.reserve(carrier.size());
    for (const auto& id : carrier)
        idx.push_back(p.index_of(id));
    return order_complex(p, std::span<const std::uint32_t>(idx));
}

}  // namespace bredon
