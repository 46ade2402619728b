#include "bredon/scomplex.hpp"

#include <algorithm>
#include <set>

#include "bredon/poset.hpp"

namespace bredon {

namespace {

std::vector<std::vector<Simplex>> downward_closure(const std::vector<Simplex>& simplices)
{
    std::vector<std::set<Simplex>> levels;
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("simplex repeats a vertex");
        if (s.empty())
            continue;
        // Enumerate all nonempty subsets through bitmasks; desk-scale
        // complexes keep simplices well under 20 vertices.
        if (s.size() > 24)
            throw std::invalid_argument("simplex too large to close downward");
        const std::uint32_t k = static_cast<std::uint32_t>(s.size());
        if (levels.size() < k)
            levels.resize(k);
        if (levels[k - 1].count(s))
            continue;
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex sub;
            for (std::uint32_t i = 0; i < k; ++i)
                if (mask & (1u << i))
                    sub.push_back(s[i]);
            levels[sub.size() - 1].insert(std::move(sub));
        }
    }
    std::vector<std::vector<Simplex>> out;
    for (auto& level : levels)
        out.emplace_back(level.begin(), level.end());
    while (!out.empty() && out.back().empty())
        out.pop_back();
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_faces(std::vector<std::string> vertex_order,
                                                        const std::vector<std::vector<std::string>>& maximal)
{
    SimplicialComplex c;
    c.vertex_order_ = std::move(vertex_order);
    for (std::uint32_t i = 0; i < c.vertex_order_.size(); ++i)
        if (!c.vertex_index_.emplace(c.vertex_order_[i], i).second)
            throw DuplicateVertex("duplicate vertex '" + c.vertex_order_[i] + "'");
    std::vector<Simplex> simplices;
    simplices.reserve(maximal.size());
    for (const auto& face : maximal)
        simplices.push_back(c.to_simplex(face));
    c.faces_ = downward_closure(simplices);
    c.drop_unused_vertices();
    c.index_faces();
    return c;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertex_order,
                                                    const std::vector<Simplex>& simplices)
{
    SimplicialComplex c;
    c.vertex_order_ = std::move(vertex_order);
    for (std::uint32_t i = 0; i < c.vertex_order_.size(); ++i)
        if (!c.vertex_index_.emplace(c.vertex_order_[i], i).second)
            throw DuplicateVertex("duplicate vertex '" + c.vertex_order_[i] + "'");
    for (const auto& s : simplices)
        for (auto v : s)
            if (v >= c.vertex_order_.size())
                throw UnknownVertex("simplex references vertex position out of range");
    c.faces_ = downward_closure(simplices);
    c.drop_unused_vertices();
    c.index_faces();
    return c;
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::vector<std::string> vertex_order,
                                                       std::vector<std::vector<Simplex>> faces_by_dim)
{
    SimplicialComplex c;
    c.vertex_order_ = std::move(vertex_order);
    for (std::uint32_t i = 0; i < c.vertex_order_.size(); ++i)
        if (!c.vertex_index_.emplace(c.vertex_order_[i], i).second)
            throw DuplicateVertex("duplicate vertex '" + c.vertex_order_[i] + "'");
    while (!faces_by_dim.empty() && faces_by_dim.back().empty())
        faces_by_dim.pop_back();
    for (std::size_t d = 0; d < faces_by_dim.size(); ++d)
        for (const auto& s : faces_by_dim[d]) {
            if (s.size() != d + 1 || !std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("malformed simplex in face list");
            for (auto v : s)
                if (v >= c.vertex_order_.size())
                    throw UnknownVertex("face references vertex position out of range");
        }
    c.faces_ = std::move(faces_by_dim);
    c.index_faces();
    for (std::size_t d = 1; d < c.faces_.size(); ++d)
        for (const auto& s : c.faces_[d])
            for (std::size_t i = 0; i <= d; ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                if (!c.contains(f))
                    throw std::invalid_argument("face list is not closed under taking faces");
            }
    c.drop_unused_vertices();
    c.index_faces();
    return c;
}

void SimplicialComplex::drop_unused_vertices()
{
    const std::size_t used = faces_.empty() ? 0 : faces_[0].size();
    if (used == vertex_order_.size())
        return;
    // Positions shift down monotonically, so sorted simplices stay sorted
    // and each level keeps its order.
    std::vector<char> keep(vertex_order_.size(), 0);
    if (!faces_.empty())
        for (const auto& v : faces_[0])
            keep[v[0]] = 1;
    std::vector<std::uint32_t> remap(vertex_order_.size(), UINT32_MAX);
    std::vector<std::string> order;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i]) {
            remap[i] = static_cast<std::uint32_t>(order.size());
            order.push_back(vertex_order_[i]);
        }
    for (auto& level : faces_)
        for (auto& s : level)
            for (auto& v : s)
                v = remap[v];
    vertex_order_ = std::move(order);
    vertex_index_.clear();
    for (std::uint32_t i = 0; i < vertex_order_.size(); ++i)
        vertex_index_.emplace(vertex_order_[i], i);
}

void SimplicialComplex::index_faces()
{
    face_index_.assign(faces_.size(), {});
    for (std::size_t d = 0; d < faces_.size(); ++d) {
        face_index_[d].reserve(faces_[d].size());
        for (std::uint32_t i = 0; i < faces_[d].size(); ++i)
            if (!face_index_[d].emplace(faces_[d][i], i).second)
                throw std::invalid_argument("duplicate face in face list");
    }
}

std::optional<std::uint32_t> SimplicialComplex::vertex_index(const std::string& id) const
{
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        return std::nullopt;
    return it->second;
}

std::uint32_t SimplicialComplex::require_vertex(const std::string& id) const
{
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end())
        throw UnknownVertex("unknown vertex '" + id + "'");
    return it->second;
}

const std::vector<Simplex>& SimplicialComplex::faces(int dim) const
{
    static const std::vector<Simplex> none;
    if (dim < 0 || dim >= static_cast<int>(faces_.size()))
        return none;
    return faces_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::num_faces(int dim) const
{
    return faces(dim).size();
}

std::size_t SimplicialComplex::total_faces() const
{
    std::size_t n = 0;
    for (const auto& level : faces_)
        n += level.size();
    return n;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& level : faces_)
        f.push_back(level.size());
    return f;
}

long long SimplicialComplex::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t d = 0; d < faces_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(faces_[d].size());
    return chi;
}

std::optional<std::uint32_t> SimplicialComplex::face_id(const Simplex& s) const
{
    if (s.empty() || s.size() > faces_.size())
        return std::nullopt;
    const auto& idx = face_index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

Simplex SimplicialComplex::to_simplex(const std::vector<std::string>& ids) const
{
    Simplex s;
    s.reserve(ids.size());
    for (const auto& id : ids)
        s.push_back(require_vertex(id));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::string> SimplicialComplex::ids(const Simplex& s) const
{
    std::vector<std::string> out;
    out.reserve(s.size());
    for (auto v : s)
        out.push_back(vertex_order_.at(v));
    return out;
}

std::string SimplicialComplex::render(const Simplex& s) const
{
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += vertex_order_.at(s[i]);
    }
    return out + ")";
}

bool ComplexPair::in_sub(const Simplex& total_simplex) const
{
    Simplex s;
    s.reserve(total_simplex.size());
    for (auto v : total_simplex) {
        auto mapped = total_in_sub_.at(v);
        if (mapped < 0)
            return false;
        s.push_back(static_cast<std::uint32_t>(mapped));
    }
    return sub_.contains(s);
}

ComplexPair make_pair(SimplicialComplex total, SimplicialComplex sub)
{
    ComplexPair p;
    p.total_in_sub_.assign(total.num_vertices(), -1);
    std::int64_t last = -1;
    for (std::uint32_t v = 0; v < sub.num_vertices(); ++v) {
        auto t = total.vertex_index(sub.vertex_order()[v]);
        if (!t)
            throw NotASubcomplex("vertex '" + sub.vertex_order()[v] + "' of sub is not a vertex of total");
        if (static_cast<std::int64_t>(*t) <= last)
            throw NotASubcomplex("sub's vertex order is not the restriction of total's");
        last = *t;
        p.sub_in_total_.push_back(*t);
        p.total_in_sub_[*t] = v;
    }
    for (int d = 0; d <= sub.dimension(); ++d)
        for (const auto& s : sub.faces(d)) {
            Simplex t;
            t.reserve(s.size());
            for (auto v : s)
                t.push_back(p.sub_in_total_[v]);
            if (!total.contains(t))
                throw NotASubcomplex("face " + sub.render(s) + " of sub is not a face of total");
        }
    p.total_ = std::move(total);
    p.sub_ = std::move(sub);
    return p;
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& sigma_in)
{
    Simplex sigma = sigma_in;
    std::sort(sigma.begin(), sigma.end());
    if (!c.contains(sigma))
        throw NotAFace("link: simplex is not a face of the complex");
    std::vector<Simplex> taus;
    for (int d = static_cast<int>(sigma.size()); d <= c.dimension(); ++d)
        for (const auto& rho : c.faces(d))
            if (std::includes(rho.begin(), rho.end(), sigma.begin(), sigma.end())) {
                Simplex tau;
                std::set_difference(rho.begin(), rho.end(), sigma.begin(), sigma.end(),
                                    std::back_inserter(tau));
                taus.push_back(std::move(tau));
            }
    return SimplicialComplex::from_simplices(c.vertex_order(), taus);
}

SimplicialComplex link(const SimplicialComplex& c, const std::vector<std::string>& sigma)
{
    Simplex s;
    for (const auto& id : sigma) {
        auto v = c.vertex_index(id);
        if (!v)
            throw NotAFace("link: '" + id + "' is not a vertex");
        s.push_back(*v);
    }
    return link(c, s);
}

SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex)
{
    if (c.vertex_index(apex))
        throw DuplicateVertex("cone apex '" + apex + "' is already a vertex");
    std::vector<std::string> order;
    order.reserve(c.num_vertices() + 1);
    order.push_back(apex);
    for (const auto& v : c.vertex_order())
        order.push_back(v);
    std::vector<std::vector<Simplex>> faces(static_cast<std::size_t>(c.dimension() + 2));
    faces[0].push_back(Simplex{0});
    for (int d = 0; d <= c.dimension(); ++d)
        for (const auto& s : c.faces(d)) {
            Simplex shifted;
            shifted.reserve(s.size() + 1);
            for (auto v : s)
                shifted.push_back(v + 1);
            faces[static_cast<std::size_t>(d)].push_back(shifted);
            shifted.insert(shifted.begin(), 0);
            faces[static_cast<std::size_t>(d + 1)].push_back(std::move(shifted));
        }
    for (auto& level : faces)
        std::sort(level.begin(), level.end());
    return SimplicialComplex::from_closed_faces(std::move(order), std::move(faces));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c)
{
    // Face poset: faces listed by dimension, so input order is already a
    // linear extension of inclusion.
    std::vector<std::string> ids;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
    std::vector<std::uint32_t> offset;
    for (int d = 0; d <= c.dimension(); ++d) {
        offset.push_back(static_cast<std::uint32_t>(ids.size()));
        for (const auto& s : c.faces(d))
            ids.push_back(c.render(s));
    }
    for (int d = 1; d <= c.dimension(); ++d)
        for (std::uint32_t i = 0; i < c.num_faces(d); ++i) {
            const auto& s = c.faces(d)[i];
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
                auto fid = c.face_id(f);
                rel.emplace_back(offset[static_cast<std::size_t>(d - 1)] + *fid,
                                 offset[static_cast<std::size_t>(d)] + i);
            }
        }
    auto poset = FinitePoset::build_indexed(ids, rel);
    return order_complex(poset);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<char>& keep)
{
    if (keep.size() != c.num_vertices())
        throw std::invalid_argument("induced_subcomplex: mask size mismatch");
    std::vector<std::int64_t> map(c.num_vertices(), -1);
    std::vector<std::string> order;
    for (std::uint32_t v = 0; v < c.num_vertices(); ++v)
        if (keep[v]) {
            map[v] = static_cast<std::int64_t>(order.size());
            order.push_back(c.vertex_order()[v]);
        }
    std::vector<std::vector<Simplex>> faces;
    for (int d = 0; d <= c.dimension(); ++d) {
        std::vector<Simplex> level;
        for (const auto& s : c.faces(d)) {
            Simplex t;
            bool ok = true;
            for (auto v : s) {
                if (map[v] < 0) {
                    ok = false;
                    break;
                }
                t.push_back(static_cast<std::uint32_t>(map[v]));
            }
            if (ok)
                level.push_back(std::move(t));
        }
        if (level.empty())
            break;
        faces.push_back(std::move(level));
    }
    return SimplicialComplex::from_closed_faces(std::move(order), std::move(faces));
}

}  // namespace bredon
