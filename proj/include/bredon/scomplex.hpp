#pragma once

// Abstract simplicial complexes, subcomplex pairs, links, cones and
// barycentric subdivision.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bredon {

/// A simplex is the sorted list of its vertex positions in the owning
/// complex's vertex order. Orientation is the sorted order; the i-th
/// boundary face carries the sign (-1)^i.
using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto v : s) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class UnknownVertex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotAFace : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DuplicateVertex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotASubcomplex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Constructors drop identifiers of `vertex_order` that lie in no face; the
/// others keep their relative order, so vertex positions can shift.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `maximal`, given by vertex identifiers.
    static SimplicialComplex from_maximal_faces(std::vector<std::string> vertex_order,
                                                const std::vector<std::vector<std::string>>& maximal);

    /// Downward closure of simplices given by vertex positions. Input
    /// simplices need not be sorted.
    static SimplicialComplex from_simplices(std::vector<std::string> vertex_order,
                                            const std::vector<Simplex>& simplices);

    /// Builds from a face list that is already closed under taking faces.
    /// Closure is verified.
    static SimplicialComplex from_closed_faces(std::vector<std::string> vertex_order,
                                               std::vector<std::vector<Simplex>> faces_by_dim);

    const std::vector<std::string>& vertex_order() const { return vertex_order_; }
    std::size_t num_vertices() const { return vertex_order_.size(); }
    std::optional<std::uint32_t> vertex_index(const std::string& id) const;
    std::uint32_t require_vertex(const std::string& id) const;

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    bool empty() const { return faces_.empty(); }

    const std::vector<Simplex>& faces(int dim) const;
    std::size_t num_faces(int dim) const;
    std::size_t total_faces() const;
    /// Face counts f_0, f_1, ..., f_dim.
    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    std::optional<std::uint32_t> face_id(const Simplex& s) const;
    bool contains(const Simplex& s) const { return face_id(s).has_value(); }

    /// Converts identifiers to a sorted simplex; throws UnknownVertex.
    Simplex to_simplex(const std::vector<std::string>& ids) const;
    std::vector<std::string> ids(const Simplex& s) const;
    /// Canonical rendering "(a,b,c)".
    std::string render(const Simplex& s) const;

private:
    void index_faces();
    void drop_unused_vertices();

    std::vector<std::string> vertex_order_;
    std::unordered_map<std::string, std::uint32_t> vertex_index_;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, std::uint32_t, SimplexHash>> face_index_;
};

/// A subcomplex pair (total, sub). sub's vertex order is the restriction of
/// total's; `sub_in_total` translates sub vertex positions.
class ComplexPair {
public:
    ComplexPair() = default;

    const SimplicialComplex& total() const { return total_; }
    const SimplicialComplex& sub() const { return sub_; }
    /// Whether a simplex of `total` (in total's positions) lies in `sub`.
    bool in_sub(const Simplex& total_simplex) const;
    std::uint32_t sub_to_total(std::uint32_t v) const { return sub_in_total_.at(v); }

    friend ComplexPair make_pair(SimplicialComplex total, SimplicialComplex sub);

private:
    SimplicialComplex total_;
    SimplicialComplex sub_;
    std::vector<std::uint32_t> sub_in_total_;
    std::vector<std::int64_t> total_in_sub_;
};

/// Validates sub <= total; throws NotASubcomplex.
ComplexPair make_pair(SimplicialComplex total, SimplicialComplex sub);

SimplicialComplex link(const SimplicialComplex& c, const Simplex& sigma);
SimplicialComplex link(const SimplicialComplex& c, const std::vector<std::string>& sigma);

/// Cone with a new apex placed first in the vertex order.
SimplicialComplex cone(const SimplicialComplex& c, const std::string& apex);

/// Order complex of the face poset; vertices are the faces rendered
/// canonically, e.g. "(1,2)".
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c);

/// Full subcomplex on the vertices selected by `keep` (indexed by position);
/// the result keeps only the selected vertices, in order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const std::vector<char>& keep);

}  // namespace bredon
