#pragma once

// Coxeter systems: validation, finite-type recognition, the poset of
// spherical subsets, the nerve, and the two dimension formulas.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bredon/dimension.hpp"
#include "bredon/poset.hpp"
#include "bredon/scomplex.hpp"

namespace bredon {

class InvalidCoxeterMatrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class UnknownGenerator : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class InvalidOrder : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bit i set means generator i belongs to the subset.
using GeneratorSet = std::uint64_t;

class CoxeterMatrix {
public:
    /// Label value standing for m = infinity, also its file encoding.
    static constexpr unsigned kInfinity = 0;
    static constexpr std::size_t kMaxRank = 64;

    CoxeterMatrix() = default;
    /// Throws InvalidCoxeterMatrix unless m is square, symmetric, m_ii = 1
    /// and m_ij >= 2 (or infinity) off the diagonal.
    CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<unsigned>> m);

    std::size_t rank() const { return generators_.size(); }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<std::vector<unsigned>>& labels() const { return m_; }
    unsigned label(std::size_t i, std::size_t j) const { return m_[i][j]; }
    bool infinite(std::size_t i, std::size_t j) const { return m_[i][j] == kInfinity; }

    GeneratorSet all() const;
    /// Throws UnknownGenerator.
    GeneratorSet subset(const std::vector<std::string>& names) const;
    std::vector<std::string> names(GeneratorSet j) const;
    /// "{s1,s3}"; the empty set renders as "{}".
    std::string render(GeneratorSet j) const;

    CoxeterMatrix without_generator(std::size_t i) const;

private:
    std::vector<std::string> generators_;
    std::vector<std::vector<unsigned>> m_;
};

/// Whether the parabolic subgroup generated by J is finite, decided by
/// matching each connected component of the Coxeter diagram on J against
/// the finite-type catalog (A_n, B_n, D_n, E_6-8, F_4, H_3, H_4, I_2(m)).
bool is_finite_type(const CoxeterMatrix& m, GeneratorSet j);
bool is_finite_type(const CoxeterMatrix& m, const std::vector<std::string>& j);

/// Catalog names of the irreducible components of J ("A2", "I2(7)", ...),
/// or nullopt when some component is not of finite type.
std::optional<std::vector<std::string>> finite_type_components(const CoxeterMatrix& m, GeneratorSet j);

/// Spherical subsets ordered by inclusion. `subsets[i]` is the subset at
/// poset index i; the empty set is index 0.
struct SphericalPoset {
    FinitePoset poset;
    std::vector<GeneratorSet> subsets;

    std::uint32_t index_of(GeneratorSet j) const;
};

SphericalPoset spherical_poset(const CoxeterMatrix& m);

/// Nerve L: vertices are the generators, faces the nonempty spherical sets.
struct Nerve {
    SimplicialComplex complex;
};

Nerve nerve(const CoxeterMatrix& m);
Nerve nerve(const CoxeterMatrix& m, const SphericalPoset& q);

/// max { n : reduced H^{n-1}(Lk(sigma_J, L)) != 0, J spherical }.
DimensionReport vcd_link_formula(const CoxeterMatrix& m, unsigned jobs = 1);

/// max { n : reduced H^{n-1}(K_{>J}) != 0, J spherical }, where K_{>J} is
/// the order complex of the spherical sets strictly containing J.
DimensionReport cd_building_formula(const CoxeterMatrix& m, unsigned jobs = 1);

/// Per-J comparison of the two routes in every degree.
struct RouteComparison {
    struct Row {
        std::string label;
        std::vector<CohomologyGroup> building;  // reduced H^{-1}.. of K_{>J}
        std::vector<CohomologyGroup> link;      // reduced H^{-1}.. of Lk(sigma_J, L)
        bool match = false;
    };
    std::vector<Row> rows;
    /// For J = empty: K_{>J} has the f-vector of the barycentric subdivision
    /// of L and the same cohomology.
    bool subdivision_match = false;
    bool all_match() const;
};

RouteComparison compare_routes(const CoxeterMatrix& m, unsigned jobs = 1);

struct GraphVertex {
    std::string name;
    unsigned order = 2;
};

/// Right-angled Coxeter matrix of a graph product of finite groups: m = 2 on
/// edges, infinity on non-edges. Throws InvalidOrder, InvalidGraph.
CoxeterMatrix graph_product_to_coxeter(const std::vector<GraphVertex>& vertices,
                                       const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace bredon
