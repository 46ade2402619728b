#pragma once

// Simple complexes of finite groups, their finite developments, fixed-point
// pairs, the distinguished elements L(J), the splitting maps rho and the
// decomposition of the fixed-pair cochains.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bredon/cohomology.hpp"
#include "bredon/dimension.hpp"
#include "bredon/pgroup.hpp"
#include "bredon/poset.hpp"
#include "bredon/scomplex.hpp"

namespace bredon {

class EmptyClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class NotRelative : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class CogMode { AbstractOmega, FiniteEmbedded };

/// Abstract mode carries Q and an explicit Omega partition. Finite mode
/// carries Q, a permutation group G and one subgroup of G per element of Q,
/// `locals[i]` belonging to the Q element at index i.
struct SimpleComplexOfGroups {
    FinitePoset q;
    CogMode mode = CogMode::AbstractOmega;
    std::vector<std::vector<std::string>> omega_classes;
    PermGroup group;
    std::vector<PermGroup> locals;

    static SimpleComplexOfGroups abstract(FinitePoset q, std::vector<std::vector<std::string>> classes);
    /// Throws UnknownElement / std::invalid_argument if `locals` does not
    /// name every element of q exactly once.
    static SimpleComplexOfGroups finite(FinitePoset q, PermGroup group, const std::map<std::string, PermGroup>& locals);
};

struct ValidationIssue {
    enum class Kind {
        NotStrict,
        NotASubgroupAlongEdge,
        NotInGroup,
        ClassNotAntichain,
        NotAPartition,
        EmptyClass,
    };
    Kind kind;
    std::string message;
};

std::string to_string(ValidationIssue::Kind k);

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Thrown by require_valid; carries the first issue.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(ValidationIssue issue)
        : std::invalid_argument(issue.message), issue_(std::move(issue))
    {
    }
    const ValidationIssue& issue() const { return issue_; }

private:
    ValidationIssue issue_;
};

ValidationReport validate(const SimpleComplexOfGroups& scog);
void require_valid(const SimpleComplexOfGroups& scog);

/// Classes of Q under equality of local groups, each class in poset order,
/// classes ordered by their first element.
std::vector<std::vector<std::string>> omega_partition(const SimpleComplexOfGroups& scog);

/// max { n : H^n(K_Omega, K_{>Omega}) != 0 } over the classes. Throws
/// EmptyClass, UnknownElement.
DimensionReport cd_from_omega(const FinitePoset& q, const std::vector<std::vector<std::string>>& classes,
                              unsigned jobs = 1);

/// The relative pair (K_Omega, K_{>Omega}) of a set of Q indices.
ComplexPair omega_pair(const FinitePoset& q, const std::vector<std::uint32_t>& omega);

struct DevelopOptions {
    std::size_t cap = default_size_cap();
    /// rank[x] is the position of group element x (IndexedGroup index) in
    /// the total order; empty means the default order.
    std::vector<std::uint32_t> rank;
};

/// The development of a finite-mode simple complex of groups: the poset of
/// pairs (gP_J, J) and its order complex X. Vertex k of X is element k of
/// the poset; vertices are grouped by J in Q order, then by coset.
class Development {
public:
    static Development build(const SimpleComplexOfGroups& scog, const DevelopOptions& opts = {});

    const FinitePoset& q() const { return *q_; }
    const IndexedGroup& group() const { return *group_; }
    const FinitePoset& poset() const { return poset_; }
    const SimplicialComplex& complex() const { return x_; }
    const SimplicialComplex& fundamental_domain() const { return k_; }

    const Subgroup& local(std::uint32_t j) const { return locals_[j]; }
    std::uint32_t rank(std::uint32_t x) const { return rank_[x]; }
    const std::vector<std::uint32_t>& ranks() const { return rank_; }

    std::size_t num_cosets(std::uint32_t j) const { return coset_members_[j].size(); }
    /// Index of the left coset x P_J.
    std::uint32_t coset_of(std::uint32_t j, std::uint32_t x) const { return coset_of_[j][x]; }
    /// Least element of the coset under the total order.
    std::uint32_t coset_rep(std::uint32_t j, std::uint32_t c) const { return coset_rep_[j][c]; }
    const std::vector<std::uint32_t>& coset_members(std::uint32_t j, std::uint32_t c) const
    {
        return coset_members_[j][c];
    }

    std::uint32_t vertex(std::uint32_t j, std::uint32_t coset) const { return offset_[j] + coset; }
    std::uint32_t vertex_type(std::uint32_t v) const { return type_[v]; }
    std::uint32_t vertex_coset(std::uint32_t v) const { return v - offset_[type_[v]]; }
    /// g P_J g^-1 for the vertex (g P_J, J).
    const Subgroup& stabilizer(std::uint32_t v) const { return stab_[v]; }
    /// Pointwise stabilizer of a simplex of X (intersection over vertices).
    Subgroup simplex_stabilizer(const Simplex& s) const;

    /// x acting on a simplex of X.
    Simplex translate(std::uint32_t x, const Simplex& s) const;
    /// Image of a chain of Q (ascending Q indices) under J -> (g P_J, J).
    Simplex lift(std::uint32_t g, const std::vector<std::uint32_t>& chain) const;
    /// Q indices of the vertices of a simplex of X.
    std::vector<std::uint32_t> project(const Simplex& s) const;

private:
    std::shared_ptr<const FinitePoset> q_;
    std::shared_ptr<const IndexedGroup> group_;
    std::vector<Subgroup> locals_;
    std::vector<std::uint32_t> rank_;
    std::vector<std::vector<std::uint32_t>> coset_of_;
    std::vector<std::vector<std::uint32_t>> coset_rep_;
    std::vector<std::vector<std::vector<std::uint32_t>>> coset_members_;
    std::vector<std::uint32_t> offset_;
    std::vector<std::uint32_t> type_;
    std::vector<Subgroup> stab_;
    FinitePoset poset_;
    SimplicialComplex x_;
    SimplicialComplex k_;
};

Development develop(const SimpleComplexOfGroups& scog, const DevelopOptions& opts = {});

/// Uniformly random total order on the group, as a rank vector.
std::vector<std::uint32_t> random_order(std::size_t group_order, std::uint64_t seed);

/// (X^{P_J}, X^{P_J}_sing) with the X vertex behind each vertex position.
struct FixedPair {
    ComplexPair pair;
    std::vector<std::uint32_t> fixed_vertices;  // fixed position -> X vertex
    std::vector<char> singular;                 // per fixed position
};

FixedPair fixed_pair(const Development& dev, std::uint32_t j);

struct LSet {
    struct Member {
        std::uint32_t g;
        std::vector<std::uint32_t> omega;  // Q indices, ascending
    };
    std::uint32_t j = 0;
    std::vector<Member> members;  // increasing in the total order
};

LSet l_set(const Development& dev, std::uint32_t j);

/// Everything needed to compare C*(X^{P_J}, X^{P_J}_sing) with the direct
/// sum over L(J), including the matrices of the maps rho.
class Decomposition {
public:
    Decomposition(const Development& dev, std::uint32_t j);

    const FixedPair& fixed() const { return fixed_; }
    const LSet& lset() const { return lset_; }
    /// (K_Omega, K_{>Omega}) for member i, shared between equal Omegas.
    const ComplexPair& member_pair(std::size_t i) const { return *pairs_[i]; }
    const std::vector<std::uint32_t>& member_carrier(std::size_t i) const { return *carriers_[i]; }

    /// rho for member i in degree n: rows are the n-faces of X^{P_J}, columns
    /// the relative basis of (K_Omega, K_{>Omega}) in degree n.
    const IntMatrix& rho_matrix(std::size_t i, int n) const { return rho_[i][static_cast<std::size_t>(n)]; }
    /// rho applied to a cochain given on all n-faces of K_Omega; the result
    /// is indexed by the n-faces of X^{P_J}. Throws NotRelative.
    std::vector<Int> rho(std::size_t i, int n, const std::vector<Int>& f) const;

    int top_degree() const { return top_; }
    /// Some coset v P_{S(sigma)} met P_J g in part only.
    bool well_defined() const { return well_defined_; }

private:
    const Development* dev_;
    std::uint32_t j_;
    FixedPair fixed_;
    LSet lset_;
    int top_ = 0;
    std::vector<std::shared_ptr<const ComplexPair>> pairs_;
    std::vector<std::shared_ptr<const std::vector<std::uint32_t>>> carriers_;
    std::vector<std::vector<IntMatrix>> rho_;
    bool well_defined_ = true;
};

struct DegreeComparison {
    int n = 0;
    CohomologyGroup left;
    CohomologyGroup right;
    bool match = false;
};

struct DecompositionReport {
    std::string label;
    std::vector<DegreeComparison> degrees;
    std::size_t l_size = 0;
    bool cohomology_match = false;
    bool sing_rows_zero = false;
    bool basis_bijection = false;
    bool chain_map = false;
    bool well_defined = false;
    bool ok() const { return cohomology_match && sing_rows_zero && basis_bijection && chain_map && well_defined; }
};

DecompositionReport verify_decomposition(const Development& dev, std::uint32_t j);
DecompositionReport verify_decomposition(const Decomposition& d, const Development& dev);

struct CellIdentityReport {
    std::string label;
    struct Row {
        std::uint32_t g;
        bool union_ok = false;
        bool intersection_ok = false;
    };
    std::vector<Row> rows;
    bool ok() const;
};

CellIdentityReport verify_cell_identities(const Development& dev, std::uint32_t j);

/// Bredon cochain complex with coefficients Q_K, K = P_J, built from the
/// G-orbits of cells of X.
CochainComplexZ bredon_cochain_complex(const Development& dev, std::uint32_t j);

struct BredonReport {
    std::string label;
    std::vector<DegreeComparison> degrees;  // left: Bredon, right: fixed pair
    bool basis_counts_match = false;
    bool ok() const;
};

BredonReport verify_bredon(const Development& dev, std::uint32_t j);

struct AcyclicityReport {
    struct Row {
        std::string label;                  // "1" or the Q element whose local group is H
        std::size_t subgroup_order = 0;
        std::size_t fixed_vertices = 0;
        std::vector<DegreeWitness> nonzero;  // reduced cohomology of X^H
    };
    std::vector<Row> rows;
    bool ok() const;
};

/// Reduced cohomology of X^H for H trivial and for one local group from
/// each conjugacy class. Vanishing is necessary for contractibility only.
AcyclicityReport check_acyclicity(const Development& dev);

/// Orbit data of the G-action on the cells of X, found by acting with every
/// group element on orbit representatives.
struct CellOrbits {
    struct Orbit {
        Simplex rep;
        Subgroup stabilizer;
    };
    std::vector<std::vector<Orbit>> by_degree;
    /// For each degree and face index of X: orbit index and an element t
    /// with t . rep = face.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> locate;
};

CellOrbits cell_orbits(const Development& dev);

}  // namespace bredon
