#pragma once

// Integral cochain complexes and simplicial cohomology (absolute, relative,
// reduced) with torsion.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bredon/scomplex.hpp"
#include "bredon/zmatrix.hpp"

namespace bredon {

class DegreeOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A finitely generated abelian group Z^betti + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk, every ti > 1.
struct CohomologyGroup {
    long long betti = 0;
    std::vector<Int> torsion;

    /// "H != 0" counts torsion-only groups as nonzero.
    bool is_zero() const { return betti == 0 && torsion.empty(); }
    std::string to_string() const;

    friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

/// Direct sum, renormalised to invariant factors.
CohomologyGroup direct_sum(std::span<const CohomologyGroup> groups);

/// Cochain complex C^lo -> ... -> C^hi with coboundaries delta^n : C^n ->
/// C^{n+1} stored for lo <= n < hi (delta^hi is zero). Construction checks
/// matrix shapes and delta o delta = 0.
class CochainComplexZ {
public:
    CochainComplexZ(int lo, std::vector<std::size_t> basis_sizes, std::vector<IntMatrix> coboundaries);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(sizes_.size()) - 1; }
    std::size_t basis_size(int n) const;
    /// delta^n; an empty matrix of the right shape outside the stored range.
    IntMatrix coboundary(int n) const;

    /// H^n = ker delta^n / im delta^{n-1}. Throws DegreeOutOfRange.
    CohomologyGroup cohomology(int n) const;
    /// H^lo ... H^hi, factoring each coboundary once.
    std::vector<CohomologyGroup> cohomology_all() const;

private:
    int lo_;
    std::vector<std::size_t> sizes_;
    std::vector<IntMatrix> delta_;
};

CohomologyGroup cohomology(const CochainComplexZ& cx, int n);

/// Absolute coboundary delta^n of a complex: rows are (n+1)-faces, columns
/// n-faces, entry (-1)^i where the column face omits vertex i.
IntMatrix coboundary_matrix(const SimplicialComplex& c, int n);

/// Cochains of `total` vanishing on `sub`. Degrees 0..max(dim total, 0);
/// the degree-n basis is the n-faces of total outside sub, in total's face
/// order.
CochainComplexZ relative_cochain_complex(const ComplexPair& pair);

/// Indices (in total's degree-n face list) of the relative basis.
std::vector<std::uint32_t> relative_basis(const ComplexPair& pair, int n);

/// Absolute cochain complex of c.
CochainComplexZ cochain_complex(const SimplicialComplex& c);

/// Cohomology of the augmented complex (one generator in degree -1). The
/// empty complex has reduced H^{-1} = Z. Degrees above the dimension give
/// the zero group.
CohomologyGroup reduced_cohomology(const SimplicialComplex& c, int n);
/// Reduced H^{-1} ... H^{max(dim, 0)}.
std::vector<CohomologyGroup> reduced_cohomology_all(const SimplicialComplex& c);

/// Relative cohomology H^0 ... H^{max(dim total, 0)} of the pair.
std::vector<CohomologyGroup> relative_cohomology_all(const ComplexPair& pair);

}  // namespace bredon
