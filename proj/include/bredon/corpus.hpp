#pragma once

// Standard instances: n-gon posets, named Coxeter matrices, small
// developments, a catalog of permutation groups and a generator of random
// valid finite instances.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bredon/cog.hpp"
#include "bredon/coxeter.hpp"
#include "bredon/pgroup.hpp"
#include "bredon/poset.hpp"

namespace bredon::corpus {

/// Face poset of the solid n-gon under reverse inclusion: "f" < "e<i>" <
/// "v<i>", edge e<i> joining v<i> and v<i+1 mod n>.
FinitePoset ngon_poset(unsigned n);

CoxeterMatrix type_a(unsigned n);
CoxeterMatrix type_b(unsigned n);
CoxeterMatrix type_d(unsigned n);
CoxeterMatrix type_h3();
/// m = 0 gives the infinite dihedral group.
CoxeterMatrix dihedral(unsigned m);
/// Affine A~2: three generators, all labels 3.
CoxeterMatrix affine_a2();
/// Affine C~2: labels 4, 4 along a path.
CoxeterMatrix affine_c2();
/// Affine G~2: labels 6, 3 along a path.
CoxeterMatrix affine_g2();
/// m = 2 on the edges of the n-cycle, infinity elsewhere.
CoxeterMatrix right_angled_cycle(unsigned n);

struct NamedCoxeter {
    std::string name;
    CoxeterMatrix matrix;
};

/// A1-A4, B3, H3, I2(3), I2(4), I2(5), D_inf, A~2, C~2, G~2, cycles 4..8.
std::vector<NamedCoxeter> coxeter_corpus();

PermGroup symmetric_group(unsigned n);
PermGroup group_from_cycles(std::size_t degree, const std::vector<std::vector<std::vector<std::uint32_t>>>& gens);

/// Q = {U < T}, G = S3, P_U = <(0 1)>, P_T = S3.
SimpleComplexOfGroups s3_chain();
/// G = S4; A < B < T and C < T with P_A = <(0 1)>, P_B = <(0 1),(2 3)>,
/// P_C = <(0 1 2)>, P_T = S4.
SimpleComplexOfGroups s4_branch();
/// G = D4 on 4 points; 0 < a < T, 0 < b < T with P_0 trivial, P_a, P_b two
/// reflections and P_T = D4.
SimpleComplexOfGroups d4_square();
/// Q = {J}, G = Z/2, P_J trivial: X is two points.
SimpleComplexOfGroups two_points();
/// Antichain {U, V} in S3 with equal local groups <(0 1)>.
SimpleComplexOfGroups s3_antichain();

struct NamedGroup {
    std::string name;
    PermGroup group;
};

/// Groups of order at most 120 used by the random generator.
std::vector<NamedGroup> group_catalog();

struct RandomInstance {
    std::string group_name;
    std::uint64_t seed = 0;
    SimpleComplexOfGroups scog;
};

/// A random valid finite instance with |Q| <= max_elements: a random DAG on
/// Q and local groups assigned along a linear extension, each generated by
/// the groups below it plus random extra elements, sometimes copied or
/// conjugated from an incomparable element. Retries until valid.
RandomInstance random_instance(std::uint64_t seed, std::size_t max_elements = 6);

}  // namespace bredon::corpus
