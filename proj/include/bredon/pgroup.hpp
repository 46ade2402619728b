#pragma once

// Finite permutation groups: enumeration, subgroup tests, conjugation,
// cosets and the total order used to pick distinguished coset elements.

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bredon {

class InvalidPermutation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class NotASubgroup : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bijection of {0, ..., d-1} stored as its image tuple.
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidPermutation unless `images` is a permutation of 0..d-1.
    explicit Permutation(std::vector<std::uint32_t> images);
    static Permutation identity(std::size_t degree);
    /// Product of disjoint-or-not cycles, applied left to right.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator[](std::size_t i) const { return img_[i]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    /// (a * b)[i] = b[a[i]]: first a, then b. Conjugation g^-1 H g relabels
    /// the points moved by H through g.
    Permutation operator*(const Permutation& b) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Lexicographic on image tuples; this is the default total order.
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

    /// "[1,0,2]"
    std::string to_string() const;

private:
    std::vector<std::uint32_t> img_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

/// Group cap from BREDON_SIZE_CAP, or 20000.
std::size_t default_size_cap();

/// Permutation group given by generators. The element list is enumerated on
/// first request and cached; the cache fill is serialized internally, and
/// copies share it.
class PermGroup {
public:
    PermGroup() : PermGroup(0, {}) {}
    /// Throws DegreeMismatch if a generator has the wrong degree.
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    /// All elements, sorted. Throws SizeCapExceeded if the group has more
    /// than `cap` elements.
    const std::vector<Permutation>& enumerate(std::size_t cap = default_size_cap()) const;
    std::size_t order(std::size_t cap = default_size_cap()) const { return enumerate(cap).size(); }
    bool contains(const Permutation& p) const;

private:
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<Permutation>> elements;
    };
    std::size_t degree_;
    std::vector<Permutation> gens_;
    std::shared_ptr<Cache> cache_;
};

bool subgroup_equal(const PermGroup& a, const PermGroup& b);
bool subgroup_le(const PermGroup& a, const PermGroup& b);
/// g^-1 A g, generated by g^-1 a_i g.
PermGroup conjugate(const PermGroup& a, const Permutation& g);

enum class CosetSide { Left, Right };

/// One representative per coset gH (Left) or Hg (Right), each the least
/// element of its coset, listed in increasing order. Throws NotASubgroup.
std::vector<Permutation> coset_representatives(const PermGroup& g, const PermGroup& h, CosetSide side);
std::vector<Permutation> left_cosets(const PermGroup& g, const PermGroup& h);

/// Largest element of Hg (Right) or gH (Left) under the default order.
Permutation largest_in_coset(const PermGroup& h, const Permutation& g, CosetSide side = CosetSide::Right);

/// A subgroup of an IndexedGroup as a set of element indices.
struct Subgroup {
    std::vector<std::uint32_t> elements;  // ascending
    boost::dynamic_bitset<> mask;

    std::size_t size() const { return elements.size(); }
    bool contains(std::uint32_t x) const { return mask[x]; }
    bool operator==(const Subgroup& o) const { return mask == o.mask; }
    bool is_subset_of(const Subgroup& o) const { return mask.is_subset_of(o.mask); }
};

/// An enumerated group with elements addressed by index. Index order is
/// the default total order (sorted image tuples).
class IndexedGroup {
public:
    explicit IndexedGroup(const PermGroup& g, std::size_t cap = default_size_cap());

    std::size_t order() const { return elems_.size(); }
    std::size_t degree() const { return degree_; }
    const Permutation& element(std::uint32_t i) const { return elems_[i]; }
    const std::vector<Permutation>& elements() const { return elems_; }
    /// Throws NotASubgroup if p is not an element.
    std::uint32_t index_of(const Permutation& p) const;
    std::uint32_t identity() const { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
    /// g^-1 x g
    std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(inv_[g], x), g); }

    /// Subgroup generated by the given elements.
    Subgroup generate(std::span<const std::uint32_t> gens) const;
    /// Throws NotASubgroup if a generator of h lies outside this group.
    Subgroup subgroup(const PermGroup& h) const;
    Subgroup conjugate(const Subgroup& h, std::uint32_t g) const;
    Subgroup make_subgroup(std::vector<std::uint32_t> elements) const;

private:
    std::size_t degree_ = 0;
    std::vector<Permutation> elems_;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
    std::vector<std::uint32_t> inv_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> table_;  // order^2 products when small enough
};

}  // namespace bredon
