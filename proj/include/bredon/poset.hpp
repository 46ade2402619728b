#pragma once

// Finite posets with a validated strict order, upper sets and order
// complexes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "bredon/scomplex.hpp"

namespace bredon {

class CycleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class UnknownElement : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite poset. Elements are stored in a fixed linear extension of the
/// order; an element's index is its position in that extension, so
/// `less(a, b)` implies `a < b` as integers.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Transitive closure of `relations` (pairs (a, b) meaning a < b). The
    /// element order is re-sorted to a linear extension, ties broken by
    /// input order. Throws CycleError, UnknownElement, std::invalid_argument
    /// on duplicate identifiers.
    static FinitePoset build(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& relations);

    /// Same, with relations given by input positions.
    static FinitePoset build_indexed(const std::vector<std::string>& elements,
                                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& relations);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& elements() const { return ids_; }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    std::optional<std::uint32_t> find(const std::string& id) const;
    /// Throws UnknownElement.
    std::uint32_t index_of(const std::string& id) const;
    /// Position of element i in the original input list.
    std::uint32_t input_position(std::size_t i) const { return input_pos_.at(i); }

    bool less(std::size_t a, std::size_t b) const { return lt_[a][b]; }
    bool leq(std::size_t a, std::size_t b) const { return a == b || lt_[a][b]; }
    bool comparable(std::size_t a, std::size_t b) const { return a == b || lt_[a][b] || lt_[b][a]; }

    /// Elements strictly above / below i, ascending.
    std::vector<std::uint32_t> above(std::size_t i) const;
    std::vector<std::uint32_t> below(std::size_t i) const;
    /// Covering relations (a, b): a < b with nothing strictly between.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers() const;
    /// All pairs of the (closed) strict order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> relation_pairs() const;

    bool is_antichain(std::span<const std::uint32_t> subset) const;
    /// Length (number of elements) of the longest chain.
    std::size_t height() const;

    /// Non-strict: {V : U <= V for some U in omega}; strict: {V : U < V for
    /// some U in omega}. Ascending.
    std::vector<std::uint32_t> upper_set(std::span<const std::uint32_t> omega, bool strict) const;
    std::vector<std::string> upper_set(const std::vector<std::string>& omega, bool strict) const;

private:
    std::vector<std::string> ids_;
    std::vector<std::uint32_t> input_pos_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<boost::dynamic_bitset<>> lt_;
};

/// Order complex of the subposet `carrier` (default: all elements). The
/// complex's vertex order is the carrier in poset order, so vertex position
/// k corresponds to the k-th smallest carrier index.
SimplicialComplex order_complex(const FinitePoset& p,
                                std::optional<std::span<const std::uint32_t>> carrier = std::nullopt);
SimplicialComplex order_complex(const FinitePoset& p, const std::vector<std::string>& carrier);

}  // namespace bredon
