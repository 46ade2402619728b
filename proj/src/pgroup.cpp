#include "bredon/pgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_set>

namespace bredon {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images))
{
    std::vector<char> seen(img_.size(), 0);
    for (auto x : img_) {
        if (x >= img_.size() || seen[x])
            throw InvalidPermutation("not a permutation of 0.." + std::to_string(img_.size()) + "-1");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(std::size_t degree)
{
    std::vector<std::uint32_t> img(degree);
    for (std::size_t i = 0; i < degree; ++i)
        img[i] = static_cast<std::uint32_t>(i);
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles)
{
    auto out = identity(degree);
    for (const auto& c : cycles) {
        auto step = identity(degree).img_;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree)
                throw InvalidPermutation("cycle point " + std::to_string(c[i]) + " out of range");
            step[c[i]] = c[(i + 1) % c.size()];
        }
        out = out * Permutation(std::move(step));
    }
    return out;
}

Permutation Permutation::operator*(const Permutation& b) const
{
    if (degree() != b.degree())
        throw DegreeMismatch("cannot multiply permutations of degree " + std::to_string(degree()) + " and " +
                             std::to_string(b.degree()));
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        out.img_[i] = b.img_[img_[i]];
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        out.img_[img_[i]] = static_cast<std::uint32_t>(i);
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i)
            return false;
    return true;
}

std::string Permutation::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(img_[i]);
    }
    return out + "]";
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p.images())
        h = (h ^ v) * 0x100000001b3ull;
    return h;
}

std::size_t default_size_cap()
{
    if (const char* env = std::getenv("BREDON_SIZE_CAP")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 20000;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<Cache>())
{
    for (const auto& g : gens_)
        if (g.degree() != degree_)
            throw DegreeMismatch("generator " + g.to_string() + " does not have degree " + std::to_string(degree_));
}

const std::vector<Permutation>& PermGroup::enumerate(std::size_t cap) const
{
    std::lock_guard lock(cache_->mu);
    if (cache_->elements) {
        if (cache_->elements->size() > cap)
            throw SizeCapExceeded("group order " + std::to_string(cache_->elements->size()) + " exceeds cap " +
                                  std::to_string(cap));
        return *cache_->elements;
    }
    std::unordered_set<Permutation, PermutationHash> seen;
    std::deque<Permutation> queue;
    auto id = Permutation::identity(degree_);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens_) {
            auto y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap)
                    throw SizeCapExceeded("group order exceeds cap " + std::to_string(cap));
                queue.push_back(std::move(y));
            }
        }
    }
    std::vector<Permutation> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end());
    cache_->elements = std::move(all);
    return *cache_->elements;
}

bool PermGroup::contains(const Permutation& p) const
{
    const auto& e = enumerate();
    return std::binary_search(e.begin(), e.end(), p);
}

namespace {

void require_same_degree(const PermGroup& a, const PermGroup& b)
{
    if (a.degree() != b.degree())
        throw DegreeMismatch("groups act on " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()) +
                             " points");
}

}  // namespace

bool subgroup_equal(const PermGroup& a, const PermGroup& b)
{
    require_same_degree(a, b);
    return a.enumerate() == b.enumerate();
}

bool subgroup_le(const PermGroup& a, const PermGroup& b)
{
    require_same_degree(a, b);
    for (const auto& g : a.generators())
        if (!b.contains(g))
            return false;
    return true;
}

PermGroup conjugate(const PermGroup& a, const Permutation& g)
{
    if (g.degree() != a.degree())
        throw DegreeMismatch("conjugating element has the wrong degree");
    auto gi = g.inverse();
    std::vector<Permutation> gens;
    for (const auto& x : a.generators())
        gens.push_back(gi * x * g);
    return PermGroup(a.degree(), std::move(gens));
}

std::vector<Permutation> coset_representatives(const PermGroup& g, const PermGroup& h, CosetSide side)
{
    require_same_degree(g, h);
    if (!subgroup_le(h, g))
        throw NotASubgroup("H is not a subgroup of G");
    const auto& hs = h.enumerate();
    std::unordered_set<Permutation, PermutationHash> covered;
    std::vector<Permutation> reps;
    // Elements come sorted, so the first uncovered element of each coset is
    // its least element.
    for (const auto& x : g.enumerate()) {
        if (covered.count(x))
            continue;
        reps.push_back(x);
        for (const auto& y : hs)
            covered.insert(side == CosetSide::Left ? x * y : y * x);
    }
    return reps;
}

std::vector<Permutation> left_cosets(const PermGroup& g, const PermGroup& h)
{
    return coset_representatives(g, h, CosetSide::Left);
}

Permutation largest_in_coset(const PermGroup& h, const Permutation& g, CosetSide side)
{
    if (g.degree() != h.degree())
        throw DegreeMismatch("element and subgroup have different degrees");
    std::optional<Permutation> best;
    for (const auto& y : h.enumerate()) {
        auto c = side == CosetSide::Left ? g * y : y * g;
        if (!best || *best < c)
            best = std::move(c);
    }
    return *best;
}

IndexedGroup::IndexedGroup(const PermGroup& g, std::size_t cap) : degree_(g.degree()), elems_(g.enumerate(cap))
{
    const auto n = elems_.size();
    index_.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
        index_.emplace(elems_[i], i);
    identity_ = index_.at(Permutation::identity(degree_));
    inv_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
        inv_[i] = index_.at(elems_[i].inverse());
    if (n <= 4096) {
        table_.resize(n * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                table_[a * n + b] = index_.at(elems_[a] * elems_[b]);
    }
}

std::uint32_t IndexedGroup::index_of(const Permutation& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        throw NotASubgroup("permutation " + p.to_string() + " is not in the group");
    return it->second;
}

std::uint32_t IndexedGroup::mul(std::uint32_t a, std::uint32_t b) const
{
    if (!table_.empty())
        return table_[static_cast<std::size_t>(a) * elems_.size() + b];
    return index_.at(elems_[a] * elems_[b]);
}

Subgroup IndexedGroup::make_subgroup(std::vector<std::uint32_t> elements) const
{
    Subgroup s;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    s.mask.resize(order());
    for (auto x : elements)
        s.mask.set(x);
    s.elements = std::move(elements);
    return s;
}

Subgroup IndexedGroup::generate(std::span<const std::uint32_t> gens) const
{
    boost::dynamic_bitset<> seen(order());
    std::vector<std::uint32_t> list{identity_};
    seen.set(identity_);
    for (std::size_t k = 0; k < list.size(); ++k)
        for (auto g : gens) {
            auto y = mul(list[k], g);
            if (!seen[y]) {
                seen.set(y);
                list.push_back(y);
            }
        }
    return make_subgroup(std::move(list));
}

Subgroup IndexedGroup::subgroup(const PermGroup& h) const
{
    if (h.degree() != degree_)
        throw DegreeMismatch("subgroup acts on a different number of points");
    std::vector<std::uint32_t> gens;
    for (const auto& p : h.generators())
        gens.push_back(index_of(p));
    return generate(gens);
}

Subgroup IndexedGroup::conjugate(const Subgroup& h, std::uint32_t g) const
{
    std::vector<std::uint32_t> out;
    out.reserve(h.size());
    for (auto x : h.elements)
        out.push_back(conj(x, g));
    return make_subgroup(std::move(out));
}

}  // namespace bredon
