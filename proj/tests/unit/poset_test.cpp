#include <doctest.h>

#include <algorithm>
#include <random>

#include "bredon/corpus.hpp"
#include "bredon/poset.hpp"

using namespace bredon;

namespace {

std::vector<std::string> ids(const FinitePoset& p, const std::vector<std::uint32_t>& xs)
{
    std::vector<std::string> out;
    for (auto x : xs)
        out.push_back(p.id(x));
    std::sort(out.begin(), out.end());
    return out;
}

FinitePoset random_poset(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::string> el;
    for (std::size_t i = 0; i < n; ++i)
        el.push_back("x" + std::to_string(i));
    std::shuffle(el.begin(), el.end(), rng);
    std::vector<std::pair<std::string, std::string>> rel;
    std::bernoulli_distribution coin(0.3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                rel.emplace_back("x" + std::to_string(i), "x" + std::to_string(j));
    return FinitePoset::build(el, rel);
}

}  // namespace

TEST_CASE("singleton poset")
{
    auto p = FinitePoset::build({"a"}, {});
    CHECK(p.size() == 1);
    CHECK(p.relation_pairs().empty());
}

TEST_CASE("closure is transitive")
{
    auto p = FinitePoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.less(p.index_of("a"), p.index_of("c")));
    CHECK(p.relation_pairs().size() == 3);
    CHECK(p.covers().size() == 2);
    CHECK(p.height() == 3);
}

TEST_CASE("cycles and bad input are rejected")
{
    CHECK_THROWS_AS(FinitePoset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(FinitePoset::build({"a"}, {{"a", "a"}}), CycleError);
    CHECK_THROWS_AS(FinitePoset::build({"a"}, {{"a", "z"}}), UnknownElement);
    CHECK_THROWS_AS(FinitePoset::build({"a", "a"}, {}), std::invalid_argument);
}

TEST_CASE("element order is a linear extension that keeps input order on ties")
{
    auto p = FinitePoset::build({"c", "b", "a"}, {{"a", "c"}});
    CHECK(p.elements() == std::vector<std::string>{"b", "a", "c"});
    CHECK(p.input_position(0) == 1);
}

TEST_CASE("upper sets of a chain")
{
    auto p = FinitePoset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.upper_set(std::vector<std::string>{"b"}, true) == std::vector<std::string>{"c"});
    CHECK(p.upper_set(std::vector<std::string>{"b"}, false) == std::vector<std::string>{"b", "c"});
}

TEST_CASE("strict upper set of the 2-face of an n-gon is the boundary")
{
    for (unsigned n = 3; n <= 8; ++n) {
        auto q = corpus::ngon_poset(n);
        auto up = q.upper_set(std::vector<std::string>{"f"}, true);
        CHECK(up.size() == 2 * n);
        CHECK(std::find(up.begin(), up.end(), "f") == up.end());
    }
}

TEST_CASE("order complexes of small posets")
{
    auto chain = FinitePoset::build({"a", "b"}, {{"a", "b"}});
    auto c = order_complex(chain);
    CHECK(c.num_vertices() == 2);
    CHECK(c.num_faces(1) == 1);

    auto anti = FinitePoset::build({"a", "b", "c"}, {});
    auto d = order_complex(anti);
    CHECK(d.num_vertices() == 3);
    CHECK(d.dimension() == 0);
}

TEST_CASE("order complex of the boundary of a triangle's face poset is a hexagon")
{
    // Reverse inclusion: edges below their endpoints.
    auto p = FinitePoset::build({"t", "e12", "e23", "e13", "v1", "v2", "v3"},
                                {{"t", "e12"}, {"t", "e23"}, {"t", "e13"}, {"e12", "v1"}, {"e12", "v2"},
                                 {"e23", "v2"}, {"e23", "v3"}, {"e13", "v1"}, {"e13", "v3"}});
    auto c = order_complex(p, p.upper_set(std::vector<std::string>{"t"}, true));
    CHECK(c.num_vertices() == 6);
    CHECK(c.num_faces(1) == 6);
    CHECK(c.dimension() == 1);
}

TEST_CASE("order complex properties on random posets")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poset(rng, 1 + trial % 8);
        auto c = order_complex(p);
        CHECK(c.dimension() == static_cast<int>(p.height()) - 1);
        for (const auto& [a, b] : p.relation_pairs())
            CHECK(a < b);

        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(p.size() - 1));
        std::vector<std::uint32_t> omega{pick(rng)};
        const auto strict = p.upper_set(omega, true);
        const auto closed = p.upper_set(omega, false);
        auto expected = strict;
        expected.push_back(omega[0]);
        std::sort(expected.begin(), expected.end());
        CHECK(closed == expected);

        auto big = order_complex(p, std::span<const std::uint32_t>(closed));
        auto small = order_complex(p, std::span<const std::uint32_t>(strict));
        for (int n = 0; n <= small.dimension(); ++n)
            for (const auto& s : small.faces(n))
                CHECK(big.contains(big.to_simplex(small.ids(s))));
        // A minimum makes the order complex a cone.
        for (const auto& s : big.faces(big.dimension())) {
            auto names = big.ids(s);
            CHECK(std::find(names.begin(), names.end(), p.id(omega[0])) != names.end());
        }
    }
}

TEST_CASE("ids helper")
{
    auto p = FinitePoset::build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    CHECK(ids(p, p.above(p.index_of("a"))) == std::vector<std::string>{"b", "c"});
    CHECK(p.below(p.index_of("a")).empty());
    CHECK(p.is_antichain(std::vector<std::uint32_t>{p.index_of("b"), p.index_of("c")}));
}
