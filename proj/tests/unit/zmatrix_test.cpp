#include <doctest.h>

#include <random>

#include "bredon/zmatrix.hpp"
#include "support/oracles.hpp"

using namespace bredon;

namespace {

std::vector<Int> ints(std::initializer_list<int> xs)
{
    std::vector<Int> out;
    for (int x : xs)
        out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("sparse storage drops zeros")
{
    IntMatrix m(2, 2);
    m.add(0, 1, 3);
    m.add(0, 1, -3);
    CHECK(m.nonzeros() == 0);
    m.set(1, 0, 5);
    CHECK(m.at(1, 0) == 5);
    m.set(1, 0, 0);
    CHECK(m.is_zero());
}

TEST_CASE("products and transposes")
{
    auto a = IntMatrix::from_dense({ints({1, 2}), ints({3, 4})});
    auto b = IntMatrix::from_dense({ints({0, 1}), ints({1, 0})});
    CHECK((a * b).to_dense() == std::vector<std::vector<Int>>{ints({2, 1}), ints({4, 3})});
    CHECK(a.transposed().at(0, 1) == 3);
    CHECK(a.apply(ints({1, 1})) == ints({3, 7}));
    CHECK(IntMatrix::identity(2) * a.transposed().transposed() * IntMatrix::identity(2) == a);
}

TEST_CASE("smith normal form examples")
{
    CHECK(smith_normal_form(IntMatrix(3, 4)).rank() == 0);
    CHECK(smith_normal_form(IntMatrix::identity(3)).invariant_factors == ints({1, 1, 1}));
    auto f = smith_normal_form(IntMatrix::from_dense({ints({2, 4}), ints({6, 8})}));
    CHECK(f.invariant_factors == ints({2, 4}));
    CHECK(f.torsion() == ints({2, 4}));
    CHECK(smith_normal_form(IntMatrix(0, 5)).rank() == 0);
}

TEST_CASE("invariant factors agree with determinantal divisors")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        auto a = oracle::random_sparse(rng, 5, 9, 0.6);
        CHECK(smith_normal_form(IntMatrix::from_dense(a)).invariant_factors == oracle::invariant_factors_by_minors(a));
    }
}

TEST_CASE("large entries stay exact")
{
    // Products of many factors of 3 overflow 64 bits.
    Int big = 1;
    for (int i = 0; i < 60; ++i)
        big *= 3;
    auto a = IntMatrix::from_dense({{big, 0}, {0, big * 2}});
    auto f = smith_normal_form(a);
    CHECK(f.invariant_factors == std::vector<Int>{big, big * 2});
    CHECK(to_string(big).size() > 20);
}

TEST_CASE("tracked decomposition")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = oracle::random_sparse(rng, 8, 9, 0.4);
        auto d = smith_decomposition(a);
        CHECK(multiply(multiply(d.left, a), d.right) == d.diagonal);
        auto du = oracle::determinant(d.left);
        auto dv = oracle::determinant(d.right);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(d.form.rank() == oracle::bareiss(a));
    }
}
