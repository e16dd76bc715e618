#include "passoc/linalg.hpp"

#include <doctest.h>

using namespace passoc;

TEST_SUITE("linalg")
{
    TEST_CASE("small exact solve")
    {
        // p2 - p1 = 81, p3 - p1 = 729, p1 + p2 + p3 = 0
        RationalMatrix a{{-1, 1, 0}, {-1, 0, 1}, {1, 1, 1}};
        auto x = solve_fraction_free(a, {81, 729, 0});
        REQUIRE(x);
        CHECK(*x == std::vector<Rational>{-270, -189, 459});
    }

    TEST_CASE("fractional data")
    {
        RationalMatrix a{{Rational(1, 2), Rational(1, 3)}, {Rational(2, 5), Rational(-1, 7)}};
        std::vector<Rational> x0{Rational(3, 11), Rational(-5, 2)};
        std::vector<Rational> b{a[0][0] * x0[0] + a[0][1] * x0[1], a[1][0] * x0[0] + a[1][1] * x0[1]};
        auto x = solve_fraction_free(a, b);
        REQUIRE(x);
        CHECK(*x == x0);
    }

    TEST_CASE("pivoting past a zero")
    {
        RationalMatrix a{{0, 1}, {1, 0}};
        auto x = solve_fraction_free(a, {2, 3});
        REQUIRE(x);
        CHECK(*x == std::vector<Rational>{3, 2});
    }

    TEST_CASE("singular systems")
    {
        RationalMatrix a{{1, 2}, {2, 4}};
        CHECK_FALSE(solve_fraction_free(a, {1, 2}));
        CHECK(determinant_fraction_free(a) == 0);
    }

    TEST_CASE("determinant")
    {
        RationalMatrix a{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
        CHECK(determinant_fraction_free(a) == Rational(6));
        RationalMatrix b{{Rational(1, 2), 1}, {1, Rational(1, 3)}};
        CHECK(determinant_fraction_free(b) == Rational(-5, 6));
    }

    TEST_CASE("large entries stay exact")
    {
        Integer big = ipow(Integer(8), 16);
        RationalMatrix a{{1, 1}, {-1, 1}};
        auto x = solve_fraction_free(a, {Rational(0), Rational(big)});
        REQUIRE(x);
        CHECK((*x)[1] == Rational(big / 2));
    }
}
