#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "counting.hpp"
#include "ehrhart.hpp"

using namespace latpoly;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

AxisLengths int_axes(const std::vector<long>& a) {
    std::vector<Scalar> v;
    for (long ai : a) v.push_back(Scalar::from_int(ai));
    return AxisLengths(v);
}

} // namespace

TEST_CASE("dedekind sums: pinned values and closed form at a=1") {
    CHECK(dedekind_sum(1, 2).value == Q(0));
    CHECK(dedekind_sum(1, 3).value == Q(1, 18)); // (-1/6)^2 + (1/6)^2
    CHECK(dedekind_sum(5, 1).value == Q(0));     // empty sum
    CHECK(dedekind_sum(0, 1).value == Q(0));
    // s(1,b) = (b-1)(b-2)/(12b)
    for (long b : {2L, 3L, 7L, 12L, 101L})
        CHECK(dedekind_sum(1, b).value == make_rational((b - 1) * (b - 2), 12 * b));
    CHECK(dedekind_sum(3, 7).value == dedekind_sum_direct(3, 7));
}

TEST_CASE("dedekind sums: both evaluation paths agree") {
    for (long b = 1; b <= 60; ++b)
        for (long a = 0; a < b + 3; ++a) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(dedekind_sum_direct(a, b) == dedekind_sum_reciprocal(a, b));
        }
    // periodicity and odd symmetry, on the direct path
    CHECK(dedekind_sum_direct(5 + 9, 9) == dedekind_sum_direct(5, 9));
    CHECK(dedekind_sum_direct(-5, 9) == -dedekind_sum_direct(5, 9));
}

TEST_CASE("dedekind reciprocity on 200 random coprime pairs") {
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<long> dist(1, 1000000);
    int done = 0;
    while (done < 200) {
        long a = dist(rng), b = dist(rng);
        long g = std::gcd(a, b);
        a /= g;
        b /= g;
        if (a == 0 || b == 0) continue;
        Rational lhs = dedekind_sum(a, b).value + dedekind_sum(b, a).value;
        Rational rhs = Q(-1, 4) + (make_rational(a, b) + make_rational(b, a) +
                                   make_rational(Int(1), Int(a) * b)) /
                                      Rational(12);
        CHECK(lhs == rhs);
        ++done;
    }
}

TEST_CASE("dedekind sums: coprimality enforced") {
    CHECK_THROWS_AS(dedekind_sum(2, 4), Error);
    CHECK_THROWS_AS(dedekind_sum_direct(6, 9), Error);
    CHECK_THROWS_AS(dedekind_sum_reciprocal(0, 5), Error);
    try {
        dedekind_sum(10, 15);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::NotCoprime);
    }
    CHECK_THROWS_AS(dedekind_sum(3, 0), Error);
    CHECK_THROWS_AS(dedekind_sum(3, -7), Error);
}

TEST_CASE("ehrhart interpolation: standard simplices") {
    EhrhartPolynomial p3 = ehrhart_by_interpolation(int_axes({1, 1, 1}));
    REQUIRE(p3.d == 3);
    REQUIRE(p3.coefficients.size() == 4);
    CHECK(p3.coefficients[0] == Q(1));
    CHECK(p3.coefficients[1] == Q(11, 6));
    CHECK(p3.coefficients[2] == Q(1));
    CHECK(p3.coefficients[3] == Q(1, 6));
    CHECK(p3.evaluate(Q(4)) == Q(35)); // C(7,3)

    EhrhartPolynomial p1 = ehrhart_by_interpolation(int_axes({1}));
    CHECK(p1.coefficients == std::vector<Rational>{Q(1), Q(1)});

    EhrhartPolynomial p23 = ehrhart_by_interpolation(int_axes({2, 3}));
    CHECK(p23.coefficients[2] == Q(3)); // (2*3)/2!
    CHECK(p23.coefficients[0] == Q(1));
}

TEST_CASE("ehrhart interpolation: counts reproduced beyond the construction range") {
    std::mt19937_64 rng(7250124);
    std::uniform_int_distribution<long> pick(1, 9);
    for (int trial = 0; trial < 8; ++trial) {
        int d = 1 + static_cast<int>(trial % 3);
        std::vector<long> a;
        for (int i = 0; i < d; ++i) a.push_back(pick(rng));
        AxisLengths axes = int_axes(a);
        EhrhartPolynomial p = ehrhart_by_interpolation(axes);

        Int prod(1);
        for (long ai : a) prod *= ai;
        CHECK(p.coefficients.back() ==
              make_rational(prod, factorial_int(static_cast<unsigned long>(d))));

        CornerSimplex s(axes);
        for (long t : {static_cast<long>(d) + 3, static_cast<long>(d) + 5}) {
            Rational v = p.evaluate(Rational(t));
            CHECK(v.get_den() == 1);
            CHECK(v >= 0);
            CHECK(v == Rational(count_simplex(s, Scalar::from_int(t)).count));
        }
    }
}

TEST_CASE("coefficient formula vs interpolation") {
    AxisLengths ones = int_axes({1, 1, 1});
    Rational c = coefficient_td_minus_2_formula(ones);
    CHECK(c == Q(11, 6));
    CHECK(c == ehrhart_by_interpolation(ones).coefficients[1]);

    AxisLengths a235 = int_axes({2, 3, 5});
    CHECK(coefficient_td_minus_2_formula(a235) ==
          ehrhart_by_interpolation(a235).coefficients[1]);

    // d=2: the coefficient of t^0 is the constant term
    AxisLengths pair = int_axes({1, 1});
    CHECK(coefficient_td_minus_2_formula(pair) ==
          ehrhart_by_interpolation(pair).coefficients[0]);
    AxisLengths pair23 = int_axes({2, 3});
    CHECK(coefficient_td_minus_2_formula(pair23) ==
          ehrhart_by_interpolation(pair23).coefficients[0]);
}

TEST_CASE("coefficient formula: 20 random pairwise-coprime triples") {
    std::mt19937_64 rng(991);
    std::uniform_int_distribution<long> pick(1, 12);
    int done = 0;
    while (done < 20) {
        long x = pick(rng), y = pick(rng), z = pick(rng);
        if (std::gcd(x, y) != 1 || std::gcd(x, z) != 1 || std::gcd(y, z) != 1) continue;
        AxisLengths axes = int_axes({x, y, z});
        CHECK(coefficient_td_minus_2_formula(axes) ==
              ehrhart_by_interpolation(axes).coefficients[1]);
        ++done;
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(ehrhart_by_interpolation(AxisLengths({Scalar::from_rational(Q(3, 2))})),
                    Error);
    CHECK_THROWS_AS(ehrhart_by_interpolation(
                        AxisLengths({Scalar::sqrt_rational(Rational(2))})),
                    Error);
    CHECK_THROWS_AS(coefficient_td_minus_2_formula(int_axes({4})), Error);
    try {
        coefficient_td_minus_2_formula(int_axes({2, 4, 3}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::NotPairwiseCoprime);
    }
}
