#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "polytope.hpp"

using namespace latpoly;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

Scalar sc(long n, long d = 1) { return Scalar::from_rational(Q(n, d)); }

Scalar sqrt_of(long n) { return Scalar::sqrt_rational(Rational(n)); }

AxisLengths axes2_surd() { return AxisLengths({sqrt_of(2), sqrt_of(3)}); }

} // namespace

TEST_CASE("axis lengths validate positivity and dimension") {
    CHECK_THROWS_AS(AxisLengths({}), Error);
    CHECK_THROWS_AS(AxisLengths({sc(0)}), Error);
    CHECK_THROWS_AS(AxisLengths({sc(-1)}), Error);
    CHECK_THROWS_AS(AxisLengths({sc(1), sc(2), sc(-3, 7)}), Error);
    std::vector<Scalar> too_many(kMaxDim + 1, sc(1));
    CHECK_THROWS_AS((AxisLengths(too_many)), Error);

    AxisLengths a({sc(3, 2), sqrt_of(2)});
    CHECK(a.dim() == 2);
    CHECK(a.at(0).rational() == Q(3, 2));
    CHECK(a.inverses()[0].rational() == Q(2, 3));
    // 1/sqrt(2) = sqrt(2)/2
    CHECK(a.inverses()[1].compare(sqrt_of(2).mul_rational(Q(1, 2))) == 0);
    CHECK(a.subset(0b10u).dim() == 1);
    CHECK(a.subset(0b10u).at(0).compare(sqrt_of(2)) == 0);
}

TEST_CASE("cross-polytope volume: unit d=2 instance gives 2") {
    CrossPolytope c(AxisLengths({sc(1), sc(1)}));
    CHECK(c.volume().is_rational());
    CHECK(c.volume().rational() == Q(2));
}

TEST_CASE("cross-polytope volume with quadratic axes is exact") {
    // 2^3 * 1 * sqrt(2) * sqrt(3) / 3! = (4/3) sqrt(6)
    CrossPolytope c(AxisLengths({sc(1), sqrt_of(2), sqrt_of(3)}));
    Scalar expect = sqrt_of(6).mul_rational(Q(4, 3));
    CHECK(c.volume().compare(expect) == 0);
    Interval iv = c.volume_interval(128);
    CHECK(iv.meets_width_contract(128));
    // (4/3) sqrt(6) = 3.26598632...
    CHECK(iv.lo_rational() <= Rational("326598633/100000000"));
    CHECK(iv.hi_rational() >= Rational("326598632/100000000"));
}

TEST_CASE("corner simplex volume") {
    // standard simplex, d=3
    CornerSimplex s0(AxisLengths({sc(1), sc(1), sc(1)}));
    CHECK(s0.volume().rational() == Q(1, 6));
    // general axes: prod a_i / d!
    CornerSimplex s(axes2_surd());
    CHECK(s.volume().compare(sqrt_of(6).mul_rational(Q(1, 2))) == 0);
    CHECK(s.sign() == std::vector<int>({1, 1}));
    CHECK_THROWS_AS(CornerSimplex(axes2_surd(), {1}), Error);
    CHECK_THROWS_AS(CornerSimplex(axes2_surd(), {1, 2}), Error);
}

TEST_CASE("point location in a cross-polytope dilate") {
    CrossPolytope c(AxisLengths({sc(1), sc(1)}));
    Scalar one = sc(1);
    CHECK(c.locate({Q(1), Q(0)}, one) == Location::Boundary);
    CHECK(c.locate({Q(0), Q(0)}, one) == Location::Inside);
    CHECK(c.locate({Q(1, 2), Q(-1, 2)}, one) == Location::Boundary);
    CHECK(c.locate({Q(1, 2), Q(1, 4)}, one) == Location::Inside);
    CHECK(c.locate({Q(1), Q(1)}, one) == Location::Outside);

    // 1/sqrt(2) + 1/sqrt(3) = 1.2844... > 1
    CrossPolytope cq(axes2_surd());
    CHECK(cq.locate({Q(1), Q(1)}, one) == Location::Outside);
    // and comfortably inside the dilate t = 3/2
    CHECK(cq.locate({Q(1), Q(1)}, sc(3, 2)) == Location::Inside);
    CHECK_THROWS_AS(cq.locate({Q(1)}, one), Error);
}

TEST_CASE("point location in corner simplices tracks orthant and facets") {
    CornerSimplex s(AxisLengths({sc(1), sc(1)}));
    CHECK(s.locate({Q(0), Q(0)}, sc(5, 7)) == Location::Boundary);  // vertex
    CHECK(s.locate({Q(1, 4), Q(1, 4)}, sc(1)) == Location::Inside);
    CHECK(s.locate({Q(1, 2), Q(1, 2)}, sc(1)) == Location::Boundary);  // diagonal facet
    CHECK(s.locate({Q(1, 2), Q(0)}, sc(1)) == Location::Boundary);     // coordinate facet
    CHECK(s.locate({Q(-1, 4), Q(1, 4)}, sc(1)) == Location::Outside);  // wrong orthant
    CHECK(s.locate({Q(2), Q(2)}, sc(1)) == Location::Outside);

    // mirrored copy accepts the mirrored point
    CornerSimplex sm(AxisLengths({sc(1), sc(1)}), {-1, 1});
    CHECK(sm.locate({Q(-1, 4), Q(1, 4)}, sc(1)) == Location::Inside);
    CHECK(sm.locate({Q(1, 4), Q(1, 4)}, sc(1)) == Location::Outside);
}

TEST_CASE("face polytopes embed subsets with zeros off-support") {
    AxisLengths a({sc(2), sc(3)});
    FacePolytope full(a, 0b11u);
    FacePolytope first(a, 0b01u);
    FacePolytope empty(a, 0b00u);
    CHECK_THROWS_AS(FacePolytope(a, 0b100u), Error);

    CHECK(full.support_dim() == 2);
    CHECK(first.support_dim() == 1);
    CHECK(empty.support_dim() == 0);

    // 2^2*2*3/2! = 12, 2^1*2/1! = 4, and the singleton counts as 1
    CHECK(full.volume().rational() == Q(12));
    CHECK(first.volume().rational() == Q(4));
    CHECK(empty.volume().rational() == Q(1));

    Scalar one = sc(1);
    CHECK(first.locate({Q(2), Q(0)}, one) == Location::Boundary);
    CHECK(first.locate({Q(1), Q(0)}, one) == Location::Inside);
    CHECK(first.locate({Q(1), Q(1, 2)}, one) == Location::Outside);  // off-support
    CHECK(empty.locate({Q(0), Q(0)}, one) == Location::Inside);
    CHECK(empty.locate({Q(0), Q(1)}, one) == Location::Outside);
}

TEST_CASE("general simplex volume via exact determinants") {
    // right triangle (0,0),(1,0),(1,1): volume 1/2
    GeneralSimplex tri({{sc(0), sc(0)}, {sc(1), sc(0)}, {sc(1), sc(1)}});
    CHECK(tri.volume().rational() == Q(1, 2));
    CHECK_FALSE(tri.is_degenerate());

    // axis-aligned corner with surd legs matches the corner-simplex formula
    GeneralSimplex corner({{sc(0), sc(0)}, {sqrt_of(2), sc(0)}, {sc(0), sqrt_of(3)}});
    CHECK(corner.volume().compare(CornerSimplex(axes2_surd()).volume()) == 0);

    // collinear points are degenerate
    GeneralSimplex flat({{sc(0), sc(0)}, {sc(1), sc(1)}, {sc(2), sc(2)}});
    CHECK(flat.is_degenerate());
    CHECK_THROWS_AS(flat.volume(), Error);

    // mixed surd coordinates still eliminate exactly: det = sqrt(6) - 1 here
    GeneralSimplex mixed({{sc(0), sc(0)}, {sqrt_of(2), sc(1)}, {sc(1), sqrt_of(3)}});
    Scalar expect = Scalar::from_surd(
        SurdSum::sqrt_term(Q(1), 6).add(SurdSum(Q(-1)))).mul_rational(Q(1, 2));
    CHECK(mixed.volume().compare(expect) == 0);
}

TEST_CASE("triangulation enumerates sign vectors lexicographically") {
    CrossPolytope c1(AxisLengths({sc(5, 2)}));
    auto parts1 = triangulate_cross(c1);
    REQUIRE(parts1.size() == 2);
    CHECK(parts1[0].sign() == std::vector<int>({1}));
    CHECK(parts1[1].sign() == std::vector<int>({-1}));

    CrossPolytope c2(axes2_surd());
    auto parts2 = triangulate_cross(c2);
    REQUIRE(parts2.size() == 4);
    CHECK(parts2[0].sign() == std::vector<int>({1, 1}));
    CHECK(parts2[1].sign() == std::vector<int>({1, -1}));
    CHECK(parts2[2].sign() == std::vector<int>({-1, 1}));
    CHECK(parts2[3].sign() == std::vector<int>({-1, -1}));
}

TEST_CASE("triangulation volumes sum to the cross-polytope volume, d <= 6") {
    std::mt19937_64 rng(20260816u);
    auto rand_axis = [&rng]() -> Scalar {
        std::uniform_int_distribution<long> num(1, 9), den(1, 4), surd(2, 7);
        switch (rng() % 3) {
            case 0: return Scalar::from_rational(Q(num(rng), den(rng)));
            case 1: return Scalar::sqrt_rational(Rational(surd(rng)));
            default:
                return Scalar::sqrt_rational(Rational(surd(rng))).mul_rational(Q(num(rng), 2));
        }
    };
    for (int d = 1; d <= 6; ++d) {
        std::vector<Scalar> a;
        for (int i = 0; i < d; ++i) a.push_back(rand_axis());
        CrossPolytope c((AxisLengths(a)));
        auto parts = triangulate_cross(c);
        REQUIRE(parts.size() == (1u << d));

        // exact sum of per-orthant volumes, each recomputed through the
        // general-simplex determinant so the two volume paths cross-check
        Scalar zero = sc(0);
        Scalar sum = sc(0);
        for (const auto& s : parts) {
            std::vector<std::vector<Scalar>> verts;
            verts.emplace_back(static_cast<size_t>(d), zero);
            for (int i = 0; i < d; ++i) {
                std::vector<Scalar> v(static_cast<size_t>(d), zero);
                v[static_cast<size_t>(i)] =
                    s.sign()[static_cast<size_t>(i)] == 1 ? a[static_cast<size_t>(i)]
                                                          : a[static_cast<size_t>(i)].neg();
                verts.push_back(std::move(v));
            }
            Scalar vol = GeneralSimplex(verts).volume();
            CHECK(vol.compare(s.volume()) == 0);
            auto next = sum.try_add(vol);
            REQUIRE(next);
            sum = *next;
        }
        CHECK(sum.compare(c.volume()) == 0);
    }
}
