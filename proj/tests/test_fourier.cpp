#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fourier.hpp"

using namespace latpoly;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar::from_rational(Q(n, d)); }
Scalar sqrt_of(long n) { return Scalar::sqrt_rational(Rational(n)); }

std::vector<Scalar> yvec(std::vector<Scalar> v) { return v; }

GeneralSimplex rational_simplex(std::vector<std::vector<long>> quarters) {
    std::vector<std::vector<Scalar>> verts;
    for (auto& row : quarters) {
        std::vector<Scalar> v;
        for (long q : row) v.push_back(sc(q, 4));
        verts.push_back(std::move(v));
    }
    return GeneralSimplex(std::move(verts));
}

bool overlap(const FourierEvaluation& a, const FourierEvaluation& b) {
    return a.value.sub(b.value).contains_zero();
}

// distance between the two midpoint estimates (enclosure widths are judged
// separately through the error bounds)
double gap(const FourierEvaluation& a, const FourierEvaluation& b) {
    return std::hypot(a.value.re().mid_d() - b.value.re().mid_d(),
                      a.value.im().mid_d() - b.value.im().mid_d());
}

} // namespace

TEST_CASE("corner_as_general vertices and pole grouping") {
    AxisLengths axes({sqrt_of(2), sc(3, 2)});
    GeneralSimplex s = corner_as_general(axes);
    REQUIRE(s.dim() == 2);
    CHECK(s.volume().compare(sqrt_of(2).mul_rational(Q(3, 4))) == 0); // sqrt(2)*(3/2)/2!
    CHECK(s.vertices()[0][0].is_zero());
    CHECK(s.vertices()[1][0].compare(sqrt_of(2)) == 0);
    CHECK(s.vertices()[2][1].compare(sc(3, 2)) == 0);

    // poles of <v_j, y> for y=(1,1): {0, sqrt2, 3/2} all distinct
    PoleConfiguration cfg = pole_configuration(s, yvec({sc(1), sc(1)}));
    REQUIRE(cfg.locations.size() == 3);
    REQUIRE(cfg.groups.size() == 3);
    int total = 0;
    for (auto& [p, mu] : cfg.groups) total += mu;
    CHECK(total == 3);

    // y=(1,1) on the unit corner simplex merges the two nonzero poles
    PoleConfiguration cfg2 =
        pole_configuration(corner_as_general(AxisLengths({sc(1), sc(1)})), yvec({sc(1), sc(1)}));
    REQUIRE(cfg2.groups.size() == 2);
    int mu_max = 0;
    for (auto& [p, mu] : cfg2.groups) mu_max = std::max(mu_max, mu);
    CHECK(mu_max == 2);
}

TEST_CASE("closed form, d=1: (1 - e^{-2 pi i y t})/(2 pi i y)") {
    // y=1/2, t=1: (1 - e^{-pi i})/(pi i) = 2/(pi i) = -(2/pi) i
    FourierEvaluation f = ft_standard_simplex(yvec({sc(1, 2)}), sc(1));
    CHECK(f.method == FtMethod::ClosedForm);
    CHECK(f.value.re().contains_zero());
    double im = f.value.im().mid_d();
    CHECK(std::abs(im + 2.0 / M_PI) < 1e-15);
    CHECK(f.value.wid_d() < 1e-15);

    // y=1/3, t=2: compare against a long-double direct evaluation
    FourierEvaluation g = ft_standard_simplex(yvec({sc(1, 3)}), sc(2));
    double ang = -2.0 * M_PI * (1.0 / 3.0) * 2.0;
    // (1 - e^{i ang}) / (2 pi i / 3) = -(3/(2pi)) i (1 - e^{i ang})
    double re = -(3.0 / (2.0 * M_PI)) * std::sin(ang);
    double imv = -(3.0 / (2.0 * M_PI)) * (1.0 - std::cos(ang));
    CHECK(std::abs(g.value.re().mid_d() - re) < 1e-14);
    CHECK(std::abs(g.value.im().mid_d() - imv) < 1e-14);
}

TEST_CASE("closed form matches direct integral, d=2, y=(1,2), t=1") {
    FourierEvaluation closed = ft_standard_simplex(yvec({sc(1), sc(2)}), sc(1));
    FourierEvaluation oracle = ft_direct_oracle(corner_as_general(AxisLengths({sc(1), sc(1)})),
                                                yvec({sc(1), sc(2)}), sc(1), 1e-11);
    CHECK(gap(closed, oracle) <= 1e-10);
}

TEST_CASE("closed form rejects pole collisions") {
    CHECK_THROWS_AS(ft_standard_simplex(yvec({sc(0), sc(1)}), sc(1)), Error);
    CHECK_THROWS_AS(ft_standard_simplex(yvec({sc(1), sc(1)}), sc(1)), Error);
    try {
        ft_standard_simplex(yvec({sc(2), sc(2)}), sc(1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::PoleCollision);
    }
    // sqrt(2) != 239/169 even though doubles nearly agree
    CHECK_NOTHROW(ft_standard_simplex(yvec({sqrt_of(2), sc(239, 169)}), sc(1)));
}

TEST_CASE("residues, coinciding poles: unit simplex at y=(1,1), t=1 gives i/(2 pi)") {
    // integral of e^{-2 pi i (x1+x2)} over the unit corner simplex:
    // int_0^1 s e^{-2 pi i s} ds = -1/(2 pi i) = i/(2 pi)
    GeneralSimplex s = corner_as_general(AxisLengths({sc(1), sc(1)}));
    FourierEvaluation f = ft_residues(s, yvec({sc(1), sc(1)}), sc(1));
    CHECK(f.value.re().contains_zero());
    CHECK(std::abs(f.value.im().mid_d() - 1.0 / (2.0 * M_PI)) < 1e-18);
    CHECK(f.value.wid_d() < 1e-18);
}

TEST_CASE("residues at y=0 enclose lambda(S) t^d exactly") {
    GeneralSimplex s = rational_simplex({{0, 0}, {4, 0}, {0, 4}}); // unit right triangle
    FourierEvaluation f = ft_residues(s, yvec({sc(0), sc(0)}), sc(3, 2));
    CHECK(f.value.im().contains_zero());
    CHECK(f.value.re().contains_rational(Q(9, 8))); // (1/2)(3/2)^2

    GeneralSimplex c = corner_as_general(AxisLengths({sqrt_of(2), sqrt_of(3), sc(1)}));
    FourierEvaluation g = ft_residues(c, yvec({sc(0), sc(0), sc(0)}), sc(2));
    // lambda = sqrt(6)/6, t^3 = 8 -> (4/3) sqrt(6)
    Interval expect = Scalar::sqrt_rational(Rational(6)).interval(128).mul_rational(Q(4, 3));
    CHECK(g.value.im().contains_zero());
    CHECK(g.value.re().sub(expect).contains_zero());
}

TEST_CASE("contour at y=0 recovers the order d+1 pole value lambda(S) t^d") {
    GeneralSimplex s = corner_as_general(AxisLengths({sc(1), sc(1)}));
    FourierEvaluation f =
        ft_contour(s, yvec({sc(0), sc(0)}), sc(3, 2), 64, 1e-12);
    CHECK(std::abs(f.value.re().mid_d() - 1.125) <= f.error_bound + 1e-12);
    CHECK(std::abs(f.value.im().mid_d()) <= f.error_bound + 1e-12);
}

TEST_CASE("contour matches closed form, d=2, y=(1,2), t=1") {
    FourierEvaluation closed = ft_standard_simplex(yvec({sc(1), sc(2)}), sc(1));
    FourierEvaluation cont = ft_contour(corner_as_general(AxisLengths({sc(1), sc(1)})),
                                        yvec({sc(1), sc(2)}), sc(1), 64, 1e-12);
    CHECK(gap(closed, cont) <= 1e-10);
}

TEST_CASE("contour handles coinciding poles and matches residues and oracle") {
    GeneralSimplex s = corner_as_general(AxisLengths({sc(1), sc(1)}));
    auto y = yvec({sc(1), sc(1)});
    FourierEvaluation cont = ft_contour(s, y, sc(1), 64, 1e-12);
    FourierEvaluation res = ft_residues(s, y, sc(1));
    FourierEvaluation orc = ft_direct_oracle(s, y, sc(1), 1e-10);
    CHECK(gap(cont, res) <= cont.error_bound + res.error_bound + 1e-12);
    CHECK(gap(res, orc) <= res.error_bound + orc.error_bound + 1e-12);
}

TEST_CASE("radius invariance of the contour value") {
    GeneralSimplex s = rational_simplex({{0, 0}, {4, 1}, {-2, 5}});
    auto y = yvec({sc(1, 2), sc(-1)});
    Scalar t = sc(5, 4);
    FourierEvaluation r1 = ft_contour(s, y, t, 64, 1e-11);
    FourierEvaluation r2 = ft_contour(s, y, t, 64, 1e-11, Q(3, 2));
    CHECK(gap(r1, r2) <= r1.error_bound + r2.error_bound + 1e-12);
}

TEST_CASE("affine identity: corner simplex through the standard simplex") {
    // hat chi_{tS}(y) = d! lambda(S) hat chi_{tS_0}(a_1 y_1, ..., a_d y_d)
    AxisLengths axes({sqrt_of(2), sc(3, 2)});
    auto y = yvec({sc(1), sc(1, 2)});
    Scalar t = sc(5, 4);
    FourierEvaluation lhs = ft_residues(corner_as_general(axes), y, t);
    FourierEvaluation rhs0 = ft_standard_simplex(yvec({sqrt_of(2), sc(3, 4)}), t);
    Scalar scale = sqrt_of(2).mul(sc(3, 2)); // d! lambda(S) = a1 a2
    CInterval rhs = rhs0.value.mul_real(scale.interval(192));
    CHECK(lhs.value.sub(rhs).contains_zero());
}

TEST_CASE("conjugate symmetry under y -> -y") {
    GeneralSimplex s = rational_simplex({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}, {-1, -1, -1}});
    auto y = yvec({sc(1, 2), sc(2), sc(-3, 4)});
    auto ny = yvec({sc(-1, 2), sc(-2), sc(3, 4)});
    FourierEvaluation a = ft_residues(s, y, sc(4, 3));
    FourierEvaluation b = ft_residues(s, ny, sc(4, 3));
    CHECK(a.value.conj().sub(b.value).contains_zero());
    CHECK(!a.value.im().contains_zero()); // the symmetry check is not vacuous
}

TEST_CASE("scaling: evaluation at (y, t) equals the t-dilated simplex at (y, 1)") {
    std::vector<std::vector<long>> base = {{0, 0}, {2, 2}, {4, -2}};
    GeneralSimplex s = rational_simplex(base);
    for (auto& row : base)
        for (auto& q : row) q = q * 3 / 2; // quarters scale by t = 3/2
    GeneralSimplex st = rational_simplex(base);
    auto y = yvec({sc(1), sc(1, 3)});
    FourierEvaluation a = ft_residues(s, y, sc(3, 2));
    FourierEvaluation b = ft_residues(st, y, sc(1));
    CHECK(a.value.sub(b.value).contains_zero());
}

TEST_CASE("direct oracle frozen values") {
    // d=1 on [0,1], y=1/2, t=1: 2/(pi i)
    GeneralSimplex seg = corner_as_general(AxisLengths({sc(1)}));
    FourierEvaluation f = ft_direct_oracle(seg, yvec({sc(1, 2)}), sc(1), 1e-10);
    CHECK(std::abs(f.value.re().mid_d()) <= f.error_bound);
    CHECK(std::abs(f.value.im().mid_d() + 2.0 / M_PI) <= f.error_bound);

    // y=0: volume of the dilate within tol
    GeneralSimplex s = rational_simplex({{0, 0}, {4, 0}, {0, 4}});
    FourierEvaluation g = ft_direct_oracle(s, yvec({sc(0), sc(0)}), sc(3, 2), 1e-10);
    CHECK(std::abs(g.value.re().mid_d() - 1.125) <= g.error_bound);
    CHECK(std::abs(g.value.im().mid_d()) <= g.error_bound);
}

TEST_CASE("three-way agreement on random inputs") {
    std::mt19937_64 rng(20260816);
    auto rint = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };

    // closed form vs contour on the standard simplex, distinct nonzero y
    for (int it = 0; it < 50; ++it) {
        int d = static_cast<int>(rint(1, 3));
        std::vector<Scalar> y;
        std::vector<Rational> seen;
        while (static_cast<int>(y.size()) < d) {
            Rational cand = Q(rint(-6, 6), rint(2, 4));
            if (cand == 0) continue;
            bool dup = false;
            for (auto& s : seen) dup = dup || (s == cand);
            if (dup) continue;
            seen.push_back(cand);
            y.push_back(Scalar::from_rational(cand));
        }
        Scalar t = sc(rint(4, 12), 8);
        std::vector<Scalar> ones(static_cast<size_t>(d), sc(1));
        GeneralSimplex s0 = corner_as_general(AxisLengths(ones));
        FourierEvaluation closed = ft_standard_simplex(y, t);
        FourierEvaluation cont = ft_contour(s0, y, t, 256, 1e-11);
        REQUIRE(gap(closed, cont) <= closed.error_bound + cont.error_bound + 1e-12);
    }

    // residues vs direct oracle on random rational simplices (collisions allowed)
    int done = 0;
    while (done < 50) {
        int d = static_cast<int>(rint(1, 3));
        std::vector<std::vector<long>> qs;
        for (int j = 0; j <= d; ++j) {
            std::vector<long> row;
            for (int i = 0; i < d; ++i) row.push_back(rint(-4, 4));
            qs.push_back(std::move(row));
        }
        GeneralSimplex s = rational_simplex(qs);
        if (s.is_degenerate()) continue;
        std::vector<Scalar> y;
        for (int i = 0; i < d; ++i) y.push_back(sc(rint(-6, 6), 4));
        Scalar t = sc(rint(4, 12), 8);
        FourierEvaluation res = ft_residues(s, y, t);
        FourierEvaluation orc = ft_direct_oracle(s, y, t, 1e-9);
        REQUIRE(gap(res, orc) <= res.error_bound + orc.error_bound + 1e-12);
        ++done;
    }
}

TEST_CASE("validation") {
    GeneralSimplex s = corner_as_general(AxisLengths({sc(1), sc(1)}));
    auto y = yvec({sc(1), sc(2)});
    CHECK_THROWS_AS(ft_contour(s, y, sc(1), 8, 1e-10), Error);
    CHECK_THROWS_AS(ft_contour(s, y, sc(1), 64, 1e-10, Q(1, 2)), Error);
    CHECK_THROWS_AS(ft_direct_oracle(s, y, sc(1), 1e-13), Error);
    CHECK_THROWS_AS(ft_direct_oracle(s, yvec({sc(1)}), sc(1), 1e-9), Error);
    std::vector<Scalar> ones4(4, sc(1));
    CHECK_THROWS_AS(
        ft_direct_oracle(corner_as_general(AxisLengths(ones4)), std::vector<Scalar>(4, sc(1)),
                         sc(1), 1e-9),
        Error);
    CHECK_THROWS_AS(pole_configuration(s, yvec({sc(1)})), Error);
}
