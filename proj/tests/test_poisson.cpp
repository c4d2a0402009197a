#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "counting.hpp"
#include "fourier.hpp"
#include "mainterm.hpp"
#include "poisson.hpp"

using namespace latpoly;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar::from_rational(Q(n, d)); }
Scalar sqrt_of(long n) { return Scalar::sqrt_rational(Rational(n)); }

AxisLengths surd_axes() { return AxisLengths({sqrt_of(2), sqrt_of(3)}); }

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = xs.size();
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("triangular weights") {
    FejerWeight w(4);
    CHECK(w.weight({0, 0}) == 1.0);
    CHECK(w.weight({4, 0}) == 0.0);
    CHECK(w.weight({-5, 1}) == 0.0);
    CHECK(w.weight({2, -1}) == doctest::Approx(0.5 * 0.75));
    CHECK(w.weight_rational({2, -1}) == Q(3, 8));
    CHECK(w.weight_rational({0, 4}) == Q(0));
    for (long a = -3; a <= 3; ++a) {
        double v = w.weight({a});
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        CHECK(v == doctest::Approx(w.weight_rational({a}).get_d()));
    }
    CHECK_THROWS_AS(FejerWeight(1), Error);
}

TEST_CASE("lattice enumeration order: ascending shells, lex inside") {
    std::vector<std::vector<long>> seen;
    for_each_lattice_point(2, 2, [&](const std::vector<long>& m) { seen.push_back(m); });
    std::vector<std::vector<long>> want = {{0, 0},  {-1, 0}, {0, -1}, {0, 1}, {1, 0},
                                           {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    CHECK(seen == want);

    long count = 0;
    std::map<std::vector<long>, int> uniq;
    for_each_lattice_point(3, 3, [&](const std::vector<long>& m) {
        ++count;
        ++uniq[m];
        for (long mk : m) CHECK(std::labs(mk) <= 2);
    });
    CHECK(count == 125); // (2*3-1)^3
    CHECK(static_cast<long>(uniq.size()) == count);
}

TEST_CASE("box-membership collapse: literal double sum hits m exactly prod(N-|m_k|) times") {
    for (int d = 1; d <= 3; ++d) {
        for (int N = 2; N <= 4; ++N) {
            std::map<std::vector<long>, long> hits;
            // literal enumeration of M in [0,N-1]^d and m with |m_k| <= M_k
            std::vector<long> M(static_cast<size_t>(d)), m(static_cast<size_t>(d));
            std::function<void(int)> inner = [&](int lv) {
                if (lv == d) {
                    ++hits[m];
                    return;
                }
                for (long v = -M[static_cast<size_t>(lv)]; v <= M[static_cast<size_t>(lv)]; ++v) {
                    m[static_cast<size_t>(lv)] = v;
                    inner(lv + 1);
                }
            };
            std::function<void(int)> outer = [&](int lv) {
                if (lv == d) {
                    inner(0);
                    return;
                }
                for (long v = 0; v < N; ++v) {
                    M[static_cast<size_t>(lv)] = v;
                    outer(lv + 1);
                }
            };
            outer(0);
            long checked = 0;
            for_each_lattice_point(d, N, [&](const std::vector<long>& mm) {
                long expect = 1;
                for (long mk : mm) expect *= N - std::labs(mk);
                auto it = hits.find(mm);
                REQUIRE(it != hits.end());
                CHECK(it->second == expect);
                ++checked;
            });
            CHECK(checked == static_cast<long>(hits.size()));
        }
    }
}

TEST_CASE("cesaro mean, d=1 rational axis: exact at half-integer dilations") {
    CrossPolytope P(AxisLengths({sc(1)}));
    double ces = cesaro_mean(P, sc(5, 2), 64);
    CountResult cr = count_cross(P, sc(5, 2));
    CHECK(cr.count == 5);
    CHECK(std::fabs(ces - 5.0) < 1.0); // within O(1); here the sine terms vanish
    CHECK(std::fabs(ces - 5.0) < 1e-9);
}

TEST_CASE("cesaro mean: collapsed sum equals the literal double sum, d=2, N=3") {
    AxisLengths ax = surd_axes();
    CrossPolytope P(ax);
    Scalar t = sc(7, 8);
    int N = 3;
    // literal Def.-style double sum, transform values through the fourier module
    GeneralSimplex s = corner_as_general(ax);
    std::map<std::vector<long>, std::complex<double>> ft;
    for_each_lattice_point(2, N, [&](const std::vector<long>& m) {
        std::vector<Scalar> y;
        for (long mk : m) y.push_back(sc(mk));
        FourierEvaluation f = ft_residues(s, y, t);
        ft[m] = {f.value.re().mid_d(), f.value.im().mid_d()};
    });
    std::complex<double> lit(0, 0);
    for (long M1 = 0; M1 < N; ++M1)
        for (long M2 = 0; M2 < N; ++M2)
            for (long m1 = -M1; m1 <= M1; ++m1)
                for (long m2 = -M2; m2 <= M2; ++m2) lit += 4.0 * ft[{m1, m2}];
    lit /= static_cast<double>(N * N);
    double col = cesaro_mean(P, t, N);
    CHECK(std::fabs(lit.imag()) < 1e-12);
    CHECK(std::fabs(col - lit.real()) < 1e-9);
}

TEST_CASE("error series: collapsed equals literal, d=2, N=3") {
    AxisLengths ax = surd_axes();
    Scalar t = sc(7, 8);
    int N = 3;
    double a[2] = {std::sqrt(2.0), std::sqrt(3.0)};
    double td = 7.0 / 8.0;
    auto term = [&](int j, long m1, long m2) {
        long mv[2] = {m1, m2};
        if (mv[j] == 0) return std::complex<double>(0, 0);
        int k = 1 - j;
        double den = static_cast<double>(mv[j]) *
                     (static_cast<double>(mv[j]) * a[j] / a[k] - static_cast<double>(mv[k]));
        double ang = -2.0 * M_PI * static_cast<double>(mv[j]) * a[j] * td;
        return std::complex<double>(std::cos(ang), std::sin(ang)) / den;
    };
    std::complex<double> lit(0, 0);
    for (long M1 = 0; M1 < N; ++M1)
        for (long M2 = 0; M2 < N; ++M2)
            for (long m1 = -M1; m1 <= M1; ++m1)
                for (long m2 = -M2; m2 <= M2; ++m2) lit += term(0, m1, m2) + term(1, m1, m2);
    lit *= std::complex<double>(-1.0, 0.0) / (M_PI * M_PI); // i^2/pi^2
    lit /= static_cast<double>(N * N);
    ErrorSeriesValue e = error_series(ax, t, N);
    CHECK(std::fabs(lit.imag()) < 1e-12);
    CHECK(std::fabs(e.value - lit.real()) < 1e-9);
    CHECK(e.terms_used == 2 * 20); // per axis: (2N-1)^2 points minus the 2N-1 with m_j = 0
}

TEST_CASE("error series, d=1: smoothed sawtooth") {
    AxisLengths ax({sqrt_of(2)});
    // limit 1 - 2{a t} at a t = sqrt 2
    double target = 1.0 - 2.0 * (std::sqrt(2.0) - 1.0);
    double prev = 1.0;
    for (int N : {256, 1024, 4096}) {
        ErrorSeriesValue e = error_series(ax, sc(1), N);
        double diff = std::fabs(e.value - target);
        CHECK(diff < prev);
        prev = diff;
        CHECK(e.imag_residual < 1e-12);
    }
    CHECK(prev < 1e-4);

    // a t = 3/2 lands on the sawtooth zero: the sum cancels exactly
    Scalar t0 = sqrt_of(2).mul_rational(Q(3, 4));
    ErrorSeriesValue z = error_series(ax, t0, 64);
    CHECK(std::fabs(z.value) < 1e-12);
}

TEST_CASE("error series realness, d=2 and d=3") {
    ErrorSeriesValue e2 = error_series(surd_axes(), sc(9, 8), 32);
    CHECK(e2.imag_residual < 1e-10 * (1.0 + std::fabs(e2.value)));
    ErrorSeriesValue e3 =
        error_series(AxisLengths({sqrt_of(2), sqrt_of(3), sqrt_of(5)}), sc(5, 4), 12);
    CHECK(e3.imag_residual < 1e-10 * (1.0 + std::fabs(e3.value)));
}

TEST_CASE("exact rational dependence raises on tail denominators") {
    // a1/a2 = 1/2: m = (2,1) hits m1 a1 = m2 a2
    AxisLengths dep({sc(1), sc(2)});
    CHECK_NOTHROW(error_series(dep, sc(7, 8), 2)); // the hit needs |m1| = 2
    CHECK_THROWS_AS(error_series(dep, sc(7, 8), 3), Error);

    AxisLengths surd_dep({sqrt_of(2), sqrt_of(8)});
    CHECK_THROWS_AS(error_series(surd_dep, sc(7, 8), 3), Error);
    try {
        error_series(surd_dep, sc(7, 8), 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrorKind::DenominatorZero);
    }
    CHECK_THROWS_AS(error_series_certified(surd_dep, sc(7, 8), 3, 96), Error);
    // independent ratios never trip it
    CHECK_NOTHROW(error_series(surd_axes(), sc(7, 8), 16));
}

TEST_CASE("residues at the origin: d=1 gives 2 a t for every box") {
    AxisLengths ax({sqrt_of(2)});
    double expect = 2.0 * std::sqrt(2.0) * 7.0 / 8.0;
    for (long M : {0L, 3L, 17L}) {
        double b = residue_origin_sum(ax, sc(7, 8), {M});
        CHECK(std::fabs(b - expect) < 1e-12);
    }
    Interval cert = residue_origin_sum_certified(ax, sc(7, 8), {3}, 128);
    CHECK(cert.sub(sqrt_of(2).mul_rational(Q(7, 4)).interval(192)).contains_zero());
}

TEST_CASE("residues at the origin: the m=0 box is the volume term") {
    AxisLengths ax({sqrt_of(2), sqrt_of(3)});
    // lambda(C) t^2 = 2 sqrt6 (3/2)^2 = (9/2) sqrt6
    double expect = 4.5 * std::sqrt(6.0);
    CHECK(std::fabs(residue_origin_sum(ax, sc(3, 2), {0, 0}) - expect) < 1e-10);
}

TEST_CASE("B_M approaches the main term like the reciprocal box bound") {
    AxisLengths ax = surd_axes();
    Scalar t = sc(2);
    MainTermPolynomial p = MainTermPolynomial::build_p(ax);
    double pt = p.evaluate(t, 96).mid_d();
    double prev = 1e9;
    for (long M : {2L, 4L, 8L, 16L, 32L, 64L}) {
        double err = std::fabs(residue_origin_sum(ax, t, {M, M}) - pt);
        CHECK(err < prev);
        prev = err;
        // t^{d-2} sum_i 1/(M_i+1) = 2/(M+1); observed ratio sits near 0.21
        CHECK(err < 2.0 / static_cast<double>(M + 1));
    }
}

TEST_CASE("decomposition: cesaro mean = origin average + error series") {
    AxisLengths ax = surd_axes();
    CrossPolytope P(ax);
    Scalar t = sc(7, 8);
    for (int N : {3, 6}) {
        double ces = cesaro_mean(P, t, N);
        double avg = residue_origin_average(ax, t, N);
        ErrorSeriesValue e = error_series(ax, t, N);
        CHECK(std::fabs(ces - (avg + e.value)) < 1e-10);
    }

    // certified split engines against the certified transform route
    int N = 3;
    Interval ces_c = cesaro_mean_certified(P, t, N, 128);
    Interval avg_c = residue_origin_average_certified(ax, t, N, 128);
    Interval err_c = error_series_certified(ax, t, N, 128);
    Interval diff = ces_c.sub(avg_c).sub(err_c);
    CHECK(diff.contains_zero());
    CHECK(diff.wid_d() < 1e-25);
    // and the fast engines sit inside the certified enclosures' reach
    CHECK(std::fabs(cesaro_mean(P, t, N) - ces_c.mid_d()) < 1e-9);
    CHECK(std::fabs(residue_origin_average(ax, t, N) - avg_c.mid_d()) < 1e-9);
    CHECK(std::fabs(error_series(ax, t, N).value - err_c.mid_d()) < 1e-9);
}

TEST_CASE("cesaro mean, fast vs certified, d=1") {
    CrossPolytope P(AxisLengths({sqrt_of(2)}));
    Scalar t = sc(7, 4);
    Interval cert = cesaro_mean_certified(P, t, 5, 128);
    CHECK(std::fabs(cesaro_mean(P, t, 5) - cert.mid_d()) < 1e-10);
}

TEST_CASE("convergence toward the count at fixed dilation") {
    // the near-resonant pair keeps the decay in the square-root-law window
    Scalar r2 = sqrt_of(2);
    Scalar a1 = r2.mul_rational(Q(1, 2));
    Scalar a2 =
        Scalar::from_rational(Q(20001, 1000)).add(r2.neg()).inverse().mul_rational(Q(22));
    CrossPolytope P(AxisLengths({a1, a2}));
    Scalar t = sc(20);
    CountResult cr = count_cross(P, t);
    double cnt = mpz_get_d(cr.count.get_mpz_t());
    std::vector<double> lx, ly;
    for (int N = 16; N <= 1024; N *= 2) {
        double gap = std::fabs(cesaro_mean(P, t, N) - cnt);
        REQUIRE(gap > 0.0);
        lx.push_back(std::log(static_cast<double>(N)));
        ly.push_back(std::log(gap));
    }
    double slope = fit_slope(lx, ly);
    CHECK(slope >= -0.65);
    CHECK(slope <= -0.35);
}

TEST_CASE("reconciliation: count - p(t) - E_N stays inside the square-root budget") {
    AxisLengths ax = surd_axes();
    CrossPolytope P(ax);
    MainTermPolynomial p = MainTermPolynomial::build_p(ax);
    for (long tn : {5L, 10L, 20L}) {
        Scalar t = sc(tn, 4);
        double td = static_cast<double>(tn) / 4.0;
        double cnt = mpz_get_d(count_cross(P, t).count.get_mpz_t());
        double pt = p.evaluate(t, 96).mid_d();
        for (int N : {64, 256}) {
            ErrorSeriesValue e = error_series(ax, t, N);
            double lhs = std::fabs(cnt - pt - e.value);
            double budget =
                1.0 + std::pow(td, 1.05) * std::sqrt(std::log(static_cast<double>(N)) / N);
            CHECK(lhs < budget); // observed ratios stay below 0.2
        }
    }
}

TEST_CASE("validation") {
    CrossPolytope P(surd_axes());
    CHECK_THROWS_AS(cesaro_mean(P, sc(1), 1), Error);
    CHECK_THROWS_AS(cesaro_mean(P, sc(0), 4), Error);
    CHECK_THROWS_AS(error_series(surd_axes(), sc(-1), 4), Error);
    CHECK_THROWS_AS(residue_origin_sum(surd_axes(), sc(1), {-1, 2}), Error);
    CHECK_THROWS_AS(residue_origin_sum(surd_axes(), sc(1), {2}), Error);
    CHECK_THROWS_AS(residue_origin_average(surd_axes(), sc(1), 0), Error);
}
