#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "counting.hpp"
#include "diophantine.hpp"
#include "ehrhart.hpp"
#include "fourier.hpp"
#include "mainterm.hpp"
#include "poisson.hpp"

namespace latpoly {

namespace {

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    size_t workers = std::min<size_t>({n, std::thread::hardware_concurrency(), 8});
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Rational Q(long n, long d = 1) { return make_rational(n, d); }
Scalar sc(long n, long d = 1) { return Scalar::from_rational(Q(n, d)); }
Scalar sqrt_of(long n) { return Scalar::sqrt_rational(Rational(n)); }

} // namespace

std::vector<Rational> sweep_grid(const SweepConfig& cfg) {
    std::vector<Rational> grid;
    grid.reserve(static_cast<size_t>(cfg.t_count));
    if (cfg.t_count == 1) {
        grid.push_back(cfg.t_start);
        return grid;
    }
    if (!cfg.log_spacing) {
        Rational step = (cfg.t_stop - cfg.t_start) / Rational(cfg.t_count - 1);
        for (long i = 0; i < cfg.t_count; ++i) grid.push_back(cfg.t_start + Rational(i) * step);
        return grid;
    }
    double l0 = std::log(cfg.t_start.get_d());
    double dl = (std::log(cfg.t_stop.get_d()) - l0) / static_cast<double>(cfg.t_count - 1);
    for (long i = 0; i < cfg.t_count; ++i) {
        double v = std::exp(l0 + dl * static_cast<double>(i));
        grid.push_back(make_rational(std::llround(v * 1e6), 1000000));
    }
    grid.front() = cfg.t_start;
    grid.back() = cfg.t_stop;
    return grid;
}

std::vector<DiscrepancyRecord> scan_discrepancy(const SweepConfig& cfg) {
    if (cfg.t_start < 1)
        raise(ErrorKind::InvalidArgument, "discrepancy sweeps need t_start >= 1");
    long bits = resolve_precision_bits(cfg.precision_bits);
    std::vector<Rational> grid = sweep_grid(cfg);

    const AxisLengths& axes = cfg.polytope.axes;
    bool cross = cfg.polytope.kind == PolytopeSpec::Kind::Cross;
    CrossPolytope cp(axes);
    CornerSimplex sp(axes);
    MainTermPolynomial mt = cross ? MainTermPolynomial::build_p(axes)
                                  : MainTermPolynomial::build_q(axes);

    std::vector<DiscrepancyRecord> recs(grid.size());
    parallel_for(grid.size(), [&](size_t i) {
        DiscrepancyRecord& r = recs[i];
        r.t = grid[i];
        Scalar t = Scalar::from_rational(grid[i]);
        CountResult cr = cross ? count_cross(cp, t) : count_simplex(sp, t);
        r.count = cr.count;
        double cnt = mpz_get_d(r.count.get_mpz_t());
        try {
            Interval mi = mt.evaluate(t, bits);
            r.main_term = mi.mid_d();
            r.delta = cnt - r.main_term;
            r.certified = cr.certified && mi.wid_d() < 1e-9;
        } catch (const Error&) {
            r.main_term = std::numeric_limits<double>::quiet_NaN();
            r.delta = std::numeric_limits<double>::quiet_NaN();
            r.certified = false;
        }
    });
    return recs;
}

std::string records_to_csv(const std::vector<DiscrepancyRecord>& recs) {
    std::string out = "t,count,main_term,delta,certified\n";
    for (const DiscrepancyRecord& r : recs) {
        out += r.t.get_str() + "," + r.count.get_str() + "," + fmt_double(r.main_term) + "," +
               fmt_double(r.delta) + "," + (r.certified ? "1" : "0") + "\n";
    }
    return out;
}

std::vector<DiscrepancyRecord> records_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "t,count,main_term,delta,certified")
        raise(ErrorKind::Parse, "bad CSV header");
    std::vector<DiscrepancyRecord> recs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        size_t pos = 0;
        while (true) {
            size_t c = line.find(',', pos);
            f.push_back(line.substr(pos, c == std::string::npos ? c : c - pos));
            if (c == std::string::npos) break;
            pos = c + 1;
        }
        if (f.size() != 5) raise(ErrorKind::Parse, "bad CSV row: " + line);
        DiscrepancyRecord r;
        r.t = parse_rational(f[0]);
        r.count = Int(f[1]);
        r.main_term = std::strtod(f[2].c_str(), nullptr);
        r.delta = std::strtod(f[3].c_str(), nullptr);
        if (f[4] != "0" && f[4] != "1") raise(ErrorKind::Parse, "bad certified flag: " + f[4]);
        r.certified = f[4] == "1";
        recs.push_back(std::move(r));
    }
    return recs;
}

ExponentFit fit_exponent(const std::vector<DiscrepancyRecord>& recs, double window) {
    std::vector<double> ts, ds;
    for (const DiscrepancyRecord& r : recs) {
        if (!std::isfinite(r.delta)) continue;
        ts.push_back(r.t.get_d());
        ds.push_back(r.delta);
    }
    return fit_exponent_loglog(ts, ds, window);
}

std::string fit_to_json(const ExponentFit& fit) {
    return "{\"slope\": " + fmt_double(fit.slope) + ", \"ci_low\": " + fmt_double(fit.ci_low) +
           ", \"ci_high\": " + fmt_double(fit.ci_high) + ", \"n\": " + std::to_string(fit.n) +
           "}";
}

long resolve_precision_bits(long configured) {
    if (configured > 0) return configured;
    if (const char* env = std::getenv("LATPOLY_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 256;
}

// ---------------------------------------------------------------------------
// acceptance criteria
// ---------------------------------------------------------------------------

namespace {

CriterionResult make_result(int idx, const std::string& name, bool passed,
                            const std::string& detail) {
    return {idx, name, passed, detail, {}};
}

// 1: the subset decomposition holds exactly on randomized instances
CriterionResult crit_decomposition() {
    std::mt19937_64 rng(20260816u);
    auto rand_q = [&rng](long lo, long hi, long maxden) {
        std::uniform_int_distribution<long> num(lo, hi), den(1, maxden);
        return Q(num(rng), den(rng));
    };
    int failures = 0;
    for (int it = 0; it < 100; ++it) {
        int d = 1 + it % 4;
        double budget = d == 1 ? 30.0 : d == 2 ? 24.0 : d == 3 ? 10.0 : 5.0;
        bool used_root = false;
        std::vector<Scalar> a;
        double amax = 0;
        for (int i = 0; i < d; ++i) {
            Scalar ax = sc(1);
            switch (rng() % 3) {
                case 0: ax = Scalar::from_rational(rand_q(1, 8, 4)); break;
                case 1:
                    ax = sqrt_of(2 + static_cast<long>(rng() % 9))
                             .mul_rational(rand_q(1, 3, 2));
                    break;
                default:
                    if (!used_root) {
                        // cube root of a small non-cube
                        long k = 2 + static_cast<long>(rng() % 6);
                        ax = Scalar::from_root({Q(-k), Q(0), Q(0), Q(1)}, Q(1), Q(2));
                        used_root = true;
                    } else {
                        ax = Scalar::from_rational(rand_q(1, 8, 4));
                    }
            }
            if (ax.sign() <= 0) ax = sc(1);
            a.push_back(ax);
            amax = std::max(amax, ax.interval(64).hi_d());
        }
        std::uniform_real_distribution<double> ud(1.0, std::max(1.1, budget / amax));
        long sixteenths = std::max(16L, static_cast<long>(ud(rng) * 16.0));
        if (!verify_decomposition(AxisLengths(a), sc(sixteenths, 16))) ++failures;
    }
    return make_result(1, "subset decomposition, 100 randomized instances", failures == 0,
                       failures == 0 ? "100/100 exact" : std::to_string(failures) + " failures");
}

// 2: symbolic main-term identities, d up to 8
CriterionResult crit_mainterm_identities() {
    int checked = 0, failed = 0;
    auto expect = [&](bool ok) {
        ++checked;
        if (!ok) ++failed;
    };
    for (int d = 1; d <= 8; ++d) {
        AxisLengths axes(std::vector<Scalar>(static_cast<size_t>(d), sc(1)));
        MainTermPolynomial p = MainTermPolynomial::build_p(axes);
        for (int k = 0; k <= d; ++k) expect(p.symbolic(k).empty() == ((d - k) % 2 != 0));
        if (d >= 2) expect(p.symbolic(d - 2) == closed_form_c_dm2(d));
        if (d >= 4) expect(p.symbolic(d - 4) == closed_form_c_dm4(d));
        MainTermPolynomial q = MainTermPolynomial::build_q(axes);
        expect(q.symbolic(d - 1) == closed_form_e_dm1(d));
        if (d >= 2) expect(q.symbolic(d - 2) == closed_form_e_dm2(d));
        if (d >= 3) expect(q.symbolic(d - 3) == closed_form_e_dm3(d));
    }
    return make_result(2, "symbolic main-term identities, d <= 8", failed == 0,
                       std::to_string(checked - failed) + "/" + std::to_string(checked) +
                           " exact identities");
}

SweepConfig d2_config() {
    std::vector<Scalar> a{sc(1), sqrt_of(2).mul_rational(Q(1, 2))}; // 1/a = (1, sqrt2)
    SweepConfig cfg{{PolytopeSpec::Kind::Cross, AxisLengths(a)},
                    Rational(1),
                    Rational(10000),
                    2000,
                    true,
                    0,
                    "",
                    256,
                    0};
    return cfg;
}

SweepConfig d3_config() {
    // 1/a = (1, sqrt2, sqrt3)
    std::vector<Scalar> a{sc(1), sqrt_of(2).mul_rational(Q(1, 2)),
                          sqrt_of(3).mul_rational(Q(1, 3))};
    SweepConfig cfg{{PolytopeSpec::Kind::Cross, AxisLengths(a)},
                    Rational(10),
                    Rational(500),
                    400,
                    false, // uniform grid: the faithful discretization of window averages
                    0,
                    "",
                    256,
                    0};
    return cfg;
}

const std::vector<DiscrepancyRecord>& d3_records() {
    static const std::vector<DiscrepancyRecord> recs = scan_discrepancy(d3_config());
    return recs;
}

// 3: d=2 Hardy-Littlewood regime, envelope slope near 0
CriterionResult crit_d2_exponent() {
    std::vector<DiscrepancyRecord> recs = scan_discrepancy(d2_config());
    ExponentFit fit = fit_exponent(recs);
    bool ok = fit.slope <= 0.15;
    CriterionResult res = make_result(
        3, "d=2 envelope exponent <= 0.15", ok,
        "slope " + fmt_double(fit.slope) + " over " + std::to_string(fit.n) + " dyadic blocks");
    res.artifacts.emplace_back("d2_discrepancy.csv", records_to_csv(recs));
    res.artifacts.emplace_back("d2_fit.json", fit_to_json(fit));
    return res;
}

// 4: d=3 envelope exponent vs 2/3
CriterionResult crit_d3_exponent() {
    ExponentFit fit = fit_exponent(d3_records());
    bool ok = fit.slope <= 2.0 / 3.0 + 0.15;
    CriterionResult res = make_result(4, "d=3 envelope exponent <= 2/3 + 0.15", ok,
                                      "slope " + fmt_double(fit.slope));
    res.artifacts.emplace_back("d3_discrepancy.csv", records_to_csv(d3_records()));
    res.artifacts.emplace_back("d3_fit.json", fit_to_json(fit));
    return res;
}

// 5: windowed means of delta show no growth trend
CriterionResult crit_windowed_means() {
    std::vector<double> ts, ds;
    for (const DiscrepancyRecord& r : d3_records()) {
        ts.push_back(r.t.get_d());
        ds.push_back(r.delta);
    }
    std::string detail = "means";
    double smallest = std::fabs(windowed_mean(ts, ds, 25.0));
    bool ok = true;
    for (double T : {25.0, 50.0, 100.0, 200.0}) {
        double m = windowed_mean(ts, ds, T);
        detail += " [" + fmt_double(T) + ",2T]=" + fmt_double(m);
        if (std::fabs(m) > 3.0 * smallest + 1.0) ok = false;
    }
    return make_result(5, "windowed means of delta bounded", ok, detail);
}

double ft_gap(const FourierEvaluation& a, const FourierEvaluation& b) {
    return std::hypot(a.value.re().mid_d() - b.value.re().mid_d(),
                      a.value.im().mid_d() - b.value.im().mid_d());
}

// 6: residue transforms vs direct quadrature on random simplices
CriterionResult crit_fourier_crossval() {
    std::mt19937_64 rng(20260816u);
    auto rint = [&rng](long lo, long hi) {
        std::uniform_int_distribution<long> u(lo, hi);
        return u(rng);
    };
    int failures = 0;
    int radius_checks = 0;
    double worst = 0;
    for (int it = 0; it < 100; ++it) {
        int d = 1 + it % 3;
        // vertices on a quarter-integer grid; coinciding pole values arise
        // whenever two vertices share their dot with y, and every 5th instance
        // forces a duplicated dot by construction
        std::vector<std::vector<Scalar>> verts;
        GeneralSimplex s({{sc(0)}, {sc(1)}});
        while (true) {
            std::vector<std::vector<Scalar>> rows;
            for (int v = 0; v <= d; ++v) {
                std::vector<Scalar> row;
                for (int k = 0; k < d; ++k) row.push_back(sc(rint(-4, 4), 4));
                rows.push_back(row);
            }
            GeneralSimplex cand(rows);
            if (!cand.is_degenerate()) {
                s = cand;
                break;
            }
        }
        std::vector<Scalar> y;
        for (int k = 0; k < d; ++k) y.push_back(sc(rint(-6, 6), 4));
        if (it % 5 == 0 && d >= 2) {
            // align y so the first two vertices share their dot product
            y.assign(static_cast<size_t>(d), sc(0));
            y[0] = sc(1);
            std::vector<std::vector<Scalar>> rows = s.vertices();
            rows[1] = rows[0];
            rows[1][static_cast<size_t>(d - 1)] =
                rows[0][static_cast<size_t>(d - 1)].add_rational(Q(1));
            GeneralSimplex forced(rows);
            if (!forced.is_degenerate()) s = forced;
        }
        Scalar t = sc(rint(4, 12), 8);
        try {
            FourierEvaluation res = ft_residues(s, y, t);
            FourierEvaluation ora = ft_direct_oracle(s, y, t, 1e-9);
            double gap = ft_gap(res, ora);
            double bound = 1e-8 + res.error_bound + ora.error_bound;
            worst = std::max(worst, gap / bound);
            if (gap > bound) ++failures;
            if (it % 10 == 0 && d <= 2) {
                FourierEvaluation c1 = ft_contour(s, y, t, 64, 1e-10, Rational(1));
                FourierEvaluation c2 = ft_contour(s, y, t, 64, 1e-10, Q(3, 2));
                ++radius_checks;
                if (ft_gap(c1, c2) > c1.error_bound + c2.error_bound + 1e-9) ++failures;
            }
        } catch (const Error&) {
            ++failures;
        }
    }
    return make_result(6, "transform cross-validation, 100 random simplices", failures == 0,
                       failures == 0 ? "max gap/bound " + fmt_double(worst) + ", " +
                                           std::to_string(radius_checks) + " radius checks"
                                     : std::to_string(failures) + " failures");
}

AxisLengths engineered_axes() {
    // near-resonant pair: lattice points at (±1, ±22) sit at dilation 20.001,
    // pinning the Fejer crossover inside the measured N range
    Scalar r2 = sqrt_of(2);
    Scalar a1 = r2.mul_rational(Q(1, 2));
    Scalar a2 = Scalar::from_rational(Q(20001, 1000)).add(r2.neg()).inverse().mul_rational(Q(22));
    return AxisLengths({a1, a2});
}

// 7: Cesaro convergence slope at fixed dilation, plus the reconciliation decay
CriterionResult crit_cesaro_convergence() {
    AxisLengths axes = engineered_axes();
    CrossPolytope P(axes);
    Scalar t = sc(20);
    double cnt = mpz_get_d(count_cross(P, t).count.get_mpz_t());

    std::string csv = "N,cesaro,gap\n";
    std::vector<double> lx, ly;
    for (int N = 16; N <= 1024; N *= 2) {
        double ces = cesaro_mean(P, t, N);
        double gap = std::fabs(ces - cnt);
        csv += std::to_string(N) + "," + fmt_double(ces) + "," + fmt_double(gap) + "\n";
        lx.push_back(std::log(static_cast<double>(N)));
        ly.push_back(std::log(gap));
    }
    ExponentFit fit = ols_fit(lx, ly);
    bool slope_ok = fit.slope >= -0.65 && fit.slope <= -0.35;

    // reconciliation |count - p(t) - E_N| must decay with N at fixed t
    MainTermPolynomial p = MainTermPolynomial::build_p(axes);
    double pt = p.evaluate(t, 192).mid_d();
    std::string rcsv = "N,residual\n";
    std::vector<double> resid;
    for (int N : {16, 64, 256, 1024}) {
        double r = std::fabs(cnt - pt - error_series(axes, t, N).value);
        resid.push_back(r);
        rcsv += std::to_string(N) + "," + fmt_double(r) + "\n";
    }
    bool decay_ok = true;
    for (size_t i = 1; i < resid.size(); ++i)
        if (resid[i] > resid[i - 1]) decay_ok = false;
    if (resid.back() >= resid.front()) decay_ok = false;

    CriterionResult res = make_result(
        7, "Cesaro convergence slope in [-0.65,-0.35] and reconciliation decay",
        slope_ok && decay_ok,
        "slope " + fmt_double(fit.slope) + ", residuals " + fmt_double(resid.front()) + " -> " +
            fmt_double(resid.back()));
    res.artifacts.emplace_back("cesaro_convergence.csv", csv);
    res.artifacts.emplace_back("cesaro_residuals.csv", rcsv);
    return res;
}

// 8: the Fejer-weighted collapse equals the literal double sum exactly
CriterionResult crit_collapse_identities() {
    int checked = 0, failed = 0;
    for (int d = 1; d <= 3; ++d) {
        for (int N = 2; N <= 4; ++N) {
            // literal double sum: enumerate boxes M and their points
            std::map<std::vector<long>, long> literal;
            std::vector<long> M(static_cast<size_t>(d)), m(static_cast<size_t>(d));
            std::function<void(int)> inner = [&](int lv) {
                if (lv == d) {
                    ++literal[m];
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
            // collapsed form: N^d * fejer weight, exact rational
            FejerWeight w(N);
            Rational nd(1);
            for (int k = 0; k < d; ++k) nd *= Rational(N);
            long seen = 0;
            for_each_lattice_point(d, N, [&](const std::vector<long>& mm) {
                ++checked;
                ++seen;
                auto it = literal.find(mm);
                Rational collapsed = w.weight_rational(mm) * nd;
                if (it == literal.end() || Rational(it->second) != collapsed) ++failed;
            });
            if (seen != static_cast<long>(literal.size())) ++failed;
        }
    }
    return make_result(8, "collapse identities exact for N <= 4, d <= 3", failed == 0,
                       std::to_string(checked - failed) + "/" + std::to_string(checked) +
                           " multiplicities match");
}

// 9: diophantine sums and the Schmidt negative control
CriterionResult crit_diophantine() {
    std::vector<long> cps;
    for (long c = 16; c <= 100000; c *= 2) cps.push_back(c);
    cps.push_back(100000);
    Scalar golden = sqrt_of(5).add_rational(Rational(1)).mul_rational(Q(1, 2));

    ProductSumTable tg = product_sum_table({golden}, 100000, cps);
    ProductSumTable t2 = product_sum_table({sqrt_of(2)}, 100000, cps);
    ProductSumTable t23 = product_sum_table({sqrt_of(2), sqrt_of(3)}, 100000, cps);

    bool ok = tg.fitted_gamma.slope <= 1.3 && t2.fitted_gamma.slope <= 1.3 &&
              t23.fitted_gamma.slope <= 1.75;
    for (const ProductSumTable* t : {&tg, &t2, &t23}) {
        int d = static_cast<int>(t->alphas.size());
        for (size_t i = 0; i < t->rows.size(); ++i) {
            const ProductSumRow& r = t->rows[i];
            if (!(r.min_product > 0.0 && r.min_product < std::pow(0.5, d))) ok = false;
            if (i > 0 && r.min_product > t->rows[i - 1].min_product) ok = false;
        }
    }

    Rational tiny(Int(1), Int("10000000000000000000"));
    Scalar control = sqrt_of(2).mul_rational(tiny).add_rational(Q(110001, 1000000));
    SchmidtReport sc_rep = schmidt_check({control}, 1000000);
    if (!sc_rep.flagged) ok = false;

    std::string csv = "instance,M,S,L\n";
    const char* names[] = {"golden", "sqrt2", "sqrt2xsqrt3"};
    int idx = 0;
    for (const ProductSumTable* t : {&tg, &t2, &t23}) {
        for (const ProductSumRow& r : t->rows)
            csv += std::string(names[idx]) + "," + std::to_string(r.M) + "," +
                   fmt_double(r.sum) + "," + fmt_double(r.min_product) + "\n";
        ++idx;
    }
    CriterionResult res = make_result(
        9, "fitted gamma bounds, L_M invariants, negative control flagged", ok,
        "gamma golden " + fmt_double(tg.fitted_gamma.slope) + ", sqrt2 " +
            fmt_double(t2.fitted_gamma.slope) + ", pair " + fmt_double(t23.fitted_gamma.slope) +
            ", control min " + fmt_double(sc_rep.final_min[1]));
    res.artifacts.emplace_back("product_sums.csv", csv);
    return res;
}

// 10: Dedekind coefficient formula vs interpolation; reciprocity at scale
CriterionResult crit_ehrhart() {
    int checked = 0, failed = 0;
    auto expect = [&](bool b) {
        ++checked;
        if (!b) ++failed;
    };
    AxisLengths ones({sc(1), sc(1), sc(1)});
    expect(coefficient_td_minus_2_formula(ones) == Q(11, 6));
    expect(ehrhart_by_interpolation(ones).coefficients[1] == Q(11, 6));

    std::mt19937_64 rng(991);
    std::uniform_int_distribution<long> pick(1, 12);
    int triples = 0;
    while (triples < 20) {
        long x = pick(rng), y = pick(rng), z = pick(rng);
        if (std::gcd(x, y) != 1 || std::gcd(x, z) != 1 || std::gcd(y, z) != 1) continue;
        AxisLengths axes({sc(x), sc(y), sc(z)});
        expect(coefficient_td_minus_2_formula(axes) ==
               ehrhart_by_interpolation(axes).coefficients[1]);
        ++triples;
    }

    std::uniform_int_distribution<long> big(1, 1000000);
    int pairs = 0;
    while (pairs < 200) {
        long a = big(rng), b = big(rng);
        long g = std::gcd(a, b);
        a /= g;
        b /= g;
        if (a == 0 || b == 0) continue;
        Rational lhs = dedekind_sum(a, b).value + dedekind_sum(b, a).value;
        Rational rhs = Q(-1, 4) +
                       (make_rational(a, b) + make_rational(b, a) +
                        make_rational(Int(1), Int(a) * b)) /
                           Rational(12);
        expect(lhs == rhs);
        ++pairs;
    }
    return make_result(10, "Ehrhart coefficient formula and Dedekind reciprocity", failed == 0,
                       std::to_string(checked - failed) + "/" + std::to_string(checked) +
                           " exact");
}

// 11: slab counts scale consistently with O(R^0 + a R^{1+eps})
CriterionResult crit_slab_scaling() {
    std::vector<double> lx, ly;
    std::string csv = "R,count\n";
    for (long R : {25L, 50L, 100L, 200L}) {
        SlabQuery q;
        q.center = {Rational(0), Rational(0)};
        q.radius = sc(R);
        q.normal = {sc(1), sqrt_of(2)};
        q.width = Scalar::from_rational(Q(1, 1000));
        q.offset = Scalar::from_rational(Q(-1, 2000)); // slab centered on the hyperplane
        Int c = count_slab(q);
        csv += std::to_string(R) + "," + c.get_str() + "\n";
        lx.push_back(std::log(static_cast<double>(R)));
        ly.push_back(std::log(mpz_get_d(c.get_mpz_t())));
    }
    ExponentFit fit = ols_fit(lx, ly);
    bool ok = fit.slope < 1.3;
    CriterionResult res =
        make_result(11, "slab count exponent below 1.3", ok, "slope " + fmt_double(fit.slope));
    res.artifacts.emplace_back("slab_counts.csv", csv);
    return res;
}

} // namespace

CriterionResult run_criterion(int index) {
    switch (index) {
        case 1: return crit_decomposition();
        case 2: return crit_mainterm_identities();
        case 3: return crit_d2_exponent();
        case 4: return crit_d3_exponent();
        case 5: return crit_windowed_means();
        case 6: return crit_fourier_crossval();
        case 7: return crit_cesaro_convergence();
        case 8: return crit_collapse_identities();
        case 9: return crit_diophantine();
        case 10: return crit_ehrhart();
        case 11: return crit_slab_scaling();
        default: raise(ErrorKind::InvalidArgument, "criterion index must be 1..11");
    }
}

const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names = {
        "prop1",       "mainterm-identities", "fourier-crossval",      "cesaro-convergence",
        "dioph-gamma", "ehrhart-dedekind",    "discrepancy-exponents"};
    return names;
}

CampaignResult run_campaign(const std::string& name) {
    std::vector<int> which;
    if (name == "prop1")
        which = {1};
    else if (name == "mainterm-identities")
        which = {2};
    else if (name == "fourier-crossval")
        which = {6};
    else if (name == "cesaro-convergence")
        which = {7, 8};
    else if (name == "dioph-gamma")
        which = {9, 11};
    else if (name == "ehrhart-dedekind")
        which = {10};
    else if (name == "discrepancy-exponents")
        which = {3, 4, 5};
    else
        raise(ErrorKind::InvalidArgument, "unknown campaign \"" + name + "\"");

    CampaignResult out;
    out.name = name;
    out.passed = true;
    for (int idx : which) {
        CriterionResult r = run_criterion(idx);
        out.summary += std::string(r.passed ? "PASS" : "FAIL") + " criterion " +
                       std::to_string(r.index) + ": " + r.name + " — " + r.detail + "\n";
        if (!r.passed) out.passed = false;
        for (auto& a : r.artifacts) out.files.push_back(std::move(a));
    }
    out.files.emplace_back("summary.txt", out.summary);
    return out;
}

} // namespace latpoly
