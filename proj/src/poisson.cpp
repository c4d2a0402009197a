#include "poisson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "errors.hpp"
#include "fourier.hpp"

namespace latpoly {

FejerWeight::FejerWeight(int N) : n_(N) {
    if (N <= 1) raise(ErrorKind::InvalidArgument, "averaging order must exceed 1");
}

double FejerWeight::weight(const std::vector<long>& m) const {
    double w = 1.0;
    for (long mk : m) {
        double f = 1.0 - static_cast<double>(std::labs(mk)) / n_;
        if (f <= 0.0) return 0.0;
        w *= f;
    }
    return w;
}

Rational FejerWeight::weight_rational(const std::vector<long>& m) const {
    Rational w(1);
    for (long mk : m) {
        long r = n_ - std::labs(mk);
        if (r <= 0) return Rational(0);
        w *= make_rational(r, n_);
    }
    return w;
}

void for_each_lattice_point(int d, int N,
                            const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> m(static_cast<size_t>(d));
    long top = N - 1;
    std::function<void(int, long)> rec = [&](int level, long rem) {
        long maxrest = static_cast<long>(d - level - 1) * top;
        if (level == d - 1) {
            if (rem > top) return;
            if (rem > 0) {
                m[static_cast<size_t>(level)] = -rem;
                fn(m);
            }
            m[static_cast<size_t>(level)] = rem;
            fn(m);
            return;
        }
        long lo = std::max(0L, rem - maxrest);
        long hi = std::min(rem, top);
        if (lo > hi) return;
        for (long v = -hi; v <= -std::max(lo, 1L); ++v) {
            m[static_cast<size_t>(level)] = v;
            rec(level + 1, rem - (-v));
        }
        if (lo == 0) {
            m[static_cast<size_t>(level)] = 0;
            rec(level + 1, rem);
        }
        for (long v = std::max(lo, 1L); v <= hi; ++v) {
            m[static_cast<size_t>(level)] = v;
            rec(level + 1, rem - v);
        }
    };
    for (long s = 0; s <= static_cast<long>(d) * top; ++s) rec(0, s);
}

namespace {

constexpr int kMaxGroups = kMaxDim + 2;

struct KahanC {
    std::complex<double> sum{0.0, 0.0}, comp{0.0, 0.0};
    void add(std::complex<double> x) {
        std::complex<double> y = x - comp;
        std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

double dpow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// exact rational-dependence table for pole coincidences m_j a_j = m_k a_k
struct RatioEntry {
    enum { Irrational, RationalSmall, RationalBig, Unknown } kind = Irrational;
    long num = 0, den = 0; // a_j/a_k when it fits machine words
    Rational big;
};

struct Engine {
    const AxisLengths* axes;
    int d, N;
    double td;
    std::vector<double> ad;
    std::complex<double> Kc;                              // (prod a / pi^d) i^d
    std::array<std::complex<double>, kMaxGroups> ecoef;   // (-2 pi i t)^k / k!
    std::vector<std::vector<std::complex<double>>> etab;  // etab[j][m+N] = e^{-2 pi i m a_j t}
    std::vector<std::vector<RatioEntry>> ratio;

    bool equal_pole(int j, long mj, int k, long mk) const {
        const RatioEntry& r = ratio[static_cast<size_t>(j)][static_cast<size_t>(k)];
        switch (r.kind) {
            case RatioEntry::Irrational: return false;
            case RatioEntry::RationalSmall: return r.num * mj == r.den * mk;
            case RatioEntry::RationalBig: return r.big == make_rational(mk, mj);
            case RatioEntry::Unknown:
                return axes->at(j).mul_rational(Rational(static_cast<long>(mj)))
                           .compare(axes->at(k).mul_rational(Rational(static_cast<long>(mk)))) == 0;
        }
        return false;
    }
};

Engine build_engine(const AxisLengths& axes, const Scalar& t, int N) {
    if (N <= 1) raise(ErrorKind::InvalidArgument, "averaging order must exceed 1");
    if (t.sign() <= 0) raise(ErrorKind::InvalidArgument, "dilation must be positive");
    Engine e;
    e.axes = &axes;
    e.d = axes.dim();
    e.N = N;
    e.td = t.interval(96).mid_d();
    for (int j = 0; j < e.d; ++j) e.ad.push_back(axes.at(j).interval(96).mid_d());

    double pa = 1.0;
    for (double a : e.ad) pa *= a;
    double mag = pa / dpow(M_PI, e.d);
    static const std::complex<double> kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    e.Kc = mag * kQuarter[e.d % 4];

    std::complex<double> c(0.0, -2.0 * M_PI * e.td);
    e.ecoef[0] = 1.0;
    for (int k = 1; k < kMaxGroups; ++k) e.ecoef[static_cast<size_t>(k)] = e.ecoef[static_cast<size_t>(k - 1)] * c / static_cast<double>(k);

    for (int j = 0; j < e.d; ++j) {
        std::vector<std::complex<double>> tab(static_cast<size_t>(2 * N + 1));
        double ajt = e.ad[static_cast<size_t>(j)] * e.td;
        for (long m = 0; m <= N; ++m) {
            double frac = std::fmod(static_cast<double>(m) * ajt, 1.0);
            tab[static_cast<size_t>(N + m)] = std::polar(1.0, -2.0 * M_PI * frac);
            tab[static_cast<size_t>(N - m)] = std::conj(tab[static_cast<size_t>(N + m)]);
        }
        e.etab.push_back(std::move(tab));
    }

    e.ratio.assign(static_cast<size_t>(e.d), std::vector<RatioEntry>(static_cast<size_t>(e.d)));
    for (int j = 0; j < e.d; ++j)
        for (int k = 0; k < e.d; ++k) {
            if (j == k) continue;
            RatioEntry& r = e.ratio[static_cast<size_t>(j)][static_cast<size_t>(k)];
            auto q = axes.at(j).try_mul(axes.at(k).inverse());
            if (!q) {
                r.kind = RatioEntry::Unknown;
            } else if (!q->is_rational()) {
                r.kind = RatioEntry::Irrational;
            } else {
                Rational v = q->rational();
                if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
                    r.kind = RatioEntry::RationalSmall;
                    r.num = v.get_num().get_si();
                    r.den = v.get_den().get_si();
                } else {
                    r.kind = RatioEntry::RationalBig;
                    r.big = v;
                }
            }
        }
    return e;
}

struct Split {
    std::complex<double> origin{0, 0}, nonzero{0, 0};
    bool collision = false;
};

// residues of e^{-2 pi i z t} / (z prod_j (z - m_j a_j)), split into the origin
// group and the rest, scaled by (-1)^d 2^d (prod a) / (2 pi i)^d
Split eval_split(const Engine& eng, const std::vector<long>& m) {
    int d = eng.d;
    int rep[kMaxGroups], mult[kMaxGroups];
    int ng = 0, zeros = 0;
    for (int j = 0; j < d; ++j) {
        long mj = m[static_cast<size_t>(j)];
        if (mj == 0) {
            ++zeros;
            continue;
        }
        bool merged = false;
        for (int g = 0; g < ng && !merged; ++g) {
            int k = rep[g];
            if (eng.equal_pole(j, mj, k, m[static_cast<size_t>(k)])) {
                ++mult[g];
                merged = true;
            }
        }
        if (!merged) {
            rep[ng] = j;
            mult[ng] = 1;
            ++ng;
        }
    }

    double pole[kMaxGroups];
    std::complex<double> phase[kMaxGroups];
    int mu[kMaxGroups];
    pole[0] = 0.0;
    phase[0] = 1.0;
    mu[0] = zeros + 1;
    for (int g = 0; g < ng; ++g) {
        int j = rep[g];
        long mj = m[static_cast<size_t>(j)];
        pole[g + 1] = static_cast<double>(mj) * eng.ad[static_cast<size_t>(j)];
        phase[g + 1] = eng.etab[static_cast<size_t>(j)][static_cast<size_t>(eng.N + mj)];
        mu[g + 1] = mult[g];
    }
    int G = ng + 1;

    Split out;
    for (int g = 0; g < G; ++g) {
        int order = mu[g];
        std::complex<double> S[kMaxGroups], T[kMaxGroups];
        for (int k = 0; k < order; ++k) S[k] = eng.ecoef[static_cast<size_t>(k)];
        for (int h = 0; h < G; ++h) {
            if (h == g) continue;
            double delta = pole[g] - pole[h];
            double B[kMaxGroups];
            B[0] = 1.0 / dpow(delta, mu[h]);
            for (int n = 1; n < order; ++n)
                B[n] = B[n - 1] * (-static_cast<double>(mu[h] + n - 1) / n) / delta;
            for (int n = 0; n < order; ++n) {
                std::complex<double> acc(0, 0);
                for (int i = 0; i <= n; ++i) acc += S[i] * B[n - i];
                T[n] = acc;
            }
            for (int n = 0; n < order; ++n) S[n] = T[n];
        }
        std::complex<double> contrib = phase[g] * S[order - 1];
        if (g == 0)
            out.origin += contrib;
        else
            out.nonzero += contrib;
        if (g > 0 && mu[g] > 1) out.collision = true;
    }
    out.origin *= eng.Kc;
    out.nonzero *= eng.Kc;
    return out;
}

void check_axes_dim(const AxisLengths& axes, const std::vector<long>& v, const char* what) {
    if (v.size() != static_cast<size_t>(axes.dim()))
        raise(ErrorKind::InvalidArgument, std::string(what) + " dimension does not match the axes");
}

} // namespace

double cesaro_mean(const CrossPolytope& P, const Scalar& t, int N) {
    Engine eng = build_engine(P.axes(), t, N);
    FejerWeight w(N);
    KahanC acc;
    for_each_lattice_point(eng.d, N, [&](const std::vector<long>& m) {
        Split s = eval_split(eng, m);
        acc.add(w.weight(m) * (s.origin + s.nonzero));
    });
    return acc.sum.real();
}

ErrorSeriesValue error_series(const AxisLengths& axes, const Scalar& t, int N) {
    Engine eng = build_engine(axes, t, N);
    FejerWeight w(N);
    int d = eng.d;
    KahanC acc;
    long terms = 0;
    for_each_lattice_point(d, N, [&](const std::vector<long>& m) {
        double wt = w.weight(m);
        for (int j = 0; j < d; ++j) {
            long mj = m[static_cast<size_t>(j)];
            if (mj == 0) continue;
            double den = static_cast<double>(mj);
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                long mk = m[static_cast<size_t>(k)];
                double f = static_cast<double>(mj) * eng.ad[static_cast<size_t>(j)] /
                               eng.ad[static_cast<size_t>(k)] -
                           static_cast<double>(mk);
                if (std::abs(f) < 0.5 && eng.equal_pole(j, mj, k, mk))
                    raise(ErrorKind::DenominatorZero,
                          "exact rational dependence among the axes hits a tail denominator");
                den *= f;
            }
            acc.add(wt * eng.etab[static_cast<size_t>(j)][static_cast<size_t>(eng.N + mj)] / den);
            ++terms;
        }
    });
    static const std::complex<double> kQuarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> v = acc.sum * kQuarter[d % 4] / dpow(M_PI, d);
    ErrorSeriesValue out;
    out.N = N;
    out.t = t;
    out.value = v.real();
    out.terms_used = terms;
    out.imag_residual = std::abs(v.imag());
    return out;
}

double residue_origin_sum(const AxisLengths& axes, const Scalar& t,
                          const std::vector<long>& box) {
    check_axes_dim(axes, box, "box");
    for (long b : box)
        if (b < 0) raise(ErrorKind::InvalidArgument, "box bounds must be nonnegative");
    long top = 1;
    for (long b : box) top = std::max(top, b + 1);
    Engine eng = build_engine(axes, t, static_cast<int>(top + 1));
    KahanC acc;
    std::vector<long> m(static_cast<size_t>(eng.d), 0);
    std::function<void(int)> rec = [&](int level) {
        if (level == eng.d) {
            acc.add(eval_split(eng, m).origin);
            return;
        }
        long b = box[static_cast<size_t>(level)];
        for (long v = -b; v <= b; ++v) {
            m[static_cast<size_t>(level)] = v;
            rec(level + 1);
        }
    };
    rec(0);
    return acc.sum.real();
}

double residue_origin_average(const AxisLengths& axes, const Scalar& t, int N) {
    Engine eng = build_engine(axes, t, N);
    FejerWeight w(N);
    KahanC acc;
    for_each_lattice_point(eng.d, N, [&](const std::vector<long>& m) {
        acc.add(w.weight(m) * eval_split(eng, m).origin);
    });
    return acc.sum.real();
}

// ---------------------------------------------------------------------------
// certified variants
// ---------------------------------------------------------------------------

namespace {

struct CertCtx {
    mpfr_prec_t wp;
    Interval two_pi, t_iv;
    CInterval c; // -2 pi i t
    CInterval K; // (prod a / pi^d) i^d
};

CertCtx build_cert(const AxisLengths& axes, const Scalar& t, mpfr_prec_t bits) {
    CertCtx ctx;
    ctx.wp = (bits > 0 ? bits : default_precision()) + 64;
    ctx.two_pi = Interval::pi(ctx.wp).mul_long(2);
    ctx.t_iv = t.interval(ctx.wp);
    ctx.c = CInterval::from_real(ctx.two_pi.mul(ctx.t_iv)).rotate_quarters(3);
    Interval pa = Interval::from_long(1, ctx.wp);
    for (int j = 0; j < axes.dim(); ++j) pa = pa.mul(axes.at(j).interval(ctx.wp));
    Interval pid = Interval::from_long(1, ctx.wp);
    for (int j = 0; j < axes.dim(); ++j) pid = pid.mul(Interval::pi(ctx.wp));
    ctx.K = CInterval::from_real(pa.mul(pid.inverse())).rotate_quarters(axes.dim());
    return ctx;
}

Interval cert_nonzero_diff(const Scalar& x, const Scalar& y, mpfr_prec_t wp) {
    for (; wp <= kPrecisionCap; wp *= 2) {
        Interval d = x.interval(wp).sub(y.interval(wp));
        if (!d.contains_zero()) return d;
    }
    raise(ErrorKind::PrecisionExhausted, "pole separation below certification cap");
}

struct CSplit {
    CInterval origin, nonzero;
    bool collision = false;
};

CSplit cert_split(const AxisLengths& axes, const std::vector<long>& m, const CertCtx& ctx) {
    int d = axes.dim();
    std::vector<Scalar> poles;   // group representatives, origin first
    std::vector<int> mult;
    poles.push_back(Scalar::from_int(0));
    mult.push_back(1);
    for (int j = 0; j < d; ++j) {
        long mj = m[static_cast<size_t>(j)];
        if (mj == 0) {
            ++mult[0];
            continue;
        }
        Scalar p = axes.at(j).mul_rational(Rational(mj));
        bool merged = false;
        for (size_t g = 1; g < poles.size() && !merged; ++g) {
            if (poles[g].compare(p) == 0) {
                ++mult[g];
                merged = true;
            }
        }
        if (!merged) {
            poles.push_back(p);
            mult.push_back(1);
        }
    }

    CSplit out;
    out.origin = CInterval::zero(ctx.wp);
    out.nonzero = CInterval::zero(ctx.wp);
    for (size_t g = 0; g < poles.size(); ++g) {
        int order = mult[g];
        std::vector<CInterval> S;
        CInterval ek = CInterval::from_real(Interval::from_long(1, ctx.wp));
        for (int k = 0; k < order; ++k) {
            S.push_back(ek);
            ek = ek.mul(ctx.c).mul_rational(make_rational(1, k + 1));
        }
        for (size_t h = 0; h < poles.size(); ++h) {
            if (h == g) continue;
            Interval delta = cert_nonzero_diff(poles[g], poles[h], ctx.wp);
            Interval dinv = delta.inverse();
            std::vector<Interval> B;
            Interval b0 = Interval::from_long(1, ctx.wp);
            for (int i = 0; i < mult[h]; ++i) b0 = b0.mul(dinv);
            B.push_back(b0);
            for (int n = 1; n < order; ++n)
                B.push_back(B.back().mul(dinv).mul_rational(
                    make_rational(-(mult[h] + static_cast<long>(n) - 1), n)));
            std::vector<CInterval> T(static_cast<size_t>(order), CInterval::zero(ctx.wp));
            for (int n = 0; n < order; ++n)
                for (int i = 0; i <= n; ++i)
                    T[static_cast<size_t>(n)] =
                        T[static_cast<size_t>(n)].add(S[static_cast<size_t>(i)].mul_real(
                            B[static_cast<size_t>(n - i)]));
            S = T;
        }
        Interval angle = poles[g].interval(ctx.wp).mul(ctx.t_iv).mul(ctx.two_pi).neg();
        CInterval contrib = CInterval::cis(angle).mul(S[static_cast<size_t>(order - 1)]);
        if (g == 0)
            out.origin = out.origin.add(contrib);
        else {
            out.nonzero = out.nonzero.add(contrib);
            if (mult[g] > 1) out.collision = true;
        }
    }
    out.origin = out.origin.mul(ctx.K);
    out.nonzero = out.nonzero.mul(ctx.K);
    return out;
}

} // namespace

Interval cesaro_mean_certified(const CrossPolytope& P, const Scalar& t, int N,
                               mpfr_prec_t bits) {
    FejerWeight w(N);
    int d = P.dim();
    GeneralSimplex s = corner_as_general(P.axes());
    Rational twod = make_rational(1L << d);
    CInterval acc = CInterval::zero(bits + 64);
    for_each_lattice_point(d, N, [&](const std::vector<long>& m) {
        std::vector<Scalar> y;
        for (long mk : m) y.push_back(Scalar::from_rational(Rational(mk)));
        FourierEvaluation f = ft_residues(s, y, t, bits);
        acc = acc.add(f.value.mul_rational(w.weight_rational(m) * twod));
    });
    return acc.re();
}

Interval error_series_certified(const AxisLengths& axes, const Scalar& t, int N,
                                mpfr_prec_t bits) {
    FejerWeight w(N);
    CertCtx ctx = build_cert(axes, t, bits);
    CInterval acc = CInterval::zero(ctx.wp);
    for_each_lattice_point(axes.dim(), N, [&](const std::vector<long>& m) {
        CSplit s = cert_split(axes, m, ctx);
        if (s.collision)
            raise(ErrorKind::DenominatorZero,
                  "exact rational dependence among the axes hits a tail denominator");
        acc = acc.add(s.nonzero.mul_rational(w.weight_rational(m)));
    });
    mpfr_prec_t budget = (bits > 0 ? bits : default_precision());
    if (!(acc.im().abs().hi_d() < std::ldexp(1.0, -static_cast<int>(budget) + 8)))
        raise(ErrorKind::NotConverged, "imaginary residual above the realness budget");
    return acc.re();
}

Interval residue_origin_sum_certified(const AxisLengths& axes, const Scalar& t,
                                      const std::vector<long>& box, mpfr_prec_t bits) {
    check_axes_dim(axes, box, "box");
    for (long b : box)
        if (b < 0) raise(ErrorKind::InvalidArgument, "box bounds must be nonnegative");
    CertCtx ctx = build_cert(axes, t, bits);
    CInterval acc = CInterval::zero(ctx.wp);
    std::vector<long> m(static_cast<size_t>(axes.dim()), 0);
    std::function<void(int)> rec = [&](int level) {
        if (level == axes.dim()) {
            acc = acc.add(cert_split(axes, m, ctx).origin);
            return;
        }
        long b = box[static_cast<size_t>(level)];
        for (long v = -b; v <= b; ++v) {
            m[static_cast<size_t>(level)] = v;
            rec(level + 1);
        }
    };
    rec(0);
    return acc.re();
}

Interval residue_origin_average_certified(const AxisLengths& axes, const Scalar& t, int N,
                                          mpfr_prec_t bits) {
    FejerWeight w(N);
    CertCtx ctx = build_cert(axes, t, bits);
    CInterval acc = CInterval::zero(ctx.wp);
    for_each_lattice_point(axes.dim(), N, [&](const std::vector<long>& m) {
        acc = acc.add(cert_split(axes, m, ctx).origin.mul_rational(w.weight_rational(m)));
    });
    return acc.re();
}

} // namespace latpoly
