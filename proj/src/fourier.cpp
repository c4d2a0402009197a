#include "fourier.hpp"

#include <cmath>
#include <complex>

#include "errors.hpp"

namespace latpoly {

const char* ft_method_name(FtMethod m) {
    switch (m) {
        case FtMethod::ClosedForm: return "closed-form";
        case FtMethod::Contour: return "contour";
        case FtMethod::Residues: return "residues";
        case FtMethod::DirectOracle: return "direct-oracle";
    }
    return "?";
}

GeneralSimplex corner_as_general(const AxisLengths& axes) {
    int d = axes.dim();
    Scalar zero = Scalar::from_int(0);
    std::vector<std::vector<Scalar>> verts;
    verts.emplace_back(static_cast<size_t>(d), zero);
    for (int i = 0; i < d; ++i) {
        std::vector<Scalar> v(static_cast<size_t>(d), zero);
        v[static_cast<size_t>(i)] = axes.at(i);
        verts.push_back(std::move(v));
    }
    return GeneralSimplex(std::move(verts));
}

namespace {

Scalar scalar_dot(const std::vector<Scalar>& v, const std::vector<Scalar>& y) {
    Scalar acc = Scalar::from_int(0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero() || y[i].is_zero()) continue;
        auto prod = v[i].try_mul(y[i]);
        if (!prod)
            raise(ErrorKind::PrecisionExhausted, "vertex-frequency product leaves the family");
        auto next = acc.try_add(*prod);
        if (!next) raise(ErrorKind::PrecisionExhausted, "pole location leaves the family");
        acc = *next;
    }
    return acc;
}

mpfr_prec_t pick_bits(mpfr_prec_t bits) { return bits > 0 ? bits : default_precision(); }

// enclosure of x - y certified away from zero; callers guarantee x != y exactly
Interval nonzero_diff(const Scalar& x, const Scalar& y, mpfr_prec_t wp) {
    for (; wp <= kPrecisionCap; wp *= 2) {
        Interval d = x.interval(wp).sub(y.interval(wp));
        if (!d.contains_zero()) return d;
    }
    raise(ErrorKind::PrecisionExhausted, "pole separation below certification cap");
}

Interval nonzero_value(const Scalar& x, mpfr_prec_t wp) {
    for (; wp <= kPrecisionCap; wp *= 2) {
        Interval v = x.interval(wp);
        if (!v.contains_zero()) return v;
    }
    raise(ErrorKind::PrecisionExhausted, "value below certification cap");
}

Interval pow_interval(const Interval& b, int n, mpfr_prec_t wp) {
    Interval acc = Interval::from_long(1, wp);
    for (int i = 0; i < n; ++i) acc = acc.mul(b);
    return acc;
}

using CSeries = std::vector<CInterval>;

CSeries series_mul(const CSeries& a, const CSeries& b, size_t ord) {
    CSeries out(ord, CInterval::zero(1));
    for (size_t i = 0; i < a.size() && i < ord; ++i)
        for (size_t j = 0; j + i < ord && j < b.size(); ++j)
            out[i + j] = out[i + j].add(a[i].mul(b[j]));
    return out;
}

// e^{cw} truncated to `ord` coefficients
CSeries exp_series(const CInterval& c, size_t ord) {
    CSeries out;
    out.push_back(CInterval::from_real(Interval::from_long(1)));
    for (size_t n = 1; n < ord; ++n)
        out.push_back(out.back().mul(c).mul_rational(make_rational(1, static_cast<long>(n))));
    return out;
}

// (delta + w)^{-mu} truncated to `ord` coefficients, delta certified nonzero
CSeries binomial_series(const Interval& delta, int mu, size_t ord) {
    Interval dinv = delta.inverse();
    CSeries out;
    out.push_back(CInterval::from_real(pow_interval(dinv, mu, delta.prec())));
    for (size_t n = 1; n < ord; ++n) {
        Rational f = make_rational(-(mu + static_cast<long>(n) - 1), static_cast<long>(n));
        out.push_back(out.back().mul_real(dinv).mul_rational(f));
    }
    return out;
}

} // namespace

PoleConfiguration pole_configuration(const GeneralSimplex& s, const std::vector<Scalar>& y) {
    if (y.size() != static_cast<size_t>(s.dim()))
        raise(ErrorKind::InvalidArgument, "frequency dimension does not match the simplex");
    PoleConfiguration cfg;
    for (const auto& v : s.vertices()) cfg.locations.push_back(scalar_dot(v, y));
    for (const auto& p : cfg.locations) {
        bool found = false;
        for (auto& [val, mult] : cfg.groups) {
            if (val.compare(p) == 0) {
                ++mult;
                found = true;
                break;
            }
        }
        if (!found) cfg.groups.emplace_back(p, 1);
    }
    return cfg;
}

FourierEvaluation ft_standard_simplex(const std::vector<Scalar>& y, const Scalar& t,
                                      mpfr_prec_t bits) {
    size_t d = y.size();
    if (d == 0) raise(ErrorKind::InvalidArgument, "frequency vector must be nonempty");
    for (const auto& yj : y)
        if (yj.sign() == 0)
            raise(ErrorKind::PoleCollision, "zero frequency component collides with the origin pole");
    for (size_t j = 0; j < d; ++j)
        for (size_t k = j + 1; k < d; ++k)
            if (y[j].compare(y[k]) == 0)
                raise(ErrorKind::PoleCollision, "coinciding frequency components");

    mpfr_prec_t wp = pick_bits(bits) + 64;
    Interval two_pi = Interval::pi(wp).mul_long(2);
    Interval t_iv = t.interval(wp);
    CInterval sum = CInterval::zero(wp);
    for (size_t j = 0; j < d; ++j) {
        Interval yj = nonzero_value(y[j], wp);
        Interval theta = yj.mul(t_iv).mul(two_pi).neg();
        CInterval numer = CInterval::from_real(Interval::from_long(1, wp)).sub(CInterval::cis(theta));
        Interval denom = yj;
        for (size_t k = 0; k < d; ++k) {
            if (k == j) continue;
            denom = denom.mul(nonzero_diff(y[j], y[k], wp));
        }
        sum = sum.add(numer.div_real(denom));
    }
    // (-1)^{d+1} / (2 pi i)^d
    Interval factor = pow_interval(two_pi, static_cast<int>(d), wp).inverse();
    if (d % 2 == 0) factor = factor.neg();
    CInterval value = sum.rotate_quarters(-static_cast<int>(d)).mul_real(factor);
    return {value, FtMethod::ClosedForm, value.wid_d(), y, t};
}

namespace {

struct ResidueContext {
    mpfr_prec_t wp;
    Interval two_pi;
    Interval t_iv;
    CInterval minus_2pi_i_t;  // coefficient c in e^{cw}
};

CInterval residue_at_group(const PoleConfiguration& cfg, size_t g, const ResidueContext& ctx) {
    const auto& [pole, mu] = cfg.groups[g];
    size_t ord = static_cast<size_t>(mu);
    CSeries series = exp_series(ctx.minus_2pi_i_t, ord);
    for (size_t l = 0; l < cfg.groups.size(); ++l) {
        if (l == g) continue;
        Interval delta = nonzero_diff(pole, cfg.groups[l].first, ctx.wp);
        series = series_mul(series, binomial_series(delta, cfg.groups[l].second, ord), ord);
    }
    Interval angle = pole.interval(ctx.wp).mul(ctx.t_iv).mul(ctx.two_pi).neg();
    return CInterval::cis(angle).mul(series[ord - 1]);
}

} // namespace

FourierEvaluation ft_residues(const GeneralSimplex& s, const std::vector<Scalar>& y,
                              const Scalar& t, mpfr_prec_t bits) {
    int d = s.dim();
    PoleConfiguration cfg = pole_configuration(s, y);
    mpfr_prec_t wp = pick_bits(bits) + 64;
    ResidueContext ctx{wp, Interval::pi(wp).mul_long(2), t.interval(wp), CInterval()};
    ctx.minus_2pi_i_t =
        CInterval::from_real(ctx.two_pi.mul(ctx.t_iv)).rotate_quarters(3);  // -2 pi i t

    CInterval total = CInterval::zero(wp);
    for (size_t g = 0; g < cfg.groups.size(); ++g)
        total = total.add(residue_at_group(cfg, g, ctx));

    // (-1)^d d! / (2 pi i)^d times lambda(S)
    Interval factor = pow_interval(ctx.two_pi, d, wp).inverse().mul_rational(
        Rational(factorial_int(static_cast<unsigned long>(d))));
    if (d % 2 != 0) factor = factor.neg();
    Interval vol = s.volume().interval(wp);
    CInterval value = total.rotate_quarters(-d).mul_real(factor).mul_real(vol);
    return {value, FtMethod::Residues, value.wid_d(), y, t};
}

namespace {

CInterval contour_once(const PoleConfiguration& cfg, int d, const Rational& radius,
                       const Interval& vol, const Scalar& t, int n, mpfr_prec_t wp) {
    Interval two_pi = Interval::pi(wp).mul_long(2);
    Interval t_iv = t.interval(wp);
    Interval r_iv = Interval::from_rational(radius, wp);
    CInterval sum = CInterval::zero(wp);
    for (int k = 0; k < n; ++k) {
        Interval theta = two_pi.mul_rational(make_rational(k, n));
        CInterval unit = CInterval::cis(theta);
        CInterval z = unit.mul_real(r_iv);
        // e^{-2 pi i z t} = e^{2 pi Im(z) t} * cis(-2 pi Re(z) t)
        Interval mag = z.im().mul(two_pi).mul(t_iv).exp();
        CInterval ew = CInterval::cis(z.re().mul(two_pi).mul(t_iv).neg()).mul_real(mag);
        CInterval denom = CInterval::from_real(Interval::from_long(1, wp));
        for (const auto& p : cfg.locations)
            denom = denom.mul(z.sub(CInterval::from_real(p.interval(wp))));
        sum = sum.add(unit.mul(ew.div(denom)));
    }
    // (-1)^d d! lambda R / ((2 pi)^d n) with the i^{-d} rotation
    Interval factor = pow_interval(two_pi, d, wp).inverse().mul_rational(
        Rational(factorial_int(static_cast<unsigned long>(d))) * make_rational(1, n));
    if (d % 2 != 0) factor = factor.neg();
    return sum.rotate_quarters(-d).mul_real(factor).mul_real(r_iv).mul_real(vol);
}

} // namespace

FourierEvaluation ft_contour(const GeneralSimplex& s, const std::vector<Scalar>& y,
                             const Scalar& t, int nodes, double tol,
                             const Rational& radius_scale, mpfr_prec_t bits) {
    if (nodes < 16) raise(ErrorKind::InvalidArgument, "contour rule needs at least 16 nodes");
    if (radius_scale < 1)
        raise(ErrorKind::InvalidArgument, "radius scale below the enclosing-circle requirement");
    int d = s.dim();
    PoleConfiguration cfg = pole_configuration(s, y);

    // R = scale * 2 * max(1, max_j |p_j|), kept rational for reproducibility
    Rational max_abs(1);
    for (const auto& p : cfg.locations) {
        Rational hi = p.interval(64).abs().hi_rational();
        if (hi > max_abs) max_abs = hi;
    }
    Rational radius = radius_scale * 2 * max_abs;

    // integrand magnitude reaches e^{2 pi R t}: pick a precision absorbing it
    double grow = 2.0 * 3.14159265358979 * radius.get_d() * t.interval(64).hi_d();
    mpfr_prec_t wp = pick_bits(bits) + 64;
    mpfr_prec_t need = static_cast<mpfr_prec_t>(grow * 1.4427 + 96.0);
    if (need > wp) wp = need;
    if (wp > kPrecisionCap)
        raise(ErrorKind::NotConverged, "contour precision demand exceeds the refinement cap");

    Interval vol = s.volume().interval(wp);
    CInterval prev = contour_once(cfg, d, radius, vol, t, nodes, wp);
    int n = nodes;
    for (int attempt = 0; attempt < 3; ++attempt) {
        n *= 2;
        CInterval cur = contour_once(cfg, d, radius, vol, t, n, wp);
        double diff = cur.sub(prev).abs_hi();
        if (diff <= tol)
            return {cur, FtMethod::Contour, diff + cur.wid_d(), y, t};
        prev = cur;
    }
    raise(ErrorKind::NotConverged, "contour quadrature failed to reach tolerance");
}

namespace {

void gauss_legendre(int n, std::vector<double>& xs, std::vector<double>& ws) {
    xs.assign(static_cast<size_t>(n), 0.0);
    ws.assign(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double p1 = 0, dp = 0;
        for (int it = 0; it < 64; ++it) {
            double p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        xs[static_cast<size_t>(i)] = -x;
        xs[static_cast<size_t>(n - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        ws[static_cast<size_t>(i)] = w;
        ws[static_cast<size_t>(n - 1 - i)] = w;
    }
}

// \int_{S_0} e^{-i s (u . b)} du by nested Gauss-Legendre with order `n` per axis
std::complex<double> simplex_quad(const std::vector<double>& b, double s, int n) {
    std::vector<double> xs, ws;
    gauss_legendre(n, xs, ws);
    size_t d = b.size();
    // recursion over levels with remaining upper bound and accumulated phase
    struct Rec {
        const std::vector<double>&b, &xs, &ws;
        double s;
        size_t d;
        std::complex<double> go(size_t level, double upper, double phase) const {
            if (level == d)
                return std::exp(std::complex<double>(0.0, -s * phase));
            std::complex<double> acc(0.0, 0.0);
            for (size_t g = 0; g < xs.size(); ++g) {
                double u = upper * 0.5 * (xs[g] + 1.0);
                double w = upper * 0.5 * ws[g];
                acc += w * go(level + 1, upper - u, phase + u * b[level]);
            }
            return acc;
        }
    };
    return Rec{b, xs, ws, s, d}.go(0, 1.0, 0.0);
}

double det_double(std::vector<std::vector<double>> m) {
    size_t n = m.size();
    double det = 1.0;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (m[piv][c] == 0.0) return 0.0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            double f = m[r][c] / m[c][c];
            for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

Interval dyadic_ball(double center, double halfwidth) {
    return Interval::from_endpoints(Rational(center) - Rational(halfwidth),
                                    Rational(center) + Rational(halfwidth), 64);
}

} // namespace

FourierEvaluation ft_direct_oracle(const GeneralSimplex& s, const std::vector<Scalar>& y,
                                   const Scalar& t, double tol) {
    int d = s.dim();
    if (d > 3) raise(ErrorKind::InvalidArgument, "direct oracle supports d <= 3");
    if (!(tol >= 1e-12)) raise(ErrorKind::InvalidArgument, "direct oracle tolerance below 1e-12");
    if (y.size() != static_cast<size_t>(d))
        raise(ErrorKind::InvalidArgument, "frequency dimension does not match the simplex");

    double td = t.interval(64).mid_d();
    std::vector<double> yd;
    for (const auto& yi : y) yd.push_back(yi.interval(64).mid_d());
    std::vector<std::vector<double>> verts;
    for (const auto& v : s.vertices()) {
        std::vector<double> row;
        for (const auto& c : v) row.push_back(c.interval(64).mid_d());
        verts.push_back(std::move(row));
    }
    const std::vector<double>& base = verts.back();
    double p_base = 0;
    for (int i = 0; i < d; ++i) p_base += base[static_cast<size_t>(i)] * yd[static_cast<size_t>(i)];
    std::vector<double> b(static_cast<size_t>(d));
    std::vector<std::vector<double>> edges(static_cast<size_t>(d),
                                           std::vector<double>(static_cast<size_t>(d)));
    for (int j = 0; j < d; ++j) {
        double pj = 0;
        for (int i = 0; i < d; ++i)
            pj += verts[static_cast<size_t>(j)][static_cast<size_t>(i)] * yd[static_cast<size_t>(i)];
        b[static_cast<size_t>(j)] = pj - p_base;
        for (int i = 0; i < d; ++i)
            edges[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                verts[static_cast<size_t>(j)][static_cast<size_t>(i)] - base[static_cast<size_t>(i)];
    }
    double jac = std::abs(det_double(edges)) * std::pow(td, d);
    double twopit = 2.0 * M_PI * td;

    std::complex<double> prev = simplex_quad(b, twopit, 12);
    std::complex<double> cur = prev;
    double diff = 0;
    bool ok = false;
    for (int n : {24, 48, 96}) {
        cur = simplex_quad(b, twopit, n);
        diff = std::abs(cur - prev);
        if (diff < 0.5 * tol) {
            ok = true;
            break;
        }
        prev = cur;
    }
    if (!ok) raise(ErrorKind::NotConverged, "adaptive simplex quadrature stalled");

    std::complex<double> value =
        jac * std::exp(std::complex<double>(0.0, -twopit * p_base)) * cur;
    double err = diff + tol + 1e-11 * (1.0 + std::abs(value));
    CInterval enc(dyadic_ball(value.real(), err), dyadic_ball(value.imag(), err));
    return {enc, FtMethod::DirectOracle, err, y, t};
}

} // namespace latpoly
