#include "scalar.hpp"

#include <algorithm>

#include "errors.hpp"

namespace latpoly {

Scalar Scalar::from_rational(Rational q) {
    Scalar s;
    s.value_ = std::move(q);
    return s;
}

Scalar Scalar::from_surd(SurdSum v) {
    Scalar s;
    if (v.is_rational())
        s.value_ = v.rational_part();
    else
        s.value_ = std::move(v);
    return s;
}

Scalar Scalar::sqrt_rational(const Rational& q) {
    int sq = sgn(q);
    if (sq < 0) raise(ErrorKind::InvalidArgument, "square root of a negative rational");
    if (sq == 0) return Scalar();
    // sqrt(u/v) = sqrt(u*v)/v
    Int rad = q.get_num() * q.get_den();
    if (!rad.fits_ulong_p())
        raise(ErrorKind::PrecisionExhausted, "sqrt radicand exceeds the supported range");
    return from_surd(SurdSum::sqrt_term(make_rational(Int(1), q.get_den()), rad.get_ui()));
}

Scalar Scalar::from_polyroot(PolyRoot r) {
    if (auto q = r.rational_value()) return from_rational(*q);
    if (auto s = r.as_quadratic()) return from_surd(std::move(*s));
    Scalar out;
    out.value_ = std::move(r);
    return out;
}

Scalar Scalar::from_root(std::vector<Rational> coeffs, const Rational& lo, const Rational& hi) {
    // clear denominators to an integer polynomial
    Int den(1);
    for (const auto& c : coeffs) {
        Int d = c.get_den();
        den = den / gcd(den, d) * d;
    }
    IntPoly ip;
    ip.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Rational scaled = c * Rational(den);
        ip.push_back(scaled.get_num());
    }
    ip = poly_trim(std::move(ip));
    if (ip.size() <= 1)
        raise(ErrorKind::InvalidArgument, "root atom needs a nonconstant polynomial");
    if (ip.size() == 2) {
        // linear: the value is rational regardless of the bracket
        Rational v = make_rational(-ip[0], ip[1]);
        if (v <= lo || v >= hi)
            raise(ErrorKind::InvalidArgument, "linear root lies outside the given interval");
        return from_rational(v);
    }
    // a rational value sitting exactly in the bracket short-circuits construction
    IntPoly probe = poly_primitive(poly_squarefree_part(ip));
    if (!probe.empty() && probe[0] == 0 && lo < 0 && hi > 0 &&
        sturm_count(probe, lo, hi) == 1)
        return from_rational(Rational(0));
    return from_polyroot(PolyRoot(std::move(ip), lo, hi));
}

Scalar::Tier Scalar::tier() const {
    if (std::holds_alternative<Rational>(value_)) return Tier::Rational;
    if (std::holds_alternative<SurdSum>(value_)) return Tier::Quadratic;
    return Tier::Root;
}

const Rational& Scalar::rational() const { return std::get<Rational>(value_); }
const SurdSum& Scalar::quadratic() const { return std::get<SurdSum>(value_); }
const PolyRoot& Scalar::root() const { return std::get<PolyRoot>(value_); }

SurdSum Scalar::as_surd() const {
    switch (tier()) {
        case Tier::Rational: return SurdSum(rational());
        case Tier::Quadratic: return quadratic();
        default: raise(ErrorKind::Internal, "as_surd on a root-tier scalar");
    }
}

Scalar Scalar::neg() const {
    switch (tier()) {
        case Tier::Rational: return from_rational(-rational());
        case Tier::Quadratic: return from_surd(quadratic().neg());
        default: return from_polyroot(root().neg());
    }
}

Scalar Scalar::inverse() const {
    switch (tier()) {
        case Tier::Rational: {
            if (rational() == 0) raise(ErrorKind::DenominatorZero, "inverse of exact zero");
            return from_rational(make_rational(rational().get_den(), rational().get_num()));
        }
        case Tier::Quadratic: return from_surd(quadratic().inverse());
        default: return from_polyroot(root().inverse());
    }
}

Scalar Scalar::add_rational(const Rational& q) const {
    switch (tier()) {
        case Tier::Rational: return from_rational(rational() + q);
        case Tier::Quadratic: return from_surd(quadratic().add_rational(q));
        default: {
            if (root().compare_rational(-q) == 0) return Scalar();  // hidden rational value
            return from_polyroot(root().add_rational(q));
        }
    }
}

Scalar Scalar::mul_rational(const Rational& q) const {
    if (q == 0) return Scalar();
    switch (tier()) {
        case Tier::Rational: return from_rational(rational() * q);
        case Tier::Quadratic: return from_surd(quadratic().mul_rational(q));
        default: return from_polyroot(root().mul_rational(q));
    }
}

namespace {

// polynomial with root alpha^2: write p(x) = A(x^2) + x B(x^2); then
// R(y) = A(y)^2 - y B(y)^2 vanishes at y = alpha^2.
IntPoly square_transform(const IntPoly& p) {
    size_t n = p.size();
    IntPoly a((n + 1) / 2, Int(0)), b(n / 2 + 1, Int(0));
    for (size_t i = 0; i < n; ++i) {
        if (i % 2 == 0)
            a[i / 2] = p[i];
        else
            b[i / 2] = p[i];
    }
    auto conv = [](const IntPoly& u, const IntPoly& v) {
        if (u.empty() || v.empty()) return IntPoly{};
        IntPoly out(u.size() + v.size() - 1, Int(0));
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
        return out;
    };
    IntPoly aa = conv(a, a), bb = conv(b, b);
    IntPoly r(std::max(aa.size(), bb.size() + 1), Int(0));
    for (size_t i = 0; i < aa.size(); ++i) r[i] += aa[i];
    for (size_t i = 0; i < bb.size(); ++i) r[i + 1] -= bb[i];
    return poly_trim(std::move(r));
}

} // namespace

std::optional<Scalar> Scalar::try_add(const Scalar& o) const {
    if (o.tier() == Tier::Rational) return add_rational(o.rational());
    if (tier() == Tier::Rational) return o.add_rational(rational());
    if (tier() == Tier::Quadratic && o.tier() == Tier::Quadratic)
        return from_surd(quadratic().add(o.quadratic()));
    if (tier() == Tier::Root && o.tier() == Tier::Root && root().compare(o.root()) == 0)
        return mul_rational(Rational(2));
    return std::nullopt;
}

std::optional<Scalar> Scalar::try_mul(const Scalar& o) const {
    if (o.tier() == Tier::Rational) return mul_rational(o.rational());
    if (tier() == Tier::Rational) return o.mul_rational(rational());
    if (tier() == Tier::Quadratic && o.tier() == Tier::Quadratic)
        return from_surd(quadratic().mul(o.quadratic()));
    if (tier() == Tier::Root && o.tier() == Tier::Root && root().compare(o.root()) == 0) {
        // alpha * alpha stays algebraic of the same degree: square the atom
        PolyRoot r = root();
        IntPoly sq = square_transform(r.coeffs());
        for (int attempt = 0; attempt < 512; ++attempt) {
            Rational lo2 = r.lo() * r.lo(), hi2 = r.hi() * r.hi();
            if (lo2 > hi2) std::swap(lo2, hi2);
            if (lo2 != hi2) {
                try {
                    PolyRoot squared(sq, lo2, hi2);
                    return from_polyroot(std::move(squared));
                } catch (const Error&) {
                    // bracket not yet isolating for the squared root; shrink and retry
                }
            }
            PolyRoot tighter = r;
            tighter.refine(static_cast<mpfr_prec_t>(8 + attempt * 4));
            r = tighter;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

Scalar Scalar::mul(const Scalar& o) const {
    if (auto r = try_mul(o)) return *r;
    raise(ErrorKind::PrecisionExhausted,
          "product leaves the exact scalar family; no representation available");
}

Scalar Scalar::add(const Scalar& o) const {
    if (auto r = try_add(o)) return *r;
    raise(ErrorKind::PrecisionExhausted,
          "sum leaves the exact scalar family; no representation available");
}

int Scalar::sign() const {
    switch (tier()) {
        case Tier::Rational: return sgn(rational());
        case Tier::Quadratic: return quadratic().sign();
        default: return root().sign();
    }
}

int Scalar::compare_rational(const Rational& q) const {
    switch (tier()) {
        case Tier::Rational: return rational() < q ? -1 : (rational() == q ? 0 : 1);
        case Tier::Quadratic: return quadratic().compare_rational(q);
        default: return root().compare_rational(q);
    }
}

int Scalar::compare(const Scalar& o) const {
    if (o.tier() == Tier::Rational) return compare_rational(o.rational());
    if (tier() == Tier::Rational) return -o.compare_rational(rational());
    if (tier() == Tier::Quadratic && o.tier() == Tier::Quadratic)
        return quadratic().compare(o.quadratic());
    if (tier() == Tier::Quadratic) return -o.root().compare_surd(quadratic());
    if (o.tier() == Tier::Quadratic) return root().compare_surd(o.quadratic());
    return root().compare(o.root());
}

int Scalar::compare_to_integer_multiple(const Scalar& t, const Int& n) const {
    if (t.sign() <= 0)
        raise(ErrorKind::InvalidArgument, "integer-multiple comparison needs t > 0");
    // sign(x*t - n) = sign(x - n/t) since t > 0; n/t stays in the exact family
    Scalar target = t.inverse().mul_rational(Rational(n));
    return compare(target);
}

Int Scalar::floor() const {
    switch (tier()) {
        case Tier::Rational: return floor_int(rational());
        case Tier::Quadratic: return quadratic().floor();
        default: return root().floor();
    }
}

Scalar Scalar::dist_to_nearest_integer() const {
    Scalar frac = add_rational(Rational(-floor()));
    if (frac.compare_rational(Rational(1, 2)) <= 0) return frac;
    return frac.neg().add_rational(Rational(1));
}

Interval Scalar::interval(mpfr_prec_t bits) const {
    if (bits == 0) bits = prec_bits_;
    switch (tier()) {
        case Tier::Rational: return Interval::from_rational(rational(), bits + 16);
        case Tier::Quadratic: return quadratic().interval(bits);
        default: return root().interval(bits);
    }
}

Scalar Scalar::refined(mpfr_prec_t bits) const {
    if (bits > kPrecisionCap)
        raise(ErrorKind::PrecisionExhausted, "requested precision exceeds the refinement cap");
    Scalar out = *this;
    out.prec_bits_ = std::max(bits, prec_bits_);
    if (out.tier() == Tier::Root) std::get<PolyRoot>(out.value_).refine(out.prec_bits_);
    return out;
}

// ---------------------------------------------------------------------------
// Integer-relation detection via LLL on the midpoints of certified intervals.

namespace {

using Row = std::vector<Int>;

Rational dotq(const Row& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

struct Gso {
    std::vector<std::vector<Rational>> star;  // orthogonalized rows
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norm;               // |b*_i|^2
};

Gso compute_gso(const std::vector<Row>& basis) {
    size_t n = basis.size(), m = basis[0].size();
    Gso g;
    g.star.assign(n, std::vector<Rational>(m, Rational(0)));
    g.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    g.norm.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < m; ++k) g.star[i][k] = Rational(basis[i][k]);
        for (size_t j = 0; j < i; ++j) {
            if (g.norm[j] == 0) { g.mu[i][j] = 0; continue; }
            g.mu[i][j] = dotq(basis[i], g.star[j]) / g.norm[j];
            for (size_t k = 0; k < m; ++k) g.star[i][k] -= g.mu[i][j] * g.star[j][k];
        }
        for (size_t k = 0; k < m; ++k) g.norm[i] += g.star[i][k] * g.star[i][k];
    }
    return g;
}

Int round_rational(const Rational& q) { return floor_int(q + Rational(1, 2)); }

void lll_reduce(std::vector<Row>& basis) {
    const Rational delta(3, 4);
    size_t n = basis.size();
    Gso g = compute_gso(basis);
    size_t k = 1;
    size_t guard = 0;
    while (k < n) {
        if (++guard > 200000)
            raise(ErrorKind::NotConverged, "lattice reduction failed to terminate");
        for (size_t j = k; j-- > 0;) {
            Rational mu = g.mu[k][j];
            if (mu > Rational(1, 2) || mu < Rational(-1, 2)) {
                Int r = round_rational(mu);
                for (size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= r * basis[j][t];
                g = compute_gso(basis);
            }
        }
        Rational lhs = g.norm[k];
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            g = compute_gso(basis);
            k = k > 1 ? k - 1 : 1;
        }
    }
}

} // namespace

std::optional<std::vector<Int>> detect_rational_dependence(const std::vector<Scalar>& xs,
                                                           mpfr_prec_t bits) {
    size_t n = xs.size();
    if (n < 2) raise(ErrorKind::InvalidArgument, "dependence detection needs at least two values");
    if (n > 12) raise(ErrorKind::InvalidArgument, "dependence detection supports at most 12 values");
    if (bits < 32) bits = 32;
    if (bits > kPrecisionCap) bits = kPrecisionCap;

    // scaled midpoints x_i * 2^bits, rounded to integers
    Int scale = pow_int(Int(2), static_cast<unsigned long>(bits));
    std::vector<Row> basis(n, Row(n + 1, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        Interval iv = xs[i].interval(bits + 32);
        Rational mid = (iv.lo_rational() + iv.hi_rational()) / 2;
        basis[i][i] = 1;
        basis[i][n] = round_rational(mid * Rational(scale));
    }
    lll_reduce(basis);

    // candidate rows sorted by coefficient size
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    auto supnorm = [&basis, n](size_t r) {
        Int m(0);
        for (size_t i = 0; i < n; ++i) {
            Int a = abs(basis[r][i]);
            if (a > m) m = a;
        }
        return m;
    };
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return supnorm(a) < supnorm(b); });

    // A genuine relation evaluates to exactly 0, so its enclosure at 4*bits
    // working precision is far below 2^(-2*bits); a spurious short vector from
    // the reduction leaves a residual near 2^(-bits) and is rejected.
    mpfr_prec_t check_bits = 4 * bits + 64;
    Rational tol = make_rational(Int(1), pow_int(Int(2), static_cast<unsigned long>(2 * bits)));
    for (size_t r : order) {
        bool nonzero = false;
        for (size_t i = 0; i < n; ++i)
            if (basis[r][i] != 0) { nonzero = true; break; }
        if (!nonzero) continue;
        Interval acc = Interval::from_long(0, check_bits);
        for (size_t i = 0; i < n; ++i) {
            if (basis[r][i] == 0) continue;
            acc = acc.add(xs[i].interval(check_bits).mul_rational(Rational(basis[r][i])));
        }
        Rational bound = acc.abs().hi_rational();
        if (bound < tol) {
            std::vector<Int> v(basis[r].begin(), basis[r].begin() + n);
            for (size_t i = 0; i < n; ++i) {
                if (v[i] == 0) continue;
                if (v[i] < 0)
                    for (auto& c : v) c = -c;
                break;
            }
            return v;
        }
    }
    return std::nullopt;
}

} // namespace latpoly
