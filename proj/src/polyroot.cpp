#include "polyroot.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace latpoly {

namespace {

using QPoly = std::vector<Rational>;

QPoly qtrim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly to_q(const IntPoly& p) {
    QPoly q;
    q.reserve(p.size());
    for (const auto& c : p) q.emplace_back(c);
    return q;
}

// remainder of a / b over Q, b nonzero
QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        a = qtrim(std::move(a));
        if (a.size() < b.size()) break;
    }
    return a;
}

int qsign_at(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return sgn(acc);
}

IntPoly q_to_primitive_int(const QPoly& p) {
    Int den(1);
    for (const auto& c : p) {
        Int d = c.get_den();
        den = den / gcd(den, d) * d;
    }
    IntPoly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        Rational scaled = c * Rational(den);
        out.push_back(scaled.get_num());
    }
    return poly_primitive(std::move(out));
}

} // namespace

IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

IntPoly poly_derivative(const IntPoly& p) {
    IntPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return poly_trim(std::move(d));
}

IntPoly poly_primitive(IntPoly p) {
    p = poly_trim(std::move(p));
    if (p.empty()) return p;
    Int g(0);
    for (const auto& c : p) g = gcd(g, c);
    if (sgn(p.back()) < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    QPoly x = to_q(poly_trim(a)), y = to_q(poly_trim(b));
    if (x.empty()) return poly_primitive(poly_trim(b));
    if (y.empty()) return poly_primitive(poly_trim(a));
    while (!y.empty()) {
        QPoly r = qrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return q_to_primitive_int(x);
}

IntPoly poly_squarefree_part(const IntPoly& p) {
    IntPoly t = poly_trim(p);
    if (t.size() <= 2) return poly_primitive(std::move(t));
    IntPoly g = poly_gcd(t, poly_derivative(t));
    if (g.size() <= 1) return poly_primitive(std::move(t));
    // exact division p / g over Q
    QPoly num = to_q(t), den = to_q(g), quot;
    quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational f = num.back() / den.back();
        size_t off = num.size() - den.size();
        quot[off] = f;
        for (size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
        num.pop_back();
        num = qtrim(std::move(num));
    }
    return q_to_primitive_int(quot);
}

Rational poly_eval(const IntPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return acc;
}

int poly_sign_at(const IntPoly& p, const Rational& x) {
    // sign of p(u/v) = sign of sum c_i u^i v^(n-i), evaluated with integer Horner
    if (p.empty()) return 0;
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int acc = p.back(), pw(1);
    for (size_t i = p.size() - 1; i-- > 0;) {
        pw *= v;
        acc = acc * u + p[i] * pw;
    }
    return sgn(acc);
}

SurdSum poly_eval_surd(const IntPoly& p, const SurdSum& x) {
    SurdSum acc;
    for (size_t i = p.size(); i-- > 0;)
        acc = acc.mul(x).add_rational(Rational(p[i]));
    return acc;
}

Interval poly_eval_interval(const IntPoly& p, const Interval& x) {
    Interval acc = Interval::from_long(0, x.prec());
    for (size_t i = p.size(); i-- > 0;)
        acc = acc.mul(x).add(Interval::from_int(p[i], x.prec()));
    return acc;
}

int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi) {
    IntPoly sf = poly_trim(p);
    if (sf.size() <= 1) return 0;
    std::vector<QPoly> chain;
    chain.push_back(to_q(sf));
    chain.push_back(to_q(poly_derivative(sf)));
    while (chain.back().size() > 1) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&chain](const Rational& x) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            int s = qsign_at(q, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

PolyRoot::PolyRoot(IntPoly coeffs, Rational lo, Rational hi)
    : coeffs_(poly_primitive(poly_squarefree_part(std::move(coeffs)))), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (coeffs_.size() < 3)
        raise(ErrorKind::InvalidArgument, "root atom needs polynomial degree >= 2");
    if (lo_ >= hi_)
        raise(ErrorKind::InvalidArgument, "root isolating interval must have lo < hi");
    int slo = poly_sign_at(coeffs_, lo_), shi = poly_sign_at(coeffs_, hi_);
    if (slo == 0 || shi == 0)
        raise(ErrorKind::InvalidArgument, "isolating interval endpoint is itself a root");
    if (slo == shi)
        raise(ErrorKind::InvalidArgument, "no sign change over the isolating interval");
    if (sturm_count(coeffs_, lo_, hi_) != 1)
        raise(ErrorKind::InvalidArgument, "interval does not isolate exactly one root");
    // strip factors of x sitting outside the interval so p(0) != 0 always holds
    while (coeffs_[0] == 0) {
        if (lo_ < 0 && hi_ > 0)
            raise(ErrorKind::InvalidArgument, "root atom value is exactly zero; use a rational");
        coeffs_.erase(coeffs_.begin());
        if (coeffs_.size() < 3)
            raise(ErrorKind::InvalidArgument, "root atom degenerates to degree < 2");
    }
    // make the bracket sign-definite: 0 is not the root, so one bisection at 0 settles it
    if (lo_ < 0 && hi_ > 0) {
        if (poly_sign_at(coeffs_, lo_) != poly_sign_at(coeffs_, Rational(0)))
            hi_ = 0;
        else
            lo_ = 0;
    }
}

bool PolyRoot::root_in(const Rational& a, const Rational& b) const {
    return poly_sign_at(coeffs_, a) != poly_sign_at(coeffs_, b);
}

void PolyRoot::bisect_once() {
    Rational mid = (lo_ + hi_) / 2;
    if (poly_sign_at(coeffs_, mid) == 0) {
        // the midpoint is the root itself: shrink to a bracket around it whose
        // endpoints are non-roots with a strict sign change (exists since the
        // polynomial is squarefree and the root simple)
        Rational w = (hi_ - lo_) / 1024;
        for (;;) {
            int sl = poly_sign_at(coeffs_, mid - w), sr = poly_sign_at(coeffs_, mid + w);
            if (sl != 0 && sr != 0 && sl != sr) {
                lo_ = mid - w;
                hi_ = mid + w;
                return;
            }
            w /= 2;
        }
    }
    if (root_in(lo_, mid))
        hi_ = mid;
    else
        lo_ = mid;
}

void PolyRoot::refine(mpfr_prec_t bits) {
    Rational tol = make_rational(Int(1), pow_int(Int(2), static_cast<unsigned long>(bits > 1 ? bits - 1 : 0)));
    for (;;) {
        Rational width = hi_ - lo_;
        Rational magnitude(1);
        // the bracket is sign-definite, so min(|lo|,|hi|) underestimates |value|
        Rational la = abs(lo_), ha = abs(hi_);
        Rational m = la < ha ? la : ha;
        if (m > 1) magnitude = m;
        if (width <= tol * magnitude) return;
        bisect_once();
    }
}

Interval PolyRoot::interval(mpfr_prec_t bits) const {
    PolyRoot copy = *this;
    copy.refine(bits + 4);
    return Interval::from_endpoints(copy.lo_, copy.hi_, bits + 16);
}

int PolyRoot::sign() const {
    // brackets are sign-definite by construction
    return lo_ >= 0 ? 1 : -1;
}

int PolyRoot::compare_rational(const Rational& q) const {
    if (q <= lo_) return 1;   // root lies in the open interval
    if (q >= hi_) return -1;
    int sq = poly_sign_at(coeffs_, q);
    if (sq == 0) return 0;    // q is the unique root in here
    return root_in(lo_, q) ? -1 : 1;
}

int PolyRoot::compare_surd(const SurdSum& s) const {
    if (s.is_rational()) return compare_rational(s.rational_part());
    if (poly_eval_surd(coeffs_, s).is_zero() && s.compare_rational(lo_) > 0 &&
        s.compare_rational(hi_) < 0)
        return 0;
    PolyRoot me = *this;
    for (;;) {
        if (s.compare_rational(me.hi_) >= 0) return -1;
        if (s.compare_rational(me.lo_) <= 0) return 1;
        me.bisect_once();
    }
}

int PolyRoot::compare(const PolyRoot& o) const {
    IntPoly g = poly_gcd(coeffs_, o.coeffs_);
    PolyRoot a = *this, b = o;
    for (;;) {
        if (a.hi_ <= b.lo_) return -1;
        if (a.lo_ >= b.hi_) return 1;
        if (g.size() > 1) {
            Rational ilo = std::max(a.lo_, b.lo_), ihi = std::min(a.hi_, b.hi_);
            int glo = poly_sign_at(g, ilo), ghi = poly_sign_at(g, ihi);
            // a common root inside both brackets forces equality of the two values
            if (glo == 0 || ghi == 0 || glo != ghi) return 0;
        }
        a.bisect_once();
        b.bisect_once();
    }
}

Int PolyRoot::floor() const {
    PolyRoot me = *this;
    while (me.hi_ - me.lo_ >= Rational(1, 4)) me.bisect_once();
    Int n0 = floor_int(me.hi_);
    return me.compare_rational(Rational(n0)) >= 0 ? n0 : n0 - 1;
}

PolyRoot PolyRoot::neg() const {
    IntPoly c = coeffs_;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return PolyRoot(std::move(c), -hi_, -lo_);
}

PolyRoot PolyRoot::add_rational(const Rational& q) const {
    // Taylor shift: coefficients of p(x - q)
    QPoly a = to_q(coeffs_);
    size_t n = a.size();
    for (size_t j = 0; j + 1 < n; ++j)
        for (size_t k = n - 1; k-- > j;) a[k] += -q * a[k + 1];
    IntPoly shifted = q_to_primitive_int(a);
    // the value moved away from 0 only if it was -q before; callers exclude that
    while (!shifted.empty() && shifted[0] == 0) shifted.erase(shifted.begin());
    return PolyRoot(std::move(shifted), lo_ + q, hi_ + q);
}

PolyRoot PolyRoot::mul_rational(const Rational& q) const {
    if (q == 0) raise(ErrorKind::Internal, "PolyRoot::mul_rational by zero");
    const Int& u = q.get_num();
    const Int& v = q.get_den();
    size_t n = coeffs_.size() - 1;
    IntPoly c(coeffs_.size());
    Int pu(1), pv(1);
    std::vector<Int> upow(n + 1), vpow(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        upow[i] = pu;
        vpow[i] = pv;
        pu *= u;
        pv *= v;
    }
    for (size_t i = 0; i <= n; ++i) c[i] = coeffs_[i] * vpow[i] * upow[n - i];
    Rational nlo = lo_ * q, nhi = hi_ * q;
    if (q < 0) std::swap(nlo, nhi);
    return PolyRoot(std::move(c), std::move(nlo), std::move(nhi));
}

PolyRoot PolyRoot::inverse() const {
    IntPoly c(coeffs_.rbegin(), coeffs_.rend());
    Rational nlo = Rational(1) / hi_, nhi = Rational(1) / lo_;
    return PolyRoot(std::move(c), std::move(nlo), std::move(nhi));
}

std::optional<SurdSum> PolyRoot::as_quadratic() const {
    if (degree() != 2) return std::nullopt;
    const Int &a = coeffs_[2], &b = coeffs_[1], &c = coeffs_[0];
    Int disc = b * b - 4 * a * c;
    if (sgn(disc) <= 0 || !disc.fits_ulong_p()) return std::nullopt;
    SurdSum root;
    try {
        root = SurdSum::sqrt_term(Rational(1), disc.get_ui());
    } catch (const Error&) {
        return std::nullopt;  // radicand too large to canonicalize cheaply
    }
    Rational base = make_rational(-b, 2 * a), scale = make_rational(Int(1), 2 * a);
    for (int pm : {1, -1}) {
        SurdSum cand = root.mul_rational(pm * scale).add_rational(base);
        if (cand.compare_rational(lo_) > 0 && cand.compare_rational(hi_) < 0) return cand;
    }
    raise(ErrorKind::Internal, "quadratic bracket lost both surd roots");
}

std::optional<Rational> PolyRoot::rational_value() const {
    Int a0 = abs(coeffs_.front());
    const Int& cn = coeffs_.back();
    constexpr long kDivisorCap = 1000000000L;
    if (a0 > kDivisorCap || cn > kDivisorCap) return std::nullopt;
    auto divisors = [](unsigned long n) {
        std::vector<unsigned long> d;
        for (unsigned long i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                if (i != n / i) d.push_back(n / i);
            }
        return d;
    };
    unsigned long n0 = a0.get_ui();
    unsigned long nn = cn.get_ui();
    for (unsigned long u : divisors(n0)) {
        for (unsigned long v : divisors(nn)) {
            if (std::gcd(u, v) != 1) continue;
            for (int s : {1, -1}) {
                Rational cand = make_rational(static_cast<long>(u) * s, static_cast<long>(v));
                if (cand > lo_ && cand < hi_ && poly_sign_at(coeffs_, cand) == 0) return cand;
            }
        }
    }
    return std::nullopt;
}

} // namespace latpoly
