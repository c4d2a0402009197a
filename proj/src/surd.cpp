#include "surd.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace latpoly {

namespace {
constexpr unsigned long kRadicandCap = 4000000000000UL; // trial division stays cheap below ~2e12
} // namespace

std::pair<unsigned long, unsigned long> SurdSum::squarefree_split(unsigned long n) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "sqrt radicand must be positive");
    if (n > kRadicandCap) raise(ErrorKind::InvalidArgument, "sqrt radicand too large");
    unsigned long sf = 1, sq = 1;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (unsigned i = 0; i + 1 < e; i += 2) sq *= p;
        if (e & 1) sf *= p;
    }
    sf *= n; // leftover factor is prime (or 1)
    return {sf, sq};
}

void SurdSum::add_term(unsigned long d, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SurdSum SurdSum::sqrt_term(const Rational& coeff, unsigned long radicand) {
    auto [sf, sq] = squarefree_split(radicand);
    SurdSum s;
    s.add_term(sf, coeff * Rational(sq));
    return s;
}

bool SurdSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational SurdSum::rational_part() const {
    auto it = terms_.find(1);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SurdSum::as_rational() const {
    if (!is_rational()) raise(ErrorKind::Internal, "SurdSum::as_rational on irrational value");
    return rational_part();
}

SurdSum SurdSum::add(const SurdSum& o) const {
    SurdSum r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

SurdSum SurdSum::sub(const SurdSum& o) const {
    SurdSum r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
    return r;
}

SurdSum SurdSum::neg() const {
    SurdSum r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

SurdSum SurdSum::mul_rational(const Rational& q) const {
    if (q == 0) return SurdSum();
    SurdSum r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, c * q);
    return r;
}

SurdSum SurdSum::add_rational(const Rational& q) const {
    SurdSum r = *this;
    r.add_term(1, q);
    return r;
}

SurdSum SurdSum::mul(const SurdSum& o) const {
    SurdSum r;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)(d2/g)) with g = gcd(d1,d2);
            // the product radicand is squarefree because d1/g and d2/g are coprime.
            unsigned long g = std::gcd(d1, d2);
            unsigned long d = (d1 / g) * (d2 / g);
            r.add_term(d, c1 * c2 * Rational(static_cast<unsigned long>(g)));
        }
    }
    return r;
}

SurdSum SurdSum::inverse() const {
    if (terms_.empty()) raise(ErrorKind::DenominatorZero, "division by exact zero");
    if (is_rational()) {
        Rational r = terms_.begin()->second;
        return SurdSum(make_rational(r.get_den(), r.get_num()));
    }
    // Split off one prime p present in some radicand: S = A + sqrt(p)*B with A, B
    // free of p. Then 1/S = (A - sqrt(p)B) / (A^2 - p B^2) and the denominator is a
    // p-free SurdSum, so recursion strictly shrinks the prime support.
    unsigned long p = 0;
    for (const auto& [d, c] : terms_) {
        if (d == 1) continue;
        unsigned long v = d;
        for (unsigned long q = 2; q * q <= v; q += (q == 2 ? 1 : 2)) {
            if (v % q == 0) { p = q; break; }
        }
        if (p == 0) p = v; // d itself prime
        break;
    }
    SurdSum a, b;
    for (const auto& [d, c] : terms_) {
        if (d % p == 0) b.add_term(d / p, c);
        else a.add_term(d, c);
    }
    SurdSum denom = a.mul(a).sub(b.mul(b).mul_rational(Rational(p)));
    if (denom.is_zero()) raise(ErrorKind::Internal, "conjugate norm vanished for nonzero surd");
    SurdSum denom_inv = denom.inverse();
    SurdSum num = a.sub(SurdSum::sqrt_term(Rational(1), p).mul(b));
    return num.mul(denom_inv);
}

int SurdSum::compare_rational(const Rational& q) const {
    SurdSum d = *this;
    d.add_term(1, -q);
    return d.sign();
}

Interval SurdSum::raw_interval(mpfr_prec_t work_bits) const {
    Interval acc = Interval::from_long(0, work_bits);
    for (const auto& [d, c] : terms_) {
        if (d == 1) {
            acc = acc.add(Interval::from_rational(c, work_bits));
        } else {
            Interval root = Interval::from_long(static_cast<long>(d), work_bits).sqrt();
            acc = acc.add(root.mul_rational(c));
        }
    }
    return acc;
}

Interval SurdSum::interval(mpfr_prec_t bits) const {
    mpfr_prec_t work = bits + 32;
    for (;;) {
        Interval v = raw_interval(work);
        if (v.meets_width_contract(bits)) return v;
        if (work > 8 * kPrecisionCap)
            raise(ErrorKind::Internal, "surd interval failed to meet width contract");
        work *= 2;
    }
}

int SurdSum::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second); // sqrt(D) > 0
    // Distinct squarefree surds are linearly independent over Q, so the value is
    // nonzero and interval refinement must eventually decide.
    mpfr_prec_t work = 64;
    for (;;) {
        Interval v = raw_interval(work);
        if (auto s = v.sign()) return *s;
        work *= 2;
        if (work > 64 * kPrecisionCap)
            raise(ErrorKind::Internal, "sign refinement exceeded hard cap on independent surds");
    }
}

Int SurdSum::floor() const {
    // One refinement to width < 1/4, then an exact boundary test.
    mpfr_prec_t work = 64;
    Interval v = raw_interval(work);
    while (!v.is_finite() || v.wid_d() >= 0.25) {
        work *= 2;
        if (work > 64 * kPrecisionCap)
            raise(ErrorKind::Internal, "floor refinement exceeded hard cap");
        v = raw_interval(work);
    }
    Int n0 = floor_int(v.hi_rational());
    // value lies in (n0 - 1/4, n0 + 1): floor is n0 iff value >= n0
    return compare_rational(Rational(n0)) >= 0 ? n0 : n0 - 1;
}

} // namespace latpoly
