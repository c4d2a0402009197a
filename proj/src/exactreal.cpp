#include "exactreal.hpp"

#include "errors.hpp"

namespace latpoly {

ExactReal ExactReal::from_scalar(const Scalar& s) {
    ExactReal r;
    r.accumulate(s, Rational(1));
    return r;
}

ExactReal ExactReal::from_rational(const Rational& q) {
    ExactReal r;
    r.surd_ = SurdSum(q);
    return r;
}

void ExactReal::accumulate(const Scalar& s, const Rational& coeff) {
    if (coeff == 0) return;
    switch (s.tier()) {
        case Scalar::Tier::Rational:
            surd_ = surd_.add_rational(s.rational() * coeff);
            return;
        case Scalar::Tier::Quadratic:
            surd_ = surd_.add(s.quadratic().mul_rational(coeff));
            return;
        case Scalar::Tier::Root: {
            for (auto it = atoms_.begin(); it != atoms_.end(); ++it) {
                if (it->second.compare(s.root()) == 0) {
                    it->first += coeff;
                    if (it->first == 0) atoms_.erase(it);
                    return;
                }
            }
            atoms_.emplace_back(coeff, s.root());
            return;
        }
    }
}

ExactReal ExactReal::add(const ExactReal& o) const {
    ExactReal r = *this;
    r.surd_ = r.surd_.add(o.surd_);
    for (const auto& [c, a] : o.atoms_) r.accumulate(Scalar::from_polyroot(a), c);
    return r;
}

ExactReal ExactReal::sub(const ExactReal& o) const { return add(o.neg()); }

ExactReal ExactReal::neg() const {
    ExactReal r = *this;
    r.surd_ = r.surd_.neg();
    for (auto& [c, a] : r.atoms_) c = -c;
    return r;
}

ExactReal ExactReal::mul_rational(const Rational& q) const {
    if (q == 0) return ExactReal();
    ExactReal r = *this;
    r.surd_ = r.surd_.mul_rational(q);
    for (auto& [c, a] : r.atoms_) c *= q;
    return r;
}

ExactReal ExactReal::add_rational(const Rational& q) const {
    ExactReal r = *this;
    r.surd_ = r.surd_.add_rational(q);
    return r;
}

Interval ExactReal::interval(mpfr_prec_t bits) const {
    mpfr_prec_t work = bits + 32;
    for (;;) {
        Interval acc = surd_.is_zero() ? Interval::from_long(0, work) : surd_.interval(work);
        for (const auto& [c, a] : atoms_) acc = acc.add(a.interval(work).mul_rational(c));
        if (acc.meets_width_contract(bits)) return acc;
        if (work > 16 * kPrecisionCap)
            raise(ErrorKind::PrecisionExhausted, "interval refinement failed to meet the contract");
        work *= 2;
    }
}

int ExactReal::sign() const {
    if (atoms_.empty()) return surd_.sign();
    if (atoms_.size() == 1) {
        // value = c*alpha + s, so sign = sign(c) * sign(alpha - (-s/c)), decided exactly
        const auto& [c, alpha] = atoms_.front();
        SurdSum target = surd_.mul_rational(Rational(-1) / c);
        return sgn(c) * alpha.compare_surd(target);
    }
    for (mpfr_prec_t bits = 64;; bits *= 2) {
        if (bits > kPrecisionCap)
            raise(ErrorKind::PrecisionExhausted,
                  "sign of a multi-atom exact value undecided at the precision cap");
        if (auto s = interval(bits).sign()) return *s;
    }
}

Int ExactReal::floor() const {
    mpfr_prec_t bits = 64;
    Interval v = interval(bits);
    while (!v.is_finite() || v.wid_d() >= 0.25) {
        bits *= 2;
        if (bits > 16 * kPrecisionCap)
            raise(ErrorKind::PrecisionExhausted, "floor refinement exceeded the precision cap");
        v = interval(bits);
    }
    Int n0 = floor_int(v.hi_rational());
    return add_rational(Rational(-n0)).sign() >= 0 ? n0 : n0 - 1;
}

std::optional<Scalar> ExactReal::try_scalar() const {
    if (atoms_.empty()) return Scalar::from_surd(surd_);
    if (atoms_.size() == 1 && surd_.is_rational()) {
        const auto& [c, a] = atoms_.front();
        return Scalar::from_polyroot(a).mul_rational(c).add_rational(surd_.rational_part());
    }
    return std::nullopt;
}

} // namespace latpoly
