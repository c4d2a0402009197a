#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "interval.hpp"

namespace latpoly {

// Rectangular complex enclosure re + i*im built from two directed-rounded
// real intervals; every operation contains the exact complex result.
class CInterval {
  public:
    CInterval() : re_(Interval::from_long(0)), im_(Interval::from_long(0)) {}
    CInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}

    static CInterval from_real(Interval re) {
        mpfr_prec_t p = re.prec();
        return CInterval(std::move(re), Interval::from_long(0, p));
    }
    static CInterval zero(mpfr_prec_t prec = 0) {
        return CInterval(Interval::from_long(0, prec), Interval::from_long(0, prec));
    }
    // e^{i theta}
    static CInterval cis(const Interval& theta) { return CInterval(theta.cos(), theta.sin()); }

    const Interval& re() const { return re_; }
    const Interval& im() const { return im_; }

    CInterval neg() const { return CInterval(re_.neg(), im_.neg()); }
    CInterval conj() const { return CInterval(re_, im_.neg()); }
    CInterval add(const CInterval& o) const {
        return CInterval(re_.add(o.re_), im_.add(o.im_));
    }
    CInterval sub(const CInterval& o) const {
        return CInterval(re_.sub(o.re_), im_.sub(o.im_));
    }
    CInterval mul(const CInterval& o) const {
        return CInterval(re_.mul(o.re_).sub(im_.mul(o.im_)),
                         re_.mul(o.im_).add(im_.mul(o.re_)));
    }
    CInterval mul_real(const Interval& r) const { return CInterval(re_.mul(r), im_.mul(r)); }
    CInterval mul_rational(const Rational& q) const {
        return CInterval(re_.mul_rational(q), im_.mul_rational(q));
    }
    // multiply by i^q (exact quarter-turn rotation)
    CInterval rotate_quarters(int q) const {
        switch (((q % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return CInterval(im_.neg(), re_);
            case 2: return neg();
            default: return CInterval(im_, re_.neg());
        }
    }
    CInterval div(const CInterval& o) const {
        Interval den = o.re_.mul(o.re_).add(o.im_.mul(o.im_));
        if (den.contains_zero())
            raise(ErrorKind::PrecisionExhausted, "complex divisor enclosure touches zero");
        Interval inv = den.inverse();
        CInterval num = mul(o.conj());
        return CInterval(num.re_.mul(inv), num.im_.mul(inv));
    }
    CInterval div_real(const Interval& r) const {
        if (r.contains_zero())
            raise(ErrorKind::PrecisionExhausted, "real divisor enclosure touches zero");
        Interval inv = r.inverse();
        return CInterval(re_.mul(inv), im_.mul(inv));
    }

    // upper bound on |z| over the enclosure
    double abs_hi() const {
        double a = std::max(std::abs(re_.lo_d()), std::abs(re_.hi_d()));
        double b = std::max(std::abs(im_.lo_d()), std::abs(im_.hi_d()));
        return std::sqrt(a * a + b * b) * (1.0 + 1e-14);
    }
    double wid_d() const { return std::max(re_.wid_d(), im_.wid_d()); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

    std::string str(size_t digits = 20) const {
        return re_.str(digits) + " + i*" + im_.str(digits);
    }

  private:
    Interval re_, im_;
};

} // namespace latpoly
