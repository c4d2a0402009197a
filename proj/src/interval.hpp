#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "rational.hpp"

namespace latpoly {

// Default working precision in bits; LATPOLY_PRECISION_BITS overrides.
mpfr_prec_t default_precision();
void set_default_precision(mpfr_prec_t bits);

// Hard cap for adaptive refinement loops.
constexpr mpfr_prec_t kPrecisionCap = 4096;

// Closed interval [lo, hi] with directed-rounded MPFR endpoints.
// Every operation returns an interval guaranteed to contain the exact result.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 0);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    mpfr_prec_t prec() const { return prec_; }

    static Interval from_long(long v, mpfr_prec_t prec = 0);
    static Interval from_int(const Int& v, mpfr_prec_t prec = 0);
    static Interval from_rational(const Rational& q, mpfr_prec_t prec = 0);
    static Interval from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec = 0);
    static Interval pi(mpfr_prec_t prec = 0);

    Interval neg() const;
    Interval add(const Interval& o) const;
    Interval sub(const Interval& o) const;
    Interval mul(const Interval& o) const;
    Interval div(const Interval& o) const;      // requires 0 outside o
    Interval inverse() const;                   // requires 0 outside this
    Interval sqrt() const;                      // requires lo >= 0 (tiny negative lo clamped)
    Interval abs() const;
    Interval add_rational(const Rational& q) const;
    Interval mul_rational(const Rational& q) const;
    Interval mul_long(long v) const;

    // Monotone / Lipschitz-padded transcendentals (rigorous enclosures).
    Interval exp() const;
    Interval cos() const;
    Interval sin() const;

    bool contains_zero() const;
    bool is_finite() const;
    // +1 if lo > 0, -1 if hi < 0, nullopt if the interval straddles or touches 0.
    std::optional<int> sign() const;
    bool contains_rational(const Rational& q) const;

    double lo_d() const;   // rounded down
    double hi_d() const;   // rounded up
    double mid_d() const;
    double wid_d() const;  // rounded up
    Rational lo_rational() const;
    Rational hi_rational() const;

    // width <= 2^(1-bits) * max(1, |value|) — the refinement contract.
    bool meets_width_contract(mpfr_prec_t bits) const;

    std::string str(size_t digits = 20) const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }
    mpfr_t& lo_raw() { return lo_; }
    mpfr_t& hi_raw() { return hi_; }

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

} // namespace latpoly
