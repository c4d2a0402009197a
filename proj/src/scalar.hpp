#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "interval.hpp"
#include "polyroot.hpp"
#include "rational.hpp"
#include "surd.hpp"

namespace latpoly {

// Exact real scalar in one of three tiers: rational, quadratic-surd sum, or a
// root of an integer polynomial with an isolating interval. Construction always
// canonicalizes downward (a root atom that is really a quadratic becomes a surd,
// a surd with no radical part becomes a rational). Comparisons and floors are
// exact at every tier; operations that would leave the representable family
// report PrecisionExhausted rather than silently approximating.
class Scalar {
  public:
    enum class Tier { Rational, Quadratic, Root };

    Scalar() : value_(Rational(0)) {}
    static Scalar from_rational(Rational q);
    static Scalar from_int(long v) { return from_rational(Rational(v)); }
    static Scalar from_surd(SurdSum s);
    // sqrt of a nonnegative rational: exact when the radicand normalizes into
    // the surd tier (q = u/v -> sqrt(uv)/v)
    static Scalar sqrt_rational(const Rational& q);
    static Scalar from_root(std::vector<Rational> coeffs, const Rational& lo, const Rational& hi);
    static Scalar from_polyroot(PolyRoot r);

    Tier tier() const;
    bool is_rational() const { return tier() == Tier::Rational; }
    const Rational& rational() const;   // Tier::Rational only
    const SurdSum& quadratic() const;   // Tier::Quadratic only
    const PolyRoot& root() const;       // Tier::Root only
    SurdSum as_surd() const;            // rational or quadratic tiers

    Scalar neg() const;
    Scalar inverse() const;             // exact in every tier; zero -> DenominatorZero
    Scalar add_rational(const Rational& q) const;
    Scalar mul_rational(const Rational& q) const;
    // exact sum/product when both operands stay in the representable family
    std::optional<Scalar> try_add(const Scalar& o) const;
    std::optional<Scalar> try_mul(const Scalar& o) const;
    // like try_mul / try_add, but raises PrecisionExhausted instead of declining
    Scalar mul(const Scalar& o) const;
    Scalar add(const Scalar& o) const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    int compare(const Scalar& o) const;          // exact trichotomy
    int compare_rational(const Rational& q) const;
    // sign of (this * t - n) decided exactly; t must be positive
    int compare_to_integer_multiple(const Scalar& t, const Int& n) const;

    Int floor() const;
    // distance to the nearest integer, exact, in the same tier
    Scalar dist_to_nearest_integer() const;

    Interval interval(mpfr_prec_t bits = 0) const;  // meets the width contract
    // value with refinement state advanced to `bits` (root tier shrinks its bracket)
    Scalar refined(mpfr_prec_t bits) const;
    mpfr_prec_t precision_bits() const { return prec_bits_; }

    double approx() const { return interval(64).mid_d(); }

  private:
    std::variant<Rational, SurdSum, PolyRoot> value_;
    mpfr_prec_t prec_bits_ = 64;
};

// Advisory search for a small integer relation sum_i v_i x_i = 0 using lattice
// reduction on interval midpoints. A returned vector is certified small in the
// interval sense (|sum| < 2^-bits/2), not an exact-zero proof; nullopt means no
// relation was found at the working precision.
std::optional<std::vector<Int>> detect_rational_dependence(const std::vector<Scalar>& xs,
                                                           mpfr_prec_t bits = 128);

} // namespace latpoly
