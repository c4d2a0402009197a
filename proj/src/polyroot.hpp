#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"
#include "surd.hpp"

namespace latpoly {

// Integer polynomial helpers (coefficients low-to-high degree).
using IntPoly = std::vector<Int>;

IntPoly poly_trim(IntPoly p);
IntPoly poly_derivative(const IntPoly& p);
IntPoly poly_primitive(IntPoly p);            // divide by content, leading coefficient > 0
IntPoly poly_squarefree_part(const IntPoly& p);
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // primitive gcd over Q
Rational poly_eval(const IntPoly& p, const Rational& x);
int poly_sign_at(const IntPoly& p, const Rational& x);  // integer Horner, no mpq churn
SurdSum poly_eval_surd(const IntPoly& p, const SurdSum& x);
Interval poly_eval_interval(const IntPoly& p, const Interval& x);
// number of distinct real roots in (lo, hi]; requires p squarefree
int sturm_count(const IntPoly& p, const Rational& lo, const Rational& hi);

// One real algebraic number: the unique root of a primitive squarefree integer
// polynomial inside an isolating interval with a strict sign change. Invariants
// kept by construction: degree >= 2, p(0) != 0, the interval does not straddle 0,
// and sturm confirms exactly one root.
class PolyRoot {
  public:
    // Validates and canonicalizes; degree <= 1 inputs and rational roots that sit
    // exactly at an integer-over-small-denominator point are rejected here (the
    // Scalar layer routes those to lower tiers before calling this).
    PolyRoot(IntPoly coeffs, Rational lo, Rational hi);

    const IntPoly& coeffs() const { return coeffs_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Shrinks the isolating interval until it meets the width contract at `bits`.
    void refine(mpfr_prec_t bits);
    Interval interval(mpfr_prec_t bits) const;  // refines a copy as needed

    int sign() const;  // exact (0 is impossible: p(0) != 0)
    // exact comparison against a rational / quadratic value
    int compare_rational(const Rational& q) const;
    int compare_surd(const SurdSum& s) const;
    int compare(const PolyRoot& o) const;
    bool equals(const PolyRoot& o) const { return compare(o) == 0; }
    Int floor() const;

    PolyRoot neg() const;
    PolyRoot add_rational(const Rational& q) const;
    PolyRoot mul_rational(const Rational& q) const;  // q != 0
    PolyRoot inverse() const;

    // Set when the defining polynomial has degree 2: the root as a quadratic surd.
    std::optional<SurdSum> as_quadratic() const;
    // Rational root detection at construction is exact; this re-checks cheaply.
    std::optional<Rational> rational_value() const;

  private:
    IntPoly coeffs_;
    Rational lo_, hi_;
    void bisect_once();
    bool root_in(const Rational& a, const Rational& b) const;  // sign-change test
};

} // namespace latpoly
