#pragma once

#include <utility>
#include <vector>

#include "scalar.hpp"

namespace latpoly {

// Linear combination (over Q) of a quadratic-surd part and root atoms:
//     value = surd_part + sum_i coeff_i * atom_i
// Used where sums of scalars from different tiers must stay exact (pole
// grouping, boundary tests). Signs are decided exactly whenever at most one
// root atom is present; with two or more distinct atoms the sign test falls
// back to certified refinement and reports PrecisionExhausted at the cap.
class ExactReal {
  public:
    ExactReal() = default;
    static ExactReal from_scalar(const Scalar& s);
    static ExactReal from_rational(const Rational& q);

    void accumulate(const Scalar& s, const Rational& coeff);  // += coeff * s
    ExactReal add(const ExactReal& o) const;
    ExactReal sub(const ExactReal& o) const;
    ExactReal neg() const;
    ExactReal mul_rational(const Rational& q) const;
    ExactReal add_rational(const Rational& q) const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    int compare(const ExactReal& o) const { return sub(o).sign(); }
    Int floor() const;
    Interval interval(mpfr_prec_t bits) const;

    bool is_scalar() const { return atoms_.size() <= 1; }
    // collapse to a Scalar when possible (no atoms, or exactly one atom with
    // rational surd part folded in via add_rational); nullopt otherwise
    std::optional<Scalar> try_scalar() const;

    size_t atom_count() const { return atoms_.size(); }
    const SurdSum& surd_part() const { return surd_; }

  private:
    SurdSum surd_;
    std::vector<std::pair<Rational, PolyRoot>> atoms_;  // coeff, atom; coeffs nonzero
};

} // namespace latpoly
