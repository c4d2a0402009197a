#pragma once

#include <map>
#include <string>

#include "interval.hpp"
#include "rational.hpp"

namespace latpoly {

// Finite sum sum_D c_D * sqrt(D) over distinct squarefree positive integers D,
// with rational coefficients; D=1 carries the rational part. Exact ring and
// field operations; the zero test is exact (square roots of distinct
// squarefree integers are linearly independent over Q).
class SurdSum {
  public:
    SurdSum() = default;
    explicit SurdSum(const Rational& r) {
        if (r != 0) terms_[1] = r;
    }
    // coefficient * sqrt(radicand); radicand is reduced to squarefree form.
    static SurdSum sqrt_term(const Rational& coeff, unsigned long radicand);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_part() const;
    // valid only when is_rational()
    Rational as_rational() const;

    SurdSum add(const SurdSum& o) const;
    SurdSum sub(const SurdSum& o) const;
    SurdSum neg() const;
    SurdSum mul(const SurdSum& o) const;
    SurdSum mul_rational(const Rational& q) const;
    SurdSum add_rational(const Rational& q) const;
    SurdSum inverse() const;  // exact; raises DenominatorZero on zero

    int sign() const;  // exact: -1, 0, +1
    int compare(const SurdSum& o) const { return sub(o).sign(); }
    int compare_rational(const Rational& q) const;
    bool equals(const SurdSum& o) const { return sub(o).is_zero(); }

    Int floor() const;
    Interval interval(mpfr_prec_t bits) const;  // meets the width contract at `bits`

    const std::map<unsigned long, Rational>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // squarefree decomposition: n = square * sf with sf squarefree; returns (sf, sqrt(square))
    static std::pair<unsigned long, unsigned long> squarefree_split(unsigned long n);

  private:
    std::map<unsigned long, Rational> terms_;
    void add_term(unsigned long d, const Rational& c);
    Interval raw_interval(mpfr_prec_t work_bits) const;
};

} // namespace latpoly
