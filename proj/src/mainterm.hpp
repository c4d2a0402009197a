#pragma once

#include <map>
#include <vector>

#include "polytope.hpp"
#include "scalar.hpp"

namespace latpoly {

// B_n, exact (B_1 = -1/2 convention)
Rational bernoulli_number(unsigned n);

// zeta(n) = rational_multiplier * pi^n for positive even n
struct ZetaEven {
    unsigned n;
    Rational rational_multiplier;
};
ZetaEven zeta_even(unsigned n);

// Monomial map over the axis lengths: key e assigns exponent e_i to a_i, so a
// symbolic coefficient is sum_e value(e) * prod_i a_i^{e_i}. Zero values are
// never stored, making equality of maps an exact identity test.
using ExponentVector = std::vector<int>;
using SymbolicCoefficient = std::map<ExponentVector, Rational>;

// Degree-d main-term polynomial attached to a cross-polytope (kind Cross) or
// to the orthant average of a corner simplex (kind SimplexAverage). Every
// coefficient is held symbolically; numeric forms are derived on demand.
class MainTermPolynomial {
  public:
    enum class Kind { Cross, SimplexAverage };

    static MainTermPolynomial build_p(const AxisLengths& axes);
    static MainTermPolynomial build_q(const AxisLengths& axes);

    int dim() const { return axes_.dim(); }
    Kind kind() const { return kind_; }
    const AxisLengths& axes() const { return axes_; }
    const SymbolicCoefficient& symbolic(int k) const;

    // exact value of the t^k coefficient; PrecisionExhausted when the axis
    // monomials leave the representable scalar family
    Scalar coefficient_value(int k) const;
    Interval coefficient_interval(int k, mpfr_prec_t bits) const;

    // certified Horner evaluation
    Interval evaluate(const Scalar& t, mpfr_prec_t bits) const;
    Interval evaluate(const Interval& t, mpfr_prec_t bits) const;
    Scalar evaluate_exact(const Scalar& t) const;

  private:
    MainTermPolynomial(Kind kind, AxisLengths axes, std::vector<SymbolicCoefficient> coeffs)
        : kind_(kind), axes_(std::move(axes)), coeffs_(std::move(coeffs)) {}

    Kind kind_;
    AxisLengths axes_;
    std::vector<SymbolicCoefficient> coeffs_;  // index k = 0..d
};

// Independent constructions of the closed-form coefficients, for cross-checks
// against the generic composition sums (valid when d is large enough).
SymbolicCoefficient closed_form_c_dm2(int d);
SymbolicCoefficient closed_form_c_dm4(int d);
SymbolicCoefficient closed_form_e_dm1(int d);
SymbolicCoefficient closed_form_e_dm2(int d);
SymbolicCoefficient closed_form_e_dm3(int d);

} // namespace latpoly
