#pragma once

#include <vector>

#include "polytope.hpp"
#include "rational.hpp"

namespace latpoly {

struct DedekindSum {
    long a;
    long b;
    Rational value;
};

// s(a,b) = sum_{k=1}^{b-1} (k/b - 1/2)({ak/b} - 1/2), gcd(a,b) = 1. Dispatches
// to the defining sum for b <= 10^4 and to the reciprocity recursion above.
DedekindSum dedekind_sum(long a, long b);
Rational dedekind_sum_direct(long a, long b);
Rational dedekind_sum_reciprocal(long a, long b);

struct EhrhartPolynomial {
    int d = 0;
    std::vector<Rational> coefficients; // ascending, size d+1
    Rational evaluate(const Rational& t) const;
};

// Exact Ehrhart polynomial of the corner simplex with positive integer axes:
// Lagrange interpolation through the counts at t = 0..d+1, with an extra
// consistency count at t = d+2.
EhrhartPolynomial ehrhart_by_interpolation(const AxisLengths& axes);

// Coefficient of t^{d-2} for pairwise coprime positive integer axes, from the
// surface-term sum plus the Dedekind correction.
Rational coefficient_td_minus_2_formula(const AxisLengths& axes);

} // namespace latpoly
