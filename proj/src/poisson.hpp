#pragma once

#include <functional>
#include <vector>

#include "cinterval.hpp"
#include "polytope.hpp"
#include "scalar.hpp"

namespace latpoly {

// Triangular-average weight w(m) = prod_k max(0, 1 - |m_k|/N)
class FejerWeight {
  public:
    explicit FejerWeight(int N);
    int N() const { return n_; }
    double weight(const std::vector<long>& m) const;
    Rational weight_rational(const std::vector<long>& m) const;

  private:
    int n_;
};

struct ErrorSeriesValue {
    int N = 0;
    Scalar t;
    double value = 0.0;       // real part; the full sum cancels to a real number
    long terms_used = 0;
    double imag_residual = 0; // |Im| of the accumulated sum, kept for diagnostics
};

// Cesaro mean of the formal transform series over the dilated cross-polytope,
// collapsed to the single weighted sum over m in (-N,N)^d.
double cesaro_mean(const CrossPolytope& P, const Scalar& t, int N);

// Same quantity with certified enclosures, one transform evaluation per m.
// Intended for small N; cost grows like N^d interval residue computations.
Interval cesaro_mean_certified(const CrossPolytope& P, const Scalar& t, int N, mpfr_prec_t bits);

// The simple-pole tail series: for each axis j, terms over m with m_j != 0 of
// e^{-2 pi i m_j a_j t} / (m_j prod_{k != j} (m_j a_j / a_k - m_k)), weighted.
ErrorSeriesValue error_series(const AxisLengths& axes, const Scalar& t, int N);
Interval error_series_certified(const AxisLengths& axes, const Scalar& t, int N,
                                mpfr_prec_t bits);

// B_M: residues at the origin summed over the box |m_k| <= M_k.
double residue_origin_sum(const AxisLengths& axes, const Scalar& t,
                          const std::vector<long>& box);
Interval residue_origin_sum_certified(const AxisLengths& axes, const Scalar& t,
                                      const std::vector<long>& box, mpfr_prec_t bits);

// (1/N^d) sum_M B_M, collapsed through the same triangular weights.
double residue_origin_average(const AxisLengths& axes, const Scalar& t, int N);
Interval residue_origin_average_certified(const AxisLengths& axes, const Scalar& t, int N,
                                          mpfr_prec_t bits);

// Deterministic enumeration order shared by every sum in this module:
// ascending |m|_1 shells, lexicographic inside a shell.
void for_each_lattice_point(int d, int N, const std::function<void(const std::vector<long>&)>& fn);

} // namespace latpoly
