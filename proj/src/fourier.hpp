#pragma once

#include <vector>

#include "cinterval.hpp"
#include "polytope.hpp"
#include "scalar.hpp"

namespace latpoly {

enum class FtMethod { ClosedForm, Contour, Residues, DirectOracle };
const char* ft_method_name(FtMethod m);

// One evaluation of the transform of the characteristic function of a dilated
// simplex at a frequency vector.
struct FourierEvaluation {
    CInterval value;
    FtMethod method;
    double error_bound;  // quadrature/series error beyond the enclosure widths
    std::vector<Scalar> frequency;
    Scalar dilation;
};

// The d+1 integrand poles <v_j, y>, grouped by exact coincidence.
struct PoleConfiguration {
    std::vector<Scalar> locations;               // in vertex order
    std::vector<std::pair<Scalar, int>> groups;  // distinct values with multiplicities
};

PoleConfiguration pole_configuration(const GeneralSimplex& s, const std::vector<Scalar>& y);

// Closed form for the unit standard simplex; requires all y_j nonzero and
// pairwise distinct (exact check) — PoleCollision otherwise.
FourierEvaluation ft_standard_simplex(const std::vector<Scalar>& y, const Scalar& t,
                                      mpfr_prec_t bits = 0);

// Trapezoid quadrature of the contour representation on |z| = R with
// R = radius_scale * 2 * max(1, max_j |<v_j,y>|); node count doubles until the
// two finest results agree within tol (at most three doublings).
FourierEvaluation ft_contour(const GeneralSimplex& s, const std::vector<Scalar>& y,
                             const Scalar& t, int nodes, double tol = 1e-12,
                             const Rational& radius_scale = Rational(1), mpfr_prec_t bits = 0);

// Residue evaluation with exact pole grouping; handles arbitrary coincidences.
FourierEvaluation ft_residues(const GeneralSimplex& s, const std::vector<Scalar>& y,
                              const Scalar& t, mpfr_prec_t bits = 0);

// Independent oracle: adaptive Gauss-Legendre integration in doubles, d <= 3.
FourierEvaluation ft_direct_oracle(const GeneralSimplex& s, const std::vector<Scalar>& y,
                                   const Scalar& t, double tol);

// corner simplex with vertices 0, a_1 e_1, ..., a_d e_d
GeneralSimplex corner_as_general(const AxisLengths& axes);

} // namespace latpoly
