#pragma once

#include <vector>

#include "fitting.hpp"
#include "scalar.hpp"

namespace latpoly {

// ||x||: distance from x to the nearest integer, exact in x's own tier.
Scalar dist_nearest_integer(const Scalar& x);

struct ProductSumRow {
    long M;
    double sum;         // S(M) = sum_{m<=M} 1 / prod_k ||m alpha_k||
    double min_product; // L_M = min_{m<=M} prod_k ||m alpha_k||
};

// Reciprocal-product scan. fitted_gamma is the OLS slope of log S(M) against
// log M over the upper half of the checkpoint grid (small-M transients carry no
// exponent information); it is left default-initialized (n = 0) when that half
// holds fewer than 3 rows.
struct ProductSumTable {
    std::vector<Scalar> alphas;
    std::vector<ProductSumRow> rows;
    ExponentFit fitted_gamma;
};

ProductSumTable product_sum_table(const std::vector<Scalar>& alphas, long m_max,
                                  const std::vector<long>& checkpoints);

// Running minima of m^{1+eps} prod_k ||m alpha_k|| on a doubling checkpoint
// grid. flagged reports decay toward 0: the final running minimum dropping
// below 1/8 of its value at the second checkpoint for some eps, which separates
// inputs with engineered rational approximations from badly approximable ones.
struct SchmidtReport {
    std::vector<double> epsilons;
    std::vector<long> checkpoints;
    std::vector<std::vector<double>> running_min; // [eps index][checkpoint index]
    std::vector<double> final_min;                // per eps, = running_min[e].back()
    bool flagged;
};

SchmidtReport schmidt_check(const std::vector<Scalar>& alphas, long m_max);

// The pigeonhole step: partition [-1/2,1/2)^d into cells of exact side
// 1/cells_per_axis, chosen inside the open interval (L_M^{1/d}/2, L_M^{1/d}),
// map m -> (m alpha_1, ..., m alpha_d) mod 1 for m in A_2 = {m <= M :
// prod ||m alpha_k|| < 2 L_M}, and record cell occupancies. All cell indices
// and the class membership are decided in exact arithmetic.
struct PigeonholeReport {
    long M;
    long cells_per_axis;
    Rational side;
    long class_size; // |A_2|
    long occupied_cells;
    long max_occupancy;
    std::vector<long> histogram; // histogram[k] = number of cells holding k+1 points
    bool injective;              // max_occupancy <= 1
};

PigeonholeReport pigeonhole_bound_demo(const std::vector<Scalar>& alphas, long M);

} // namespace latpoly
