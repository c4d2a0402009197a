#pragma once

#include <cstddef>
#include <vector>

#include "errors.hpp"

namespace latpoly {

// Least-squares line with a 95% band on the slope.
struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::size_t n = 0;
};

struct EnvelopePoint {
    double log_t;
    double log_env;
};

// Plain OLS of y against x. Needs >= 3 points for the confidence band.
ExponentFit ols_fit(const std::vector<double>& xs, const std::vector<double>& ys);

// Max of |delta| over dyadic blocks [t_min 2^k, t_min 2^{k+1}); blocks whose
// envelope is 0 are dropped (their log is undefined, and a zero max carries no
// exponent information).
std::vector<EnvelopePoint> dyadic_envelope(const std::vector<double>& ts,
                                           const std::vector<double>& deltas);

// Exponent of |delta| ~ t^beta: OLS on the trailing `window` fraction of the
// dyadic-envelope blocks. Sup-type bounds call for the envelope, not pointwise
// |delta|, which systematically under-reads the order of an oscillating signal.
ExponentFit fit_exponent_loglog(const std::vector<double>& ts, const std::vector<double>& deltas,
                                double window = 1.0);

// Mean of delta over samples with t in [T, 2T].
double windowed_mean(const std::vector<double>& ts, const std::vector<double>& deltas, double T);

} // namespace latpoly
