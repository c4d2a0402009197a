#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fitting.hpp"
#include "rational.hpp"
#include "textio.hpp"

namespace latpoly {

struct DiscrepancyRecord {
    Rational t;       // exact grid point
    Int count;        // |tP cap Z^d|
    double main_term; // p(t) for cross, q(t) for simplex; NaN if uncomputable
    double delta;     // count - main_term
    bool certified;
};

// The exact dilation grid: linear grids are exact rationals; log grids snap
// each geometric point to a denominator-10^6 rational so counts stay exact and
// reruns are reproducible.
std::vector<Rational> sweep_grid(const SweepConfig& cfg);

// Per grid point: exact count, certified main-term evaluation, delta. A point
// whose evaluation runs out of representable precision is marked uncertified
// and kept, never aborted on.
std::vector<DiscrepancyRecord> scan_discrepancy(const SweepConfig& cfg);

std::string records_to_csv(const std::vector<DiscrepancyRecord>& recs);
std::vector<DiscrepancyRecord> records_from_csv(const std::string& text);

// Dyadic-envelope exponent of |delta| against t over the trailing `window`
// fraction of blocks; records with nonfinite delta are excluded.
ExponentFit fit_exponent(const std::vector<DiscrepancyRecord>& recs, double window = 1.0);
std::string fit_to_json(const ExponentFit& fit);

// explicit setting > LATPOLY_PRECISION_BITS env var > 256
long resolve_precision_bits(long configured);

struct CriterionResult {
    int index;
    std::string name;
    bool passed;
    std::string detail;
    std::vector<std::pair<std::string, std::string>> artifacts; // filename -> content
};

// The numbered acceptance checks (1..11). Each is self-contained, uses pinned
// instances and tolerances, and reports one pass/fail with its measured values.
CriterionResult run_criterion(int index);

const std::vector<std::string>& campaign_names();

struct CampaignResult {
    std::string name;
    bool passed;
    std::string summary; // one line per criterion
    std::vector<std::pair<std::string, std::string>> files;
};

CampaignResult run_campaign(const std::string& name);

} // namespace latpoly
