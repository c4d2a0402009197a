#pragma once

#include <string>
#include <vector>

#include "polytope.hpp"
#include "scalar.hpp"

namespace latpoly {

// Exact scalar syntax: "p", "p/q", decimals like "-3.25", "sqrt(D)" with
// rational D >= 0, signed sums of rational multiples of square roots like
// "3/2*sqrt(5)-1/2", and "root(c_k,...,c_0; lo, hi)" for the unique root of
// c_k x^k + ... + c_0 inside (lo, hi). A root atom stands alone.
Scalar parse_scalar(const std::string& text);
// Inverse of parse_scalar: the output parses back to an equal scalar.
std::string format_scalar(const Scalar& s);

struct PolytopeSpec {
    enum class Kind { Cross, Simplex };
    Kind kind;
    AxisLengths axes;
};

// "cross d=3 a=[sqrt(2), 1, 3/2]" | "simplex d=2 a=[1, 1]"
PolytopeSpec parse_polytope_spec(const std::string& text);
std::string format_polytope_spec(const PolytopeSpec& spec);

// Key-value sweep configuration ('#' starts a comment):
//   polytope = cross d=2 a=[1, sqrt(2)]     (required)
//   t_start = 1                             (required; exact rational)
//   t_stop = 10000                          (required)
//   t_count = 2000                          (required)
//   spacing = linear | log                  (default linear)
//   cesaro_n = 64                           (optional; 0 = no Cesaro column)
//   output = out.csv                        (optional; empty = stdout)
//   precision_bits = 256                    (optional; 0 = resolve from env)
//   seed = 1                                (optional)
struct SweepConfig {
    PolytopeSpec polytope;
    Rational t_start;
    Rational t_stop;
    long t_count = 0;
    bool log_spacing = false;
    long cesaro_n = 0;
    std::string output;
    long precision_bits = 0;
    unsigned long seed = 0;
};

SweepConfig parse_sweep_config(const std::string& text);
std::string format_sweep_config(const SweepConfig& cfg);

} // namespace latpoly
