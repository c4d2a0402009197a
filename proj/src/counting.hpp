#pragma once

#include <vector>

#include "polytope.hpp"
#include "scalar.hpp"

namespace latpoly {

struct CountResult {
    Int count;           // |tP ∩ Z^d|, closed polytope
    Int boundary_hits;   // lattice points exactly on ∂(tP)
    bool certified;      // every boundary comparison decided exactly
};

// Recursive counts: O((a_max t)^(d-1)) fibers, innermost level closed-form.
CountResult count_cross(const CrossPolytope& p, const Scalar& t);
CountResult count_simplex(const CornerSimplex& p, const Scalar& t);
CountResult count_simplex(const FacePolytope& p, const Scalar& t);

// Independent naive box enumeration (oracle; d <= 4 recommended).
CountResult count_cross_brute(const CrossPolytope& p, const Scalar& t);
CountResult count_simplex_brute(const CornerSimplex& p, const Scalar& t);

// 2^d |tS ∩ Z^d| = sum over subsets I of |tC_I ∩ Z^d|, checked exactly.
bool verify_decomposition(const AxisLengths& axes, const Scalar& t);

// Lattice points in a ball intersected with a slab between two parallel
// hyperplanes orthogonal to `normal`.
struct SlabQuery {
    std::vector<Rational> center;
    Scalar radius;                 // > 1
    std::vector<Scalar> normal;    // nonzero
    Scalar offset;                 // b
    Scalar width;                  // a > 0
};

// |{m in Z^d : |m - center| <= R, b <= <n/|n|, m> <= b + a}|
Int count_slab(const SlabQuery& q);

} // namespace latpoly
