#pragma once

#include <utility>
#include <vector>

#include "exactreal.hpp"
#include "scalar.hpp"

namespace latpoly {

constexpr int kMaxDim = 12;

// Positive axis intercepts a_1..a_d shared by the cross-polytope and the
// corner-simplex families.
class AxisLengths {
  public:
    explicit AxisLengths(std::vector<Scalar> a);
    int dim() const { return static_cast<int>(a_.size()); }
    const std::vector<Scalar>& values() const { return a_; }
    const Scalar& at(int i) const { return a_[static_cast<size_t>(i)]; }
    // 1/a_i, exact in every tier
    std::vector<Scalar> inverses() const;
    // restriction to an index subset (bitmask over axes, bit i = axis i)
    AxisLengths subset(unsigned mask) const;

  private:
    std::vector<Scalar> a_;
};

enum class Location { Inside, Boundary, Outside };

// sum_i |x_i| / a_i <= 1
class CrossPolytope {
  public:
    explicit CrossPolytope(AxisLengths axes) : axes_(std::move(axes)) {}
    int dim() const { return axes_.dim(); }
    const AxisLengths& axes() const { return axes_; }
    // 2^d a_1...a_d / d!   (exact; PrecisionExhausted if the product leaves the family)
    Scalar volume() const;
    Interval volume_interval(mpfr_prec_t bits) const;
    // exact position of a rational point relative to the dilate t*P
    Location locate(const std::vector<Rational>& x, const Scalar& t) const;

  private:
    AxisLengths axes_;
};

// orthant copy S_sigma of the corner simplex: sigma_i x_i >= 0 and
// sum_i sigma_i x_i / a_i <= 1; the identity sign vector gives S itself
class CornerSimplex {
  public:
    explicit CornerSimplex(AxisLengths axes);
    CornerSimplex(AxisLengths axes, std::vector<int> sign);
    int dim() const { return axes_.dim(); }
    const AxisLengths& axes() const { return axes_; }
    const std::vector<int>& sign() const { return sign_; }
    // a_1...a_d / d!
    Scalar volume() const;
    Interval volume_interval(mpfr_prec_t bits) const;
    Location locate(const std::vector<Rational>& x, const Scalar& t) const;

  private:
    AxisLengths axes_;
    std::vector<int> sign_;
};

// cross-polytope C_I supported on an axis subset, embedded in R^d with zeros
// off-support; the empty support is the singleton {0}
class FacePolytope {
  public:
    FacePolytope(AxisLengths axes, unsigned support);
    int ambient_dim() const { return axes_.dim(); }
    int support_dim() const;
    unsigned support() const { return support_; }
    const AxisLengths& axes() const { return axes_; }
    // volume as a |I|-dimensional body: 2^{|I|} prod_{i in I} a_i / |I|!
    Scalar volume() const;
    Location locate(const std::vector<Rational>& x, const Scalar& t) const;

  private:
    AxisLengths axes_;
    unsigned support_;
};

// Arbitrary simplex on d+1 vertices; exact volume requires rational or
// quadratic coordinates (determinants stay inside the surd field).
class GeneralSimplex {
  public:
    explicit GeneralSimplex(std::vector<std::vector<Scalar>> vertices);
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<std::vector<Scalar>>& vertices() const { return verts_; }
    Scalar volume() const;  // |det M|/d!; DegenerateSimplex when det = 0
    bool is_degenerate() const;

  private:
    std::vector<std::vector<Scalar>> verts_;
    SurdSum edge_det() const;
};

// All 2^d orthant simplices S_sigma in lexicographic sigma order, identity first.
std::vector<CornerSimplex> triangulate_cross(const CrossPolytope& c);

} // namespace latpoly
