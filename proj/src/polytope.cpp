#include "polytope.hpp"

#include "errors.hpp"

namespace latpoly {

AxisLengths::AxisLengths(std::vector<Scalar> a) : a_(std::move(a)) {
    if (a_.empty()) raise(ErrorKind::InvalidArgument, "at least one axis length required");
    if (static_cast<int>(a_.size()) > kMaxDim)
        raise(ErrorKind::InvalidArgument, "dimension exceeds the supported maximum");
    for (const auto& v : a_)
        if (v.sign() <= 0) raise(ErrorKind::InvalidArgument, "axis lengths must be positive");
}

std::vector<Scalar> AxisLengths::inverses() const {
    std::vector<Scalar> inv;
    inv.reserve(a_.size());
    for (const auto& v : a_) inv.push_back(v.inverse());
    return inv;
}

AxisLengths AxisLengths::subset(unsigned mask) const {
    std::vector<Scalar> sel;
    for (size_t i = 0; i < a_.size(); ++i)
        if (mask & (1u << i)) sel.push_back(a_[i]);
    return AxisLengths(std::move(sel));
}

namespace {

Scalar product_of(const std::vector<Scalar>& xs) {
    Scalar acc = Scalar::from_rational(Rational(1));
    for (const auto& x : xs) acc = acc.mul(x);  // PrecisionExhausted when unrepresentable
    return acc;
}

Interval product_interval(const std::vector<Scalar>& xs, mpfr_prec_t bits) {
    Interval acc = Interval::from_long(1, bits + 32);
    for (const auto& x : xs) acc = acc.mul(x.interval(bits + 32));
    return acc;
}

Location side_of(int s) {
    if (s < 0) return Location::Inside;
    if (s == 0) return Location::Boundary;
    return Location::Outside;
}

} // namespace

Scalar CrossPolytope::volume() const {
    Rational f = make_rational(pow_int(Int(2), static_cast<unsigned long>(dim())),
                               factorial_int(static_cast<unsigned long>(dim())));
    return product_of(axes_.values()).mul_rational(f);
}

Interval CrossPolytope::volume_interval(mpfr_prec_t bits) const {
    Rational f = make_rational(pow_int(Int(2), static_cast<unsigned long>(dim())),
                               factorial_int(static_cast<unsigned long>(dim())));
    return product_interval(axes_.values(), bits).mul_rational(f);
}

Location CrossPolytope::locate(const std::vector<Rational>& x, const Scalar& t) const {
    if (static_cast<int>(x.size()) != dim())
        raise(ErrorKind::InvalidArgument, "point dimension does not match the polytope");
    ExactReal acc;
    std::vector<Scalar> inv = axes_.inverses();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        acc.accumulate(inv[i], abs(x[i]));
    }
    acc.accumulate(t, Rational(-1));
    return side_of(acc.sign());
}

CornerSimplex::CornerSimplex(AxisLengths axes)
    : axes_(std::move(axes)), sign_(static_cast<size_t>(axes_.dim()), 1) {}

CornerSimplex::CornerSimplex(AxisLengths axes, std::vector<int> sign)
    : axes_(std::move(axes)), sign_(std::move(sign)) {
    if (static_cast<int>(sign_.size()) != axes_.dim())
        raise(ErrorKind::InvalidArgument, "sign vector length must equal the dimension");
    for (int s : sign_)
        if (s != 1 && s != -1)
            raise(ErrorKind::InvalidArgument, "sign vector entries must be +1 or -1");
}

Scalar CornerSimplex::volume() const {
    Rational f = make_rational(Int(1), factorial_int(static_cast<unsigned long>(dim())));
    return product_of(axes_.values()).mul_rational(f);
}

Interval CornerSimplex::volume_interval(mpfr_prec_t bits) const {
    Rational f = make_rational(Int(1), factorial_int(static_cast<unsigned long>(dim())));
    return product_interval(axes_.values(), bits).mul_rational(f);
}

Location CornerSimplex::locate(const std::vector<Rational>& x, const Scalar& t) const {
    if (static_cast<int>(x.size()) != dim())
        raise(ErrorKind::InvalidArgument, "point dimension does not match the polytope");
    // mirror into the nonnegative orthant: y_i = sigma_i x_i must be >= 0
    bool on_coordinate_facet = false;
    ExactReal acc;
    std::vector<Scalar> inv = axes_.inverses();
    for (size_t i = 0; i < x.size(); ++i) {
        Rational y = x[i] * sign_[i];
        if (y < 0) return Location::Outside;
        if (y == 0) {
            on_coordinate_facet = true;
            continue;
        }
        acc.accumulate(inv[i], y);
    }
    acc.accumulate(t, Rational(-1));
    int s = acc.sign();
    if (s > 0) return Location::Outside;
    if (s == 0 || on_coordinate_facet) return Location::Boundary;
    return Location::Inside;
}

FacePolytope::FacePolytope(AxisLengths axes, unsigned support)
    : axes_(std::move(axes)), support_(support) {
    if (support_ >= (1u << axes_.dim()))
        raise(ErrorKind::InvalidArgument, "support mask has bits beyond the dimension");
}

int FacePolytope::support_dim() const { return __builtin_popcount(support_); }

Scalar FacePolytope::volume() const {
    if (support_ == 0) return Scalar::from_rational(Rational(1));  // counting measure of {0}
    return CrossPolytope(axes_.subset(support_)).volume();
}

Location FacePolytope::locate(const std::vector<Rational>& x, const Scalar& t) const {
    if (static_cast<int>(x.size()) != axes_.dim())
        raise(ErrorKind::InvalidArgument, "point dimension does not match the polytope");
    // off-support coordinates must vanish exactly
    std::vector<Rational> sub;
    for (size_t i = 0; i < x.size(); ++i) {
        if (support_ & (1u << i))
            sub.push_back(x[i]);
        else if (x[i] != 0)
            return Location::Outside;
    }
    // relative classification, matching the subset delegation below: the
    // singleton {0} is its own relative interior
    if (support_ == 0) return Location::Inside;
    return CrossPolytope(axes_.subset(support_)).locate(sub, t);
}

GeneralSimplex::GeneralSimplex(std::vector<std::vector<Scalar>> vertices)
    : verts_(std::move(vertices)) {
    if (verts_.size() < 2 || verts_.size() > kMaxDim + 1)
        raise(ErrorKind::InvalidArgument, "simplex needs between 2 and kMaxDim+1 vertices");
    size_t d = verts_.size() - 1;
    for (const auto& v : verts_)
        if (v.size() != d)
            raise(ErrorKind::InvalidArgument, "simplex vertex coordinates must have length d");
}

namespace {

// determinant over the quadratic-surd field via elimination with exact pivots
SurdSum surd_det(std::vector<std::vector<SurdSum>> m) {
    size_t n = m.size();
    SurdSum det = SurdSum(Rational(1));
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return SurdSum();  // singular
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = det.neg();
        }
        det = det.mul(m[col][col]);
        SurdSum inv = m[col][col].inverse();
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            SurdSum f = m[row][col].mul(inv);
            for (size_t k = col; k < n; ++k) m[row][k] = m[row][k].sub(f.mul(m[col][k]));
        }
    }
    return det;
}

} // namespace

SurdSum GeneralSimplex::edge_det() const {
    size_t d = verts_.size() - 1;
    std::vector<std::vector<SurdSum>> m(d, std::vector<SurdSum>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            if (verts_[i + 1][j].tier() == Scalar::Tier::Root ||
                verts_[0][j].tier() == Scalar::Tier::Root)
                raise(ErrorKind::PrecisionExhausted,
                      "exact simplex volume needs rational or quadratic coordinates");
            m[i][j] = verts_[i + 1][j].as_surd().sub(verts_[0][j].as_surd());
        }
    return surd_det(std::move(m));
}

Scalar GeneralSimplex::volume() const {
    SurdSum det = edge_det();
    if (det.is_zero()) raise(ErrorKind::DegenerateSimplex, "simplex has affinely dependent vertices");
    if (det.sign() < 0) det = det.neg();
    size_t d = verts_.size() - 1;
    return Scalar::from_surd(det).mul_rational(
        make_rational(Int(1), factorial_int(static_cast<unsigned long>(d))));
}

bool GeneralSimplex::is_degenerate() const { return edge_det().is_zero(); }

std::vector<CornerSimplex> triangulate_cross(const CrossPolytope& c) {
    int d = c.dim();
    std::vector<CornerSimplex> out;
    out.reserve(1u << d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        // lexicographic over sigma with +1 before -1: bit 0 of the mask flips axis 1 last
        std::vector<int> sign(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i)
            sign[static_cast<size_t>(i)] = (mask & (1u << (d - 1 - i))) ? -1 : 1;
        out.emplace_back(c.axes(), std::move(sign));
    }
    return out;
}

} // namespace latpoly
