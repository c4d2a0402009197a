#include "counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "exactreal.hpp"

namespace latpoly {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// double enclosure with outward padding: two nextafter steps absorb the at
// most two roundings of each derived endpoint
struct DI {
    double lo, hi;
};

double pad_down(double x) { return std::nextafter(std::nextafter(x, -kInf), -kInf); }
double pad_up(double x) { return std::nextafter(std::nextafter(x, kInf), kInf); }

DI di_of(const Interval& iv) { return {iv.lo_d(), iv.hi_d()}; }

DI di_sub_scaled(DI rem, long m, DI w) {
    // rem - m*w, m >= 0
    return {pad_down(rem.lo - static_cast<double>(m) * w.hi),
            pad_up(rem.hi - static_cast<double>(m) * w.lo)};
}

Int int_from_u128(unsigned __int128 v) {
    Int hi(static_cast<unsigned long>(v >> 64));
    Int out;
    mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
    out += Int(static_cast<unsigned long>(v));
    return out;
}

// Shared fiber engine for cross-polytopes and corner simplices. Counts points
// of the nonnegative cone m_1..m_d >= start with sum m_i/a_i (<=|<) t; the
// cross-polytope total applies the 2^{#nonzero} symmetry weight per fiber.
class FiberCounter {
  public:
    FiberCounter(const AxisLengths& axes, const Scalar& t, bool cross_weights, bool strict,
                 long start)
        : t_(t), cross_(cross_weights), strict_(strict), start_(start) {
        int d = axes.dim();
        perm_.resize(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) perm_[static_cast<size_t>(i)] = i;
        // innermost level gets the longest axis: most points per closed-form fiber
        std::sort(perm_.begin(), perm_.end(),
                  [&axes](int x, int y) { return axes.at(x).compare(axes.at(y)) < 0; });
        for (int idx : perm_) {
            inv_.push_back(axes.at(idx).inverse());
            Interval ai = axes.at(idx).interval(64);
            Interval wi = inv_.back().interval(64);
            a_di_.push_back(di_of(ai));
            inv_di_.push_back(di_of(wi));
        }
    }

    Int run() {
        total_ = 0;
        assigned_.clear();
        descend(0, di_of(t_.interval(64)));
        return int_from_u128(total_);
    }

  private:
    const Scalar& t_;
    bool cross_, strict_;
    long start_;
    std::vector<int> perm_;
    std::vector<Scalar> inv_;
    std::vector<DI> a_di_, inv_di_;
    std::vector<std::pair<size_t, long>> assigned_;  // (level, m)
    unsigned __int128 total_ = 0;

    ExactReal exact_rem() const {
        ExactReal acc = ExactReal::from_scalar(t_);
        for (const auto& [lvl, m] : assigned_)
            if (m != 0) acc.accumulate(inv_[lvl], Rational(-m));
        return acc;
    }

    // largest n >= start-1 bound semantics: returns the largest integer n with
    // n * inv_level <= rem (strict: <), or start_-1..-1 style sentinel when empty.
    long level_bound(size_t level, DI rem_di, bool strict_here) const {
        if (rem_di.hi < 0) return -1;
        double lo_est = rem_di.lo * a_di_[level].lo;
        double hi_est = rem_di.hi * a_di_[level].hi;
        if (rem_di.lo < 0) lo_est = rem_di.lo * a_di_[level].hi;  // keep a true lower bound
        lo_est = pad_down(lo_est);
        hi_est = pad_up(hi_est);
        long flo = static_cast<long>(std::floor(std::max(lo_est, -1.0)));
        long fhi = static_cast<long>(std::floor(std::max(hi_est, -1.0)));
        if (flo == fhi && flo >= 0) {
            if (!strict_here) return flo;
            if (lo_est > static_cast<double>(flo)) return flo;  // tie provably impossible
        }
        // ambiguous: decide candidates exactly, scanning down from the upper floor
        ExactReal rem = exact_rem();
        for (long n = fhi; n >= 0; --n) {
            ExactReal probe = rem;
            if (n != 0) probe.accumulate(inv_[level], Rational(-n));
            int s = probe.sign();
            if (strict_here ? s > 0 : s >= 0) return n;
        }
        return -1;  // even n = 0 failed: the fiber is empty
    }

    void descend(size_t level, DI rem_di) {
        size_t d = inv_.size();
        if (level == d - 1) {
            long n = level_bound(level, rem_di, strict_);
            unsigned __int128 fiber;
            if (cross_) {
                fiber = n < 0 ? 0 : static_cast<unsigned __int128>(2 * n + 1);
            } else {
                fiber = n < start_ ? 0 : static_cast<unsigned __int128>(n - start_ + 1);
            }
            if (fiber == 0) return;
            unsigned __int128 w = 1;
            if (cross_)
                for (const auto& [lvl, m] : assigned_)
                    if (m != 0) w <<= 1;
            total_ += w * fiber;
            return;
        }
        long bound = level_bound(level, rem_di, strict_);
        for (long m = start_; m <= bound; ++m) {
            assigned_.emplace_back(level, m);
            descend(level + 1, m == 0 ? rem_di : di_sub_scaled(rem_di, m, inv_di_[level]));
            assigned_.pop_back();
        }
    }
};

Int cone_count(const AxisLengths& axes, const Scalar& t, bool cross, bool strict, long start) {
    return FiberCounter(axes, t, cross, strict, start).run();
}

void require_positive_t(const Scalar& t) {
    if (t.sign() <= 0) raise(ErrorKind::InvalidArgument, "dilation parameter must be positive");
}

} // namespace

CountResult count_cross(const CrossPolytope& p, const Scalar& t) {
    require_positive_t(t);
    Int closed = cone_count(p.axes(), t, true, false, 0);
    Int interior = cone_count(p.axes(), t, true, true, 0);
    return {closed, closed - interior, true};
}

CountResult count_simplex(const CornerSimplex& p, const Scalar& t) {
    require_positive_t(t);
    Int closed = cone_count(p.axes(), t, false, false, 0);
    // interior demands every coordinate >= 1 and a strict facet inequality
    Int interior = cone_count(p.axes(), t, false, true, 1);
    return {closed, closed - interior, true};
}

CountResult count_simplex(const FacePolytope& p, const Scalar& t) {
    require_positive_t(t);
    // the singleton {0}: its relative interior is itself, so no boundary hits
    if (p.support() == 0) return {Int(1), Int(0), true};
    CrossPolytope sub(p.axes().subset(p.support()));
    return count_cross(sub, t);
}

namespace {

CountResult brute_count(const AxisLengths& axes, const Scalar& t, bool cross) {
    int d = axes.dim();
    std::vector<Scalar> inv = axes.inverses();
    std::vector<DI> inv_di;
    std::vector<long> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    DI t_di = di_of(t.interval(64));
    for (int i = 0; i < d; ++i) {
        inv_di.push_back(di_of(inv[static_cast<size_t>(i)].interval(64)));
        double extent = pad_up(t_di.hi * pad_up(1.0 / inv_di.back().lo));
        long box = static_cast<long>(std::floor(extent)) + 1;
        lo[static_cast<size_t>(i)] = cross ? -box : 0;
        hi[static_cast<size_t>(i)] = box;
    }
    unsigned __int128 count = 0, boundary = 0;
    std::vector<long> m(lo);
    for (;;) {
        // classify sum |m_i|/a_i against t
        DI acc = {-t_di.hi, -t_di.lo};
        for (int i = 0; i < d; ++i) {
            long v = std::labs(m[static_cast<size_t>(i)]);
            if (v == 0) continue;
            acc.lo = pad_down(acc.lo + v * inv_di[static_cast<size_t>(i)].lo);
            acc.hi = pad_up(acc.hi + v * inv_di[static_cast<size_t>(i)].hi);
        }
        int cls;
        if (acc.hi < 0)
            cls = -1;
        else if (acc.lo > 0)
            cls = 1;
        else {
            ExactReal ex;
            for (int i = 0; i < d; ++i) {
                long v = std::labs(m[static_cast<size_t>(i)]);
                if (v != 0) ex.accumulate(inv[static_cast<size_t>(i)], Rational(v));
            }
            ex.accumulate(t, Rational(-1));
            cls = ex.sign();
        }
        if (cls <= 0) {
            ++count;
            if (cls == 0) ++boundary;
            // simplex boundary also includes the coordinate hyperplanes
            if (cls < 0 && !cross) {
                bool zero_coord = false;
                for (int i = 0; i < d; ++i)
                    if (m[static_cast<size_t>(i)] == 0) zero_coord = true;
                if (zero_coord) ++boundary;
            }
        }
        int idx = 0;
        while (idx < d) {
            if (++m[static_cast<size_t>(idx)] <= hi[static_cast<size_t>(idx)]) break;
            m[static_cast<size_t>(idx)] = lo[static_cast<size_t>(idx)];
            ++idx;
        }
        if (idx == d) break;
    }
    return {int_from_u128(count), int_from_u128(boundary), true};
}

} // namespace

CountResult count_cross_brute(const CrossPolytope& p, const Scalar& t) {
    require_positive_t(t);
    return brute_count(p.axes(), t, true);
}

CountResult count_simplex_brute(const CornerSimplex& p, const Scalar& t) {
    require_positive_t(t);
    return brute_count(p.axes(), t, false);
}

bool verify_decomposition(const AxisLengths& axes, const Scalar& t) {
    require_positive_t(t);
    int d = axes.dim();
    Int lhs = count_simplex(CornerSimplex(axes), t).count;
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(d));
    Int rhs(0);
    for (unsigned mask = 0; mask < (1u << d); ++mask)
        rhs += count_simplex(FacePolytope(axes, mask), t).count;
    return lhs == rhs;
}

Int count_slab(const SlabQuery& q) {
    size_t d = q.normal.size();
    if (d == 0 || q.center.size() != d)
        raise(ErrorKind::InvalidArgument, "slab query needs matching center/normal dimensions");
    if (q.radius.compare_rational(Rational(1)) <= 0)
        raise(ErrorKind::InvalidArgument, "slab radius must exceed 1");
    // width zero is legal: the slab degenerates to a hyperplane section
    if (q.width.sign() < 0) raise(ErrorKind::InvalidArgument, "slab width must be nonnegative");

    // |n|^2 must collapse to a rational so |n| stays in the scalar family
    Scalar norm_sq;
    bool any_nonzero = false;
    for (const auto& ni : q.normal) {
        if (ni.is_zero()) continue;
        any_nonzero = true;
        auto sq = ni.try_mul(ni);
        if (!sq) raise(ErrorKind::PrecisionExhausted, "normal component square not representable");
        auto acc = norm_sq.try_add(*sq);
        if (!acc) raise(ErrorKind::PrecisionExhausted, "normal norm leaves the scalar family");
        norm_sq = *acc;
    }
    if (!any_nonzero) raise(ErrorKind::InvalidArgument, "slab normal must be nonzero");
    if (!norm_sq.is_rational())
        raise(ErrorKind::PrecisionExhausted, "slab needs a normal with rational |n|^2");
    Scalar norm = Scalar::sqrt_rational(norm_sq.rational());

    // thresholds: b|n| <= <n,m> <= (b+a)|n|
    Scalar lo_threshold = q.offset.mul(norm);
    Scalar hi_threshold = q.offset.add(q.width).mul(norm);

    Scalar r_sq = q.radius.mul(q.radius);
    Rational r_hi = q.radius.interval(64).hi_rational();

    // certified double prefilter: resolve <n,m> against the thresholds in
    // padded double arithmetic, falling back to exact signs only near the edge
    std::vector<DI> n_di;
    for (const auto& ni : q.normal) n_di.push_back(di_of(ni.interval(64)));
    DI lo_thr = di_of(lo_threshold.interval(64));
    DI hi_thr = di_of(hi_threshold.interval(64));

    std::vector<long> lo(d), hi(d), m(d);
    for (size_t i = 0; i < d; ++i) {
        lo[i] = static_cast<long>(mpz_get_si(floor_int(q.center[i] - r_hi).get_mpz_t())) - 1;
        hi[i] = static_cast<long>(mpz_get_si(ceil_int(q.center[i] + r_hi).get_mpz_t())) + 1;
        m[i] = lo[i];
    }

    unsigned __int128 count = 0;
    for (;;) {
        Rational dist_sq(0);
        for (size_t i = 0; i < d; ++i) {
            Rational diff = Rational(m[i]) - q.center[i];
            dist_sq += diff * diff;
        }
        if (r_sq.compare_rational(dist_sq) >= 0) {
            DI u{0.0, 0.0};
            for (size_t i = 0; i < d; ++i) {
                double v = static_cast<double>(m[i]);
                if (m[i] > 0) {
                    u.lo = pad_down(u.lo + v * n_di[i].lo);
                    u.hi = pad_up(u.hi + v * n_di[i].hi);
                } else if (m[i] < 0) {
                    u.lo = pad_down(u.lo + v * n_di[i].hi);
                    u.hi = pad_up(u.hi + v * n_di[i].lo);
                }
            }
            if (u.hi < lo_thr.lo || u.lo > hi_thr.hi) {
                // certainly outside the slab
            } else if (u.lo > lo_thr.hi && u.hi < hi_thr.lo) {
                ++count;  // certainly inside
            } else {
                ExactReal ex;
                for (size_t i = 0; i < d; ++i)
                    if (m[i] != 0) ex.accumulate(q.normal[i], Rational(m[i]));
                ExactReal lo_gap = ex;
                lo_gap.accumulate(lo_threshold, Rational(-1));
                if (lo_gap.sign() >= 0) {
                    ExactReal hi_gap = ex;
                    hi_gap.accumulate(hi_threshold, Rational(-1));
                    if (hi_gap.sign() <= 0) ++count;
                }
            }
        }
        size_t idx = 0;
        while (idx < d) {
            if (++m[idx] <= hi[idx]) break;
            m[idx] = lo[idx];
            ++idx;
        }
        if (idx == d) break;
    }
    return int_from_u128(count);
}

} // namespace latpoly
