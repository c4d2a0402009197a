#include "interval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace latpoly {

namespace {
std::atomic<mpfr_prec_t> g_default_bits{0};

mpfr_prec_t init_default_bits() {
    const char* env = std::getenv("LATPOLY_PRECISION_BITS");
    if (env != nullptr) {
        long v = std::atol(env);
        if (v >= 16 && v <= kPrecisionCap) return static_cast<mpfr_prec_t>(v);
    }
    return 256;
}
} // namespace

mpfr_prec_t default_precision() {
    mpfr_prec_t v = g_default_bits.load(std::memory_order_relaxed);
    if (v == 0) {
        v = init_default_bits();
        g_default_bits.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_default_precision(mpfr_prec_t bits) {
    g_default_bits.store(std::clamp<mpfr_prec_t>(bits, 16, kPrecisionCap), std::memory_order_relaxed);
}

static mpfr_prec_t resolve(mpfr_prec_t prec) { return prec > 0 ? prec : default_precision(); }

Interval::Interval(mpfr_prec_t prec) : prec_(resolve(prec)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        if (prec_ != o.prec_) {
            mpfr_set_prec(lo_, o.prec_);
            mpfr_set_prec(hi_, o.prec_);
            prec_ = o.prec_;
        }
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_int(const Int& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::neg() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::add(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sub(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::mul(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::inverse() const {
    if (contains_zero()) raise(ErrorKind::Internal, "interval inverse across zero");
    Interval r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::div(const Interval& o) const { return mul(o.inverse()); }

Interval Interval::sqrt() const {
    if (mpfr_sgn(hi_) < 0) raise(ErrorKind::Internal, "sqrt of negative interval");
    Interval r(prec_);
    if (mpfr_sgn(lo_) < 0) {
        mpfr_set_zero(r.lo_, 1);
    } else {
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    }
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return neg();
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::add_rational(const Rational& q) const {
    Interval r(prec_);
    mpfr_add_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::mul_rational(const Rational& q) const {
    return mul(Interval::from_rational(q, prec_));
}

Interval Interval::mul_long(long v) const {
    Interval r(prec_);
    if (v >= 0) {
        mpfr_mul_si(r.lo_, lo_, v, MPFR_RNDD);
        mpfr_mul_si(r.hi_, hi_, v, MPFR_RNDU);
    } else {
        mpfr_mul_si(r.lo_, hi_, v, MPFR_RNDD);
        mpfr_mul_si(r.hi_, lo_, v, MPFR_RNDU);
    }
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

// cos/sin: evaluate at the midpoint, pad by half-width (|derivative| <= 1)
// plus two ulps for the rounding of midpoint and function value.
static Interval lipschitz_pad(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec,
                              int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    Interval r(prec);
    mpfr_t mid, half, pad;
    mpfr_init2(mid, prec + 8);
    mpfr_init2(half, prec + 8);
    mpfr_init2(pad, prec + 8);
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(half, hi, lo, MPFR_RNDU);
    mpfr_div_2ui(half, half, 1, MPFR_RNDU);
    // pad = half-width + 2^(3-prec) (covers midpoint and value rounding)
    mpfr_set_ui_2exp(pad, 1, 3 - static_cast<mpfr_exp_t>(prec), MPFR_RNDU);
    mpfr_add(pad, pad, half, MPFR_RNDU);
    mpfr_t val;
    mpfr_init2(val, prec + 8);
    fn(val, mid, MPFR_RNDN);
    mpfr_sub(r.lo_raw(), val, pad, MPFR_RNDD);
    mpfr_add(r.hi_raw(), val, pad, MPFR_RNDU);
    // clamp to [-1, 1]
    mpfr_t one;
    mpfr_init2(one, 8);
    mpfr_set_si(one, -1, MPFR_RNDN);
    mpfr_max(r.lo_raw(), r.lo_raw(), one, MPFR_RNDD);
    mpfr_set_si(one, 1, MPFR_RNDN);
    mpfr_min(r.hi_raw(), r.hi_raw(), one, MPFR_RNDU);
    mpfr_clears(mid, half, pad, val, one, static_cast<mpfr_ptr>(nullptr));
    return r;
}

Interval Interval::cos() const { return lipschitz_pad(lo_, hi_, prec_, mpfr_cos); }
Interval Interval::sin() const { return lipschitz_pad(lo_, hi_, prec_, mpfr_sin); }

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

std::optional<int> Interval::sign() const {
    if (!is_finite()) return std::nullopt;
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return std::nullopt;
}

bool Interval::contains_rational(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_d() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double v = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return v;
}

double Interval::wid_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double v = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return v;
}

static Rational mpfr_to_rational(const mpfr_t x) {
    if (!mpfr_number_p(x)) raise(ErrorKind::Internal, "non-finite endpoint");
    if (mpfr_zero_p(x)) return Rational(0);
    mpz_class man;
    mpfr_exp_t e = mpfr_get_z_2exp(man.get_mpz_t(), x);
    Rational q(man);
    if (e >= 0) {
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    q.canonicalize();
    return q;
}

Rational Interval::lo_rational() const { return mpfr_to_rational(lo_); }
Rational Interval::hi_rational() const { return mpfr_to_rational(hi_); }

bool Interval::meets_width_contract(mpfr_prec_t bits) const {
    if (!is_finite()) return false;
    mpfr_t w, bound, a;
    mpfr_init2(w, 64);
    mpfr_init2(bound, 64);
    mpfr_init2(a, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_abs(a, lo_, MPFR_RNDU);
    mpfr_t b;
    mpfr_init2(b, 64);
    mpfr_abs(b, hi_, MPFR_RNDU);
    mpfr_max(a, a, b, MPFR_RNDU);
    mpfr_set_ui(bound, 1, MPFR_RNDU);
    mpfr_max(a, a, bound, MPFR_RNDU);
    mpfr_mul_2si(bound, a, 1 - static_cast<long>(bits), MPFR_RNDU);
    bool ok = mpfr_cmp(w, bound) <= 0;
    mpfr_clears(w, bound, a, b, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

std::string Interval::str(size_t digits) const {
    char* lo_s = nullptr;
    char* hi_s = nullptr;
    mpfr_asprintf(&lo_s, "%.*Rg", static_cast<int>(digits), lo_);
    mpfr_asprintf(&hi_s, "%.*Rg", static_cast<int>(digits), hi_);
    std::string out = std::string("[") + lo_s + ", " + hi_s + "]";
    mpfr_free_str(lo_s);
    mpfr_free_str(hi_s);
    return out;
}

} // namespace latpoly
