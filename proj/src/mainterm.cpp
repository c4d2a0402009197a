#include "mainterm.hpp"

#include <algorithm>

#include "errors.hpp"

namespace latpoly {

Rational bernoulli_number(unsigned n) {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    static std::vector<Rational> cache{Rational(1)};
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial_int(m + 1, j)) * cache[j];
        cache.push_back(-acc / Rational(Int(m + 1)));
    }
    return cache[n];
}

ZetaEven zeta_even(unsigned n) {
    if (n < 2 || n % 2 != 0)
        raise(ErrorKind::InvalidArgument, "zeta multiplier defined for even n >= 2 only");
    unsigned k = n / 2;
    // zeta(2k) = (-1)^{k+1} B_{2k} (2pi)^{2k} / (2 (2k)!)
    Rational r = bernoulli_number(n) * make_rational(pow_int(Int(2), n), 2 * factorial_int(n));
    if (k % 2 == 0) r = -r;
    return {n, r};
}

namespace {

void map_add(SymbolicCoefficient& m, const ExponentVector& e, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = m.emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) m.erase(it);
    }
}

// p-polynomial coefficients for the axis subset selected by `mask` (viewed as
// a polynomial in those variables, exponent vectors padded to full length d).
// The empty subset yields the constant polynomial 1.
std::vector<SymbolicCoefficient> build_p_coeffs(int d, unsigned mask) {
    int n = __builtin_popcount(mask);
    std::vector<SymbolicCoefficient> coeffs(static_cast<size_t>(n) + 1);
    ExponentVector base(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) base[static_cast<size_t>(i)] = 1;

    if (n == 0) {
        map_add(coeffs[0], base, Rational(1));
        return coeffs;
    }
    // c_n = 2^n prod a / n!
    map_add(coeffs[static_cast<size_t>(n)], base,
            make_rational(pow_int(Int(2), static_cast<unsigned long>(n)),
                          factorial_int(static_cast<unsigned long>(n))));
    for (int k = 0; k < n; ++k) {
        int m = n - k;
        if (m % 2 != 0) continue;  // no composition into even parts: c_k = 0
        // scalar prefactor: 2^d prod a / ((2 pi i)^{d-k} k!) collapses to
        // (-1)^{m/2} 2^k / k! once each zeta contributes its pi^{i_j} factor
        Rational pref = make_rational(pow_int(Int(2), static_cast<unsigned long>(k)),
                                      factorial_int(static_cast<unsigned long>(k)));
        if ((m / 2) % 2 != 0) pref = -pref;

        // enumerate over the axes inside the mask only
        std::vector<size_t> sel;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) sel.push_back(static_cast<size_t>(i));

        // recursive walk over (subset, composition) pairs
        struct Walker {
            SymbolicCoefficient& out;
            ExponentVector& e;
            const std::vector<size_t>& sel;
            void go(size_t pos, int remaining, const Rational& factor) {
                if (remaining == 0) {
                    map_add(out, e, factor);
                    return;
                }
                for (size_t s = pos; s < sel.size(); ++s) {
                    for (int part = 2; part <= remaining; part += 2) {
                        Rational zf = zeta_even(static_cast<unsigned>(part)).rational_multiplier;
                        e[sel[s]] = 1 - part;
                        go(s + 1, remaining - part, factor * Rational(-2) * zf);
                        e[sel[s]] = 1;
                    }
                }
            }
        };
        ExponentVector e = base;
        Walker w{coeffs[static_cast<size_t>(k)], e, sel};
        w.go(0, m, pref);
    }
    return coeffs;
}

} // namespace

MainTermPolynomial MainTermPolynomial::build_p(const AxisLengths& axes) {
    int d = axes.dim();
    unsigned full = (1u << d) - 1u;
    return MainTermPolynomial(Kind::Cross, axes, build_p_coeffs(d, full));
}

MainTermPolynomial MainTermPolynomial::build_q(const AxisLengths& axes) {
    int d = axes.dim();
    std::vector<SymbolicCoefficient> coeffs(static_cast<size_t>(d) + 1);
    Rational weight = make_rational(Int(1), pow_int(Int(2), static_cast<unsigned long>(d)));
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        auto sub = build_p_coeffs(d, mask);
        for (size_t k = 0; k < sub.size(); ++k)
            for (const auto& [e, v] : sub[k]) map_add(coeffs[k], e, v * weight);
    }
    return MainTermPolynomial(Kind::SimplexAverage, axes, std::move(coeffs));
}

const SymbolicCoefficient& MainTermPolynomial::symbolic(int k) const {
    if (k < 0 || k > dim()) raise(ErrorKind::InvalidArgument, "coefficient index out of range");
    return coeffs_[static_cast<size_t>(k)];
}

namespace {

Scalar scalar_pow(const Scalar& base, int e) {
    if (e == 0) return Scalar::from_int(1);
    Scalar b = e > 0 ? base : base.inverse();
    int n = e > 0 ? e : -e;
    Scalar acc = b;
    for (int i = 1; i < n; ++i) acc = acc.mul(b);
    return acc;
}

Interval interval_pow(const Interval& base, int e, mpfr_prec_t bits) {
    Interval acc = Interval::from_long(1, bits);
    Interval b = e > 0 ? base : base.inverse();
    int n = e > 0 ? e : -e;
    for (int i = 0; i < n; ++i) acc = acc.mul(b);
    return acc;
}

} // namespace

Scalar MainTermPolynomial::coefficient_value(int k) const {
    const SymbolicCoefficient& sym = symbolic(k);
    Scalar acc = Scalar::from_int(0);
    for (const auto& [e, v] : sym) {
        Scalar term = Scalar::from_rational(v);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term.mul(scalar_pow(axes_.at(static_cast<int>(i)), e[i]));
        acc = acc.add(term);
    }
    return acc;
}

Interval MainTermPolynomial::coefficient_interval(int k, mpfr_prec_t bits) const {
    const SymbolicCoefficient& sym = symbolic(k);
    mpfr_prec_t wp = bits + 32;
    Interval acc = Interval::from_long(0, wp);
    for (const auto& [e, v] : sym) {
        Interval term = Interval::from_rational(v, wp);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term = term.mul(interval_pow(axes_.at(static_cast<int>(i)).interval(wp), e[i], wp));
        acc = acc.add(term);
    }
    return acc;
}

Interval MainTermPolynomial::evaluate(const Interval& t, mpfr_prec_t bits) const {
    mpfr_prec_t wp = bits + 32;
    Interval acc = coefficient_interval(dim(), wp);
    for (int k = dim() - 1; k >= 0; --k)
        acc = acc.mul(t).add(coefficient_interval(k, wp));
    return acc;
}

Interval MainTermPolynomial::evaluate(const Scalar& t, mpfr_prec_t bits) const {
    return evaluate(t.interval(bits + 32), bits);
}

Scalar MainTermPolynomial::evaluate_exact(const Scalar& t) const {
    Scalar acc = coefficient_value(dim());
    for (int k = dim() - 1; k >= 0; --k) acc = acc.mul(t).add(coefficient_value(k));
    return acc;
}

namespace {

ExponentVector ones(int d) { return ExponentVector(static_cast<size_t>(d), 1); }

void require_dim(int d, int least) {
    if (d < least) raise(ErrorKind::InvalidArgument, "closed form undefined in this dimension");
}

} // namespace

SymbolicCoefficient closed_form_c_dm2(int d) {
    require_dim(d, 2);
    // 2^{d-2} prod a / (3 (d-2)!) * sum_i a_i^{-2}
    Rational f = make_rational(pow_int(Int(2), static_cast<unsigned long>(d - 2)),
                               3 * factorial_int(static_cast<unsigned long>(d - 2)));
    SymbolicCoefficient out;
    for (int i = 0; i < d; ++i) {
        ExponentVector e = ones(d);
        e[static_cast<size_t>(i)] = -1;
        map_add(out, e, f);
    }
    return out;
}

SymbolicCoefficient closed_form_c_dm4(int d) {
    require_dim(d, 4);
    Rational f = make_rational(pow_int(Int(2), static_cast<unsigned long>(d - 4)),
                               9 * factorial_int(static_cast<unsigned long>(d - 4)));
    SymbolicCoefficient out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            ExponentVector e = ones(d);
            e[static_cast<size_t>(i)] = -1;
            e[static_cast<size_t>(j)] = -1;
            map_add(out, e, f);
        }
    for (int i = 0; i < d; ++i) {
        ExponentVector e = ones(d);
        e[static_cast<size_t>(i)] = -3;
        map_add(out, e, -f / 5);
    }
    return out;
}

SymbolicCoefficient closed_form_e_dm1(int d) {
    require_dim(d, 1);
    Rational f = make_rational(Int(1), 2 * factorial_int(static_cast<unsigned long>(d - 1)));
    SymbolicCoefficient out;
    for (int i = 0; i < d; ++i) {
        ExponentVector e = ones(d);
        e[static_cast<size_t>(i)] = 0;
        map_add(out, e, f);
    }
    return out;
}

SymbolicCoefficient closed_form_e_dm2(int d) {
    require_dim(d, 2);
    Rational f = make_rational(Int(1), 4 * factorial_int(static_cast<unsigned long>(d - 2)));
    SymbolicCoefficient out;
    for (int i = 0; i < d; ++i) {
        ExponentVector e = ones(d);
        e[static_cast<size_t>(i)] = -1;
        map_add(out, e, f / 3);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            ExponentVector e = ones(d);
            e[static_cast<size_t>(i)] = 0;
            e[static_cast<size_t>(j)] = 0;
            map_add(out, e, f);
        }
    return out;
}

SymbolicCoefficient closed_form_e_dm3(int d) {
    require_dim(d, 3);
    Rational f = make_rational(Int(1), 8 * factorial_int(static_cast<unsigned long>(d - 3)));
    SymbolicCoefficient out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            // (1/3)(a_i^{-1} a_j^{-2} + a_i^{-2} a_j^{-1}) against the prod-a prefactor
            ExponentVector e1 = ones(d);
            e1[static_cast<size_t>(i)] = 0;
            e1[static_cast<size_t>(j)] = -1;
            map_add(out, e1, f / 3);
            ExponentVector e2 = ones(d);
            e2[static_cast<size_t>(i)] = -1;
            e2[static_cast<size_t>(j)] = 0;
            map_add(out, e2, f / 3);
        }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                ExponentVector e = ones(d);
                e[static_cast<size_t>(i)] = 0;
                e[static_cast<size_t>(j)] = 0;
                e[static_cast<size_t>(k)] = 0;
                map_add(out, e, f);
            }
    return out;
}

} // namespace latpoly
