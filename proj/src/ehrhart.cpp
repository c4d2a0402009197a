#include "ehrhart.hpp"

#include <cstdlib>
#include <numeric>

#include "counting.hpp"
#include "errors.hpp"

namespace latpoly {

namespace {

void check_coprime(long a, long b) {
    if (b < 1) raise(ErrorKind::InvalidArgument, "dedekind_sum: b must be positive");
    if (std::gcd(std::labs(a), b) != 1) raise(ErrorKind::NotCoprime, "dedekind_sum: gcd(a,b) != 1");
}

// normalized residue in [0, b)
long mod_pos(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

Rational reciprocal_rec(long a, long b) { // 0 <= a < b, gcd(a,b) = 1
    if (b == 1) return Rational(0);
    // s(a,b) + s(b,a) = -1/4 + (a^2 + b^2 + 1)/(12ab)
    Rational swap = make_rational(Int(a) * a + Int(b) * b + 1, Int(12) * a * b);
    return swap - make_rational(1, 4) - reciprocal_rec(b % a, a);
}

std::vector<long> integer_axes(const AxisLengths& axes) {
    std::vector<long> out;
    for (const Scalar& s : axes.values()) {
        if (!s.is_rational() || s.rational().get_den() != 1 || s.rational() <= 0)
            raise(ErrorKind::InvalidArgument, "axes must be positive integers");
        if (!s.rational().get_num().fits_slong_p())
            raise(ErrorKind::InvalidArgument, "axis does not fit a machine word");
        out.push_back(s.rational().get_num().get_si());
    }
    return out;
}

} // namespace

Rational dedekind_sum_direct(long a, long b) {
    check_coprime(a, b);
    long a0 = mod_pos(a, b);
    Int acc(0); // sum of (2k - b)(2r - b) over common denominator 4b^2
    for (long k = 1; k < b; ++k) {
        long r = (a0 * k) % b;
        acc += Int(2 * k - b) * Int(2 * r - b);
    }
    return make_rational(acc, Int(4) * b * b);
}

Rational dedekind_sum_reciprocal(long a, long b) {
    check_coprime(a, b);
    return reciprocal_rec(mod_pos(a, b), b);
}

DedekindSum dedekind_sum(long a, long b) {
    Rational v = b <= 10000 ? dedekind_sum_direct(a, b) : dedekind_sum_reciprocal(a, b);
    return {a, b, v};
}

Rational EhrhartPolynomial::evaluate(const Rational& t) const {
    Rational v(0);
    for (size_t k = coefficients.size(); k-- > 0;) v = v * t + coefficients[k];
    return v;
}

EhrhartPolynomial ehrhart_by_interpolation(const AxisLengths& axes) {
    std::vector<long> a = integer_axes(axes);
    int d = axes.dim();
    CornerSimplex simplex(axes);

    // counts at t = 0..d+2; t = 0 contributes the origin alone
    std::vector<Rational> vals;
    vals.emplace_back(1);
    for (int t = 1; t <= d + 2; ++t)
        vals.emplace_back(count_simplex(simplex, Scalar::from_int(t)).count);

    // Newton divided differences on the nodes 0..d+1
    std::vector<Rational> dd(vals.begin(), vals.begin() + d + 2);
    for (int lv = 1; lv <= d + 1; ++lv)
        for (int i = d + 1; i >= lv; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) / Rational(lv);
    if (dd[static_cast<size_t>(d + 1)] != 0)
        raise(ErrorKind::InterpolationInconsistent,
              "counts at 0..d+1 do not lie on a degree-d polynomial");

    EhrhartPolynomial poly;
    poly.d = d;
    poly.coefficients.assign(static_cast<size_t>(d) + 1, Rational(0));
    std::vector<Rational> basis{Rational(1)}; // prod_{j<k} (t - j), expanded
    for (int k = 0; k <= d; ++k) {
        for (size_t j = 0; j < basis.size(); ++j) poly.coefficients[j] += dd[static_cast<size_t>(k)] * basis[j];
        // basis *= (t - k)
        basis.push_back(Rational(0));
        for (size_t j = basis.size() - 1; j > 0; --j)
            basis[j] = basis[j - 1] - Rational(k) * basis[j];
        basis[0] = -Rational(k) * basis[0];
    }

    if (poly.evaluate(Rational(d + 2)) != vals[static_cast<size_t>(d + 2)])
        raise(ErrorKind::InterpolationInconsistent, "consistency count at t = d+2 failed");
    return poly;
}

Rational coefficient_td_minus_2_formula(const AxisLengths& axes) {
    std::vector<long> a = integer_axes(axes);
    int d = axes.dim();
    if (d < 2) raise(ErrorKind::InvalidArgument, "coefficient of t^{d-2} needs d >= 2");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (std::gcd(a[i], a[j]) != 1)
                raise(ErrorKind::NotPairwiseCoprime, "axes must be pairwise coprime");

    Int prod(1);
    for (long ai : a) prod *= ai;

    Rational inv_sq(0), inv_pair(0);
    for (size_t i = 0; i < a.size(); ++i) {
        inv_sq += make_rational(Int(1), Int(a[i]) * a[i]);
        for (size_t j = i + 1; j < a.size(); ++j)
            inv_pair += make_rational(Int(1), Int(a[i]) * a[j]);
    }
    Int fact = factorial_int(static_cast<unsigned long>(d - 2));
    Rational surface = make_rational(prod, Int(4) * fact) *
                       (make_rational(1, 3) * inv_sq + inv_pair);

    Rational correction = make_rational(d, 4) + make_rational(Int(1), Int(12) * prod);
    for (size_t i = 0; i < a.size(); ++i) {
        Int red = (prod / a[i]) % a[i];
        correction -= dedekind_sum(red.get_si(), a[i]).value;
    }
    return surface + correction * make_rational(Int(1), fact);
}

} // namespace latpoly
