#include "diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace latpoly {

Scalar dist_nearest_integer(const Scalar& x) { return x.dist_to_nearest_integer(); }

namespace {

void check_alphas(const std::vector<Scalar>& alphas) {
    if (alphas.empty()) raise(ErrorKind::InvalidArgument, "need at least one alpha");
    for (const Scalar& a : alphas)
        if (a.is_rational())
            raise(ErrorKind::RationalAlpha, "alpha is rational: " + a.rational().get_str());
}

// Per-m product of exact distances, rounded once at the end. The per-axis
// distance is recomputed from the exact m*alpha, so nothing accumulates over m;
// tiny distances get a second evaluation at higher precision because the
// interval width contract is absolute, not relative.
double product_at(const std::vector<Scalar>& alphas, long m) {
    double prod = 1.0;
    for (const Scalar& a : alphas) {
        Scalar dist = a.mul_rational(Rational(m)).dist_to_nearest_integer();
        double dv = dist.approx();
        if (dv < 1e-6) dv = dist.interval(128).mid_d();
        prod *= dv;
    }
    return prod;
}

} // namespace

ProductSumTable product_sum_table(const std::vector<Scalar>& alphas, long m_max,
                                  const std::vector<long>& checkpoints) {
    check_alphas(alphas);
    if (m_max < 1) raise(ErrorKind::InvalidArgument, "m_max must be positive");
    if (checkpoints.empty()) raise(ErrorKind::InvalidArgument, "no checkpoints");
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > m_max)
            raise(ErrorKind::InvalidArgument, "checkpoint outside [1, m_max]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            raise(ErrorKind::InvalidArgument, "checkpoints must be strictly increasing");
    }

    ProductSumTable table;
    table.alphas = alphas;
    double sum = 0.0, comp = 0.0; // Kahan
    double min_prod = 1.0;
    size_t next = 0;
    for (long m = 1; m <= checkpoints.back(); ++m) {
        double prod = product_at(alphas, m);
        min_prod = std::min(min_prod, prod);
        double term = 1.0 / prod - comp;
        double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
        if (m == checkpoints[next]) {
            table.rows.push_back({m, sum, min_prod});
            ++next;
        }
    }

    size_t half = table.rows.size() / 2;
    if (table.rows.size() - half >= 3) {
        std::vector<double> xs, ys;
        for (size_t i = half; i < table.rows.size(); ++i) {
            xs.push_back(std::log(static_cast<double>(table.rows[i].M)));
            ys.push_back(std::log(table.rows[i].sum));
        }
        table.fitted_gamma = ols_fit(xs, ys);
    }
    return table;
}

SchmidtReport schmidt_check(const std::vector<Scalar>& alphas, long m_max) {
    check_alphas(alphas);
    if (m_max < 8) raise(ErrorKind::InvalidArgument, "m_max too small for a doubling grid");

    SchmidtReport rep;
    rep.epsilons = {0.05, 0.1, 0.2};
    for (long c = 2; c < m_max; c *= 2) rep.checkpoints.push_back(c);
    rep.checkpoints.push_back(m_max);
    rep.running_min.assign(rep.epsilons.size(), {});

    std::vector<double> cur(rep.epsilons.size(), std::numeric_limits<double>::infinity());
    size_t next = 0;
    for (long m = 1; m <= m_max; ++m) {
        double prod = product_at(alphas, m);
        double md = static_cast<double>(m);
        for (size_t e = 0; e < rep.epsilons.size(); ++e)
            cur[e] = std::min(cur[e], std::pow(md, 1.0 + rep.epsilons[e]) * prod);
        if (m == rep.checkpoints[next]) {
            for (size_t e = 0; e < rep.epsilons.size(); ++e) rep.running_min[e].push_back(cur[e]);
            ++next;
        }
    }
    rep.flagged = false;
    for (size_t e = 0; e < rep.epsilons.size(); ++e) {
        rep.final_min.push_back(rep.running_min[e].back());
        if (rep.final_min[e] < rep.running_min[e][1] / 8.0) rep.flagged = true;
    }
    return rep;
}

PigeonholeReport pigeonhole_bound_demo(const std::vector<Scalar>& alphas, long M) {
    check_alphas(alphas);
    if (M < 1) raise(ErrorKind::InvalidArgument, "M must be positive");
    size_t d = alphas.size();

    // exact L_M and the exact per-m products (M is demo-sized)
    std::vector<Scalar> prods;
    prods.reserve(static_cast<size_t>(M));
    for (long m = 1; m <= M; ++m) {
        Scalar p = alphas[0].mul_rational(Rational(m)).dist_to_nearest_integer();
        for (size_t k = 1; k < d; ++k)
            p = p.mul(alphas[k].mul_rational(Rational(m)).dist_to_nearest_integer());
        if (p.is_zero()) raise(ErrorKind::RationalAlpha, "a distance vanished; alpha is rational");
        prods.push_back(p);
    }
    Scalar L = prods[0];
    for (const Scalar& p : prods)
        if (p.compare(L) < 0) L = p;

    // smallest n with n^d L > 1: side 1/n then sits in (L^{1/d}/2, L^{1/d})
    double guess = std::pow(L.approx(), -1.0 / static_cast<double>(d));
    long n = std::max(2L, static_cast<long>(guess) - 2);
    auto scaled_above_one = [&](long nc) {
        Rational f(1);
        for (size_t k = 0; k < d; ++k) f *= Rational(nc);
        return L.mul_rational(f).compare_rational(Rational(1)) > 0;
    };
    while (!scaled_above_one(n)) ++n;

    PigeonholeReport rep;
    rep.M = M;
    rep.cells_per_axis = n;
    rep.side = make_rational(1, n);
    // membership in the open interval, rechecked exactly: side^d < L < (2 side)^d
    Rational sd(1), sd2(1);
    for (size_t k = 0; k < d; ++k) {
        sd *= rep.side;
        sd2 *= rep.side * 2;
    }
    if (!(L.compare_rational(sd) > 0 && L.compare_rational(sd2) < 0))
        raise(ErrorKind::Internal, "cube side fell outside the required interval");

    Scalar L2 = L.mul_rational(Rational(2));
    std::map<std::vector<long>, long> cells;
    rep.class_size = 0;
    for (long m = 1; m <= M; ++m) {
        if (prods[static_cast<size_t>(m - 1)].compare(L2) >= 0) continue; // not in A_2
        ++rep.class_size;
        std::vector<long> cell(d);
        for (size_t k = 0; k < d; ++k) {
            // centered fractional part, then the cell index, all exact
            Scalar u = alphas[k].mul_rational(Rational(m)).add_rational(make_rational(1, 2));
            Scalar w = u.add_rational(-Rational(u.floor()));
            Int idx = w.mul_rational(Rational(n)).floor();
            cell[k] = static_cast<long>(idx.get_si());
        }
        ++cells[cell];
    }
    rep.occupied_cells = static_cast<long>(cells.size());
    rep.max_occupancy = 0;
    for (const auto& [c, cnt] : cells) rep.max_occupancy = std::max(rep.max_occupancy, cnt);
    rep.histogram.assign(static_cast<size_t>(std::max(rep.max_occupancy, 0L)), 0);
    for (const auto& [c, cnt] : cells) ++rep.histogram[static_cast<size_t>(cnt - 1)];
    rep.injective = rep.max_occupancy <= 1;
    return rep;
}

} // namespace latpoly
