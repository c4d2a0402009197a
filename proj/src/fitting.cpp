#include "fitting.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace latpoly {

ExponentFit ols_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) raise(ErrorKind::InvalidArgument, "ols_fit: length mismatch");
    std::size_t n = xs.size();
    if (n < 3) raise(ErrorKind::InsufficientData, "ols_fit: need at least 3 points");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) raise(ErrorKind::InvalidArgument, "ols_fit: degenerate abscissa");
    ExponentFit f;
    f.n = n;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ys[i] - (f.intercept + f.slope * xs[i]);
        rss += r * r;
    }
    double se = std::sqrt(rss / (static_cast<double>(n - 2) * sxx));
    f.ci_low = f.slope - 2.0 * se;
    f.ci_high = f.slope + 2.0 * se;
    return f;
}

std::vector<EnvelopePoint> dyadic_envelope(const std::vector<double>& ts,
                                           const std::vector<double>& deltas) {
    if (ts.size() != deltas.size())
        raise(ErrorKind::InvalidArgument, "dyadic_envelope: length mismatch");
    if (ts.empty()) raise(ErrorKind::InsufficientData, "dyadic_envelope: no records");
    double tmin = ts[0];
    for (double t : ts) {
        if (!(t > 0)) raise(ErrorKind::InvalidArgument, "dyadic_envelope: t must be positive");
        tmin = std::min(tmin, t);
    }
    std::map<long, double> env;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        long k = static_cast<long>(std::floor(std::log2(ts[i] / tmin)));
        double m = std::fabs(deltas[i]);
        auto it = env.find(k);
        if (it == env.end())
            env.emplace(k, m);
        else
            it->second = std::max(it->second, m);
    }
    std::vector<EnvelopePoint> out;
    const double l2 = std::log(2.0);
    for (const auto& [k, m] : env) {
        if (m <= 0.0) continue;
        out.push_back({std::log(tmin) + (static_cast<double>(k) + 0.5) * l2, std::log(m)});
    }
    return out;
}

ExponentFit fit_exponent_loglog(const std::vector<double>& ts, const std::vector<double>& deltas,
                                double window) {
    if (!(window > 0.0) || window > 1.0)
        raise(ErrorKind::InvalidArgument, "fit_exponent: window must be in (0, 1]");
    std::size_t nonzero = 0;
    for (double d : deltas)
        if (d != 0.0) ++nonzero;
    if (nonzero < 20)
        raise(ErrorKind::InsufficientData, "fit_exponent: need >= 20 records with |delta| > 0");
    std::vector<EnvelopePoint> env = dyadic_envelope(ts, deltas);
    std::size_t keep = static_cast<std::size_t>(std::ceil(window * static_cast<double>(env.size())));
    keep = std::min(keep, env.size());
    if (keep < 3) raise(ErrorKind::InsufficientData, "fit_exponent: too few envelope blocks");
    std::vector<double> xs, ys;
    for (std::size_t i = env.size() - keep; i < env.size(); ++i) {
        xs.push_back(env[i].log_t);
        ys.push_back(env[i].log_env);
    }
    return ols_fit(xs, ys);
}

double windowed_mean(const std::vector<double>& ts, const std::vector<double>& deltas, double T) {
    if (ts.size() != deltas.size())
        raise(ErrorKind::InvalidArgument, "windowed_mean: length mismatch");
    if (!(T > 0)) raise(ErrorKind::InvalidArgument, "windowed_mean: window start must be positive");
    double acc = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] >= T && ts[i] <= 2.0 * T) {
            acc += deltas[i];
            ++n;
        }
    }
    if (n == 0) raise(ErrorKind::InsufficientData, "windowed_mean: empty window");
    return acc / static_cast<double>(n);
}

} // namespace latpoly
