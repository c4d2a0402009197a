#include "latpoly.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "counting.hpp"
#include "diophantine.hpp"
#include "ehrhart.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "mainterm.hpp"
#include "poisson.hpp"
#include "sweep.hpp"
#include "textio.hpp"

using json = nlohmann::ordered_json;
using namespace latpoly;

struct latpoly_scalar {
    Scalar v;
};

struct latpoly_polytope {
    PolytopeSpec spec;
};

namespace {

thread_local std::string g_last_error;

latpoly_status map_kind(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return LATPOLY_E_PARSE;
        case ErrorKind::InvalidArgument: return LATPOLY_E_INVALID_ARGUMENT;
        case ErrorKind::PrecisionExhausted: return LATPOLY_E_PRECISION_EXHAUSTED;
        case ErrorKind::PoleCollision: return LATPOLY_E_POLE_COLLISION;
        case ErrorKind::NotConverged: return LATPOLY_E_NOT_CONVERGED;
        case ErrorKind::DenominatorZero: return LATPOLY_E_DENOMINATOR_ZERO;
        case ErrorKind::RationalAlpha: return LATPOLY_E_RATIONAL_ALPHA;
        case ErrorKind::NotCoprime: return LATPOLY_E_NOT_COPRIME;
        case ErrorKind::NotPairwiseCoprime: return LATPOLY_E_NOT_PAIRWISE_COPRIME;
        case ErrorKind::DegenerateSimplex: return LATPOLY_E_DEGENERATE_SIMPLEX;
        case ErrorKind::InsufficientData: return LATPOLY_E_INSUFFICIENT_DATA;
        case ErrorKind::InterpolationInconsistent: return LATPOLY_E_INTERPOLATION_INCONSISTENT;
        case ErrorKind::Internal: break;
    }
    return LATPOLY_E_INTERNAL;
}

// heap copy released by latpoly_string_free
void assign_out(char** out, const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
}

template <typename F>
latpoly_status wrap(F&& f) {
    try {
        f();
        return LATPOLY_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_kind(e.kind);
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return LATPOLY_E_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LATPOLY_E_INTERNAL;
    }
}

latpoly_status require(bool ok, const char* what) {
    if (!ok) {
        g_last_error = what;
        return LATPOLY_E_INVALID_ARGUMENT;
    }
    return LATPOLY_OK;
}

// Splits "[e1, e2, ...]" at top-level commas; nested brackets and parentheses
// (sqrt(...), root(...; ...), inner vertex lists) are kept intact.
std::vector<std::string> split_bracket_list(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\n");
    size_t e = text.find_last_not_of(" \t\n");
    if (b == std::string::npos || text[b] != '[' || text[e] != ']')
        raise(ErrorKind::Parse, "expected a [...] list, got \"" + text + "\"");
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (size_t i = b + 1; i <= e; ++i) {
        char c = text[i];
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (i == e || (c == ',' && depth == 0)) {
            if (cur.find_first_not_of(" \t\n") != std::string::npos) parts.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    return parts;
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
    std::vector<Scalar> xs;
    for (const std::string& item : split_bracket_list(text)) xs.push_back(parse_scalar(item));
    return xs;
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
    std::vector<long> xs;
    std::string cur;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            size_t used = 0;
            std::string item = cur;
            cur.clear();
            size_t fb = item.find_first_not_of(" \t");
            if (fb == std::string::npos) {
                if (i == text.size() && xs.empty()) break; // wholly empty list
                raise(ErrorKind::Parse, std::string("empty entry in ") + what);
            }
            item = item.substr(fb, item.find_last_not_of(" \t") - fb + 1);
            long v = 0;
            try {
                v = std::stol(item, &used);
            } catch (const std::exception&) {
                used = std::string::npos;
            }
            if (used != item.size())
                raise(ErrorKind::Parse,
                      std::string(what) + " must be comma-separated integers, got \"" + item +
                          "\"");
            xs.push_back(v);
        } else {
            cur += text[i];
        }
    }
    return xs;
}

CountResult run_count(const PolytopeSpec& spec, const Scalar& t, bool brute) {
    if (spec.kind == PolytopeSpec::Kind::Cross) {
        CrossPolytope p(spec.axes);
        return brute ? count_cross_brute(p, t) : count_cross(p, t);
    }
    CornerSimplex p(spec.axes);
    return brute ? count_simplex_brute(p, t) : count_simplex(p, t);
}

json fit_as_json(const ExponentFit& fit) {
    json j;
    j["slope"] = fit.slope;
    j["ci_low"] = fit.ci_low;
    j["ci_high"] = fit.ci_high;
    j["n"] = fit.n;
    return j;
}

} // namespace

extern "C" {

const char* latpoly_version(void) { return "1.0.0"; }

const char* latpoly_status_name(latpoly_status s) {
    switch (s) {
        case LATPOLY_OK: return "ok";
        case LATPOLY_E_PARSE: return "parse";
        case LATPOLY_E_INVALID_ARGUMENT: return "invalid-argument";
        case LATPOLY_E_PRECISION_EXHAUSTED: return "precision-exhausted";
        case LATPOLY_E_POLE_COLLISION: return "pole-collision";
        case LATPOLY_E_NOT_CONVERGED: return "not-converged";
        case LATPOLY_E_DENOMINATOR_ZERO: return "denominator-zero";
        case LATPOLY_E_RATIONAL_ALPHA: return "rational-alpha";
        case LATPOLY_E_NOT_COPRIME: return "not-coprime";
        case LATPOLY_E_NOT_PAIRWISE_COPRIME: return "not-pairwise-coprime";
        case LATPOLY_E_DEGENERATE_SIMPLEX: return "degenerate-simplex";
        case LATPOLY_E_INSUFFICIENT_DATA: return "insufficient-data";
        case LATPOLY_E_INTERPOLATION_INCONSISTENT: return "interpolation-inconsistent";
        case LATPOLY_E_INTERNAL: return "internal";
        case LATPOLY_E_NOMEM: return "out-of-memory";
    }
    return "unknown";
}

const char* latpoly_last_error(void) { return g_last_error.c_str(); }

void latpoly_string_free(char* s) { std::free(s); }

latpoly_status latpoly_scalar_parse(const char* text, latpoly_scalar** out) {
    if (latpoly_status bad = require(text && out, "text and out must be non-null")) return bad;
    return wrap([&] { *out = new latpoly_scalar{parse_scalar(text)}; });
}

latpoly_status latpoly_scalar_format(const latpoly_scalar* s, char** out) {
    if (latpoly_status bad = require(s && out, "scalar and out must be non-null")) return bad;
    return wrap([&] { assign_out(out, format_scalar(s->v)); });
}

latpoly_status latpoly_scalar_approx(const latpoly_scalar* s, double* out) {
    if (latpoly_status bad = require(s && out, "scalar and out must be non-null")) return bad;
    return wrap([&] { *out = s->v.approx(); });
}

void latpoly_scalar_free(latpoly_scalar* s) { delete s; }

latpoly_status latpoly_polytope_parse(const char* spec, latpoly_polytope** out) {
    if (latpoly_status bad = require(spec && out, "spec and out must be non-null")) return bad;
    return wrap([&] { *out = new latpoly_polytope{parse_polytope_spec(spec)}; });
}

latpoly_status latpoly_polytope_format(const latpoly_polytope* p, char** out) {
    if (latpoly_status bad = require(p && out, "polytope and out must be non-null")) return bad;
    return wrap([&] { assign_out(out, format_polytope_spec(p->spec)); });
}

latpoly_status latpoly_polytope_dim(const latpoly_polytope* p, int* out) {
    if (latpoly_status bad = require(p && out, "polytope and out must be non-null")) return bad;
    *out = p->spec.axes.dim();
    return LATPOLY_OK;
}

void latpoly_polytope_free(latpoly_polytope* p) { delete p; }

latpoly_status latpoly_count_json(const latpoly_polytope* p, const latpoly_scalar* t,
                                  int brute_force, char** out) {
    if (latpoly_status bad = require(p && t && out, "polytope, t, and out must be non-null"))
        return bad;
    return wrap([&] {
        CountResult cr = run_count(p->spec, t->v, brute_force != 0);
        json j;
        j["count"] = cr.count.get_str();
        j["boundary_hits"] = cr.boundary_hits.get_str();
        j["certified"] = cr.certified;
        assign_out(out, j.dump());
    });
}

latpoly_status latpoly_mainterm_json(const latpoly_polytope* p, long precision_bits,
                                     char** out) {
    if (latpoly_status bad = require(p && out, "polytope and out must be non-null")) return bad;
    return wrap([&] {
        bool cross = p->spec.kind == PolytopeSpec::Kind::Cross;
        MainTermPolynomial mt = cross ? MainTermPolynomial::build_p(p->spec.axes)
                                      : MainTermPolynomial::build_q(p->spec.axes);
        long bits = resolve_precision_bits(precision_bits);
        json j;
        j["kind"] = cross ? "cross" : "simplex-average";
        j["dim"] = p->spec.axes.dim();
        j["coefficients"] = json::array();
        for (int k = 0; k <= p->spec.axes.dim(); ++k) {
            json c;
            c["k"] = k;
            c["symbolic"] = json::array();
            for (const auto& [expo, coeff] : mt.symbolic(k)) {
                json term;
                term["exponents"] = expo;
                term["coeff"] = coeff.get_str();
                c["symbolic"].push_back(term);
            }
            Interval v = mt.coefficient_interval(k, bits);
            c["decimal"] = v.mid_d();
            c["enclosure_width"] = v.wid_d();
            j["coefficients"].push_back(c);
        }
        assign_out(out, j.dump());
    });
}

latpoly_status latpoly_fourier_json(const char* vertices, const char* y, const char* t,
                                    const char* method, double tolerance, long precision_bits,
                                    char** out) {
    if (latpoly_status bad = require(y && t && method && out,
                                     "y, t, method, and out must be non-null"))
        return bad;
    return wrap([&] {
        std::vector<Scalar> yv = parse_scalar_list(y);
        Scalar tv = parse_scalar(t);
        std::string m = method;
        mpfr_prec_t bits = precision_bits > 0 ? static_cast<mpfr_prec_t>(precision_bits) : 0;
        FourierEvaluation res = [&] {
            if (m == "standard") return ft_standard_simplex(yv, tv, bits);
            if (!vertices)
                raise(ErrorKind::InvalidArgument, "vertices required for method " + m);
            std::vector<std::vector<Scalar>> rows;
            for (const std::string& row : split_bracket_list(vertices))
                rows.push_back(parse_scalar_list(row));
            GeneralSimplex s(rows);
            if (m == "contour")
                return ft_contour(s, yv, tv, 64, tolerance > 0 ? tolerance : 1e-10, Rational(1),
                                  bits);
            if (m == "residues") return ft_residues(s, yv, tv, bits);
            if (m == "oracle")
                return ft_direct_oracle(s, yv, tv, tolerance > 0 ? tolerance : 1e-9);
            raise(ErrorKind::InvalidArgument,
                  "method must be standard | contour | residues | oracle, got \"" + m + "\"");
        }();
        json j;
        j["re"] = res.value.re().mid_d();
        j["im"] = res.value.im().mid_d();
        j["method"] = ft_method_name(res.method);
        j["error_bound"] = res.error_bound;
        assign_out(out, j.dump());
    });
}

latpoly_status latpoly_cesaro_csv(const char* axes, const char* t, const char* n_list,
                                  char** out) {
    if (latpoly_status bad = require(axes && t && n_list && out,
                                     "axes, t, n_list, and out must be non-null"))
        return bad;
    return wrap([&] {
        AxisLengths ax(parse_scalar_list(axes));
        Scalar tv = parse_scalar(t);
        std::vector<long> ns = parse_long_list(n_list, "n_list");
        if (ns.empty()) raise(ErrorKind::InvalidArgument, "n_list must name at least one N");
        CrossPolytope P(ax);
        Int count = count_cross(P, tv).count;
        double cnt = mpz_get_d(count.get_mpz_t());
        std::string csv = "N,cesaro,count,error_series,gap\n";
        char buf[96];
        for (long N : ns) {
            double ces = cesaro_mean(P, tv, static_cast<int>(N));
            double err = error_series(ax, tv, static_cast<int>(N)).value;
            std::snprintf(buf, sizeof buf, "%ld,%.17g,%s,%.17g,%.17g\n", N, ces,
                          count.get_str().c_str(), err, std::fabs(ces - cnt));
            csv += buf;
        }
        assign_out(out, csv);
    });
}

latpoly_status latpoly_dioph_csv(const char* alphas, long m_max, const char* checkpoints,
                                 char** csv_out, char** fit_json_out) {
    if (latpoly_status bad = require(alphas && csv_out && fit_json_out,
                                     "alphas, csv_out, and fit_json_out must be non-null"))
        return bad;
    return wrap([&] {
        std::vector<Scalar> av = parse_scalar_list(alphas);
        std::vector<long> cps =
            checkpoints ? parse_long_list(checkpoints, "checkpoints") : std::vector<long>{};
        if (cps.empty()) {
            for (long c = 16; c < m_max; c *= 2) cps.push_back(c);
            if (cps.empty() || cps.back() != m_max) cps.push_back(m_max);
        }
        ProductSumTable table = product_sum_table(av, m_max, cps);
        std::string csv = "M,S,L\n";
        char buf[96];
        for (const ProductSumRow& r : table.rows) {
            std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g\n", r.M, r.sum, r.min_product);
            csv += buf;
        }
        assign_out(csv_out, csv);
        assign_out(fit_json_out,
                   table.fitted_gamma.n > 0 ? fit_as_json(table.fitted_gamma).dump() : "null");
    });
}

latpoly_status latpoly_ehrhart_json(const char* axes, char** out) {
    if (latpoly_status bad = require(axes && out, "axes and out must be non-null")) return bad;
    return wrap([&] {
        AxisLengths ax(parse_scalar_list(axes));
        EhrhartPolynomial poly = ehrhart_by_interpolation(ax);
        json j;
        j["coefficients"] = json::array();
        for (const Rational& c : poly.coefficients) j["coefficients"].push_back(c.get_str());
        if (ax.dim() >= 2) {
            try {
                Rational formula = coefficient_td_minus_2_formula(ax);
                j["formula_td_minus_2"] = formula.get_str();
                j["match"] = formula == poly.coefficients[static_cast<size_t>(ax.dim() - 2)];
            } catch (const Error& e) {
                if (e.kind != ErrorKind::NotPairwiseCoprime) throw;
                j["formula_td_minus_2"] = nullptr;
                j["match"] = nullptr;
            }
        } else {
            j["formula_td_minus_2"] = nullptr;
            j["match"] = nullptr;
        }
        assign_out(out, j.dump());
    });
}

latpoly_status latpoly_scan_csv(const char* config, char** csv_out, char** fit_json_out) {
    if (latpoly_status bad = require(config && csv_out && fit_json_out,
                                     "config, csv_out, and fit_json_out must be non-null"))
        return bad;
    return wrap([&] {
        SweepConfig cfg = parse_sweep_config(config);
        std::vector<DiscrepancyRecord> recs = scan_discrepancy(cfg);
        std::string csv = records_to_csv(recs);
        if (!cfg.output.empty()) {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f) raise(ErrorKind::InvalidArgument, "cannot write output " + cfg.output);
            f << csv;
        }
        std::string fit;
        try {
            fit = fit_as_json(fit_exponent(recs)).dump();
        } catch (const Error& e) {
            if (e.kind != ErrorKind::InsufficientData) throw;
            fit = "null";
        }
        assign_out(csv_out, csv);
        assign_out(fit_json_out, fit);
    });
}

latpoly_status latpoly_campaign_list(char** out) {
    if (latpoly_status bad = require(out != nullptr, "out must be non-null")) return bad;
    return wrap([&] {
        std::string text;
        for (const std::string& name : campaign_names()) text += name + "\n";
        assign_out(out, text);
    });
}

latpoly_status latpoly_report_campaign(const char* name, const char* out_dir, int* passed,
                                       char** summary_out) {
    if (latpoly_status bad = require(name && out_dir && passed && summary_out,
                                     "name, out_dir, passed, and summary_out must be non-null"))
        return bad;
    return wrap([&] {
        CampaignResult res = run_campaign(name);
        std::filesystem::create_directories(out_dir);
        for (const auto& [fname, content] : res.files) {
            std::filesystem::path path = std::filesystem::path(out_dir) / fname;
            std::ofstream f(path, std::ios::binary);
            if (!f) raise(ErrorKind::InvalidArgument, "cannot write " + path.string());
            f << content;
        }
        *passed = res.passed ? 1 : 0;
        assign_out(summary_out, res.summary);
    });
}

} // extern "C"
