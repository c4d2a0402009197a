// latpoly command-line front end. Talks to the shared library strictly
// through the C interface; all exact arithmetic stays behind that wall.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <latpoly.h>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCriterionFailure = 1;
constexpr int kExitConfigError = 2;

[[noreturn]] void die(latpoly_status s) {
    std::fprintf(stderr, "error (%s): %s\n", latpoly_status_name(s), latpoly_last_error());
    std::exit(kExitConfigError);
}

// unwraps a status, exiting with the configuration-error code on failure
void check(latpoly_status s) {
    if (s != LATPOLY_OK) die(s);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    latpoly_string_free(s);
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot write %s\n", output_path.c_str());
        std::exit(kExitConfigError);
    }
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
        std::exit(kExitConfigError);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct PolytopeGuard {
    latpoly_polytope* h = nullptr;
    ~PolytopeGuard() { latpoly_polytope_free(h); }
};

struct ScalarGuard {
    latpoly_scalar* h = nullptr;
    ~ScalarGuard() { latpoly_scalar_free(h); }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-point counts, main-term polynomials, and the "
                 "verification campaigns around them"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(latpoly_version()));

    std::string output; // shared by all subcommands: empty = stdout
    app.add_option("-o,--output", output, "write the result to a file instead of stdout")
        ->capture_default_str();
    // let -o/--output appear after the subcommand name too
    app.fallthrough();

    // count
    std::string polytope_spec, t_text;
    bool brute = false;
    CLI::App* count = app.add_subcommand("count", "count lattice points in a dilated polytope");
    count->add_option("--polytope", polytope_spec, "e.g. \"cross d=2 a=[1, sqrt(2)]\"")
        ->required();
    count->add_option("--t", t_text, "dilation, exact scalar syntax")->required();
    count->add_flag("--brute-force", brute, "use the naive box enumeration");

    // poly
    long bits = 0;
    CLI::App* poly = app.add_subcommand("poly", "main-term polynomial coefficients");
    poly->add_option("--polytope", polytope_spec, "cross => p(t), simplex => q(t)")->required();
    poly->add_option("--precision-bits", bits, "interval precision for decimal values");

    // fourier
    std::string vertices, y_text, method = "residues";
    double tolerance = 0.0;
    CLI::App* fourier = app.add_subcommand("fourier", "simplex characteristic-function transform");
    fourier->add_option("--vertices", vertices, "[[x11, x12], ...], d+1 rows of d scalars");
    fourier->add_option("--y", y_text, "frequency vector [y1, ..., yd]")->required();
    fourier->add_option("--t", t_text, "dilation")->required();
    fourier->add_option("--method", method, "standard | contour | residues | oracle")
        ->capture_default_str();
    fourier->add_option("--tolerance", tolerance, "quadrature tolerance (0 = default)");
    fourier->add_option("--precision-bits", bits, "enclosure precision (0 = default)");

    // cesaro
    std::string axes, n_list;
    CLI::App* cesaro = app.add_subcommand("cesaro", "Fejer-weighted Cesaro means vs the count");
    cesaro->add_option("--axes", axes, "[a1, ..., ad]")->required();
    cesaro->add_option("--t", t_text, "dilation")->required();
    cesaro->add_option("--N", n_list, "comma-separated Fejer orders, e.g. 16,64,256")
        ->required();

    // dioph
    std::string alphas, checkpoints;
    long m_max = 0;
    CLI::App* dioph = app.add_subcommand("dioph", "Diophantine product sums S(M) and minima");
    dioph->add_option("--alphas", alphas, "[sqrt(2)] or [sqrt(2), sqrt(3)]")->required();
    dioph->add_option("--m-max", m_max, "largest m in the sums")->required();
    dioph->add_option("--checkpoints", checkpoints,
                      "comma-separated ascending M values (default: doubling ladder)");

    // ehrhart
    CLI::App* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of an integer simplex");
    ehrhart->add_option("--axes", axes, "[a1, ..., ad], positive integers")->required();

    // scan
    std::string config_path;
    CLI::App* scan = app.add_subcommand("scan", "discrepancy sweep from a config file");
    scan->add_option("config", config_path, "key-value config file")->required();

    // report
    std::string campaign, out_dir;
    bool list_campaigns = false;
    CLI::App* report = app.add_subcommand("report", "run an acceptance campaign");
    report->add_option("campaign", campaign, "campaign name (see --list)");
    report->add_option("--dir", out_dir, "artifact directory (default reports/<campaign>)");
    report->add_flag("--list", list_campaigns, "list campaign names and exit");

    CLI11_PARSE(app, argc, argv);

    if (count->parsed()) {
        PolytopeGuard p;
        ScalarGuard t;
        check(latpoly_polytope_parse(polytope_spec.c_str(), &p.h));
        check(latpoly_scalar_parse(t_text.c_str(), &t.h));
        char* out = nullptr;
        check(latpoly_count_json(p.h, t.h, brute ? 1 : 0, &out));
        emit(take(out) + "\n", output);
    } else if (poly->parsed()) {
        PolytopeGuard p;
        check(latpoly_polytope_parse(polytope_spec.c_str(), &p.h));
        char* out = nullptr;
        check(latpoly_mainterm_json(p.h, bits, &out));
        emit(take(out) + "\n", output);
    } else if (fourier->parsed()) {
        char* out = nullptr;
        check(latpoly_fourier_json(vertices.empty() ? nullptr : vertices.c_str(),
                                   y_text.c_str(), t_text.c_str(), method.c_str(), tolerance,
                                   bits, &out));
        emit(take(out) + "\n", output);
    } else if (cesaro->parsed()) {
        char* out = nullptr;
        check(latpoly_cesaro_csv(axes.c_str(), t_text.c_str(), n_list.c_str(), &out));
        emit(take(out), output);
    } else if (dioph->parsed()) {
        char* csv = nullptr;
        char* fit = nullptr;
        check(latpoly_dioph_csv(alphas.c_str(), m_max, checkpoints.c_str(), &csv, &fit));
        emit(take(csv) + "# fit: " + take(fit) + "\n", output);
    } else if (ehrhart->parsed()) {
        char* out = nullptr;
        check(latpoly_ehrhart_json(axes.c_str(), &out));
        emit(take(out) + "\n", output);
    } else if (scan->parsed()) {
        char* csv = nullptr;
        char* fit = nullptr;
        check(latpoly_scan_csv(read_file(config_path).c_str(), &csv, &fit));
        emit(take(csv) + "# fit: " + take(fit) + "\n", output);
    } else if (report->parsed()) {
        if (list_campaigns) {
            char* names = nullptr;
            check(latpoly_campaign_list(&names));
            emit(take(names), output);
            return kExitPass;
        }
        if (campaign.empty()) {
            std::fprintf(stderr, "error: report needs a campaign name (or --list)\n");
            return kExitConfigError;
        }
        if (out_dir.empty()) out_dir = "reports/" + campaign;
        int passed = 0;
        char* summary = nullptr;
        check(latpoly_report_campaign(campaign.c_str(), out_dir.c_str(), &passed, &summary));
        std::string text = take(summary);
        std::fputs(text.c_str(), stdout);
        std::fprintf(stdout, "artifacts: %s\n", out_dir.c_str());
        return passed ? kExitPass : kExitCriterionFailure;
    }
    return kExitPass;
}
