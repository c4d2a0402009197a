#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>
#include <latpoly.h>

using json = nlohmann::json;

namespace {

// takes ownership of the C string
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    latpoly_string_free(s);
    return out;
}

struct ScalarHandle {
    latpoly_scalar* h = nullptr;
    explicit ScalarHandle(const char* text) { REQUIRE(latpoly_scalar_parse(text, &h) == LATPOLY_OK); }
    ~ScalarHandle() { latpoly_scalar_free(h); }
};

struct PolytopeHandle {
    latpoly_polytope* h = nullptr;
    explicit PolytopeHandle(const char* spec) {
        REQUIRE(latpoly_polytope_parse(spec, &h) == LATPOLY_OK);
    }
    ~PolytopeHandle() { latpoly_polytope_free(h); }
};

} // namespace

TEST_CASE("version and status names") {
    CHECK(std::strlen(latpoly_version()) > 0);
    CHECK(std::string(latpoly_status_name(LATPOLY_OK)) == "ok");
    CHECK(std::string(latpoly_status_name(LATPOLY_E_PARSE)) == "parse");
    CHECK(std::string(latpoly_status_name(LATPOLY_E_NOT_PAIRWISE_COPRIME)) ==
          "not-pairwise-coprime");
}

TEST_CASE("scalar handles: parse, format, approx, error reporting") {
    ScalarHandle s("3/2*sqrt(5)-1/2");
    std::string text;
    {
        char* out = nullptr;
        REQUIRE(latpoly_scalar_format(s.h, &out) == LATPOLY_OK);
        text = take(out);
    }
    ScalarHandle back(text.c_str());
    double a = 0, b = 0;
    REQUIRE(latpoly_scalar_approx(s.h, &a) == LATPOLY_OK);
    REQUIRE(latpoly_scalar_approx(back.h, &b) == LATPOLY_OK);
    CHECK(a == b);
    CHECK(a == doctest::Approx(1.5 * std::sqrt(5.0) - 0.5).epsilon(1e-14));

    latpoly_scalar* bad = nullptr;
    CHECK(latpoly_scalar_parse("sqrt(", &bad) == LATPOLY_E_PARSE);
    CHECK(std::strlen(latpoly_last_error()) > 0);
    CHECK(latpoly_scalar_parse(nullptr, &bad) == LATPOLY_E_INVALID_ARGUMENT);
    CHECK(latpoly_scalar_format(nullptr, nullptr) == LATPOLY_E_INVALID_ARGUMENT);
}

TEST_CASE("polytope handles round-trip") {
    PolytopeHandle p("cross d=2 a=[1, sqrt(2)]");
    int dim = 0;
    REQUIRE(latpoly_polytope_dim(p.h, &dim) == LATPOLY_OK);
    CHECK(dim == 2);
    char* out = nullptr;
    REQUIRE(latpoly_polytope_format(p.h, &out) == LATPOLY_OK);
    PolytopeHandle back(take(out).c_str());
    REQUIRE(latpoly_polytope_dim(back.h, &dim) == LATPOLY_OK);
    CHECK(dim == 2);

    latpoly_polytope* bad = nullptr;
    CHECK(latpoly_polytope_parse("ball d=2 a=[1, 1]", &bad) == LATPOLY_E_PARSE);
    CHECK(latpoly_polytope_parse("cross d=1 a=[-1]", &bad) == LATPOLY_E_INVALID_ARGUMENT);
}

TEST_CASE("count_json matches hand counts and the brute-force path") {
    PolytopeHandle p("cross d=1 a=[1]");
    ScalarHandle t("5/2");
    char* out = nullptr;
    REQUIRE(latpoly_count_json(p.h, t.h, 0, &out) == LATPOLY_OK);
    json fast = json::parse(take(out));
    CHECK(fast["count"] == "5");
    CHECK(fast["boundary_hits"] == "0");
    CHECK(fast["certified"] == true);

    REQUIRE(latpoly_count_json(p.h, t.h, 1, &out) == LATPOLY_OK);
    CHECK(json::parse(take(out))["count"] == "5");

    PolytopeHandle s("simplex d=2 a=[1, 1]");
    ScalarHandle one("1");
    REQUIRE(latpoly_count_json(s.h, one.h, 0, &out) == LATPOLY_OK);
    json sj = json::parse(take(out));
    CHECK(sj["count"] == "3");
    CHECK(sj["boundary_hits"] == "3"); // all of (0,0), (1,0), (0,1) lie on faces
}

TEST_CASE("mainterm_json: structure, parity zeros, leading volume") {
    PolytopeHandle p("cross d=2 a=[1, 1]");
    char* out = nullptr;
    REQUIRE(latpoly_mainterm_json(p.h, 0, &out) == LATPOLY_OK);
    json j = json::parse(take(out));
    CHECK(j["kind"] == "cross");
    CHECK(j["dim"] == 2);
    REQUIRE(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][1]["symbolic"].empty()); // d - k odd vanishes
    CHECK(!j["coefficients"][0]["symbolic"].empty());
    CHECK(j["coefficients"][2]["decimal"].get<double>() == doctest::Approx(2.0)); // volume
    CHECK(j["coefficients"][2]["enclosure_width"].get<double>() < 1e-20);
}

TEST_CASE("fourier_json: all four methods agree on the unit corner simplex") {
    const char* verts = "[[0, 0], [1, 0], [0, 1]]";
    const char* y = "[1, 2]";
    const char* t = "3/2";
    json got[4];
    const char* methods[] = {"standard", "contour", "residues", "oracle"};
    for (int i = 0; i < 4; ++i) {
        char* out = nullptr;
        REQUIRE(latpoly_fourier_json(verts, y, t, methods[i], 0.0, 0, &out) == LATPOLY_OK);
        got[i] = json::parse(take(out));
        CHECK(got[i]["method"].is_string());
        CHECK(got[i]["error_bound"].get<double>() >= 0.0);
    }
    for (int i = 1; i < 4; ++i) {
        double bound = 1e-8 + got[0]["error_bound"].get<double>() +
                       got[i]["error_bound"].get<double>();
        CHECK(std::fabs(got[i]["re"].get<double>() - got[0]["re"].get<double>()) <= bound);
        CHECK(std::fabs(got[i]["im"].get<double>() - got[0]["im"].get<double>()) <= bound);
    }

    char* out = nullptr;
    CHECK(latpoly_fourier_json(verts, y, t, "simpson", 0.0, 0, &out) ==
          LATPOLY_E_INVALID_ARGUMENT);
    CHECK(latpoly_fourier_json(nullptr, y, t, "residues", 0.0, 0, &out) ==
          LATPOLY_E_INVALID_ARGUMENT);
    CHECK(latpoly_fourier_json("[[0, 0], [1, 0], [2, 0]]", y, t, "residues", 0.0, 0, &out) !=
          LATPOLY_OK);
}

TEST_CASE("cesaro_csv rows carry the exact count and a shrinking gap") {
    char* out = nullptr;
    REQUIRE(latpoly_cesaro_csv("[1]", "5/2", "16,256", &out) == LATPOLY_OK);
    std::string csv = take(out);
    CHECK(csv.rfind("N,cesaro,count,error_series,gap\n", 0) == 0);
    // two rows, both with count 5; the N=256 gap must be far below one
    size_t r1 = csv.find("\n16,");
    size_t r2 = csv.find("\n256,");
    REQUIRE(r1 != std::string::npos);
    REQUIRE(r2 != std::string::npos);
    CHECK(csv.find(",5,", r1) != std::string::npos);
    double gap = std::strtod(csv.c_str() + csv.rfind(',') + 1, nullptr);
    CHECK(gap < 1e-4);

    CHECK(latpoly_cesaro_csv("[1]", "5/2", " ", &out) == LATPOLY_E_INVALID_ARGUMENT);
    CHECK(latpoly_cesaro_csv("[1]", "5/2", "16,x", &out) == LATPOLY_E_PARSE);
}

TEST_CASE("dioph_csv: explicit checkpoints, default ladder, rational rejection") {
    char* csv = nullptr;
    char* fit = nullptr;
    REQUIRE(latpoly_dioph_csv("[sqrt(2)]", 64, "8,16,32,64", &csv, &fit) == LATPOLY_OK);
    std::string rows = take(csv);
    CHECK(rows.rfind("M,S,L\n", 0) == 0);
    CHECK(std::count(rows.begin(), rows.end(), '\n') == 5);
    CHECK(take(fit) == "null"); // two upper-half checkpoints cannot anchor a fit

    REQUIRE(latpoly_dioph_csv("[sqrt(2)]", 4096, "", &csv, &fit) == LATPOLY_OK);
    take(csv);
    json fj = json::parse(take(fit));
    CHECK(fj["slope"].get<double>() > 0.5);
    CHECK(fj["slope"].get<double>() < 1.6);
    CHECK(fj["n"].get<int>() >= 3);

    CHECK(latpoly_dioph_csv("[1/2]", 64, "", &csv, &fit) == LATPOLY_E_RATIONAL_ALPHA);
}

TEST_CASE("ehrhart_json: coefficients, formula, and match flag") {
    char* out = nullptr;
    REQUIRE(latpoly_ehrhart_json("[1, 1, 1]", &out) == LATPOLY_OK);
    json j = json::parse(take(out));
    REQUIRE(j["coefficients"].size() == 4);
    CHECK(j["coefficients"][0] == "1");
    CHECK(j["coefficients"][1] == "11/6");
    CHECK(j["coefficients"][3] == "1/6");
    CHECK(j["formula_td_minus_2"] == "11/6");
    CHECK(j["match"] == true);

    REQUIRE(latpoly_ehrhart_json("[2, 4, 3]", &out) == LATPOLY_OK); // gcd(2,4) = 2
    json k = json::parse(take(out));
    CHECK(k["formula_td_minus_2"].is_null());
    CHECK(k["match"].is_null());
    CHECK(k["coefficients"].size() == 4);

    REQUIRE(latpoly_ehrhart_json("[1]", &out) == LATPOLY_OK);
    json l = json::parse(take(out));
    REQUIRE(l["coefficients"].size() == 2);
    CHECK(l["coefficients"][1] == "1");
    CHECK(l["match"].is_null());

    CHECK(latpoly_ehrhart_json("[sqrt(2)]", &out) == LATPOLY_E_INVALID_ARGUMENT);
}

TEST_CASE("scan_csv: deterministic emission plus optional file output") {
    std::string cfg =
        "polytope = cross d=1 a=[1]\n"
        "t_start = 1\n"
        "t_stop = 3\n"
        "t_count = 5\n";
    char* csv = nullptr;
    char* fit = nullptr;
    REQUIRE(latpoly_scan_csv(cfg.c_str(), &csv, &fit) == LATPOLY_OK);
    std::string first = take(csv);
    CHECK(take(fit) == "null"); // five points are below the fitting threshold
    CHECK(first.rfind("t,count,main_term,delta,certified\n", 0) == 0);
    CHECK(first.find("\n5/2,5,") != std::string::npos);

    std::filesystem::path out_path =
        std::filesystem::temp_directory_path() / "latpoly_scan_test.csv";
    std::string cfg2 = cfg + "output = " + out_path.string() + "\n";
    REQUIRE(latpoly_scan_csv(cfg2.c_str(), &csv, &fit) == LATPOLY_OK);
    std::string second = take(csv);
    take(fit);
    CHECK(second == first);
    std::ifstream f(out_path, std::ios::binary);
    REQUIRE(f.good());
    std::string on_disk((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(on_disk == first);
    f.close();
    std::filesystem::remove(out_path);

    CHECK(latpoly_scan_csv("t_start = 1\n", &csv, &fit) == LATPOLY_E_PARSE);
}

TEST_CASE("campaign listing and a full report run") {
    char* out = nullptr;
    REQUIRE(latpoly_campaign_list(&out) == LATPOLY_OK);
    std::string names = take(out);
    CHECK(names.find("prop1\n") != std::string::npos);
    CHECK(names.find("mainterm-identities\n") != std::string::npos);
    CHECK(std::count(names.begin(), names.end(), '\n') == 7);

    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "latpoly_capi_report";
    std::filesystem::remove_all(dir);
    int passed = 0;
    char* summary = nullptr;
    REQUIRE(latpoly_report_campaign("mainterm-identities", dir.string().c_str(), &passed,
                                    &summary) == LATPOLY_OK);
    std::string text = take(summary);
    CHECK(passed == 1);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("criterion 2") != std::string::npos);
    CHECK(std::filesystem::exists(dir / "summary.txt"));
    std::filesystem::remove_all(dir);

    CHECK(latpoly_report_campaign("no-such-campaign", dir.string().c_str(), &passed, &summary) ==
          LATPOLY_E_INVALID_ARGUMENT);
    CHECK(latpoly_report_campaign(nullptr, nullptr, nullptr, nullptr) ==
          LATPOLY_E_INVALID_ARGUMENT);
}
