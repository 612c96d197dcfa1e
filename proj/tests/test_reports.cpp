#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <hqm.hpp>

using namespace hqm;

namespace {

RunConfig base(const std::string& sub) {
    RunConfig cfg;
    cfg.subcommand = sub;
    return cfg;
}

double num(const Cell& c) { return std::get<double>(c); }
long long inum(const Cell& c) { return std::get<long long>(c); }
std::string str(const Cell& c) { return std::get<std::string>(c); }

}  // namespace

TEST_CASE("config validation") {
    RunConfig cfg = base("spectrum");
    cfg.format = "yaml";
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("spectrum");
    cfg.convention = "both";
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("potential");
    cfg.model = "morse";
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("sweep");
    cfg.method = "shooting";
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("sweep");
    cfg.variable = "k";
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("sweep");
    cfg.steps = 1;
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("spectrum");
    cfg.mu = 0.0;
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("spectrum");
    cfg.npts = 0;
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    cfg = base("spectrum");
    cfg.rmax = -1.0;
    CHECK_THROWS_AS(run_report(cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_report(base("bogus")), std::invalid_argument);
}

TEST_CASE("spectrum report") {
    RunConfig cfg = base("spectrum");
    const Report rep = run_spectrum(cfg);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.columns == std::vector<std::string>{"n", "m", "energy_ev", "status"});
    CHECK(rep.warnings.empty());
    const ModelParams p{2.0, 5.0e9, 1};
    for (int n = 0; n <= 2; ++n) {
        CHECK(inum(rep.rows[static_cast<std::size_t>(n)][0]) == n);
        CHECK(inum(rep.rows[static_cast<std::size_t>(n)][1]) == 1);
        CHECK(num(rep.rows[static_cast<std::size_t>(n)][2]) == energy_paper(n, p));
        CHECK(str(rep.rows[static_cast<std::size_t>(n)][3]) == "ok");
    }

    cfg.convention = "physical";
    const Report rep2 = run_spectrum(cfg);
    CHECK(num(rep2.rows[0][2]) == energy_physical(0, p));
    CHECK(num(rep2.rows[0][2]) > 0.0);
    CHECK(num(rep.rows[0][2]) < 0.0);
}

TEST_CASE("spectrum report marks missing bound states") {
    RunConfig cfg = base("spectrum");
    cfg.m = 0;
    const Report rep = run_spectrum(cfg);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        CHECK(std::holds_alternative<std::monostate>(row[2]));
        CHECK(str(row[3]) == "no bound state");
    }
    CHECK(rep.warnings.size() == 1);
}

TEST_CASE("table1 report layout and analytic column") {
    RunConfig cfg = base("table1");
    cfg.npts = 2000;
    const Report rep = run_table1(cfg);
    REQUIRE(rep.rows.size() == 27);
    CHECK(rep.warnings.empty());
    for (std::size_t i = 0; i < 27; ++i) {
        CHECK(num(rep.rows[i][0]) == table1[i].omega);
        CHECK(inum(rep.rows[i][1]) == table1[i].n);
        CHECK(inum(rep.rows[i][2]) == table1[i].m);
        CHECK_THAT(num(rep.rows[i][4]), Catch::Matchers::WithinAbs(table1[i].e_analyt, 1e-3));
        // Numeric column exists and is within coarse-grid reach of the analytic one.
        CHECK(std::abs(num(rep.rows[i][3]) - num(rep.rows[i][4])) <= 0.1);
        CHECK(num(rep.rows[i][5]) == std::abs(num(rep.rows[i][3]) - num(rep.rows[i][4])));
    }
}

TEST_CASE("potential report reflects the deepening well") {
    RunConfig cfg = base("potential");
    cfg.omegas = {0.5, 2.0};
    const Report rep = run_potential(cfg);
    REQUIRE(rep.rows.size() == 2 * 400);
    double min05 = 1e300, min20 = 1e300;
    for (const auto& row : rep.rows) {
        if (num(row[0]) == 0.5) min05 = std::min(min05, num(row[2]));
        if (num(row[0]) == 2.0) min20 = std::min(min20, num(row[2]));
    }
    CHECK(min20 < min05);
    CHECK_THAT(min20, Catch::Matchers::WithinAbs(-0.31749850929049677, 1e-2));
    CHECK(min05 > 0.0);
}

TEST_CASE("potential report for the oscillator model") {
    RunConfig cfg = base("potential");
    cfg.model = "oscillator";
    const Report rep = run_potential(cfg);
    CHECK(rep.rows.size() == 5 * 400);  // default omega set {1..5}
    // Quadratic confinement: the last node lies far above the minimum.
    double vmin = 1e300, vlast = 0.0;
    for (const auto& row : rep.rows) {
        if (num(row[0]) != 1.0) continue;
        vmin = std::min(vmin, num(row[2]));
        vlast = num(row[2]);
    }
    CHECK(vlast > vmin + 1.0);
}

TEST_CASE("density report") {
    RunConfig cfg = base("density");
    cfg.omega = 0.5;
    const Report rep = run_density(cfg);
    REQUIRE(rep.rows.size() == 3 * 2000);
    CHECK(rep.warnings.empty());
    double peak0 = -1.0;
    for (const auto& row : rep.rows) {
        if (inum(row[0]) == 0) {
            peak0 = num(row[3]);
            CHECK(str(row[4]) == "ok");
        }
    }
    const double rho2 = coulomb_parameters(2, {0.5, 5.0e9, 1}).rho;
    const double spacing = (12.0 / rho2) / 2000.0;
    CHECK(std::abs(peak0 - 9.0e-10) <= spacing);

    cfg.m = 0;
    const Report rep0 = run_density(cfg);
    CHECK(rep0.rows.size() == 3);
    CHECK_FALSE(rep0.warnings.empty());
}

TEST_CASE("analytic omega sweep deepens monotonically") {
    RunConfig cfg = base("sweep");
    cfg.method = "analytic";
    cfg.variable = "omega";
    cfg.sweep_from = 0.5;
    cfg.sweep_to = 4.0;
    cfg.steps = 8;
    cfg.n_max = 1;
    const Report rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 8 * 2);
    std::vector<double> track0;
    for (const auto& row : rep.rows)
        if (inum(row[1]) == 0) track0.push_back(num(row[2]));
    REQUIRE(track0.size() == 8);
    for (std::size_t i = 0; i + 1 < track0.size(); ++i) CHECK(track0[i + 1] < track0[i]);

    cfg.model = "oscillator";
    CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("analytic m sweep enumerates integer parameters") {
    RunConfig cfg = base("sweep");
    cfg.variable = "m";
    cfg.sweep_from = 1.0;
    cfg.sweep_to = 3.0;
    cfg.n_max = 0;
    const Report rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 3);
    CHECK(num(rep.rows[0][0]) == 1.0);
    CHECK(num(rep.rows[1][0]) == 2.0);
    CHECK(num(rep.rows[2][0]) == 3.0);
}

TEST_CASE("fd coulomb sweep honors the sign convention") {
    RunConfig cfg = base("sweep");
    cfg.method = "fd";
    cfg.variable = "omega";
    cfg.sweep_from = 2.0;
    cfg.sweep_to = 2.5;
    cfg.steps = 2;
    cfg.n_max = 0;
    const Report rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 2);
    CHECK(num(rep.rows[0][2]) < 0.0);  // paper convention negates the physical value
    CHECK_THAT(num(rep.rows[0][2]), Catch::Matchers::WithinAbs(energy_paper(0, {2.0, 5.0e9, 1}), 0.02));
    CHECK(std::holds_alternative<std::monostate>(rep.rows[0][3]));
    CHECK(num(rep.rows[1][3]) > 0.95);

    cfg.convention = "physical";
    const Report rep2 = run_sweep(cfg);
    CHECK(num(rep2.rows[0][2]) > 0.0);
}

TEST_CASE("fd oscillator sweep keeps five coherent tracks") {
    RunConfig cfg = base("sweep");
    cfg.model = "oscillator";
    cfg.method = "fd";
    cfg.variable = "omega";
    cfg.sweep_from = 1.0;
    cfg.sweep_to = 5.0;
    cfg.steps = 3;
    cfg.n_max = 4;
    cfg.npts = 1200;
    const Report rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 3 * 5);
    for (const auto& row : rep.rows) {
        CHECK(str(row[4]) == "ok");
        if (num(row[0]) > 1.0) CHECK(num(row[3]) > 0.8);
    }
    CHECK(rep.warnings.empty());
}

TEST_CASE("oscillator report carries the published reference columns") {
    RunConfig cfg = base("oscillator");
    cfg.k = 1.0e9;
    cfg.npts = 1500;
    const Report rep = run_oscillator(cfg);
    REQUIRE(rep.rows.size() == table2.size());
    REQUIRE(rep.columns.size() == 12);
    for (std::size_t i = 0; i < table2.size(); ++i) {
        CHECK(num(rep.rows[i][0]) == table2[i].omega);
        for (int j = 0; j < 5; ++j)
            CHECK(num(rep.rows[i][static_cast<std::size_t>(6 + j)]) ==
                  table2[i].e[static_cast<std::size_t>(j)]);
        CHECK(num(rep.rows[i][11]) >= 0.0);
    }
}

TEST_CASE("list-reproductions enumerates every published item") {
    const Report rep = run_list_reproductions(base("list-reproductions"));
    REQUIRE(rep.rows.size() == 9);
    std::vector<std::string> items;
    for (const auto& row : rep.rows) items.push_back(str(row[0]));
    for (const char* want : {"table1", "table2", "fig1", "fig2", "fig3", "fig4", "fig5",
                             "fig6", "fig7"})
        CHECK(std::find(items.begin(), items.end(), want) != items.end());
}

TEST_CASE("CSV serialization") {
    Report rep;
    rep.columns = {"a", "b", "c", "d"};
    rep.rows.push_back({Cell{1.5}, Cell{static_cast<long long>(42)}, Cell{}, Cell{std::string("xy")}});
    CHECK(to_csv(rep) == "a,b,c,d\n1.500000e+00,42,,xy\n");

    const RunConfig cfg = base("spectrum");
    CHECK(to_csv(run_spectrum(cfg)) == to_csv(run_spectrum(cfg)));
}

TEST_CASE("JSON serialization parses back with sorted keys and nulls") {
    RunConfig cfg = base("spectrum");
    cfg.m = 0;
    const nlohmann::json arr = nlohmann::json::parse(to_json(run_spectrum(cfg)));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 3);
    CHECK(arr[0]["energy_ev"].is_null());
    CHECK(arr[0]["status"] == "no bound state");
    CHECK(arr[0]["n"] == 0);

    cfg.m = 1;
    const std::string text = to_json(run_spectrum(cfg));
    CHECK(text.find("\"energy_ev\"") < text.find("\"m\""));
    CHECK(text.find("\"m\"") < text.find("\"n\""));
    CHECK(text.find("\"n\"") < text.find("\"status\""));
}

TEST_CASE("write_report returns 0 on clean runs and 4 on warnings") {
    RunConfig cfg = base("spectrum");
    cfg.out_path = "write_report_test.csv";
    const Report clean = run_spectrum(cfg);
    CHECK(write_report(clean, cfg) == 0);
    std::ifstream f(*cfg.out_path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == to_csv(clean));
    std::remove(cfg.out_path->c_str());

    cfg.out_path.reset();
    cfg.m = 0;
    const Report warned = run_spectrum(cfg);
    CHECK(write_report(warned, cfg) == 4);
}
