#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spinpair/dynamics.hpp"

#ifndef SPINPAIR_CLI_PATH
#define SPINPAIR_CLI_PATH "spinpair"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string stdout_text;
    std::string stderr_text;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("spinpair_cli_out_" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("spinpair_cli_err_" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(SPINPAIR_CLI_PATH) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult result{WEXITSTATUS(raw), slurp(out), slurp(err)};
    fs::remove(out);
    fs::remove(err);
    return result;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("ramsey subcommand writes the requested CSV deterministically") {
    const fs::path cfg = write_file("spinpair_ramsey_cfg.json", R"({
      "spin_system": {"omega0_rad_s": 0.0, "j_hz": 1.0, "d_rad_s": 0.5},
      "ramsey": {"t_max_s": 5.0, "points": 200}
    })");
    const fs::path out1 = fs::temp_directory_path() / "spinpair_ramsey_1.csv";
    const fs::path out2 = fs::temp_directory_path() / "spinpair_ramsey_2.csv";

    RunResult r1 = run_cli("ramsey --config " + cfg.string() + " --output " + out1.string());
    REQUIRE(r1.exit_code == 0);
    RunResult r2 = run_cli("ramsey --config " + cfg.string() + " --output " + out2.string());
    REQUIRE(r2.exit_code == 0);

    const std::string a = slurp(out1), b = slurp(out2);
    CHECK(a == b);  // byte-identical repeat runs
    CHECK(count_lines(a) == 201);

    // Regenerate through the library and compare row by row.
    spinpair::SpinSystemParams params{0.0, 1.0, 0.5};
    std::vector<double> times(200);
    for (int k = 0; k < 200; ++k) times[k] = 5.0 * k / 199.0;
    spinpair::TimeSeries oracle = spinpair::ramsey_entangle(params, times);

    std::istringstream in(a);
    std::string line;
    std::getline(in, line);  // header
    size_t row_idx = 0;
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double t, uu, ud, du, dd;
        row >> t >> uu >> ud >> du >> dd;
        CHECK(std::abs(uu + ud + du + dd - 1.0) < 1e-9);
        REQUIRE(row_idx < oracle.t.size());
        CHECK(std::abs(t - oracle.t[row_idx]) < 1e-15);
        CHECK(std::abs(uu - oracle.populations[row_idx][0]) < 1e-15);
        CHECK(std::abs(dd - oracle.populations[row_idx][3]) < 1e-15);
        ++row_idx;
    }
    CHECK(row_idx == 200);

    fs::remove(cfg);
    fs::remove(out1);
    fs::remove(out2);
}

TEST_CASE("bell subcommand reports unit fidelity and re-parses as JSON") {
    RunResult r = run_cli("bell --variant Tz");
    REQUIRE(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.stdout_text);
    CHECK(report.at("variant") == "Tz");
    CHECK(report.at("fidelity").get<double>() >= 1.0 - 1e-12);
    CHECK(report.at("circuit").is_array());
    CHECK(report.at("state_re").size() == 4);

    RunResult kin = run_cli("kinetics");
    REQUIRE(kin.exit_code == 0);
    const auto kin_report = nlohmann::json::parse(kin.stdout_text);
    CHECK(kin_report.at("tau_pt_s").get<double>() > 0.0);

    RunResult bad = run_cli("bell --variant Nope");
    CHECK(bad.exit_code == 2);
    CHECK(bad.stderr_text.rfind("E_CONFIG:", 0) == 0);
}

TEST_CASE("vqe subcommand and I/O failure modes") {
    RunResult missing = run_cli("vqe --set vqe.integrals_path=/nonexistent/x.json");
    CHECK(missing.exit_code == 4);
    CHECK(missing.stderr_text.rfind("E_IO:", 0) == 0);

    const fs::path ints = write_file("spinpair_cli_integrals.json", R"({
      "units": "hartree-like", "convention": "physicists", "M": 2,
      "h": [[-0.9, 0.0], [0.0, -0.7]],
      "v": [[0,0,0,0,3.1], [1,1,1,1,3.3],
            [0,1,0,1,0.2], [1,0,1,0,0.2],
            [0,1,1,0,0.15], [1,0,0,1,0.15],
            [0,0,1,1,0.15], [1,1,0,0,0.15]]
    })");
    RunResult ok = run_cli("vqe --set vqe.integrals_path=" + ints.string());
    REQUIRE(ok.exit_code == 0);
    CHECK(ok.stdout_text.find("energy_vqe") != std::string::npos);
    CHECK(ok.stdout_text.find("\"ground_in_manifold\": true") != std::string::npos);
    fs::remove(ints);
}

TEST_CASE("config validation failures exit with code 2") {
    const fs::path bad_json = write_file("spinpair_bad.json", "{ not json");
    RunResult parse = run_cli("kinetics --config " + bad_json.string());
    CHECK(parse.exit_code == 2);
    CHECK(parse.stderr_text.rfind("E_CONFIG:", 0) == 0);
    fs::remove(bad_json);

    // Unit-less frequency keys are refused.
    const fs::path unitless = write_file("spinpair_unitless.json", R"({
      "spin_system": {"omega0": 1.0}
    })");
    RunResult r = run_cli("ramsey --config " + unitless.string() + " --output /tmp/x.csv");
    CHECK(r.exit_code == 2);
    CHECK(r.stderr_text.find("omega0_rad_s") != std::string::npos);
    fs::remove(unitless);

    RunResult conflict = run_cli("kinetics --set subcommand=bell");
    CHECK(conflict.exit_code == 2);
}

TEST_CASE("physics validation failures exit with code 3") {
    RunResult r = run_cli("kinetics --set kinetics.deltaE_eV=-0.5");
    CHECK(r.exit_code == 3);
    CHECK(r.stderr_text.rfind("E_PHYS:", 0) == 0);

    RunResult neg = run_cli(
        "evolve --set evolve.gamma1_per_s=-1 --output /tmp/spinpair_neg.csv");
    CHECK(neg.exit_code == 3);
}

TEST_CASE("kinetics report carries the documented fields") {
    RunResult r = run_cli("kinetics");
    REQUIRE(r.exit_code == 0);
    for (const char* key : {"tau_pt_s", "tau_s_s", "occupation", "gap_eV"})
        CHECK(r.stdout_text.find(key) != std::string::npos);

    RunResult calibrated = run_cli("kinetics --set kinetics.p_target=1.73e-4");
    REQUIRE(calibrated.exit_code == 0);
    CHECK(calibrated.stdout_text.find("\"occupation\": 0.0001729") != std::string::npos);
}

TEST_CASE("spectrum and spatial subcommands") {
    RunResult zfs = run_cli("spectrum --set zfs.d_rad_s=5.0 --set zfs.e_rad_s=1.0");
    REQUIRE(zfs.exit_code == 0);
    CHECK(zfs.stdout_text.find("\"frequency_rad_s\": 2.0") != std::string::npos);

    const fs::path out = fs::temp_directory_path() / "spinpair_spatial_cli.csv";
    RunResult sp = run_cli("spatial --set spatial.points=31 --output " + out.string());
    REQUIRE(sp.exit_code == 0);
    CHECK(count_lines(slurp(out)) == 31 * 31 + 1);
    fs::remove(out);
}

TEST_CASE("evolve subcommand honors overrides") {
    const fs::path out = fs::temp_directory_path() / "spinpair_evolve_cli.csv";
    RunResult r = run_cli(
        "evolve --set spin_system.j_hz=1.0 --set spin_system.d_rad_s=0.4 "
        "--set evolve.initial=ud --set evolve.points=50 --set evolve.t_max_s=3.0 "
        "--output " + out.string());
    REQUIRE(r.exit_code == 0);
    CHECK(count_lines(slurp(out)) == 51);
    fs::remove(out);
}
