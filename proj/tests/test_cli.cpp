#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hddpower/catalog_io.hpp"
#include "hddpower/cli.hpp"
#include "hddpower/errors.hpp"
#include "json.hpp"

using namespace hddpower;
namespace fs = std::filesystem;

namespace {

const fs::path kData = HDDPOWER_DATA_DIR;

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("hddpower_cli_" + name); }

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

std::string read(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Value printed after "<key> " on its own line.
double value_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 1));
}

}  // namespace

TEST_CASE("spec and exponent flag parsing") {
    const DiskSpec s = cli::parse_spec("n=2,rpm=7200,d=3.7,gb=4000,watts=8.5,id=nl");
    CHECK(s.platters == 2);
    CHECK(s.rpm == 7200);
    CHECK(s.diameter_in == 3.7);
    CHECK(*s.capacity_gb == 4000);
    CHECK(*s.measured_watts == 8.5);
    CHECK(s.model_id == "nl");
    CHECK_THROWS(cli::parse_spec("n=1,rpm=7200"));
    CHECK_THROWS(cli::parse_spec("n=1,rpm=fast,d=2"));
    CHECK_THROWS_AS(cli::parse_spec("n=0,rpm=7200,d=2"), ValidationError);

    CHECK(cli::parse_exponents("empirical") == PowerModel::empirical());
    CHECK(cli::parse_exponents("theoretical") == PowerModel::theoretical());
    const PowerModel m = cli::parse_exponents("rpm=3");
    CHECK(m.rpm_exp == 3.0);
    CHECK(m.diameter_exp == 4.6);
    CHECK_THROWS(cli::parse_exponents("rpm=-1"));
    CHECK_THROWS(cli::parse_exponents("speed=3"));
}

TEST_CASE("ratio and estimate") {
    auto r = run({"ratio", "--a", "n=1,rpm=15098,d=2.6", "--b", "n=1,rpm=16263,d=2.6", "--ref-watts", "0.91"});
    CHECK(r.code == 0);
    CHECK(std::abs(value_after(r.out, "predicted_watts") - 1.121) <= 0.001);

    r = run({"ratio", "--a", "n=1,rpm=15098,d=2.6", "--b", "n=1,rpm=15098,d=2.6"});
    CHECK(r.code == 0);
    CHECK(r.out == "ratio 1.00000\n");

    r = run({"--exponents", "theoretical", "ratio", "--a", "n=1,rpm=10000,d=2.6", "--b", "n=1,rpm=5000,d=2.6"});
    CHECK(r.out == "ratio 0.125000\n");
    // global flags may follow the subcommand
    CHECK(run({"ratio", "--a", "n=1,rpm=10000,d=2.6", "--b", "n=1,rpm=5000,d=2.6", "--exponents", "theoretical"}).out ==
          r.out);

    r = run({"--precision", "10", "ratio", "--a", "n=1,rpm=15098,d=2.6", "--b", "n=1,rpm=16263,d=2.6"});
    CHECK(r.out == "ratio 1.231366898\n");

    r = run({"--format", "json", "estimate", "--a", "n=1,rpm=55819,d=2.6", "--b", "n=1,rpm=143470,d=2.6", "--ref-watts",
             "35.55"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["predicted_watts"].get<double>() == doctest::Approx(499.782).epsilon(1e-3));

    CHECK(run({"estimate", "--a", "n=1,rpm=1,d=1", "--b", "n=1,rpm=1,d=1"}).code == cli::kExitUsage);

    r = run({"ratio", "--a", "n=1,rpm=abc,d=2.6", "--b", "n=1,rpm=1,d=1"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(has(r.err, "--a"));
    r = run({"ratio", "--a", "n=1,rpm=1,d=1", "--b", "n=0,rpm=1,d=1"});
    CHECK(r.code == cli::kExitInvalid);
    CHECK(has(r.err, "--b"));
    CHECK(has(r.err, "platters"));
    CHECK(run({"ratio", "--a", "n=1,rpm=1,d=1"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("calibrate") {
    const fs::path model = temp("model.json");
    const fs::path single = temp("single.csv");
    write(single, "model_id,platters,rpm,diameter_in,capacity_gb,measured_watts\nonly,1,15098,2.6,,0.91\n");
    auto r = run({"calibrate", "--catalog", single.string(), "--output", model.string()});
    CHECK(r.code == 0);
    CHECK(has(r.out, "only"));
    CHECK(has(r.out, "only        0.910000     0.910000     0.00000"));
    r = run({"--format", "json", "calibrate", "--catalog", single.string(), "--output", model.string()});
    CHECK(std::abs(nlohmann::json::parse(r.out)["records"][0]["residual_percent"].get<double>()) < 1e-12);
    CHECK(load_model(model).constant_k);

    r = run({"--format", "json", "calibrate", "--catalog", (kData / "example1_chain.csv").string(), "--output",
             model.string()});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["records"].size() == 3);
    for (const auto& rec : doc["records"]) CHECK(std::abs(rec["residual_percent"].get<double>()) <= 0.1);

    r = run({"calibrate", "--catalog", "/nonexistent/cat.csv", "--output", model.string()});
    CHECK(r.code == cli::kExitInvalid);
    CHECK(has(r.err, "/nonexistent/cat.csv"));

    const fs::path no_watts = temp("nowatts.csv");
    write(no_watts, "model_id,platters,rpm,diameter_in\nx,1,7200,3.7\n");
    CHECK(run({"calibrate", "--catalog", no_watts.string(), "--output", model.string()}).code == cli::kExitInvalid);
}

TEST_CASE("surface") {
    auto r = run({"--exponents", "theoretical", "surface", "--rpm-values", "5000,10000", "--d-values", "2,3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row0, row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(header == "rpm\\diameter_in,2,3");
    auto cells = [](const std::string& row) {
        std::vector<double> v;
        std::stringstream ss(row);
        std::string cell;
        while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
        return v;
    };
    const auto a = cells(row0), b = cells(row1);
    CHECK(b[1] / a[1] == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(b[2] / a[2] == doctest::Approx(8.0).epsilon(1e-12));

    const fs::path out = temp("surface.csv");
    r = run({"surface", "--rpm-min", "3600", "--rpm-max", "15000", "--rpm-steps", "12", "--d-min", "1.6", "--d-max",
             "3.7", "--d-steps", "8", "--spacing", "geometric", "--output", out.string()});
    CHECK(r.code == 0);
    CHECK(has(r.out, "12x8"));
    const std::string first = read(out);
    run({"surface", "--rpm-min", "3600", "--rpm-max", "15000", "--rpm-steps", "12", "--d-min", "1.6", "--d-max", "3.7",
         "--d-steps", "8", "--spacing", "geometric", "--output", out.string()});
    CHECK(read(out) == first);

    r = run({"surface", "--rpm-min", "15000", "--rpm-max", "3600", "--d-min", "1", "--d-max", "2"});
    CHECK(r.code != 0);
    CHECK(has(r.err, "inverted"));
    CHECK(run({"surface", "--rpm-values", "2,1", "--d-values", "1,2"}).code == cli::kExitInvalid);
    CHECK(run({"surface", "--rpm-min", "1", "--rpm-max", "2", "--rpm-steps", "1", "--d-values", "1,2"}).code ==
          cli::kExitUsage);
    CHECK(run({"surface", "--d-values", "1,2"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
    auto r = run({"verify"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "omega exponent 3.000"));
    CHECK(has(r.out, "radius exponent 5.000"));
    CHECK_FALSE(has(r.out, "FAIL"));

    const auto fine = nlohmann::json::parse(run({"--format", "json", "verify"}).out);
    auto coarse_run = run({"--format", "json", "verify", "--grid", "8"});
    CHECK(coarse_run.code == cli::kExitTolerance);
    CHECK(has(coarse_run.err, "quadrature_error"));
    const auto coarse = nlohmann::json::parse(coarse_run.out);
    CHECK(coarse["convergence"].back()["relative_error"].get<double>() >
          fine["convergence"].back()["relative_error"].get<double>());

    CHECK(run({"verify", "--points", "2"}).code == cli::kExitUsage);
}

TEST_CASE("fleet") {
    const fs::path model = temp("fleet_model.json");
    const std::string catalog = (kData / "plan_catalog.csv").string();
    REQUIRE(run({"calibrate", "--catalog", catalog, "--output", model.string()}).code == 0);

    auto r = run({"fleet", "--catalog", catalog, "--model", model.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "total_watts 0.00000\n");

    r = run({"fleet", "--catalog", catalog, "--model", model.string(), "--count", "nearline-7200=10"});
    CHECK(r.code == 0);
    CHECK(value_after(r.out, "total_watts") == doctest::Approx(80.0).epsilon(1e-5));

    r = run({"fleet", "--catalog", catalog, "--model", model.string(), "--count", "nearline-7200=2,archive-5400=3",
             "--count", "perf-15k=1"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "archive-5400"));

    r = run({"fleet", "--catalog", catalog, "--count", "nearline-7200=1"});
    CHECK(r.code == cli::kExitInvalid);
    CHECK(has(r.err, "calibrate"));

    const fs::path raw = temp("raw_model.json");
    save_model(PowerModel{}, raw);
    r = run({"fleet", "--catalog", catalog, "--model", raw.string()});
    CHECK(r.code == cli::kExitInvalid);
    CHECK(has(r.err, "constant_k"));

    CHECK(run({"fleet", "--catalog", catalog, "--model", model.string(), "--count", "missing=1"}).code ==
          cli::kExitInvalid);
    CHECK(run({"fleet", "--catalog", catalog, "--model", model.string(), "--count", "perf-15k=-1"}).code ==
          cli::kExitUsage);
}

TEST_CASE("plan") {
    const fs::path model = temp("plan_model.json");
    PowerModel unit;
    unit.constant_k = 1.0;
    save_model(unit, model);
    const fs::path single = temp("single_plan.csv");
    // rpm = d = 1 and k = 1: each drive draws 5 W.
    write(single, "model_id,platters,rpm,diameter_in,capacity_gb\nfive,5,1,1,1000\n");
    auto r = run({"plan", "--catalog", single.string(), "--budget", "26", "--max-count", "10", "--model", model.string()});
    CHECK(r.code == 0);
    CHECK(has(r.out, "five          5  5000.00  25.0000"));
    CHECK(value_after(r.out, "total_gb") == 5000);

    const fs::path calibrated = temp("plan_cal.json");
    const std::string catalog = (kData / "plan_catalog.csv").string();
    REQUIRE(run({"calibrate", "--catalog", catalog, "--output", calibrated.string()}).code == 0);
    for (const char* budget : {"20", "37", "55", "90", "150"}) {
        const auto g = nlohmann::json::parse(run({"--format", "json", "plan", "--catalog", catalog, "--budget", budget,
                                                  "--max-count", "8", "--model", calibrated.string()})
                                                 .out);
        const auto e = nlohmann::json::parse(run({"--format", "json", "plan", "--catalog", catalog, "--budget", budget,
                                                  "--max-count", "8", "--method", "exact", "--model",
                                                  calibrated.string()})
                                                 .out);
        CHECK(e["method"] == "exact");
        CHECK(e["total_gb"].get<double>() >= g["total_gb"].get<double>());
        CHECK(e["total_watts"].get<double>() <= std::stod(budget));
    }

    r = run({"plan", "--catalog", catalog, "--budget", "50", "--max-count", "20", "--method", "exact", "--model",
             calibrated.string()});
    CHECK(r.code == cli::kExitInvalid);
    CHECK(has(r.err, "greedy"));
    CHECK(run({"plan", "--catalog", catalog, "--budget", "50", "--max-count", "2"}).code == cli::kExitInvalid);
    CHECK(run({"plan", "--catalog", catalog, "--budget", "50", "--max-count", "2", "--method", "lp"}).code ==
          cli::kExitUsage);
    CHECK(run({"--exponents", "theoretical", "plan", "--catalog", catalog, "--budget", "50", "--max-count", "2",
               "--model", calibrated.string()})
              .code == cli::kExitUsage);
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::vector<std::string>> commands{
        {"ratio", "--a", "n=1,rpm=15098,d=2.6", "--b", "n=3,rpm=7200,d=3.7"},
        {"verify", "--grid", "64"},
        {"--exponents", "theoretical", "surface", "--rpm-min", "1000", "--rpm-max", "9000", "--d-min", "1", "--d-max", "3"},
    };
    for (const auto& c : commands) CHECK(run(c).out == run(c).out);
}
