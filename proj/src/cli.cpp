#include "hddpower/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "hddpower/catalog_io.hpp"
#include "hddpower/drag_theory.hpp"
#include "hddpower/errors.hpp"
#include "hddpower/planner.hpp"
#include "hddpower/surface.hpp"
#include "json.hpp"

namespace hddpower::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by `verify` after the report is printed.
class ToleranceFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::pair<std::string, std::string>> split_pairs(const std::string& text, const std::string& flag) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError(fmt::format("{}: expected key=value, got '{}'", flag, item));
        pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return pairs;
}

template <class T>
T to_number(const std::string& text, const std::string& what) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(fmt::format("{}: '{}' is not a valid number", what, text));
    return value;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(to_number<double>(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start),
                                        flag));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct Settings {
    std::string exponents = "empirical";
    int precision = 6;
    std::string format = "text";
    bool exponents_given = false;
    bool precision_given = false;

    bool json() const { return format == "json"; }
    std::string num(double x) const { return fmt::format("{:#.{}g}", x, precision); }
};

PowerModel model_for(const Settings& s, const std::string& model_path) {
    if (model_path.empty()) return parse_exponents(s.exponents);
    if (s.exponents_given) throw UsageError("--exponents and --model are mutually exclusive");
    return load_model(model_path);
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += c == 0 ? fmt::format("{:<{}}", row[c], width[c]) : fmt::format("{:>{}}", row[c], width[c]);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

// ratio / estimate

struct RatioArgs {
    std::string a, b;
    std::optional<double> ref_watts;
};

DiskSpec spec_flag(const char* flag, const std::string& text) {
    try {
        return parse_spec(text);
    } catch (const UsageError& e) {
        throw UsageError(fmt::format("{}: {}", flag, e.what()));
    } catch (const ValidationError& e) {
        throw ValidationError(e.field(), fmt::format("{}: {}", flag, e.what()));
    }
}

void cmd_ratio(const Settings& s, const RatioArgs& args, bool require_watts, std::ostream& out) {
    const DiskSpec a = spec_flag("--a", args.a);
    const DiskSpec b = spec_flag("--b", args.b);
    if (require_watts && !args.ref_watts) throw UsageError("estimate: --ref-watts is required");
    const PowerModel model = parse_exponents(s.exponents);
    const double ratio = power_ratio(a, b, model);
    std::optional<double> predicted;
    if (args.ref_watts) predicted = predict_from_reference(a, *args.ref_watts, b, model);

    if (s.json()) {
        json doc = {{"ratio", ratio}};
        if (predicted) doc["predicted_watts"] = *predicted;
        out << doc.dump(2) << '\n';
        return;
    }
    out << "ratio " << s.num(ratio) << '\n';
    if (predicted) out << "predicted_watts " << s.num(*predicted) << '\n';
}

// calibrate

void cmd_calibrate(const Settings& s, const std::string& catalog_path, const std::string& output, std::ostream& out) {
    const CatalogFile catalog = load_catalog(catalog_path);
    std::vector<DiskSpec> observed;
    for (const auto& r : catalog.records)
        if (r.measured_watts) observed.push_back(r);
    if (observed.empty())
        throw CalibrationError(fmt::format("{}: no record has measured_watts; nothing to calibrate against", catalog_path));

    const PowerModel model = calibrate(observed, parse_exponents(s.exponents));
    save_model(model, output);

    json records = json::array();
    std::vector<std::vector<std::string>> rows{{"model_id", "measured_w", "predicted_w", "residual_%"}};
    for (const auto& r : observed) {
        const double predicted = relative_power(r, model);
        const double residual = 100.0 * (predicted - *r.measured_watts) / *r.measured_watts;
        records.push_back({{"model_id", r.model_id},
                           {"measured_watts", *r.measured_watts},
                           {"predicted_watts", predicted},
                           {"residual_percent", residual}});
        rows.push_back({r.model_id, s.num(*r.measured_watts), s.num(predicted), s.num(residual)});
    }
    if (s.json()) {
        out << json{{"constant_k", *model.constant_k},
                    {"observations", observed.size()},
                    {"skipped", catalog.records.size() - observed.size()},
                    {"output", output},
                    {"records", records}}
                   .dump(2)
            << '\n';
        return;
    }
    out << "constant_k " << s.num(*model.constant_k) << '\n';
    out << "observations " << observed.size() << " (skipped " << catalog.records.size() - observed.size()
        << " without measured_watts)\n";
    print_table(out, rows);
    out << "wrote " << output << '\n';
}

// surface

struct SurfaceArgs {
    std::optional<double> rpm_min, rpm_max, d_min, d_max;
    int rpm_steps = 10;
    int d_steps = 10;
    std::string rpm_values, d_values;
    std::string spacing = "linear";
    int platters = 1;
    std::string model_path;
    std::string output;
};

std::vector<double> axis_from(const std::string& values, std::optional<double> lo, std::optional<double> hi, int steps,
                              const std::string& spacing, const std::string& name) {
    if (!values.empty()) {
        if (lo || hi) throw UsageError(fmt::format("--{}-values cannot be combined with --{}-min/--{}-max", name, name, name));
        return parse_list(values, "--" + name + "-values");
    }
    if (!lo || !hi) throw UsageError(fmt::format("give --{0}-min and --{0}-max, or --{0}-values", name));
    if (steps < 2) throw UsageError(fmt::format("--{}-steps must be >= 2", name));
    if (*hi <= *lo) throw UsageError(fmt::format("--{0}-min/--{0}-max: inverted range {1}..{2}", name, *lo, *hi));
    return spacing == "geometric" ? geometric_axis(*lo, *hi, steps) : linear_axis(*lo, *hi, steps);
}

void cmd_surface(const Settings& s, const SurfaceArgs& a, std::ostream& out) {
    const PowerModel model = model_for(s, a.model_path);
    const SurfaceGrid grid = build_surface(axis_from(a.rpm_values, a.rpm_min, a.rpm_max, a.rpm_steps, a.spacing, "rpm"),
                                           axis_from(a.d_values, a.d_min, a.d_max, a.d_steps, a.spacing, "d"), model,
                                           a.platters);
    const std::string csv = surface_to_csv(grid, s.precision_given ? std::optional<int>(s.precision) : std::nullopt);
    if (a.output.empty()) {
        out << csv;
        return;
    }
    std::ofstream file(a.output, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError(a.output, fmt::format("cannot open '{}' for writing", a.output));
    file << csv;
    file.close();
    if (!file) throw IoError(a.output, fmt::format("error while writing '{}'", a.output));

    const std::string units = model.calibrated() ? "watts" : "relative";
    if (s.json()) {
        out << json{{"output", a.output},
                    {"rpm_points", grid.rpm_axis.size()},
                    {"diameter_points", grid.diameter_axis.size()},
                    {"units", units}}
                   .dump(2)
            << '\n';
        return;
    }
    out << fmt::format("wrote {}x{} surface ({}) to {}\n", grid.rpm_axis.size(), grid.diameter_axis.size(), units,
                       a.output);
}

// verify

struct VerifyArgs {
    int grid = 512;
    int points = 5;
    double max_multiplier = 16.0;
    double rpm = 15098.0;
    double diameter_in = 2.6;
};

inline constexpr double kQuadratureTolerance = 1e-4;
inline constexpr double kSlopeTolerance = 1e-3;

void cmd_verify(const Settings& s, const VerifyArgs& a, std::ostream& out) {
    if (a.grid < 1) throw UsageError("--grid must be >= 1");
    if (a.points < 3) throw UsageError(fmt::format("--points must be >= 3 for a slope fit (got {})", a.points));
    if (!(a.max_multiplier > 1.0)) throw UsageError("--max-multiplier must be > 1");

    drag::DragParams base;
    base.radius_m = drag::inches_to_meters(a.diameter_in / 2.0);
    base.omega_rad_s = drag::rpm_to_rad_s(a.rpm);
    drag::validate(base);

    const double exact = drag::analytic_power(base);
    std::vector<int> ladder;
    for (int cells = std::min(32, a.grid); cells < a.grid; cells *= 2) ladder.push_back(cells);
    ladder.push_back(a.grid);
    std::vector<double> errors;
    for (int cells : ladder) {
        const double approx = drag::numerical_power(base, {cells, cells});
        errors.push_back(std::abs(approx - exact) / exact);
    }
    bool nonincreasing = true;
    for (std::size_t i = 1; i < errors.size(); ++i) nonincreasing = nonincreasing && errors[i] <= errors[i - 1];

    std::vector<double> multipliers;
    for (int i = 0; i < a.points; ++i)
        multipliers.push_back(std::pow(a.max_multiplier, static_cast<double>(i) / (a.points - 1)));
    const drag::QuadratureSettings q{a.grid, a.grid};
    const auto omega = drag::recover_exponent(drag::SweepVariable::omega, base, multipliers, drag::Evaluator::numerical, q);
    const auto radius = drag::recover_exponent(drag::SweepVariable::radius, base, multipliers, drag::Evaluator::numerical, q);

    struct Check {
        std::string name;
        bool pass;
    };
    const std::vector<Check> checks{
        {"quadrature_error", errors.back() <= kQuadratureTolerance},
        {"quadrature_convergence", nonincreasing},
        {"omega_exponent", std::abs(omega.fitted_exponent - 3.0) <= kSlopeTolerance},
        {"radius_exponent", std::abs(radius.fitted_exponent - 5.0) <= kSlopeTolerance},
    };

    if (s.json()) {
        json ladder_json = json::array();
        for (std::size_t i = 0; i < ladder.size(); ++i)
            ladder_json.push_back({{"cells", ladder[i]}, {"relative_error", errors[i]}});
        json checks_json = json::object();
        for (const auto& c : checks) checks_json[c.name] = c.pass;
        out << json{{"analytic_watts", exact},
                    {"convergence", ladder_json},
                    {"omega_exponent", omega.fitted_exponent},
                    {"omega_residual", omega.residual},
                    {"radius_exponent", radius.fitted_exponent},
                    {"radius_residual", radius.residual},
                    {"checks", checks_json}}
                   .dump(2)
            << '\n';
    } else {
        out << fmt::format("base: R = {} m, omega = {} rad/s, rho = {} kg/m^3, C_d = {}, sides = {}\n",
                           s.num(base.radius_m), s.num(base.omega_rad_s), s.num(base.air_density),
                           s.num(base.drag_coefficient), base.sides);
        out << "analytic watts " << s.num(exact) << '\n';
        std::vector<std::vector<std::string>> rows{{"cells", "relative_error"}};
        for (std::size_t i = 0; i < ladder.size(); ++i)
            rows.push_back({fmt::format("{0}x{0}", ladder[i]), fmt::format("{:.3e}", errors[i])});
        print_table(out, rows);
        out << fmt::format("omega exponent {:.3f}  (fit {}, rms residual {:.2e})\n", omega.fitted_exponent,
                           s.num(omega.fitted_exponent), omega.residual);
        out << fmt::format("radius exponent {:.3f}  (fit {}, rms residual {:.2e})\n", radius.fitted_exponent,
                           s.num(radius.fitted_exponent), radius.residual);
        for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << '\n';
    }
    std::string failed;
    for (const auto& c : checks)
        if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    if (!failed.empty()) throw ToleranceFailure("verify failed: " + failed);
}

// fleet / plan

std::map<std::string, long long> parse_counts(const std::vector<std::string>& items) {
    std::map<std::string, long long> counts;
    for (const auto& item : items) {
        if (item.empty()) continue;
        for (const auto& [id, value] : split_pairs(item, "--count")) {
            const auto n = to_number<long long>(value, "--count " + id);
            if (n < 0) throw UsageError(fmt::format("--count {}: count must be >= 0", id));
            if (!counts.emplace(id, n).second) throw UsageError(fmt::format("--count {}: given twice", id));
        }
    }
    return counts;
}

PowerModel calibrated_model(const Settings& s, const std::string& model_path, const char* command) {
    if (model_path.empty())
        throw CalibrationError(fmt::format(
            "{}: absolute watts need a calibrated model; run `hddpower calibrate --catalog FILE --output MODEL` "
            "and pass --model MODEL",
            command));
    PowerModel m = model_for(s, model_path);
    if (!m.calibrated())
        throw CalibrationError(fmt::format(
            "{}: model '{}' has no constant_k; run `hddpower calibrate` against measured watts first", command,
            model_path));
    return m;
}

void cmd_fleet(const Settings& s, const std::string& catalog_path, const std::vector<std::string>& count_items,
               const std::string& model_path, std::ostream& out) {
    const PowerModel model = calibrated_model(s, model_path, "fleet");
    const CatalogFile catalog = load_catalog(catalog_path);
    auto counts = parse_counts(count_items);

    Fleet fleet;
    for (const auto& r : catalog.records) {
        auto it = counts.find(r.model_id);
        if (it == counts.end()) continue;
        fleet.entries.push_back({r, it->second});
        counts.erase(it);
    }
    if (!counts.empty())
        throw ValidationError("count", fmt::format("--count: model '{}' is not in {}", counts.begin()->first, catalog_path));

    const double total = fleet_power(fleet, model);
    json entries = json::array();
    std::vector<std::vector<std::string>> rows{{"model_id", "count", "watts_each", "subtotal_w"}};
    for (const auto& e : fleet.entries) {
        const double each = relative_power(e.spec, model);
        const double subtotal = fleet_power(Fleet{{e}}, model);
        entries.push_back({{"model_id", e.spec.model_id}, {"count", e.count}, {"watts_each", each}, {"subtotal_watts", subtotal}});
        rows.push_back({e.spec.model_id, std::to_string(e.count), s.num(each), s.num(subtotal)});
    }
    if (s.json()) {
        out << json{{"entries", entries}, {"total_watts", total}}.dump(2) << '\n';
        return;
    }
    if (rows.size() > 1) print_table(out, rows);
    out << "total_watts " << s.num(total) << '\n';
}

struct PlanArgs {
    std::string catalog;
    double budget = 0.0;
    int max_count = 1;
    std::string method = "greedy";
    std::string model_path;
};

void cmd_plan(const Settings& s, const PlanArgs& a, std::ostream& out) {
    PlanProblem problem;
    problem.model = calibrated_model(s, a.model_path, "plan");
    problem.catalog = load_catalog(a.catalog).records;
    problem.budget_watts = a.budget;
    problem.max_count_per_model = a.max_count;
    const PlanResult result = a.method == "exact" ? plan_exact(problem) : plan_greedy(problem);

    json entries = json::array();
    std::vector<std::vector<std::string>> rows{{"model_id", "count", "gb", "watts"}};
    for (std::size_t i = 0; i < problem.catalog.size(); ++i) {
        const auto& spec = problem.catalog[i];
        const double watts = result.counts[i] * relative_power(spec, problem.model);
        const double gb = result.counts[i] * *spec.capacity_gb;
        entries.push_back({{"model_id", spec.model_id}, {"count", result.counts[i]}, {"gb", gb}, {"watts", watts}});
        rows.push_back({spec.model_id, std::to_string(result.counts[i]), s.num(gb), s.num(watts)});
    }
    if (s.json()) {
        out << json{{"method", to_string(result.method)},
                    {"budget_watts", a.budget},
                    {"entries", entries},
                    {"total_gb", result.total_gb},
                    {"total_watts", result.total_watts}}
                   .dump(2)
            << '\n';
        return;
    }
    print_table(out, rows);
    out << "method " << to_string(result.method) << '\n';
    out << "total_gb " << s.num(result.total_gb) << '\n';
    out << "total_watts " << s.num(result.total_watts) << " of " << s.num(a.budget) << '\n';
}

}  // namespace

DiskSpec parse_spec(const std::string& text) {
    DiskSpec spec;
    bool have_n = false, have_rpm = false, have_d = false;
    for (const auto& [key, value] : split_pairs(text, "spec")) {
        if (key == "n") {
            spec.platters = to_number<int>(value, "n");
            have_n = true;
        } else if (key == "rpm") {
            spec.rpm = to_number<double>(value, "rpm");
            have_rpm = true;
        } else if (key == "d") {
            spec.diameter_in = to_number<double>(value, "d");
            have_d = true;
        } else if (key == "gb") {
            spec.capacity_gb = to_number<double>(value, "gb");
        } else if (key == "watts") {
            spec.measured_watts = to_number<double>(value, "watts");
        } else if (key == "id") {
            spec.model_id = value;
        } else {
            throw UsageError(fmt::format("unknown spec key '{}' (expected n, rpm, d, gb, watts, id)", key));
        }
    }
    if (!have_n || !have_rpm || !have_d)
        throw UsageError(fmt::format("spec '{}' must give n=, rpm= and d=", text));
    validate(spec);
    return spec;
}

PowerModel parse_exponents(const std::string& text) {
    if (text == "empirical") return PowerModel::empirical();
    if (text == "theoretical") return PowerModel::theoretical();
    PowerModel m = PowerModel::empirical();
    for (const auto& [key, value] : split_pairs(text, "--exponents")) {
        const double x = to_number<double>(value, "--exponents " + key);
        if (key == "n")
            m.platter_exp = x;
        else if (key == "rpm")
            m.rpm_exp = x;
        else if (key == "d")
            m.diameter_exp = x;
        else
            throw UsageError(fmt::format("--exponents: unknown key '{}' (expected n, rpm, d)", key));
    }
    try {
        validate(m);
    } catch (const ValidationError& e) {
        throw UsageError(fmt::format("--exponents: {}", e.what()));
    }
    return m;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Disk-drive spindle power modeling: ratios, calibration, drag theory, fleets and planning"};
    app.name("hddpower");
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    auto* exponents_opt = app.add_option("--exponents", s.exponents,
                                         "empirical (1, 2.8, 4.6), theoretical (1, 3, 5), or overrides n=,rpm=,d=");
    auto* precision_opt =
        app.add_option("--precision", s.precision, "significant digits in printed numbers")->check(CLI::Range(1, 17));
    app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));

    RatioArgs ratio_args;
    auto add_ratio_flags = [&](CLI::App* sub) {
        sub->add_option("--a", ratio_args.a, "reference drive, n=..,rpm=..,d=..")->required();
        sub->add_option("--b", ratio_args.b, "target drive, n=..,rpm=..,d=..")->required();
        sub->add_option("--ref-watts", ratio_args.ref_watts, "known watts of drive a");
    };
    auto* ratio = app.add_subcommand("ratio", "power ratio P_b / P_a, optionally scaled to watts");
    add_ratio_flags(ratio);
    auto* estimate = app.add_subcommand("estimate", "predicted watts of b from a's known watts");
    add_ratio_flags(estimate);

    std::string catalog_path, output_path, model_path;
    auto* calibrate_cmd = app.add_subcommand("calibrate", "fit constant_k to a catalog's measured watts");
    calibrate_cmd->add_option("--catalog", catalog_path, "catalog file (.csv or .json)")->required();
    calibrate_cmd->add_option("--output", output_path, "model file to write")->required();

    SurfaceArgs surface_args;
    auto* surface = app.add_subcommand("surface", "emit the P(rpm, diameter) grid as CSV");
    surface->add_option("--rpm-min", surface_args.rpm_min);
    surface->add_option("--rpm-max", surface_args.rpm_max);
    surface->add_option("--rpm-steps", surface_args.rpm_steps)->capture_default_str();
    surface->add_option("--rpm-values", surface_args.rpm_values, "explicit comma-separated rpm axis");
    surface->add_option("--d-min", surface_args.d_min);
    surface->add_option("--d-max", surface_args.d_max);
    surface->add_option("--d-steps", surface_args.d_steps)->capture_default_str();
    surface->add_option("--d-values", surface_args.d_values, "explicit comma-separated diameter axis (inches)");
    surface->add_option("--spacing", surface_args.spacing)->check(CLI::IsMember({"linear", "geometric"}))->capture_default_str();
    surface->add_option("--platters", surface_args.platters)->check(CLI::PositiveNumber)->capture_default_str();
    surface->add_option("--model", surface_args.model_path, "calibrated model file; values become watts");
    surface->add_option("--output,-o", surface_args.output, "CSV path (default: stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check quadrature against the closed form and recover the 3 and 5 exponents");
    verify->add_option("--grid", verify_args.grid, "cells per dimension")->capture_default_str();
    verify->add_option("--points", verify_args.points, "sweep samples")->capture_default_str();
    verify->add_option("--max-multiplier", verify_args.max_multiplier, "sweep spans 1..max geometrically")->capture_default_str();
    verify->add_option("--rpm", verify_args.rpm, "base spindle speed")->capture_default_str();
    verify->add_option("--diameter", verify_args.diameter_in, "base platter diameter, inches")->capture_default_str();

    std::vector<std::string> count_items;
    auto* fleet = app.add_subcommand("fleet", "total watts of a drive population");
    fleet->add_option("--catalog", catalog_path)->required();
    fleet->add_option("--count", count_items, "id=count, repeatable or comma-separated");
    fleet->add_option("--model", model_path, "calibrated model file");

    PlanArgs plan_args;
    auto* plan = app.add_subcommand("plan", "maximise capacity under a watt budget");
    plan->add_option("--catalog", plan_args.catalog)->required();
    plan->add_option("--budget", plan_args.budget, "watts")->required();
    plan->add_option("--max-count", plan_args.max_count, "cap per catalog model")->required();
    plan->add_option("--method", plan_args.method)->check(CLI::IsMember({"greedy", "exact"}))->capture_default_str();
    plan->add_option("--model", plan_args.model_path, "calibrated model file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "hddpower: " << e.what() << '\n';
        return kExitUsage;
    }
    s.exponents_given = exponents_opt->count() > 0;
    s.precision_given = precision_opt->count() > 0;

    try {
        if (ratio->parsed())
            cmd_ratio(s, ratio_args, false, out);
        else if (estimate->parsed())
            cmd_ratio(s, ratio_args, true, out);
        else if (calibrate_cmd->parsed())
            cmd_calibrate(s, catalog_path, output_path, out);
        else if (surface->parsed())
            cmd_surface(s, surface_args, out);
        else if (verify->parsed())
            cmd_verify(s, verify_args, out);
        else if (fleet->parsed())
            cmd_fleet(s, catalog_path, count_items, model_path, out);
        else if (plan->parsed())
            cmd_plan(s, plan_args, out);
    } catch (const UsageError& e) {
        err << "hddpower: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ToleranceFailure& e) {
        err << "hddpower: " << e.what() << '\n';
        return kExitTolerance;
    } catch (const Error& e) {
        err << "hddpower: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace hddpower::cli
