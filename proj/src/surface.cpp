#include "hddpower/surface.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "hddpower/errors.hpp"

namespace hddpower {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
    if (axis.size() < 2)
        throw ValidationError(name, fmt::format("{} needs at least 2 points (got {})", name, axis.size()));
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i]) || axis[i] <= 0.0)
            throw ValidationError(name, fmt::format("{} values must be positive (got {})", name, axis[i]));
        if (i > 0 && !(axis[i] > axis[i - 1]))
            throw ValidationError(name, fmt::format("{} must be strictly ascending ({} after {})", name, axis[i],
                                                    axis[i - 1]));
    }
}

void check_range(double lo, double hi, int steps) {
    if (steps < 2) throw ValidationError("steps", fmt::format("steps must be >= 2 (got {})", steps));
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0)
        throw ValidationError("range", fmt::format("range bounds must be finite and > 0 (got {}..{})", lo, hi));
    if (!(hi > lo)) throw ValidationError("range", fmt::format("inverted or empty range {}..{}", lo, hi));
}

std::string format_value(double x, std::optional<int> precision) {
    if (precision) return fmt::format("{:.{}g}", x, *precision);
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

}  // namespace

std::vector<double> linear_axis(double lo, double hi, int steps) {
    check_range(lo, hi, steps);
    std::vector<double> axis(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) axis[i] = lo + (hi - lo) * i / (steps - 1);
    axis.back() = hi;
    return axis;
}

std::vector<double> geometric_axis(double lo, double hi, int steps) {
    check_range(lo, hi, steps);
    std::vector<double> axis(static_cast<std::size_t>(steps));
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < steps; ++i) axis[i] = lo * std::exp(ratio * i / (steps - 1));
    axis.front() = lo;
    axis.back() = hi;
    return axis;
}

bool strictly_increasing(const SurfaceGrid& g) {
    if (g.values.size() != g.rpm_axis.size()) return false;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        if (g.values[i].size() != g.diameter_axis.size()) return false;
        for (std::size_t j = 0; j < g.values[i].size(); ++j) {
            if (!(g.values[i][j] > 0.0)) return false;
            if (i > 0 && !(g.values[i][j] > g.values[i - 1][j])) return false;
            if (j > 0 && !(g.values[i][j] > g.values[i][j - 1])) return false;
        }
    }
    return true;
}

SurfaceGrid build_surface(std::vector<double> rpm_axis, std::vector<double> diameter_axis,
                          const PowerModel& model, int platters) {
    check_axis(rpm_axis, "rpm_axis");
    check_axis(diameter_axis, "diameter_axis");
    SurfaceGrid grid{std::move(rpm_axis), std::move(diameter_axis), {}, platters, model};
    grid.values.reserve(grid.rpm_axis.size());
    for (double rpm : grid.rpm_axis) {
        std::vector<double> row;
        row.reserve(grid.diameter_axis.size());
        for (double d : grid.diameter_axis) row.push_back(relative_power({"", platters, rpm, d, {}, {}}, model));
        grid.values.push_back(std::move(row));
    }
    if (!strictly_increasing(grid))
        throw ValidationError("values", "surface is not strictly increasing; axis points are too close to resolve");
    return grid;
}

std::string surface_to_csv(const SurfaceGrid& grid, std::optional<int> precision) {
    std::string out = "rpm\\diameter_in";
    for (double d : grid.diameter_axis) out += "," + format_value(d, precision);
    out += '\n';
    for (std::size_t i = 0; i < grid.rpm_axis.size(); ++i) {
        out += format_value(grid.rpm_axis[i], precision);
        for (double v : grid.values[i]) out += "," + format_value(v, precision);
        out += '\n';
    }
    return out;
}

}  // namespace hddpower
