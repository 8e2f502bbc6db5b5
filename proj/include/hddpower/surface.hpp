#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hddpower/model_core.hpp"

namespace hddpower {

/// P(RPM, D) at fixed platter count. values[i][j] pairs rpm_axis[i] with
/// diameter_axis[j].
struct SurfaceGrid {
    std::vector<double> rpm_axis;
    std::vector<double> diameter_axis;
    std::vector<std::vector<double>> values;
    int platters = 1;
    PowerModel model;
};

/// Evenly spaced axis of `steps` points from lo to hi inclusive.
std::vector<double> linear_axis(double lo, double hi, int steps);
std::vector<double> geometric_axis(double lo, double hi, int steps);

/// Throws ValidationError unless both axes are strictly ascending and positive
/// and the resulting surface strictly increases along both axes.
SurfaceGrid build_surface(std::vector<double> rpm_axis, std::vector<double> diameter_axis,
                          const PowerModel& model, int platters = 1);

bool strictly_increasing(const SurfaceGrid& grid);

/// First row: "rpm\\diameter_in" then the diameter axis. Each following row:
/// the rpm value then that row's power values. `precision` is significant
/// digits; nullopt writes the shortest round-trip form.
std::string surface_to_csv(const SurfaceGrid& grid, std::optional<int> precision = std::nullopt);

}  // namespace hddpower
