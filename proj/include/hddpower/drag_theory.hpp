#pragma once

#include <span>
#include <utility>
#include <vector>

namespace hddpower::drag {

inline constexpr double kStandardAirDensity = 1.204;  // kg/m^3, sea level at 20 C

/// Inputs to the spinning-disk drag model, all SI.
struct DragParams {
    double air_density = kStandardAirDensity;
    // Absorbs shape, roughness, viscosity and boundary-layer effects.
    double drag_coefficient = 1.0;
    int sides = 2;
    double radius_m = 0.0;
    double omega_rad_s = 0.0;
};

void validate(const DragParams& p);

struct QuadratureSettings {
    int radial_cells = 512;
    int angular_cells = 512;
};

void validate(const QuadratureSettings& q);

enum class SweepVariable { omega, radius };
enum class Evaluator { analytic, numerical };

struct SweepResult {
    std::vector<std::pair<double, double>> samples;  // (variable value, watts)
    double fitted_exponent = 0.0;
    double residual = 0.0;  // RMS of log-log fit errors
};

double rpm_to_rad_s(double rpm);
double inches_to_meters(double inches);

/// Dynamic-pressure drag per unit area, 1/2 rho v^2 C_d, in pascals.
double drag_force_per_area(double air_density, double drag_coefficient, double speed);

/// v = omega * r.
double tangential_speed(double omega_rad_s, double r_m);

/// Closed form sides * (pi/5) * C_d * rho * omega^3 * R^5.
double analytic_power(const DragParams& p);

/// Midpoint rule over an (r, theta) product grid of
/// sides * integral_0^R integral_0^2pi  F(r)/A * v(r) * r dtheta dr.
/// Summation order is fixed, so the result is independent of scheduling.
double numerical_power(const DragParams& p, const QuadratureSettings& q = {});

/// Scales `base` along one variable by each multiplier and fits the slope
/// of log(power) against log(variable). Needs at least 3 distinct multipliers.
SweepResult recover_exponent(SweepVariable variable, const DragParams& base,
                             std::span<const double> multipliers, Evaluator evaluator,
                             const QuadratureSettings& q = {});

/// Ordinary least-squares slope and RMS residual of y on x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace hddpower::drag
