#include "hddpower/drag_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "hddpower/errors.hpp"

namespace hddpower::drag {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonnegative(const char* what, double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw ValidationError(what, fmt::format("{} must be a finite value >= 0 (got {})", what, x));
}

void require_positive(const char* what, double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw ValidationError(what, fmt::format("{} must be a finite value > 0 (got {})", what, x));
}

// Neumaier summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace

void validate(const DragParams& p) {
    require_positive("air_density", p.air_density);
    require_positive("drag_coefficient", p.drag_coefficient);
    require_positive("radius_m", p.radius_m);
    require_nonnegative("omega_rad_s", p.omega_rad_s);
    if (p.sides != 1 && p.sides != 2)
        throw ValidationError("sides", fmt::format("sides must be 1 or 2 (got {})", p.sides));
}

void validate(const QuadratureSettings& q) {
    if (q.radial_cells < 1)
        throw ValidationError("radial_cells", fmt::format("radial_cells must be >= 1 (got {})", q.radial_cells));
    if (q.angular_cells < 1)
        throw ValidationError("angular_cells",
                              fmt::format("angular_cells must be >= 1 (got {})", q.angular_cells));
}

double rpm_to_rad_s(double rpm) {
    require_nonnegative("rpm", rpm);
    return rpm * (2.0 * kPi / 60.0);
}

double inches_to_meters(double inches) {
    require_nonnegative("inches", inches);
    return inches * 0.0254;
}

double drag_force_per_area(double air_density, double drag_coefficient, double speed) {
    require_positive("air_density", air_density);
    require_positive("drag_coefficient", drag_coefficient);
    require_nonnegative("speed", speed);
    return 0.5 * air_density * speed * speed * drag_coefficient;
}

double tangential_speed(double omega_rad_s, double r_m) {
    require_nonnegative("omega_rad_s", omega_rad_s);
    require_nonnegative("r_m", r_m);
    return omega_rad_s * r_m;
}

double analytic_power(const DragParams& p) {
    validate(p);
    const double omega3 = p.omega_rad_s * p.omega_rad_s * p.omega_rad_s;
    const double r2 = p.radius_m * p.radius_m;
    const double r5 = r2 * r2 * p.radius_m;
    return static_cast<double>(p.sides) * (kPi / 5.0) * p.drag_coefficient * p.air_density * omega3 * r5;
}

double numerical_power(const DragParams& p, const QuadratureSettings& q) {
    validate(p);
    validate(q);
    const double dr = p.radius_m / q.radial_cells;
    const double dtheta = 2.0 * kPi / q.angular_cells;

    CompensatedSum total;
    for (int i = 0; i < q.radial_cells; ++i) {
        const double r = (i + 0.5) * dr;
        const double v = tangential_speed(p.omega_rad_s, r);
        // power per area = (F/A) * v; the cell area is r dtheta dr
        const double cell = drag_force_per_area(p.air_density, p.drag_coefficient, v) * v * r * dr * dtheta;
        for (int j = 0; j < q.angular_cells; ++j) total.add(cell);
    }
    return static_cast<double>(p.sides) * total.value();
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error("fit_line: x and y differ in length");
    if (x.size() < 2) throw Error("fit_line: need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw Error("fit_line: x values are all equal");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += e * e;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

SweepResult recover_exponent(SweepVariable variable, const DragParams& base,
                             std::span<const double> multipliers, Evaluator evaluator,
                             const QuadratureSettings& q) {
    validate(base);
    std::vector<double> distinct(multipliers.begin(), multipliers.end());
    for (double m : distinct) require_positive("multiplier", m);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw ValidationError("multipliers",
                              fmt::format("exponent recovery needs at least 3 distinct multipliers (got {})",
                                          distinct.size()));
    if (variable == SweepVariable::omega && base.omega_rad_s <= 0.0)
        throw ValidationError("omega_rad_s", "sweeping omega needs a base omega_rad_s > 0");

    SweepResult result;
    std::vector<double> log_x, log_y;
    for (double m : multipliers) {
        DragParams p = base;
        double value = 0.0;
        if (variable == SweepVariable::omega) {
            p.omega_rad_s = base.omega_rad_s * m;
            value = p.omega_rad_s;
        } else {
            p.radius_m = base.radius_m * m;
            value = p.radius_m;
        }
        const double watts = evaluator == Evaluator::analytic ? analytic_power(p) : numerical_power(p, q);
        if (!(watts > 0.0))
            throw ValidationError("power", fmt::format("sample at {} gave nonpositive power {}", value, watts));
        result.samples.emplace_back(value, watts);
        log_x.push_back(std::log(value));
        log_y.push_back(std::log(watts));
    }
    const LineFit fit = fit_line(log_x, log_y);
    result.fitted_exponent = fit.slope;
    result.residual = fit.rms_residual;
    return result;
}

}  // namespace hddpower::drag
