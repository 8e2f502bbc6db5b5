#pragma once

#include <optional>
#include <span>
#include <string>

namespace hddpower {

/// Physical parameters of one drive model as read off a vendor data sheet.
///
/// `diameter_in` is the platter diameter in inches, not the enclosure form
/// factor (a "3.5 inch" drive typically carries ~3.7 inch platters, a 15k RPM
/// enterprise drive often 2.5-2.6 inch platters).
struct DiskSpec {
    std::string model_id;
    int platters = 1;
    double rpm = 0.0;
    double diameter_in = 0.0;
    std::optional<double> capacity_gb;
    std::optional<double> measured_watts;

    bool operator==(const DiskSpec&) const = default;
};

/// Throws ValidationError naming the first offending field.
void validate(const DiskSpec& spec);

/// Multiplicative power law: k * N^platter_exp * RPM^rpm_exp * D^diameter_exp.
///
/// Without `constant_k` the model is only meaningful in ratio form; with it
/// the output is in watts for RPM and inch inputs.
struct PowerModel {
    double platter_exp = 1.0;
    double rpm_exp = 2.8;
    double diameter_exp = 4.6;
    std::optional<double> constant_k;

    bool calibrated() const noexcept { return constant_k.has_value(); }

    bool operator==(const PowerModel&) const = default;

    /// Empirical data-sheet exponents (1, 2.8, 4.6).
    static PowerModel empirical() { return {}; }
    /// Integer exponents of the aerodynamic drag derivation (1, 3, 5).
    static PowerModel theoretical() { return {1.0, 3.0, 5.0, std::nullopt}; }
};

void validate(const PowerModel& model);

/// k * N^a * RPM^b * D^c with k = 1 when uncalibrated.
double relative_power(const DiskSpec& spec, const PowerModel& model);

/// (N_b/N_a)^a * (RPM_b/RPM_a)^b * (D_b/D_a)^c. Never reads constant_k.
double power_ratio(const DiskSpec& a, const DiskSpec& b, const PowerModel& model);

/// Scales a known wattage of `ref` to `target`.
double predict_from_reference(const DiskSpec& ref, double ref_watts, const DiskSpec& target,
                              const PowerModel& model);

/// Fits constant_k as the geometric mean of measured_watts / relative_power
/// over all observations. Exponents are copied from `base`.
PowerModel calibrate(std::span<const DiskSpec> observations,
                     const PowerModel& base = PowerModel::empirical());

}  // namespace hddpower
