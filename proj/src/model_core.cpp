#include "hddpower/model_core.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hddpower/errors.hpp"

namespace hddpower {

namespace {

[[noreturn]] void reject(const DiskSpec& spec, const char* field, const std::string& why) {
    const std::string id = spec.model_id.empty() ? "<unnamed>" : spec.model_id;
    throw ValidationError(field, fmt::format("disk '{}': field '{}' {}", id, field, why));
}

double base_power(const DiskSpec& s, const PowerModel& m) {
    return std::pow(static_cast<double>(s.platters), m.platter_exp) * std::pow(s.rpm, m.rpm_exp) *
           std::pow(s.diameter_in, m.diameter_exp);
}

}  // namespace

void validate(const DiskSpec& spec) {
    if (spec.platters < 1) reject(spec, "platters", fmt::format("must be >= 1 (got {})", spec.platters));
    if (!std::isfinite(spec.rpm) || spec.rpm <= 0.0)
        reject(spec, "rpm", fmt::format("must be a finite value > 0 (got {})", spec.rpm));
    if (!std::isfinite(spec.diameter_in) || spec.diameter_in <= 0.0)
        reject(spec, "diameter_in", fmt::format("must be a finite value > 0 (got {})", spec.diameter_in));
    if (spec.capacity_gb && (!std::isfinite(*spec.capacity_gb) || *spec.capacity_gb < 0.0))
        reject(spec, "capacity_gb", fmt::format("must be a finite value >= 0 (got {})", *spec.capacity_gb));
    if (spec.measured_watts && (!std::isfinite(*spec.measured_watts) || *spec.measured_watts <= 0.0))
        reject(spec, "measured_watts",
               fmt::format("must be a finite value > 0 (got {})", *spec.measured_watts));
}

void validate(const PowerModel& m) {
    if (!std::isfinite(m.platter_exp))
        throw ValidationError("platter_exp", "model: platter_exp must be finite");
    if (!std::isfinite(m.rpm_exp) || m.rpm_exp <= 0.0)
        throw ValidationError("rpm_exp", fmt::format("model: rpm_exp must be > 0 (got {})", m.rpm_exp));
    if (!std::isfinite(m.diameter_exp) || m.diameter_exp <= 0.0)
        throw ValidationError("diameter_exp",
                              fmt::format("model: diameter_exp must be > 0 (got {})", m.diameter_exp));
    if (m.constant_k && (!std::isfinite(*m.constant_k) || *m.constant_k <= 0.0))
        throw ValidationError("constant_k",
                              fmt::format("model: constant_k must be > 0 (got {})", *m.constant_k));
}

double relative_power(const DiskSpec& spec, const PowerModel& model) {
    validate(spec);
    validate(model);
    return model.constant_k.value_or(1.0) * base_power(spec, model);
}

double power_ratio(const DiskSpec& a, const DiskSpec& b, const PowerModel& model) {
    validate(a);
    validate(b);
    validate(model);
    const double platters = static_cast<double>(b.platters) / static_cast<double>(a.platters);
    return std::pow(platters, model.platter_exp) * std::pow(b.rpm / a.rpm, model.rpm_exp) *
           std::pow(b.diameter_in / a.diameter_in, model.diameter_exp);
}

double predict_from_reference(const DiskSpec& ref, double ref_watts, const DiskSpec& target,
                              const PowerModel& model) {
    if (!std::isfinite(ref_watts) || ref_watts <= 0.0)
        throw ValidationError("ref_watts", fmt::format("reference watts must be > 0 (got {})", ref_watts));
    return ref_watts * power_ratio(ref, target, model);
}

PowerModel calibrate(std::span<const DiskSpec> observations, const PowerModel& base) {
    if (observations.empty())
        throw ValidationError("observations", "calibration needs at least one observation");
    validate(base);

    std::vector<double> constants;
    constants.reserve(observations.size());
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const DiskSpec& obs = observations[i];
        validate(obs);
        if (!obs.measured_watts)
            throw ValidationError("measured_watts",
                                  fmt::format("observation {} ('{}') has no measured_watts", i, obs.model_id));
        constants.push_back(*obs.measured_watts / base_power(obs, base));
    }

    PowerModel out = base;
    bool all_equal = true;
    for (double c : constants) all_equal = all_equal && c == constants.front();
    if (all_equal) {
        out.constant_k = constants.front();
        return out;
    }
    double log_sum = 0.0;
    for (double c : constants) log_sum += std::log(c);
    out.constant_k = std::exp(log_sum / static_cast<double>(constants.size()));
    return out;
}

}  // namespace hddpower
