#include "hddpower/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "hddpower/errors.hpp"

namespace hddpower {

namespace {

void require_calibrated(const PowerModel& model, const char* who) {
    if (!model.calibrated())
        throw CalibrationError(fmt::format(
            "{}: absolute watts need a calibrated model (constant_k); calibrate against measured watts first",
            who));
}

struct Item {
    double watts;
    double gb;
};

std::vector<Item> items_of(const PlanProblem& p) {
    std::vector<Item> items;
    items.reserve(p.catalog.size());
    for (const auto& spec : p.catalog) items.push_back({relative_power(spec, p.model), *spec.capacity_gb});
    return items;
}

// Totals are always summed in catalog order so every caller sees the same bits.
template <class Counts>
std::pair<double, double> totals(const std::vector<Item>& items, const Counts& counts) {
    double watts = 0.0, gb = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        watts += counts[i] * items[i].watts;
        gb += counts[i] * items[i].gb;
    }
    return {watts, gb};
}

}  // namespace

double fleet_power(const Fleet& fleet, const PowerModel& model) {
    require_calibrated(model, "fleet_power");
    validate(model);
    double total = 0.0;
    for (const auto& e : fleet.entries) {
        if (e.count < 0)
            throw ValidationError("count",
                                  fmt::format("fleet entry '{}' has negative count {}", e.spec.model_id, e.count));
        total += static_cast<double>(e.count) * relative_power(e.spec, model);
    }
    return total;
}

double drpm_savings(const DiskSpec& spec, double reduced_rpm, const PowerModel& model) {
    validate(spec);
    validate(model);
    if (!std::isfinite(reduced_rpm) || reduced_rpm <= 0.0)
        throw ValidationError("reduced_rpm", fmt::format("reduced_rpm must be > 0 (got {})", reduced_rpm));
    if (reduced_rpm > spec.rpm)
        throw ValidationError("reduced_rpm",
                              fmt::format("reduced_rpm {} exceeds the drive's {} RPM; speeding up is not a saving",
                                          reduced_rpm, spec.rpm));
    DiskSpec slowed = spec;
    slowed.rpm = reduced_rpm;
    return 1.0 - power_ratio(spec, slowed, model);
}

const char* to_string(PlanMethod m) { return m == PlanMethod::greedy ? "greedy" : "exact"; }

void validate(const PlanProblem& p) {
    require_calibrated(p.model, "plan");
    validate(p.model);
    if (!std::isfinite(p.budget_watts) || p.budget_watts <= 0.0)
        throw ValidationError("budget_watts", fmt::format("budget_watts must be > 0 (got {})", p.budget_watts));
    if (p.max_count_per_model < 1)
        throw ValidationError("max_count_per_model",
                              fmt::format("max_count_per_model must be >= 1 (got {})", p.max_count_per_model));
    for (const auto& spec : p.catalog) {
        validate(spec);
        if (!spec.capacity_gb || *spec.capacity_gb <= 0.0)
            throw ValidationError("capacity_gb",
                                  fmt::format("disk '{}': planning needs capacity_gb > 0", spec.model_id));
    }
}

PlanResult plan_greedy(const PlanProblem& p) {
    validate(p);
    const auto items = items_of(p);

    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double da = items[a].gb / items[a].watts;
        const double db = items[b].gb / items[b].watts;
        if (da != db) return da > db;
        if (items[a].watts != items[b].watts) return items[a].watts < items[b].watts;
        if (p.catalog[a].model_id != p.catalog[b].model_id) return p.catalog[a].model_id < p.catalog[b].model_id;
        return a < b;
    });

    PlanResult result;
    result.method = PlanMethod::greedy;
    result.counts.assign(items.size(), 0);
    auto fits = [&] { return totals(items, result.counts).first <= p.budget_watts; };
    for (std::size_t i : order) {
        const double remaining = p.budget_watts - totals(items, result.counts).first;
        int guess = static_cast<int>(std::clamp(std::floor(remaining / items[i].watts), 0.0,
                                                static_cast<double>(p.max_count_per_model)));
        // The guess comes from a subtraction; settle it against the canonical sum.
        result.counts[i] = guess;
        while (result.counts[i] > 0 && !fits()) --result.counts[i];
        while (result.counts[i] < p.max_count_per_model) {
            ++result.counts[i];
            if (!fits()) {
                --result.counts[i];
                break;
            }
        }
    }
    std::tie(result.total_watts, result.total_gb) = totals(items, result.counts);
    return result;
}

PlanResult plan_exact(const PlanProblem& p) {
    validate(p);
    if (p.catalog.size() > kExactMaxModels || p.max_count_per_model > kExactMaxCount)
        throw PlanningError(fmt::format(
            "exact planning is limited to {} models and max count {} (got {} models, max count {}); use greedy",
            kExactMaxModels, kExactMaxCount, p.catalog.size(), p.max_count_per_model));
    const auto items = items_of(p);
    const std::size_t n = items.size();

    PlanResult best;
    best.method = PlanMethod::exact;
    best.counts.assign(n, 0);
    std::tie(best.total_watts, best.total_gb) = totals(items, best.counts);

    // Odometer over count vectors in lexicographic order; only strict
    // improvements replace the incumbent, so ties keep the smallest vector.
    std::vector<int> counts(n, 0);
    while (true) {
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (counts[pos] < p.max_count_per_model) {
                ++counts[pos];
                std::fill(counts.begin() + static_cast<std::ptrdiff_t>(pos) + 1, counts.end(), 0);
                break;
            }
            if (pos == 0) {
                pos = n;  // wrapped
                break;
            }
        }
        if (pos == n) break;

        const auto [watts, gb] = totals(items, counts);
        if (watts > p.budget_watts) continue;
        if (gb > best.total_gb || (gb == best.total_gb && watts < best.total_watts)) {
            best.counts = counts;
            best.total_watts = watts;
            best.total_gb = gb;
        }
    }
    return best;
}

}  // namespace hddpower
