#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hddpower/model_core.hpp"

namespace hddpower {

struct FleetEntry {
    DiskSpec spec;
    long long count = 0;
};

/// A drive population (SAN, NAS, JBOD, RAID set). Model ids may repeat.
struct Fleet {
    std::vector<FleetEntry> entries;
};

/// Sum of count * per-drive watts. Requires a calibrated model.
double fleet_power(const Fleet& fleet, const PowerModel& model);

/// Fractional power saved by spinning `spec` down to `reduced_rpm`.
double drpm_savings(const DiskSpec& spec, double reduced_rpm, const PowerModel& model);

enum class PlanMethod { greedy, exact };

const char* to_string(PlanMethod m);

/// Maximise total capacity subject to a watt budget with per-model caps.
struct PlanProblem {
    std::vector<DiskSpec> catalog;
    double budget_watts = 0.0;
    int max_count_per_model = 1;
    PowerModel model;
};

struct PlanResult {
    std::vector<int> counts;  // parallel to PlanProblem::catalog
    double total_watts = 0.0;
    double total_gb = 0.0;
    PlanMethod method = PlanMethod::greedy;

    bool operator==(const PlanResult&) const = default;
};

void validate(const PlanProblem& p);

// Limits for plan_exact's exhaustive search.
inline constexpr std::size_t kExactMaxModels = 6;
inline constexpr int kExactMaxCount = 12;

/// Fills by capacity per watt, densest first. Ties: lower watts, then model_id.
PlanResult plan_greedy(const PlanProblem& p);

/// Exhaustive enumeration of every count vector. Ties: lower watts, then the
/// lexicographically smallest count vector. Throws PlanningError past the limits.
PlanResult plan_exact(const PlanProblem& p);

}  // namespace hddpower
