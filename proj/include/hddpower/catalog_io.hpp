#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hddpower/model_core.hpp"

namespace hddpower {

enum class CatalogFormat { csv, json };

/// Picks the format from the file extension (.csv or .json).
CatalogFormat format_from_path(const std::filesystem::path& path);

struct CatalogFile {
    std::vector<DiskSpec> records;
    std::string source_path;
    CatalogFormat format = CatalogFormat::csv;
};

/// CSV header: model_id,platters,rpm,diameter_in,capacity_gb,measured_watts
/// The last two columns may be left empty. Every defect in the file is
/// reported in a single CatalogError.
CatalogFile load_catalog(const std::filesystem::path& path, CatalogFormat format);
CatalogFile load_catalog(const std::filesystem::path& path);

CatalogFile parse_catalog_csv(std::string_view text, std::string source = "<memory>");
CatalogFile parse_catalog_json(std::string_view text, std::string source = "<memory>");

std::string catalog_to_csv(const std::vector<DiskSpec>& records);
std::string catalog_to_json(const std::vector<DiskSpec>& records);

inline constexpr int kModelFileVersion = 1;

std::string model_to_json(const PowerModel& model);
PowerModel model_from_json(std::string_view text);

void save_model(const PowerModel& model, const std::filesystem::path& path);
PowerModel load_model(const std::filesystem::path& path);

}  // namespace hddpower
