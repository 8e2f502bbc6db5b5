#include "hddpower/catalog_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "hddpower/errors.hpp"
#include "json.hpp"

namespace hddpower {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kColumns = {"model_id",    "platters",    "rpm",
                                                      "diameter_in", "capacity_gb", "measured_watts"};
constexpr std::size_t kRequiredColumns = 4;

std::string shortest(double x) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError(path.string(), fmt::format("error while reading '{}'", path.string()));
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), fmt::format("cannot open '{}' for writing", path.string()));
    out << text;
    out.flush();
    if (!out) throw IoError(path.string(), fmt::format("error while writing '{}'", path.string()));
}

// Splits one CSV line; double quotes may wrap a field and "" escapes a quote.
std::vector<std::string> split_csv_line(std::string_view line, bool& ok) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    ok = true;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) ok = false;
    return fields;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

template <class T>
bool parse_number(std::string_view text, T& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

std::string record_label(std::size_t line, const std::string& id) {
    return id.empty() ? fmt::format("line {}", line) : fmt::format("line {} (model '{}')", line, id);
}

void check_record(const DiskSpec& spec, const std::string& label, std::vector<std::string>& problems) {
    try {
        validate(spec);
    } catch (const ValidationError& e) {
        problems.push_back(fmt::format("{}: {}", label, e.what()));
    }
}

void check_id(const std::string& id, const std::string& label, std::set<std::string>& seen,
              std::vector<std::string>& problems) {
    if (id.empty()) {
        problems.push_back(fmt::format("{}: field 'model_id' is empty", label));
    } else if (!seen.insert(id).second) {
        problems.push_back(fmt::format("{}: duplicate model_id '{}'", label, id));
    }
}

}  // namespace

CatalogFormat format_from_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".csv" || ext == ".CSV") return CatalogFormat::csv;
    if (ext == ".json" || ext == ".JSON") return CatalogFormat::json;
    throw ParseError(fmt::format("'{}': cannot infer catalog format from extension '{}' (use .csv or .json)",
                                 path.string(), ext));
}

CatalogFile parse_catalog_csv(std::string_view text, std::string source) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<std::string> problems;
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;
        lines.emplace_back(line_no, line);
    }
    if (lines.empty()) throw CatalogError(source, {"empty file: a header row is required"});

    // Header: maps column index -> field slot.
    bool ok = true;
    const auto header = split_csv_line(lines.front().second, ok);
    std::vector<int> slot_of_column;
    std::array<int, kColumns.size()> column_of_slot{};
    column_of_slot.fill(-1);
    for (std::size_t c = 0; c < header.size(); ++c) {
        const auto name = trim(header[c]);
        int slot = -1;
        for (std::size_t s = 0; s < kColumns.size(); ++s)
            if (kColumns[s] == name) slot = static_cast<int>(s);
        if (slot < 0) {
            problems.push_back(fmt::format("line {}: unknown column '{}'", lines.front().first, name));
        } else if (column_of_slot[slot] >= 0) {
            problems.push_back(fmt::format("line {}: column '{}' appears twice", lines.front().first, name));
        } else {
            column_of_slot[slot] = static_cast<int>(c);
        }
        slot_of_column.push_back(slot);
    }
    for (std::size_t s = 0; s < kRequiredColumns; ++s)
        if (column_of_slot[s] < 0)
            problems.push_back(fmt::format("line {}: missing required column '{}'", lines.front().first, kColumns[s]));
    if (!problems.empty()) throw CatalogError(source, problems);

    CatalogFile out;
    out.source_path = std::move(source);
    out.format = CatalogFormat::csv;
    std::set<std::string> seen;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto [number, line] = lines[li];
        const auto fields = split_csv_line(line, ok);
        if (!ok) {
            problems.push_back(fmt::format("line {}: unterminated quoted field", number));
            continue;
        }
        if (fields.size() != header.size()) {
            problems.push_back(fmt::format("line {}: expected {} fields, found {}", number, header.size(), fields.size()));
            continue;
        }
        DiskSpec spec;
        spec.model_id = std::string(trim(fields[column_of_slot[0]]));
        const std::string label = record_label(number, spec.model_id);
        bool parsed = true;
        auto field = [&](std::size_t slot) -> std::string_view {
            return column_of_slot[slot] < 0 ? std::string_view{} : trim(fields[column_of_slot[slot]]);
        };
        auto bad = [&](std::size_t slot, std::string_view value, const char* kind) {
            problems.push_back(fmt::format("{}: field '{}' is not {} ('{}')", label, kColumns[slot], kind, value));
            parsed = false;
        };
        if (!parse_number(field(1), spec.platters)) bad(1, field(1), "an integer");
        if (!parse_number(field(2), spec.rpm)) bad(2, field(2), "a number");
        if (!parse_number(field(3), spec.diameter_in)) bad(3, field(3), "a number");
        for (std::size_t slot : {std::size_t{4}, std::size_t{5}}) {
            const auto value = field(slot);
            if (value.empty()) continue;
            double x = 0.0;
            if (!parse_number(value, x)) {
                bad(slot, value, "a number");
                continue;
            }
            (slot == 4 ? spec.capacity_gb : spec.measured_watts) = x;
        }
        check_id(spec.model_id, label, seen, problems);
        if (!parsed) continue;
        check_record(spec, label, problems);
        out.records.push_back(std::move(spec));
    }
    if (!problems.empty()) throw CatalogError(out.source_path, problems);
    return out;
}

CatalogFile parse_catalog_json(std::string_view text, std::string source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("{}: JSON parse error at byte {}: {}", source, e.byte, e.what()));
    }
    if (!doc.is_array()) throw CatalogError(source, {"top level must be an array of drive records"});

    std::vector<std::string> problems;
    CatalogFile out;
    out.source_path = std::move(source);
    out.format = CatalogFormat::json;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& rec = doc[i];
        std::string label = fmt::format("record {}", i);
        if (!rec.is_object()) {
            problems.push_back(label + ": not an object");
            continue;
        }
        DiskSpec spec;
        bool parsed = true;
        if (auto it = rec.find("model_id"); it != rec.end() && it->is_string()) {
            spec.model_id = it->get<std::string>();
            label = fmt::format("record {} (model '{}')", i, spec.model_id);
        } else {
            problems.push_back(label + ": field 'model_id' is missing or not a string");
            parsed = false;
        }
        for (const auto& [key, _] : rec.items())
            if (std::find(kColumns.begin(), kColumns.end(), key) == kColumns.end())
                problems.push_back(fmt::format("{}: unknown field '{}'", label, key));

        auto number = [&](const char* key, bool required) -> std::optional<double> {
            auto it = rec.find(key);
            if (it == rec.end() || it->is_null()) {
                if (required) {
                    problems.push_back(fmt::format("{}: field '{}' is missing", label, key));
                    parsed = false;
                }
                return std::nullopt;
            }
            if (!it->is_number()) {
                problems.push_back(fmt::format("{}: field '{}' is not a number", label, key));
                parsed = false;
                return std::nullopt;
            }
            return it->get<double>();
        };
        if (auto it = rec.find("platters"); it != rec.end() && it->is_number_integer()) {
            spec.platters = it->get<int>();
        } else {
            problems.push_back(fmt::format("{}: field 'platters' is missing or not an integer", label));
            parsed = false;
        }
        spec.rpm = number("rpm", true).value_or(0.0);
        spec.diameter_in = number("diameter_in", true).value_or(0.0);
        spec.capacity_gb = number("capacity_gb", false);
        spec.measured_watts = number("measured_watts", false);
        if (auto it = rec.find("model_id"); it != rec.end() && it->is_string())
            check_id(spec.model_id, label, seen, problems);
        if (!parsed) continue;
        check_record(spec, label, problems);
        out.records.push_back(std::move(spec));
    }
    if (!problems.empty()) throw CatalogError(out.source_path, problems);
    return out;
}

CatalogFile load_catalog(const std::filesystem::path& path, CatalogFormat format) {
    const std::string text = read_file(path);
    return format == CatalogFormat::csv ? parse_catalog_csv(text, path.string())
                                        : parse_catalog_json(text, path.string());
}

CatalogFile load_catalog(const std::filesystem::path& path) { return load_catalog(path, format_from_path(path)); }

std::string catalog_to_csv(const std::vector<DiskSpec>& records) {
    std::string out = "model_id,platters,rpm,diameter_in,capacity_gb,measured_watts\n";
    for (const auto& r : records) {
        std::string id = r.model_id;
        if (id.find_first_of(",\"") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : id) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            id = quoted + "\"";
        }
        out += fmt::format("{},{},{},{},{},{}\n", id, r.platters, shortest(r.rpm), shortest(r.diameter_in),
                           r.capacity_gb ? shortest(*r.capacity_gb) : "",
                           r.measured_watts ? shortest(*r.measured_watts) : "");
    }
    return out;
}

std::string catalog_to_json(const std::vector<DiskSpec>& records) {
    json doc = json::array();
    for (const auto& r : records) {
        json rec = {{"model_id", r.model_id}, {"platters", r.platters}, {"rpm", r.rpm}, {"diameter_in", r.diameter_in}};
        if (r.capacity_gb) rec["capacity_gb"] = *r.capacity_gb;
        if (r.measured_watts) rec["measured_watts"] = *r.measured_watts;
        doc.push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string model_to_json(const PowerModel& model) {
    validate(model);
    json doc = {{"version", kModelFileVersion},
                {"platter_exp", model.platter_exp},
                {"rpm_exp", model.rpm_exp},
                {"diameter_exp", model.diameter_exp}};
    if (model.constant_k) doc["constant_k"] = *model.constant_k;
    return doc.dump(2) + "\n";
}

PowerModel model_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("model file: JSON parse error at byte {}: {}", e.byte, e.what()));
    }
    if (!doc.is_object()) throw ParseError("model file: top level must be an object");
    auto vit = doc.find("version");
    if (vit == doc.end() || !vit->is_number_integer()) throw ParseError("model file: missing integer 'version'");
    const int version = vit->get<int>();
    if (version != kModelFileVersion)
        throw VersionError(version, kModelFileVersion,
                           fmt::format("model file: unsupported version {} (expected {})", version, kModelFileVersion));

    auto number = [&](const char* key) -> double {
        auto it = doc.find(key);
        if (it == doc.end() || !it->is_number())
            throw ParseError(fmt::format("model file: field '{}' is missing or not a number", key));
        return it->get<double>();
    };
    PowerModel m;
    m.platter_exp = number("platter_exp");
    m.rpm_exp = number("rpm_exp");
    m.diameter_exp = number("diameter_exp");
    if (auto it = doc.find("constant_k"); it != doc.end() && !it->is_null()) m.constant_k = number("constant_k");
    validate(m);
    return m;
}

void save_model(const PowerModel& model, const std::filesystem::path& path) { write_file(path, model_to_json(model)); }

PowerModel load_model(const std::filesystem::path& path) { return model_from_json(read_file(path)); }

}  // namespace hddpower
