#include "hddpower/errors.hpp"

namespace hddpower {

namespace {

std::string join_problems(const std::string& path, const std::vector<std::string>& problems) {
    std::string out = path + ": " + std::to_string(problems.size()) + " problem(s)";
    for (const auto& p : problems) {
        out += "\n  ";
        out += p;
    }
    return out;
}

}  // namespace

CatalogError::CatalogError(std::string path, std::vector<std::string> problems)
    : Error(join_problems(path, problems)), path_(std::move(path)), problems_(std::move(problems)) {}

}  // namespace hddpower
