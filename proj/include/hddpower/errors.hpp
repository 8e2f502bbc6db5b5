#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hddpower {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A field of a domain record violates its invariant.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error(message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    IoError(std::string path, const std::string& message)
        : Error(message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class VersionError : public Error {
public:
    VersionError(int found, int expected, const std::string& message)
        : Error(message), found_(found), expected_(expected) {}

    int found() const noexcept { return found_; }
    int expected() const noexcept { return expected_; }

private:
    int found_;
    int expected_;
};

// Absolute wattage was requested from a model without a proportionality constant.
class CalibrationError : public Error {
public:
    using Error::Error;
};

class PlanningError : public Error {
public:
    using Error::Error;
};

// Several record-level problems found in one file; what() joins them.
class CatalogError : public Error {
public:
    CatalogError(std::string path, std::vector<std::string> problems);

    const std::string& path() const noexcept { return path_; }
    const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
    std::string path_;
    std::vector<std::string> problems_;
};

}  // namespace hddpower
