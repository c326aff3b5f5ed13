#pragma once

#include <stdexcept>
#include <string>

namespace zonalkit {

// Bad user input (malformed partition, self-pair, size mismatch, ...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request exceeds a configured enumeration/size ceiling.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zonalkit
