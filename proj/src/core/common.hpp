#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace fuzznorm {

using Json = nlohmann::ordered_json;

// Thrown when a theorem hypothesis is not met by the configured objects
// (NVI domain, lower-semicontinuous t-norm, ...). Callers that produce
// reports map this to the "precondition-unmet" verdict instead of "fail".
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration/parsing problems, carrying a key path when known.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzznorm
