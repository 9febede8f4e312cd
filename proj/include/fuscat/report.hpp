#pragma once

#include <string>

#include <json.hpp>

#include "fuscat/quadval.hpp"

namespace fuscat {

using json = nlohmann::json;  // std::map keys, so dumps are sorted and stable

// {"a": "p/q", "b": "p/q", "c": n}
json quad_to_json(const QuadVal& v);
QuadVal quad_from_json(const json& j);

std::string fnv1a_hex(const std::string& bytes);

// exit codes shared by the CLI surface
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitBadRing = 2,
    kExitMismatch = 3,
    kExitBudget = 4,
};

}  // namespace fuscat
