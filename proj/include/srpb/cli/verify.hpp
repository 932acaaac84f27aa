#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace srpb {

struct VerifierFailure {
    std::string node;  // path such as root/1/0
    std::string claim; // claim type
    std::string message;
    std::string lhs;
    std::string rhs;
};

struct NodeResult {
    std::string path;
    std::string kind;
    std::string label;
    bool ok = true;
};

struct VerifierReport {
    bool ok = true;
    std::size_t claims_checked = 0;
    std::vector<NodeResult> nodes;
    std::vector<std::string> warnings;
    std::optional<VerifierFailure> failure; // the first one found
    std::string summary() const;
};

/// Re-checks every claim of a certificate with polynomial and quotient-ring
/// arithmetic only. Structural problems (unknown rings, bad shapes, unparsable
/// entries) are reported as failures, never thrown.
VerifierReport verify_certificate(const nlohmann::json& doc);

} // namespace srpb
