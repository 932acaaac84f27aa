#pragma once

#include <optional>
#include <vector>

#include "srpb/engines/engines.hpp"

namespace srpb::detail {

// Runs the extension recursion, writing its tree into `node`.
std::optional<ModIso> extend_into(const ProjModule& p, const ExtendOracle& oracle, CertBuilder& cb,
                                  std::vector<Obligation>& obligations, json& node);

json obligations_json(CertBuilder& cb, const std::vector<Obligation>& obligations);

} // namespace srpb::detail
