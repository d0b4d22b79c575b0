#pragma once

// Seeded identity-verification campaigns. A campaign stops at the first
// failing trial and records that trial's full inputs as the counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finsler3/json_io.hpp"

namespace finsler3 {

enum class Backend { Exact, Float };

std::string to_string(Backend b);

struct CampaignConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  Backend backend = Backend::Exact;
  long bound = 9;  // integer entries are drawn from [-bound, bound]
};

struct CampaignResult {
  std::string identity;
  Backend backend = Backend::Exact;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::optional<Json> counterexample;

  bool ok() const { return !counterexample && passed == total; }
};

/// Names accepted by run_campaign, in documentation order.
const std::vector<std::string>& campaign_names();

/// Throws std::invalid_argument for an unknown identity or trials == 0.
CampaignResult run_campaign(const std::string& identity, const CampaignConfig& cfg);

}  // namespace finsler3
