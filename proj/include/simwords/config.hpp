#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "simwords/rational.hpp"

namespace simwords {

// Resolved parameters of one CLI invocation, mirrored to disk so a run can
// be replayed from its output directory alone. Alpha is kept in exact "p/q"
// form.
struct ExperimentConfig {
  std::string subcommand;
  int k = 2;
  std::string alpha = "1/2";
  std::int64_t n = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  std::uint64_t node_budget = 100'000'000;
  std::string predicate = "lt";
  bool fix_first_letter = false;
  std::int64_t runs = 0;
  std::int64_t m = 0;
  std::int64_t m_max = 0;
  std::int64_t prefix_length = 0;
  int max_factor_length = 0;
  std::string spec_path;
  std::string replay_path;
  std::string out_dir;
  std::string format = "json";

  bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& doc);

std::string config_to_string(const ExperimentConfig& config);
ExperimentConfig config_from_string(std::string_view text);

}  // namespace simwords
