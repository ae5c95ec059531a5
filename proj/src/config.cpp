#include "simwords/config.hpp"

#include "simwords/error.hpp"

namespace simwords {

nlohmann::json config_to_json(const ExperimentConfig& config) {
  return nlohmann::json{{"schema", "lcs-sim-config/1"},
                        {"subcommand", config.subcommand},
                        {"k", config.k},
                        {"alpha", config.alpha},
                        {"n", config.n},
                        {"seed", config.seed},
                        {"max_steps", config.max_steps},
                        {"node_budget", config.node_budget},
                        {"predicate", config.predicate},
                        {"fix_first_letter", config.fix_first_letter},
                        {"runs", config.runs},
                        {"m", config.m},
                        {"m_max", config.m_max},
                        {"prefix_length", config.prefix_length},
                        {"max_factor_length", config.max_factor_length},
                        {"spec_path", config.spec_path},
                        {"replay_path", config.replay_path},
                        {"out_dir", config.out_dir},
                        {"format", config.format}};
}

ExperimentConfig config_from_json(const nlohmann::json& doc) {
  try {
    ExperimentConfig config;
    config.subcommand = doc.at("subcommand").get<std::string>();
    config.k = doc.at("k").get<int>();
    config.alpha = doc.at("alpha").get<std::string>();
    config.n = doc.at("n").get<std::int64_t>();
    config.seed = doc.at("seed").get<std::uint64_t>();
    config.max_steps = doc.at("max_steps").get<std::uint64_t>();
    config.node_budget = doc.at("node_budget").get<std::uint64_t>();
    config.predicate = doc.at("predicate").get<std::string>();
    config.fix_first_letter = doc.at("fix_first_letter").get<bool>();
    config.runs = doc.at("runs").get<std::int64_t>();
    config.m = doc.at("m").get<std::int64_t>();
    config.m_max = doc.at("m_max").get<std::int64_t>();
    config.prefix_length = doc.at("prefix_length").get<std::int64_t>();
    config.max_factor_length = doc.at("max_factor_length").get<int>();
    config.spec_path = doc.at("spec_path").get<std::string>();
    config.replay_path = doc.at("replay_path").get<std::string>();
    config.out_dir = doc.at("out_dir").get<std::string>();
    config.format = doc.at("format").get<std::string>();
    parse_rational(config.alpha);  // must stay an exact rational
    return config;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::kMalformedInput,
         std::string("bad config document: ") + e.what());
  }
}

std::string config_to_string(const ExperimentConfig& config) {
  return config_to_json(config).dump(2) + "\n";
}

ExperimentConfig config_from_string(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::kMalformedInput, std::string("bad config JSON: ") + e.what());
  }
  return config_from_json(doc);
}

}  // namespace simwords
