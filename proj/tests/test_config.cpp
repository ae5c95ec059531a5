#include <doctest.h>

#include "simwords/config.hpp"
#include "simwords/error.hpp"

using namespace simwords;

TEST_SUITE("config") {

TEST_CASE("configs round-trip losslessly") {
  ExperimentConfig config;
  config.subcommand = "generate";
  config.k = 43;
  config.alpha = "37/50";
  config.n = 200;
  config.seed = 7;
  config.max_steps = 5000;
  config.node_budget = 123;
  config.predicate = "le";
  config.fix_first_letter = true;
  config.runs = 1000;
  config.m = 12;
  config.m_max = 10000;
  config.prefix_length = 1024;
  config.max_factor_length = 100;
  config.spec_path = "data/morphisms/thue-morse.json";
  config.replay_path = "choices.txt";
  config.out_dir = "out";
  config.format = "csv";

  CHECK(config_from_string(config_to_string(config)) == config);
  CHECK(config_from_json(config_to_json(config)) == config);
}

TEST_CASE("alpha must stay an exact rational") {
  ExperimentConfig config;
  config.subcommand = "bounds";
  config.alpha = "not-a-number";
  CHECK_THROWS_AS(config_from_json(config_to_json(config)), Error);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(config_from_string("{"), Error);
  CHECK_THROWS_AS(config_from_string("{}"), Error);
}

}  // TEST_SUITE
