#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "simwords/similarity.hpp"

namespace simwords {

// Letter-to-word substitution over {1..k}.
struct MorphismSpec {
  int alphabet_size = 1;
  std::vector<std::vector<Letter>> images;  // images[c - 1] = image of letter c
  Letter seed = 1;
  std::string name;
};

MorphismSpec morphism_from_json(const nlohmann::json& doc);
nlohmann::json morphism_to_json(const MorphismSpec& spec);
MorphismSpec load_morphism(const std::string& path);

// Prefix of the morphism's fixed point from the seed letter, truncated to
// target_length. Requires the morphism to be prolongable on the seed
// (image(seed) starts with seed and has length >= 2) whenever growth is
// needed.
Word iterate(const MorphismSpec& spec, std::int64_t target_length);

struct SimilarityProfile {
  std::int64_t prefix_length = 0;
  int max_factor_length = 0;
  Rational best{0};
  std::optional<Violation> witness;
  std::vector<std::pair<int, Rational>> per_length_max;  // (ell, max s at that ell)
  bool monotone_increase = false;  // per-ell maxima nondecreasing over the range
};

// Scans every adjacent factor pair with ell <= max_factor_length. The per-ell
// maxima are independent, so they are computed in parallel and merged in ell
// order; ties go to the smallest ell, then the smallest t.
SimilarityProfile profile(const Word& word, int max_factor_length);

// Rows "ell,max_similarity".
void write_profile_csv(std::ostream& out, const SimilarityProfile& profile);

// One row in the order alphabet size, coefficient, prefix length, factor
// length; a monotone increase renders the coefficient as "-".
void write_profile_summary_csv(std::ostream& out, const SimilarityProfile& profile,
                               int alphabet_size);

}  // namespace simwords
