#include "simwords/morphism.hpp"

#include <fstream>
#include <ostream>
#include <thread>

#include "simwords/error.hpp"

namespace simwords {

namespace {

void validate_spec(const MorphismSpec& spec) {
  if (spec.alphabet_size < 1) {
    fail(ErrorKind::kInvalidParams, "alphabet size must be at least 1");
  }
  if (static_cast<int>(spec.images.size()) != spec.alphabet_size) {
    fail(ErrorKind::kInvalidParams, "every letter needs an image");
  }
  if (spec.seed < 1 || spec.seed > spec.alphabet_size) {
    fail(ErrorKind::kInvalidParams, "seed letter outside the alphabet");
  }
  for (int c = 1; c <= spec.alphabet_size; ++c) {
    for (const Letter l : spec.images[static_cast<std::size_t>(c - 1)]) {
      if (l < 1 || l > spec.alphabet_size) {
        fail(ErrorKind::kInvalidParams,
             "image of letter " + std::to_string(c) + " leaves the alphabet");
      }
    }
  }
}

struct PerEllMax {
  int best_lcs = -1;
  int best_t = 0;
};

// Smallest lcs strictly beating best_lcs at this ell; identical comparison to
// the banded threshold used everywhere else.
void scan_one_ell(std::span<const Letter> z, int ell, PerEllMax& out) {
  const int n = static_cast<int>(z.size());
  out.best_lcs = 0;
  out.best_t = 0;
  for (int t = 0; t + 2 * ell <= n; ++t) {
    const auto x = z.subspan(static_cast<std::size_t>(t), static_cast<std::size_t>(ell));
    const auto xp = z.subspan(static_cast<std::size_t>(t + ell), static_cast<std::size_t>(ell));
    if (out.best_lcs > 0 && !lcs_at_least(x, xp, out.best_lcs + 1)) continue;
    const int c = lcs_length(x, xp);
    if (c > out.best_lcs) {
      out.best_lcs = c;
      out.best_t = t;
    }
  }
}

}  // namespace

MorphismSpec morphism_from_json(const nlohmann::json& doc) {
  MorphismSpec spec;
  try {
    spec.alphabet_size = doc.at("alphabet_size").get<int>();
    spec.seed = doc.at("seed").get<Letter>();
    spec.name = doc.value("name", std::string{});
    if (spec.alphabet_size < 1) {
      fail(ErrorKind::kInvalidParams, "alphabet size must be at least 1");
    }
    spec.images.resize(static_cast<std::size_t>(spec.alphabet_size));
    const auto& images = doc.at("images");
    for (int c = 1; c <= spec.alphabet_size; ++c) {
      const std::string key = std::to_string(c);
      if (!images.contains(key)) {
        fail(ErrorKind::kInvalidParams, "missing image for letter " + key);
      }
      spec.images[static_cast<std::size_t>(c - 1)] =
          images.at(key).get<std::vector<Letter>>();
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::kMalformedInput,
         std::string("bad morphism document: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

nlohmann::json morphism_to_json(const MorphismSpec& spec) {
  nlohmann::json images;
  for (int c = 1; c <= spec.alphabet_size; ++c) {
    images[std::to_string(c)] = spec.images[static_cast<std::size_t>(c - 1)];
  }
  nlohmann::json doc{{"alphabet_size", spec.alphabet_size},
                     {"seed", spec.seed},
                     {"images", images}};
  if (!spec.name.empty()) doc["name"] = spec.name;
  return doc;
}

MorphismSpec load_morphism(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kMalformedInput, "cannot open morphism spec " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    fail(ErrorKind::kMalformedInput, std::string("bad morphism JSON: ") + e.what());
  }
  return morphism_from_json(doc);
}

Word iterate(const MorphismSpec& spec, std::int64_t target_length) {
  validate_spec(spec);
  if (target_length < 1) {
    fail(ErrorKind::kInvalidParams, "target length must be at least 1");
  }
  for (int c = 1; c <= spec.alphabet_size; ++c) {
    if (spec.images[static_cast<std::size_t>(c - 1)].empty()) {
      fail(ErrorKind::kImageEmpty, "image of letter " + std::to_string(c) + " is empty");
    }
  }
  if (target_length == 1) {
    return Word({spec.seed}, spec.alphabet_size);
  }
  const auto& seed_image = spec.images[static_cast<std::size_t>(spec.seed - 1)];
  if (seed_image.size() < 2 || seed_image[0] != spec.seed) {
    fail(ErrorKind::kNotProlongable,
         "morphism is not prolongable on letter " + std::to_string(spec.seed));
  }

  // The fixed point is image(w[0]) image(w[1]) ...; expanding letter by
  // letter keeps the buffer one image ahead of the read pointer.
  std::vector<Letter> w = seed_image;
  std::size_t read = 1;
  while (static_cast<std::int64_t>(w.size()) < target_length) {
    const auto& image = spec.images[static_cast<std::size_t>(w[read] - 1)];
    w.insert(w.end(), image.begin(), image.end());
    ++read;
  }
  w.resize(static_cast<std::size_t>(target_length));
  return Word(std::move(w), spec.alphabet_size);
}

SimilarityProfile profile(const Word& word, int max_factor_length) {
  const auto z = word.span();
  const int n = static_cast<int>(z.size());
  if (max_factor_length < 1 || 2 * max_factor_length > n) {
    fail(ErrorKind::kInvalidParams,
         "max factor length must lie in [1, |word|/2]");
  }

  std::vector<PerEllMax> per_ell(static_cast<std::size_t>(max_factor_length));
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      std::min<int>(max_factor_length, std::max(1u, hw == 0 ? 1 : hw));
  if (workers <= 1 || max_factor_length < 8) {
    for (int ell = 1; ell <= max_factor_length; ++ell) {
      scan_one_ell(z, ell, per_ell[static_cast<std::size_t>(ell - 1)]);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int ell = 1 + w; ell <= max_factor_length; ell += workers) {
          scan_one_ell(z, ell, per_ell[static_cast<std::size_t>(ell - 1)]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SimilarityProfile result;
  result.prefix_length = n;
  result.max_factor_length = max_factor_length;
  result.per_length_max.reserve(per_ell.size());
  int best_ell = 1;
  for (int ell = 1; ell <= max_factor_length; ++ell) {
    const auto& entry = per_ell[static_cast<std::size_t>(ell - 1)];
    const Rational value(entry.best_lcs, ell);
    result.per_length_max.emplace_back(ell, value);
    if (ell == 1 || value > result.best) {
      result.best = value;
      best_ell = ell;
    }
  }
  result.monotone_increase = true;
  for (std::size_t i = 1; i < result.per_length_max.size(); ++i) {
    if (result.per_length_max[i].second < result.per_length_max[i - 1].second) {
      result.monotone_increase = false;
      break;
    }
  }

  const auto& winner = per_ell[static_cast<std::size_t>(best_ell - 1)];
  Violation witness;
  witness.t = winner.best_t;
  witness.ell = best_ell;
  witness.beta = result.best;
  witness.alignment = lcs_alignment(
      z.subspan(static_cast<std::size_t>(winner.best_t), static_cast<std::size_t>(best_ell)),
      z.subspan(static_cast<std::size_t>(winner.best_t + best_ell),
                static_cast<std::size_t>(best_ell)));
  result.witness = witness;
  return result;
}

void write_profile_csv(std::ostream& out, const SimilarityProfile& profile) {
  out << "ell,max_similarity\n";
  for (const auto& [ell, value] : profile.per_length_max) {
    out << ell << ',' << format_rational(value) << '\n';
  }
}

void write_profile_summary_csv(std::ostream& out, const SimilarityProfile& profile,
                               int alphabet_size) {
  out << "alphabet_size,similarity_coefficient,prefix_length,factor_length\n";
  out << alphabet_size << ','
      << (profile.monotone_increase ? "-" : format_rational(profile.best)) << ','
      << profile.prefix_length << ',' << profile.max_factor_length << '\n';
}

}  // namespace simwords
