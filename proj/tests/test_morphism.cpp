#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "simwords/error.hpp"
#include "simwords/morphism.hpp"

using namespace simwords;

namespace {

MorphismSpec thue_morse() {
  MorphismSpec spec;
  spec.alphabet_size = 2;
  spec.images = {{1, 2}, {2, 1}};
  spec.seed = 1;
  spec.name = "thue-morse";
  return spec;
}

// Repeated full application from the seed, the straightforward way.
std::vector<Letter> iterate_by_substitution(const MorphismSpec& spec, int target) {
  std::vector<Letter> w{spec.seed};
  while (static_cast<int>(w.size()) < target) {
    std::vector<Letter> next;
    for (const Letter c : w) {
      const auto& image = spec.images[static_cast<std::size_t>(c - 1)];
      next.insert(next.end(), image.begin(), image.end());
    }
    w = std::move(next);
  }
  w.resize(static_cast<std::size_t>(target));
  return w;
}

}  // namespace

TEST_SUITE("morphism") {

TEST_CASE("thue-morse prefix by hand") {
  CHECK(iterate(thue_morse(), 8).letters() ==
        std::vector<Letter>{1, 2, 2, 1, 2, 1, 1, 2});
}

TEST_CASE("doubling morphism") {
  MorphismSpec spec;
  spec.alphabet_size = 1;
  spec.images = {{1, 1}};
  spec.seed = 1;
  CHECK(iterate(spec, 4).letters() == std::vector<Letter>{1, 1, 1, 1});
}

TEST_CASE("streaming expansion equals plain substitution") {
  const MorphismSpec specs[] = {
      thue_morse(),
      {3, {{1, 2}, {3}, {2}}, 1, "cycle"},
      {2, {{1, 2}, {1}}, 1, "fibonacci"},
  };
  for (const auto& spec : specs) {
    for (const int target : {1, 2, 5, 33, 80}) {
      CHECK(iterate(spec, target).letters() == iterate_by_substitution(spec, target));
    }
  }
}

TEST_CASE("prefix coherence") {
  const MorphismSpec spec = thue_morse();
  for (int target = 1; target < 64; ++target) {
    const auto shorter = iterate(spec, target).letters();
    const auto longer = iterate(spec, target + 1).letters();
    CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
  }
}

TEST_CASE("iterate failure modes") {
  MorphismSpec not_prolongable;
  not_prolongable.alphabet_size = 2;
  not_prolongable.images = {{2, 1}, {1}};
  not_prolongable.seed = 1;
  CHECK_THROWS_AS(iterate(not_prolongable, 5), Error);
  CHECK(iterate(not_prolongable, 1).letters() == std::vector<Letter>{1});

  MorphismSpec empty_image;
  empty_image.alphabet_size = 2;
  empty_image.images = {{1, 2}, {}};
  empty_image.seed = 1;
  CHECK_THROWS_AS(iterate(empty_image, 5), Error);

  CHECK_THROWS_AS(iterate(thue_morse(), 0), Error);
}

TEST_CASE("profile of a constant word") {
  const auto result = profile(Word({1, 1, 1, 1}, 1), 2);
  CHECK(result.best == Rational(1));
  CHECK(result.per_length_max ==
        std::vector<std::pair<int, Rational>>{{1, Rational(1)}, {2, Rational(1)}});
  CHECK(result.monotone_increase);
}

TEST_CASE("profile matches the oracle on random words") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> length_dist(2, 30);
  std::uniform_int_distribution<Letter> letter(1, 3);
  for (int round = 0; round < 120; ++round) {
    std::vector<Letter> letters(static_cast<std::size_t>(length_dist(rng)));
    for (auto& c : letters) c = letter(rng);
    const Word word(letters, 3);
    const int max_ell = static_cast<int>(word.size()) / 2;
    const auto mine = profile(word, max_ell);
    CHECK(mine.best == oracle::simc(word.span()));

    // Per-ell rows against a direct scan.
    for (const auto& [ell, value] : mine.per_length_max) {
      int best_c = 0;
      for (int t = 0; t + 2 * ell <= static_cast<int>(word.size()); ++t) {
        best_c = std::max(best_c,
                          oracle::lcs_plain(word.span().subspan(
                                                static_cast<std::size_t>(t),
                                                static_cast<std::size_t>(ell)),
                                            word.span().subspan(
                                                static_cast<std::size_t>(t + ell),
                                                static_cast<std::size_t>(ell))));
      }
      CHECK(value == Rational(best_c, ell));
    }
  }
}

TEST_CASE("profile is invariant under letter renaming") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<Letter> letter(1, 3);
  const std::vector<std::array<Letter, 3>> permutations = {
      {1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {2, 1, 3}};
  for (int round = 0; round < 40; ++round) {
    std::vector<Letter> letters(20);
    for (auto& c : letters) c = letter(rng);
    const auto base = profile(Word(letters, 3), 10).best;
    for (const auto& perm : permutations) {
      std::vector<Letter> renamed(letters.size());
      for (std::size_t i = 0; i < letters.size(); ++i) {
        renamed[i] = perm[static_cast<std::size_t>(letters[i] - 1)];
      }
      CHECK(profile(Word(renamed, 3), 10).best == base);
    }
  }
}

TEST_CASE("extending a word cannot lower the profile") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<Letter> letter(1, 3);
  for (int round = 0; round < 60; ++round) {
    std::vector<Letter> letters(16);
    for (auto& c : letters) c = letter(rng);
    auto extended = letters;
    extended.push_back(letter(rng));
    CHECK(profile(Word(extended, 3), 8).best >= profile(Word(letters, 3), 8).best);
  }
}

TEST_CASE("profile witness reproduces the best value") {
  const Word word = iterate(thue_morse(), 128);
  const auto result = profile(word, 32);
  REQUIRE(result.witness.has_value());
  const auto& w = *result.witness;
  const auto x = word.span().subspan(static_cast<std::size_t>(w.t),
                                     static_cast<std::size_t>(w.ell));
  const auto xp = word.span().subspan(static_cast<std::size_t>(w.t + w.ell),
                                      static_cast<std::size_t>(w.ell));
  CHECK(similarity(x, xp) == result.best);
  CHECK(w.beta == result.best);
}

TEST_CASE("monotone flag distinguishes increasing from spiky profiles") {
  // 1 1 2 2: s = 1 at ell = 1 but 0 at ell = 2.
  const auto spiky = profile(Word({1, 1, 2, 2}, 2), 2);
  CHECK_FALSE(spiky.monotone_increase);
  CHECK(spiky.best == Rational(1));

  const auto flat = profile(Word({1, 1, 1, 1, 1, 1}, 1), 3);
  CHECK(flat.monotone_increase);
}

TEST_CASE("profile rejects out-of-range factor lengths") {
  const Word word({1, 2, 1, 2}, 2);
  CHECK_THROWS_AS(profile(word, 0), Error);
  CHECK_THROWS_AS(profile(word, 3), Error);
}

TEST_CASE("morphism specs load, validate and round-trip") {
  const MorphismSpec loaded =
      load_morphism(std::string(SIMWORDS_DATA_DIR) + "/morphisms/thue-morse.json");
  CHECK(loaded.alphabet_size == 2);
  CHECK(loaded.seed == 1);
  CHECK(loaded.images == thue_morse().images);
  CHECK(morphism_from_json(morphism_to_json(loaded)).images == loaded.images);

  CHECK_THROWS_AS(load_morphism("/nonexistent/morphism.json"), Error);
  CHECK_THROWS_AS(morphism_from_json(nlohmann::json::parse(R"({"alphabet_size": 2,
      "seed": 1, "images": {"1": [1, 2]}})")),
                  Error);
  CHECK_THROWS_AS(morphism_from_json(nlohmann::json::parse(R"({"alphabet_size": 2,
      "seed": 1, "images": {"1": [1, 3], "2": [2]}})")),
                  Error);
}

TEST_CASE("csv emitters") {
  const auto result = profile(Word({1, 1, 2, 2}, 2), 2);
  std::ostringstream per_ell;
  write_profile_csv(per_ell, result);
  CHECK(per_ell.str() == "ell,max_similarity\n1,1\n2,0\n");

  std::ostringstream summary;
  write_profile_summary_csv(summary, result, 2);
  CHECK(summary.str() ==
        "alphabet_size,similarity_coefficient,prefix_length,factor_length\n"
        "2,1,4,2\n");
}

}  // TEST_SUITE
