#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simwords/error.hpp"
#include "simwords/lcs.hpp"
#include "simwords/rational.hpp"
#include "simwords/word.hpp"

using namespace simwords;

namespace {

std::vector<Letter> random_word(std::mt19937& rng, int max_length, int k) {
  std::uniform_int_distribution<int> length_dist(0, max_length);
  std::uniform_int_distribution<Letter> letter_dist(1, k);
  std::vector<Letter> word(static_cast<std::size_t>(length_dist(rng)));
  for (auto& c : word) c = letter_dist(rng);
  return word;
}

}  // namespace

TEST_SUITE("lcs") {

TEST_CASE("worked lcs values") {
  CHECK(lcs_length(Word::from_digits("0120"), Word::from_digits("1220")) == 3);
  CHECK(lcs_length(Word::from_digits("3431"), Word::from_digits("3543")) == 3);
}

TEST_CASE("identity and empty cases") {
  const Word w({1, 2, 3, 2, 1}, 3);
  CHECK(lcs_length(w, w) == 5);
  CHECK(lcs_length(w, Word{}) == 0);
  CHECK(lcs_length(Word{}, Word{}) == 0);
}

TEST_CASE("canonical alignment of the worked example") {
  const auto alignment = lcs_alignment(Word::from_digits("3431"), Word::from_digits("3543"));
  CHECK(alignment.left_positions == std::vector<int>{0, 1, 2});
  CHECK(alignment.right_positions == std::vector<int>{0, 2, 3});
}

TEST_CASE("alignment of a word with itself is the identity") {
  const Word w({2, 1, 2, 3}, 3);
  const auto alignment = lcs_alignment(w, w);
  CHECK(alignment.left_positions == std::vector<int>{0, 1, 2, 3});
  CHECK(alignment.right_positions == alignment.left_positions);
}

TEST_CASE("alignment length matches enumeration on random binary pairs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Letter> letter(1, 2);
  for (int round = 0; round < 300; ++round) {
    std::vector<Letter> x(6), y(6);
    for (auto& c : x) c = letter(rng);
    for (auto& c : y) c = letter(rng);
    const auto alignment = lcs_alignment(x, y);
    CHECK(static_cast<int>(alignment.size()) == oracle::lcs_by_enumeration(x, y));
    CHECK(static_cast<int>(alignment.size()) == lcs_length(x, y));
  }
}

TEST_CASE("alignment is a valid common-subsequence witness") {
  std::mt19937 rng(21);
  for (int round = 0; round < 200; ++round) {
    const auto x = random_word(rng, 12, 3);
    const auto y = random_word(rng, 12, 3);
    const auto alignment = lcs_alignment(x, y);
    REQUIRE(alignment.left_positions.size() == alignment.right_positions.size());
    CHECK(static_cast<int>(alignment.size()) == lcs_length(x, y));
    for (std::size_t i = 0; i < alignment.size(); ++i) {
      const int l = alignment.left_positions[i];
      const int r = alignment.right_positions[i];
      REQUIRE(l >= 0);
      REQUIRE(r >= 0);
      REQUIRE(l < static_cast<int>(x.size()));
      REQUIRE(r < static_cast<int>(y.size()));
      CHECK(x[static_cast<std::size_t>(l)] == y[static_cast<std::size_t>(r)]);
      if (i > 0) {
        CHECK(l > alignment.left_positions[i - 1]);
        CHECK(r > alignment.right_positions[i - 1]);
      }
    }
  }
}

TEST_CASE("symmetry, exhaustively small then randomly large") {
  for (int la = 0; la <= 4; ++la) {
    for (oracle::WordEnumerator a(3, la); !a.done(); a.advance()) {
      for (int lb = 0; lb <= 4; ++lb) {
        for (oracle::WordEnumerator b(3, lb); !b.done(); b.advance()) {
          CHECK(lcs_length(a.word(), b.word()) == lcs_length(b.word(), a.word()));
        }
      }
    }
  }
  std::mt19937 rng(3);
  for (int round = 0; round < 100; ++round) {
    const auto x = random_word(rng, 10, 3);
    const auto y = random_word(rng, 10, 3);
    CHECK(lcs_length(x, y) == lcs_length(y, x));
  }
}

TEST_CASE("upper bound with equality exactly on subsequences") {
  std::mt19937 rng(11);
  for (int round = 0; round < 400; ++round) {
    const auto x = random_word(rng, 9, 2);
    const auto y = random_word(rng, 9, 2);
    const int c = lcs_length(x, y);
    const int bound = static_cast<int>(std::min(x.size(), y.size()));
    CHECK(c <= bound);
    const bool nested = oracle::is_subsequence(x, y) || oracle::is_subsequence(y, x);
    CHECK((c == bound) == nested);
  }
}

TEST_CASE("appending a letter moves lcs by at most one") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<Letter> letter(1, 3);
  for (int round = 0; round < 300; ++round) {
    auto x = random_word(rng, 10, 3);
    auto y = random_word(rng, 10, 3);
    const int base = lcs_length(x, y);
    const Letter a = letter(rng);

    auto xa = x;
    xa.push_back(a);
    const int grown_x = lcs_length(xa, y);
    CHECK(grown_x >= base);
    CHECK(grown_x <= base + 1);

    auto ya = y;
    ya.push_back(a);
    CHECK(lcs_length(xa, ya) >= base);
  }
}

TEST_CASE("banded threshold decision agrees with the full value") {
  // Exhaustive over all equal-length pairs up to length 4 over three letters,
  // every target from 0 to length + 1.
  for (int length = 0; length <= 4; ++length) {
    for (oracle::WordEnumerator a(3, length); !a.done(); a.advance()) {
      for (oracle::WordEnumerator b(3, length); !b.done(); b.advance()) {
        const int c = oracle::lcs_plain(a.word(), b.word());
        for (int target = 0; target <= length + 1; ++target) {
          CHECK(lcs_at_least(a.word(), b.word(), target) == (c >= target));
        }
      }
    }
  }
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> length_dist(1, 40);
  std::uniform_int_distribution<Letter> letter(1, 4);
  for (int round = 0; round < 400; ++round) {
    const int length = length_dist(rng);
    std::vector<Letter> x(static_cast<std::size_t>(length));
    std::vector<Letter> y(static_cast<std::size_t>(length));
    for (auto& c : x) c = letter(rng);
    for (auto& c : y) c = letter(rng);
    const int c = oracle::lcs_plain(x, y);
    for (int target = 0; target <= length + 1; ++target) {
      CHECK(lcs_at_least(x, y, target) == (c >= target));
    }
  }
}

TEST_CASE("word transcription and round trips") {
  const Word w = Word::from_digits("120234313543", 43);
  CHECK(w.letters() == std::vector<Letter>{1, 2, 10, 2, 3, 4, 3, 1, 3, 5, 4, 3});
  CHECK(format_word(w) == "1 2 10 2 3 4 3 1 3 5 4 3");
  CHECK(parse_letters("1 2 10 2\n3") == std::vector<Letter>{1, 2, 10, 2, 3});
  CHECK_THROWS_AS(Word({0}, 3), Error);
  CHECK_THROWS_AS(Word({4}, 3), Error);
  CHECK_THROWS_AS(Word::from_digits("12a"), Error);
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("37/50") == Rational(37, 50));
  CHECK(parse_rational("0.888") == Rational(111, 125));
  CHECK(parse_rational("0.888") == Rational(888, 1000));
  CHECK(parse_rational("1") == Rational(1));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(format_rational(Rational(6, 8)) == "3/4");
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("-1/2"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

}  // TEST_SUITE
