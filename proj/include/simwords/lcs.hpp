#pragma once

#include <span>
#include <vector>

#include "simwords/word.hpp"

namespace simwords {

// Witness for one longest common subsequence: matched positions into each
// word, strictly increasing, pairwise equal letters.
struct Alignment {
  std::vector<int> left_positions;
  std::vector<int> right_positions;

  std::size_t size() const { return left_positions.size(); }
  bool operator==(const Alignment&) const = default;
};

int lcs_length(std::span<const Letter> x, std::span<const Letter> y);
inline int lcs_length(const Word& x, const Word& y) {
  return lcs_length(x.span(), y.span());
}

// Canonical alignment: DP traceback from the end, preferring a match, then
// skipping a letter of x, then skipping a letter of y. Deterministic, so the
// log encoding is a function of the trace.
Alignment lcs_alignment(std::span<const Letter> x, std::span<const Letter> y);
inline Alignment lcs_alignment(const Word& x, const Word& y) {
  return lcs_alignment(x.span(), y.span());
}

// Decides lcs(x, y) >= target for equal-length x, y. Exact: any common
// subsequence of length >= target only matches positions within the band
// |i - j| <= |x| - target, so the banded DP misses nothing.
bool lcs_at_least(std::span<const Letter> x, std::span<const Letter> y,
                  int target);

}  // namespace simwords
