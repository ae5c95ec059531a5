#pragma once

#include <optional>
#include <span>

#include "simwords/lcs.hpp"
#include "simwords/rational.hpp"
#include "simwords/word.hpp"

namespace simwords {

// A witnessed adjacent factor pair xx' of z: x = z[t, t+ell) and
// x' = z[t+ell, t+2*ell), with beta = lcs(x, x')/ell and a concrete
// alignment between x (left) and x' (right).
struct Violation {
  int t = 0;
  int ell = 0;
  Rational beta{0};
  Alignment alignment;

  bool operator==(const Violation&) const = default;
};

// s(x, y) = lcs(x, y)/|x| for equal-length nonempty words.
Rational similarity(std::span<const Letter> x, std::span<const Letter> y);
inline Rational similarity(const Word& x, const Word& y) {
  return similarity(x.span(), y.span());
}

struct SimilarityCoefficient {
  Rational value{0};
  std::optional<Violation> witness;
};

// Maximum of s(x, x') over all adjacent equal-length factor pairs of z, with
// a witness achieving it (ties: smallest ell, then smallest t). Words shorter
// than 2 have coefficient 0 and no witness.
SimilarityCoefficient similarity_coefficient(std::span<const Letter> z);
inline SimilarityCoefficient similarity_coefficient(const Word& z) {
  return similarity_coefficient(z.span());
}

// Which comparison counts as a violation when scanning factor pairs.
enum class AvoidPredicate {
  kKeepBelow,   // violation when s >= alpha; survivors keep simc < alpha
  kKeepAtMost,  // violation when s > alpha; survivors keep simc <= alpha
};

// True when some factor pair ending at the last position of z violates the
// predicate. Scans ell ascending and stops at the first hit.
bool has_violation_ending_at(std::span<const Letter> z, const Rational& alpha,
                             AvoidPredicate predicate);

// Among all pairs with t + 2*ell = |z|, the one with maximal beta provided
// beta > alpha (ties: smallest ell); nullopt when every such pair has
// s <= alpha.
std::optional<Violation> max_similarity_ending_at(std::span<const Letter> z,
                                                  const Rational& alpha);

// Codec blocks derived from a violation of z: x' with the canonical-LCS
// positions starred, and the star/zero mask over the surviving x.
StarWord violation_x_block(std::span<const Letter> z, const Violation& v);
StarWord violation_y_block(const Violation& v);

}  // namespace simwords
