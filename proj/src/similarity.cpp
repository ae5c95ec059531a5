#include "simwords/similarity.hpp"

#include <algorithm>

#include "simwords/error.hpp"

namespace simwords {

namespace {

// Smallest lcs value that makes a length-ell pair violate the predicate.
int violation_threshold(const Rational& alpha, int ell, AvoidPredicate predicate) {
  const auto a = static_cast<__int128>(alpha.numerator());
  const auto b = static_cast<__int128>(alpha.denominator());
  const __int128 product = a * ell;
  __int128 threshold = predicate == AvoidPredicate::kKeepAtMost
                           ? product / b + 1            // lcs/ell > alpha
                           : (product + b - 1) / b;     // lcs/ell >= alpha
  if (threshold < 0) threshold = 0;
  if (threshold > ell + 1) threshold = ell + 1;
  return static_cast<int>(threshold);
}

}  // namespace

Rational similarity(std::span<const Letter> x, std::span<const Letter> y) {
  if (x.size() != y.size()) {
    fail(ErrorKind::kLengthMismatch, "similarity requires equal lengths");
  }
  if (x.empty()) {
    fail(ErrorKind::kEmptyFactor, "similarity of empty factors is undefined");
  }
  return Rational(lcs_length(x, y), static_cast<std::int64_t>(x.size()));
}

SimilarityCoefficient similarity_coefficient(std::span<const Letter> z) {
  const int n = static_cast<int>(z.size());
  if (n < 2) return {};

  Rational best{0};
  int best_t = 0;
  int best_ell = 1;
  bool first = true;
  for (int ell = 1; 2 * ell <= n; ++ell) {
    for (int t = 0; t + 2 * ell <= n; ++t) {
      const auto x = z.subspan(t, ell);
      const auto xp = z.subspan(t + ell, ell);
      if (!first) {
        // Only pairs that can strictly beat the current best need the exact
        // value; the banded decision is exact, so nothing is missed.
        const int needed = violation_threshold(best, ell, AvoidPredicate::kKeepAtMost);
        if (!lcs_at_least(x, xp, needed)) continue;
      }
      const Rational beta(lcs_length(x, xp), ell);
      if (first || beta > best) {
        best = beta;
        best_t = t;
        best_ell = ell;
        first = false;
      }
    }
  }

  Violation witness;
  witness.t = best_t;
  witness.ell = best_ell;
  witness.beta = best;
  witness.alignment =
      lcs_alignment(z.subspan(best_t, best_ell), z.subspan(best_t + best_ell, best_ell));
  return {best, witness};
}

bool has_violation_ending_at(std::span<const Letter> z, const Rational& alpha,
                             AvoidPredicate predicate) {
  const int n = static_cast<int>(z.size());
  for (int ell = 1; 2 * ell <= n; ++ell) {
    const int threshold = violation_threshold(alpha, ell, predicate);
    if (threshold > ell) continue;
    const auto x = z.subspan(n - 2 * ell, ell);
    const auto xp = z.subspan(n - ell, ell);
    if (lcs_at_least(x, xp, threshold)) return true;
  }
  return false;
}

std::optional<Violation> max_similarity_ending_at(std::span<const Letter> z,
                                                  const Rational& alpha) {
  const int n = static_cast<int>(z.size());
  std::optional<Violation> best;
  for (int ell = 1; 2 * ell <= n; ++ell) {
    const int threshold = violation_threshold(alpha, ell, AvoidPredicate::kKeepAtMost);
    if (threshold > ell) continue;
    const auto x = z.subspan(n - 2 * ell, ell);
    const auto xp = z.subspan(n - ell, ell);
    if (!lcs_at_least(x, xp, threshold)) continue;
    const Rational beta(lcs_length(x, xp), ell);
    if (!best || beta > best->beta) {
      best = Violation{n - 2 * ell, ell, beta, {}};
    }
  }
  if (best) {
    best->alignment = lcs_alignment(z.subspan(best->t, best->ell),
                                    z.subspan(best->t + best->ell, best->ell));
  }
  return best;
}

StarWord violation_x_block(std::span<const Letter> z, const Violation& v) {
  StarWord block(z.subspan(v.t + v.ell, v.ell).begin(),
                 z.subspan(v.t + v.ell, v.ell).end());
  for (const int pos : v.alignment.right_positions) {
    block[pos] = kStar;
  }
  return block;
}

StarWord violation_y_block(const Violation& v) {
  StarWord block(static_cast<std::size_t>(v.ell), kZero);
  for (const int pos : v.alignment.left_positions) {
    block[pos] = kStar;
  }
  return block;
}

}  // namespace simwords
