#include "simwords/lcs.hpp"

#include <algorithm>
#include <limits>

#include "simwords/error.hpp"

namespace simwords {

int lcs_length(std::span<const Letter> x, std::span<const Letter> y) {
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(y.size());
  if (m == 0 || n == 0) return 0;

  thread_local std::vector<int> prev, curr;
  prev.assign(static_cast<std::size_t>(n) + 1, 0);
  curr.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= m; ++i) {
    const Letter xi = x[i - 1];
    for (int j = 1; j <= n; ++j) {
      curr[j] = xi == y[j - 1] ? prev[j - 1] + 1
                               : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[n];
}

Alignment lcs_alignment(std::span<const Letter> x, std::span<const Letter> y) {
  const int m = static_cast<int>(x.size());
  const int n = static_cast<int>(y.size());
  std::vector<int> table(static_cast<std::size_t>(m + 1) * (n + 1), 0);
  const auto at = [&](int i, int j) -> int& {
    return table[static_cast<std::size_t>(i) * (n + 1) + j];
  };
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      at(i, j) = x[i - 1] == y[j - 1] ? at(i - 1, j - 1) + 1
                                      : std::max(at(i - 1, j), at(i, j - 1));
    }
  }

  Alignment alignment;
  alignment.left_positions.reserve(at(m, n));
  alignment.right_positions.reserve(at(m, n));
  int i = m;
  int j = n;
  while (i > 0 && j > 0) {
    if (x[i - 1] == y[j - 1]) {
      alignment.left_positions.push_back(i - 1);
      alignment.right_positions.push_back(j - 1);
      --i;
      --j;
    } else if (at(i - 1, j) == at(i, j)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(alignment.left_positions.begin(), alignment.left_positions.end());
  std::reverse(alignment.right_positions.begin(), alignment.right_positions.end());
  return alignment;
}

bool lcs_at_least(std::span<const Letter> x, std::span<const Letter> y,
                  int target) {
  if (x.size() != y.size()) {
    fail(ErrorKind::kInvalidParams, "lcs_at_least requires equal lengths");
  }
  const int ell = static_cast<int>(x.size());
  if (target <= 0) return true;
  if (target > ell) return false;

  const int d = ell - target;
  const int width = 2 * d + 1;
  if (width >= ell) {
    return lcs_length(x, y) >= target;
  }

  // Row p stores cells (p, q) with q = p - d + o for offsets o in [0, width).
  constexpr int kUnreachable = std::numeric_limits<int>::min() / 2;
  thread_local std::vector<int> prev, curr;
  prev.assign(static_cast<std::size_t>(width), kUnreachable);
  curr.assign(static_cast<std::size_t>(width), kUnreachable);
  for (int o = d; o < width; ++o) prev[o] = 0;

  for (int p = 1; p <= ell; ++p) {
    const Letter xp = x[p - 1];
    for (int o = 0; o < width; ++o) {
      const int q = p - d + o;
      if (q < 0 || q > ell) {
        curr[o] = kUnreachable;
        continue;
      }
      if (q == 0) {
        curr[o] = 0;
        continue;
      }
      int best = xp == y[q - 1] ? prev[o] + 1 : kUnreachable;
      if (o >= 1) best = std::max(best, curr[o - 1]);          // (p, q-1)
      if (o + 1 < width) best = std::max(best, prev[o + 1]);   // (p-1, q)
      curr[o] = best;
    }
    std::swap(prev, curr);
  }
  return prev[d] >= target;
}

}  // namespace simwords
