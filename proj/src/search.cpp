#include "simwords/search.hpp"

#include "simwords/error.hpp"

namespace simwords {

SearchResult search(const SearchParams& params) {
  if (params.k < 1) fail(ErrorKind::kInvalidParams, "k must be at least 1");
  if (params.n < 1) fail(ErrorKind::kInvalidParams, "n must be at least 1");
  if (params.alpha <= Rational(0) || params.alpha > Rational(1)) {
    fail(ErrorKind::kInvalidParams, "alpha must lie in (0, 1]");
  }

  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(params.n));
  std::vector<Letter> next_letter{1};  // per-depth candidate counters
  next_letter.reserve(static_cast<std::size_t>(params.n) + 1);
  std::vector<Letter> longest;
  std::uint64_t nodes = 0;

  const auto result = [&](SearchResult::Outcome outcome, const std::vector<Letter>& w) {
    return SearchResult{outcome, Word(w, params.k), nodes, static_cast<int>(w.size())};
  };

  while (true) {
    const int limit =
        word.empty() && params.fix_first_letter ? 1 : params.k;
    if (next_letter.back() > limit) {
      next_letter.pop_back();
      if (next_letter.empty()) return result(SearchResult::Outcome::kExhausted, longest);
      word.pop_back();
      continue;
    }
    if (nodes == params.node_budget) {
      return result(SearchResult::Outcome::kBudgetExceeded, longest);
    }
    ++nodes;
    word.push_back(next_letter.back()++);
    if (has_violation_ending_at(word, params.alpha, params.predicate)) {
      word.pop_back();
      continue;
    }
    if (word.size() > longest.size()) longest = word;
    if (static_cast<int>(word.size()) == params.n) {
      return result(SearchResult::Outcome::kFound, word);
    }
    next_letter.push_back(1);
  }
}

}  // namespace simwords
