#pragma once

#include <cstdint>

#include "simwords/similarity.hpp"

namespace simwords {

struct SearchParams {
  int k = 2;
  Rational alpha{1, 2};
  int n = 1;
  std::uint64_t node_budget = 100'000'000;
  AvoidPredicate predicate = AvoidPredicate::kKeepBelow;
  // Branch the root only on letter 1. Sound by alphabet-renaming symmetry;
  // outcomes match the unreduced search.
  bool fix_first_letter = false;
};

struct SearchResult {
  enum class Outcome { kFound, kExhausted, kBudgetExceeded };

  Outcome outcome = Outcome::kExhausted;
  Word longest;  // found word, or the first maximal-length survivor in DFS order
  std::uint64_t nodes_visited = 0;
  int max_length = 0;
};

// Depth-first search appending letters in increasing order. A candidate is
// rejected when it completes a factor pair at the end of the word that
// violates the predicate; accepted prefixes therefore satisfy the avoidance
// condition outright. One node = one candidate letter evaluated.
SearchResult search(const SearchParams& params);

}  // namespace simwords
