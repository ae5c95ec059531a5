#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "simwords/similarity.hpp"

namespace simwords {

struct RunParams {
  int n = 1;                          // target word length
  int k = 2;                          // alphabet size
  Rational alpha{1, 2};               // similarity threshold, in (0, 1)
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;  // cap on appends (M)

  bool operator==(const RunParams&) const = default;
};

struct AppendEvent {
  Letter letter;
  bool operator==(const AppendEvent&) const = default;
};

struct EraseEvent {
  int t = 0;
  int ell = 0;
  StarWord x_block;  // erased x' with canonical-LCS positions starred
  StarWord y_block;  // star/zero mask over the surviving x

  bool operator==(const EraseEvent&) const = default;
};

using RunEvent = std::variant<AppendEvent, EraseEvent>;

enum class RunOutcome { kCompleted, kStepBudgetExhausted };

struct RunTrace {
  RunParams params;
  std::vector<RunEvent> events;
  std::vector<Letter> random_choices;  // r_1..r_M, one per append
  RunOutcome outcome = RunOutcome::kStepBudgetExhausted;
  Word word;  // final word (Completed) or the partial word at cutoff
};

// Uniform letter source. mt19937_64's output stream is pinned by the
// standard, and the rejection sampling below is spelled out here, so a seed
// reproduces the same choices on any platform.
class ChoiceRng {
 public:
  explicit ChoiceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform over {1..k}: draw 64-bit values, reject the top remainder band.
  Letter next(int k);

 private:
  std::mt19937_64 engine_;
};

// Randomized construction: append uniform letters; whenever the new letter
// makes some adjacent factor pair exceed alpha, erase that pair's right half
// and keep going. Completes once the word reaches length n.
RunTrace run(const RunParams& params);

// Identical semantics with a fixed choice sequence. Exhausting the sequence
// before completion yields StepBudgetExhausted with M = |choices|.
RunTrace replay(const RunParams& params, std::span<const Letter> choices);

}  // namespace simwords
