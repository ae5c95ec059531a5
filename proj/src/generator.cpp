#include "simwords/generator.hpp"

#include <functional>
#include <limits>
#include <optional>

#include "simwords/error.hpp"

namespace simwords {

namespace {

void validate_params(const RunParams& params) {
  if (params.n < 1) fail(ErrorKind::kInvalidParams, "n must be at least 1");
  if (params.k < 2) fail(ErrorKind::kInvalidParams, "alphabet size must be at least 2");
  if (params.alpha <= Rational(0) || params.alpha >= Rational(1)) {
    fail(ErrorKind::kInvalidParams, "alpha must lie strictly between 0 and 1");
  }
}

RunTrace run_impl(const RunParams& params,
                  const std::function<std::optional<Letter>()>& next_choice) {
  RunTrace trace;
  trace.params = params;

  std::vector<Letter> s;
  s.reserve(static_cast<std::size_t>(params.n));
  while (static_cast<int>(s.size()) < params.n) {
    if (trace.random_choices.size() >= params.max_steps) break;
    const auto choice = next_choice();
    if (!choice) break;

    trace.random_choices.push_back(*choice);
    s.push_back(*choice);
    trace.events.push_back(AppendEvent{*choice});

    if (auto violation = max_similarity_ending_at(s, params.alpha)) {
      trace.events.push_back(EraseEvent{violation->t, violation->ell,
                                        violation_x_block(s, *violation),
                                        violation_y_block(*violation)});
      s.resize(s.size() - static_cast<std::size_t>(violation->ell));
    }
  }

  trace.outcome = static_cast<int>(s.size()) == params.n
                      ? RunOutcome::kCompleted
                      : RunOutcome::kStepBudgetExhausted;
  trace.word = Word(std::move(s), params.k);
  return trace;
}

}  // namespace

Letter ChoiceRng::next(int k) {
  const auto bound = static_cast<std::uint64_t>(k);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t remainder = (max % bound + 1) % bound;
  const std::uint64_t limit = max - remainder;  // accept v <= limit
  std::uint64_t v = engine_();
  while (v > limit) v = engine_();
  return static_cast<Letter>(v % bound) + 1;
}

RunTrace run(const RunParams& params) {
  validate_params(params);
  ChoiceRng rng(params.seed);
  return run_impl(params, [&rng, &params]() -> std::optional<Letter> {
    return rng.next(params.k);
  });
}

RunTrace replay(const RunParams& params, std::span<const Letter> choices) {
  validate_params(params);
  for (const Letter c : choices) {
    if (c < 1 || c > params.k) {
      fail(ErrorKind::kLetterOutOfRange,
           "choice " + std::to_string(c) + " outside {1.." +
               std::to_string(params.k) + "}");
    }
  }
  std::size_t next = 0;
  return run_impl(params, [&choices, &next]() -> std::optional<Letter> {
    if (next == choices.size()) return std::nullopt;
    return choices[next++];
  });
}

}  // namespace simwords
