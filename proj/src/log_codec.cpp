#include "simwords/log_codec.hpp"

#include <algorithm>
#include <string>

#include "simwords/error.hpp"
#include "simwords/rational.hpp"

namespace simwords {

namespace {

int count_stars(const StarWord& block) {
  return static_cast<int>(std::count(block.begin(), block.end(), kStar));
}

// One erased block recovered from the route: length and the word length at
// the moment the erase fired (right after the offending append).
struct EraseRun {
  int length = 0;
  int height_before = 0;
};

struct LogStructure {
  std::vector<EraseRun> runs;
  int core_end = 0;  // route position where the final padding begins
};

void add_issue(std::vector<LogIssue>* issues, const std::string& code,
               const std::string& message) {
  if (issues == nullptr) fail(ErrorKind::kMalformedLog, code + ": " + message);
  issues->push_back({code, message});
}

// Shared structural analysis. In strict mode (issues == nullptr) the first
// problem throws kMalformedLog; otherwise every problem is collected and the
// parts that could not be analyzed are skipped.
std::optional<LogStructure> analyze(const ExecutionLog& log,
                                    std::vector<LogIssue>* issues) {
  const auto& route = log.route.steps;
  const int m = log.m;
  bool route_ok = true;

  if (m < 0) {
    add_issue(issues, "step-count", "m is negative");
    return std::nullopt;
  }
  if (static_cast<int>(route.size()) != 2 * m) {
    add_issue(issues, "route-length",
              "route has " + std::to_string(route.size()) + " steps, expected " +
                  std::to_string(2 * m));
    route_ok = false;
  }
  int height = 0;
  int ups = 0;
  for (const char step : route) {
    if (step == '1') {
      ++height;
      ++ups;
    } else if (step == '0') {
      --height;
      if (height < 0) {
        add_issue(issues, "route-dip", "route goes below the axis");
        route_ok = false;
        break;
      }
    } else {
      add_issue(issues, "route-symbol",
                std::string("route contains '") + step + "'");
      route_ok = false;
      break;
    }
  }
  if (route_ok && height != 0) {
    add_issue(issues, "route-unbalanced", "route does not return to the axis");
    route_ok = false;
  }
  if (route_ok && ups != m) {
    add_issue(issues, "route-ups",
              "route has " + std::to_string(ups) + " up-steps, expected " +
                  std::to_string(m));
    route_ok = false;
  }

  if (static_cast<int>(log.x.size()) != m) {
    add_issue(issues, "x-length", "|X| must equal m");
    route_ok = false;
  }
  if (static_cast<int>(log.y.size()) != m) {
    add_issue(issues, "y-length", "|Y| must equal m");
    route_ok = false;
  }
  const int survivors = static_cast<int>(log.s.size());
  if (survivors > m) {
    add_issue(issues, "s-length", "more survivors than steps");
    route_ok = false;
  }
  if (!route_ok) return std::nullopt;

  // Padding: the last |S| down-steps close the run; X and Y carry matching
  // star padding.
  const int core_end = 2 * m - survivors;
  for (int i = core_end; i < 2 * m; ++i) {
    if (route[static_cast<std::size_t>(i)] != '0') {
      add_issue(issues, "route-padding",
                "final " + std::to_string(survivors) + " steps must be down-steps");
      return std::nullopt;
    }
  }
  const int erased_total = m - survivors;
  for (int i = erased_total; i < m; ++i) {
    if (log.x[static_cast<std::size_t>(i)] != kStar ||
        log.y[static_cast<std::size_t>(i)] != kStar) {
      add_issue(issues, "padding-stars",
                "X and Y must end in star padding past position " +
                    std::to_string(erased_total));
      return std::nullopt;
    }
  }

  LogStructure structure;
  structure.core_end = core_end;
  int h = 0;
  int i = 0;
  while (i < core_end) {
    if (route[static_cast<std::size_t>(i)] == '1') {
      ++h;
      ++i;
      continue;
    }
    int length = 0;
    const int height_before = h;
    while (i < core_end && route[static_cast<std::size_t>(i)] == '0') {
      ++length;
      ++i;
    }
    h -= length;
    if (height_before < 2 * length) {
      add_issue(issues, "erase-depth",
                "an erase of " + std::to_string(length) +
                    " letters needs a word of length at least " +
                    std::to_string(2 * length));
      return std::nullopt;
    }
    structure.runs.push_back({length, height_before});
  }
  return structure;
}

// Per-block consistency between the partitioned X', Y' and the run lengths.
bool check_blocks(const ExecutionLog& log, const LogStructure& structure,
                  std::vector<LogIssue>* issues) {
  bool ok = true;
  int offset = 0;
  const Rational& alpha = log.params.alpha;
  for (std::size_t b = 0; b < structure.runs.size(); ++b) {
    const int d = structure.runs[b].length;
    int x_stars = 0;
    int y_stars = 0;
    for (int j = 0; j < d; ++j) {
      const Letter xs = log.x[static_cast<std::size_t>(offset + j)];
      const Letter ys = log.y[static_cast<std::size_t>(offset + j)];
      if (xs == kStar) {
        ++x_stars;
      } else if (xs < 1 || xs > log.params.k) {
        add_issue(issues, "x-symbol",
                  "X block " + std::to_string(b) + " holds symbol " +
                      std::to_string(xs));
        ok = false;
      }
      if (ys == kStar) {
        ++y_stars;
      } else if (ys != kZero) {
        add_issue(issues, "y-symbol",
                  "Y block " + std::to_string(b) + " holds symbol " +
                      std::to_string(ys));
        ok = false;
      }
    }
    if (x_stars != y_stars) {
      add_issue(issues, "star-count",
                "block " + std::to_string(b) + " has " + std::to_string(x_stars) +
                    " stars in X but " + std::to_string(y_stars) + " in Y");
      ok = false;
    }
    // Every erased block came from a pair with s > alpha, so strictly more
    // than alpha*ell of its positions are starred.
    if (Rational(x_stars, d) <= alpha) {
      add_issue(issues, "star-fraction",
                "block " + std::to_string(b) + " has only " +
                    std::to_string(x_stars) + " stars over length " +
                    std::to_string(d));
      ok = false;
    }
    offset += d;
  }
  return ok;
}

std::string symbol_to_string(Letter symbol) {
  if (symbol == kStar) return "*";
  return std::to_string(symbol);
}

Letter symbol_from_string(const std::string& text) {
  if (text == "*") return kStar;
  try {
    const int value = std::stoi(text);
    if (value >= 0 && std::to_string(value) == text) return value;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::kMalformedLog, "bad X/Y symbol '" + text + "'");
}

nlohmann::json params_to_json(const RunParams& params) {
  return nlohmann::json{{"alpha", format_rational(params.alpha)},
                        {"k", params.k},
                        {"max_steps", params.max_steps},
                        {"n", params.n},
                        {"seed", params.seed}};
}

RunParams params_from_json(const nlohmann::json& doc) {
  RunParams params;
  params.alpha = parse_rational(doc.at("alpha").get<std::string>());
  params.k = doc.at("k").get<int>();
  params.n = doc.at("n").get<int>();
  params.seed = doc.at("seed").get<std::uint64_t>();
  params.max_steps = doc.at("max_steps").get<std::uint64_t>();
  return params;
}

}  // namespace

bool DyckRoute::valid() const {
  int height = 0;
  for (const char step : steps) {
    if (step == '1') {
      ++height;
    } else if (step == '0') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

int DyckRoute::up_count() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), '1'));
}

ExecutionLog encode(const RunTrace& trace) {
  ExecutionLog log;
  log.params = trace.params;

  int live = 0;
  int m = 0;
  for (const RunEvent& event : trace.events) {
    if (const auto* append = std::get_if<AppendEvent>(&event)) {
      if (append->letter < 1 || append->letter > trace.params.k) {
        fail(ErrorKind::kInconsistentTrace, "append letter out of range");
      }
      log.route.steps.push_back('1');
      ++live;
      ++m;
      continue;
    }
    const auto& erase = std::get<EraseEvent>(event);
    if (erase.ell < 1 || erase.t < 0 || erase.t + 2 * erase.ell != live) {
      fail(ErrorKind::kInconsistentTrace, "erase does not end at the last position");
    }
    if (static_cast<int>(erase.x_block.size()) != erase.ell ||
        static_cast<int>(erase.y_block.size()) != erase.ell) {
      fail(ErrorKind::kInconsistentTrace, "erase blocks must have length ell");
    }
    const int stars = count_stars(erase.x_block);
    if (stars != count_stars(erase.y_block)) {
      fail(ErrorKind::kInconsistentTrace, "erase blocks disagree on star count");
    }
    if (Rational(stars, erase.ell) <= trace.params.alpha) {
      fail(ErrorKind::kInconsistentTrace,
           "erase block must be starred on more than alpha*ell positions");
    }
    log.route.steps.append(static_cast<std::size_t>(erase.ell), '0');
    log.x.insert(log.x.end(), erase.x_block.begin(), erase.x_block.end());
    log.y.insert(log.y.end(), erase.y_block.begin(), erase.y_block.end());
    live -= erase.ell;
  }

  if (m != static_cast<int>(trace.random_choices.size())) {
    fail(ErrorKind::kInconsistentTrace, "append count disagrees with choices");
  }
  if (live != static_cast<int>(trace.word.size())) {
    fail(ErrorKind::kInconsistentTrace, "surviving length disagrees with word");
  }

  log.route.steps.append(static_cast<std::size_t>(live), '0');
  log.x.resize(static_cast<std::size_t>(m), kStar);
  log.y.resize(static_cast<std::size_t>(m), kStar);
  log.s = trace.word.letters();
  log.m = m;
  return log;
}

std::vector<Letter> decode(const ExecutionLog& log) {
  const auto structure = analyze(log, nullptr);
  check_blocks(log, *structure, nullptr);

  // Block offsets into the stripped X/Y.
  std::vector<int> offsets(structure->runs.size(), 0);
  int offset = 0;
  for (std::size_t b = 0; b < structure->runs.size(); ++b) {
    offsets[b] = offset;
    offset += structure->runs[b].length;
  }

  // Walk the route backwards from (2M, 0). Appends and erases both act on
  // the tail of the word, so up-steps pop the last letter and down-runs
  // splice the reconstructed x' back onto the end.
  std::vector<Letter> word = log.s;
  std::vector<Letter> choices(static_cast<std::size_t>(log.m));
  int next_up = log.m;
  int pos = structure->core_end - 1;
  int b = static_cast<int>(structure->runs.size()) - 1;
  while (pos >= 0) {
    if (log.route.steps[static_cast<std::size_t>(pos)] == '1') {
      if (word.empty() || next_up == 0) {
        fail(ErrorKind::kMalformedLog, "route pops from an empty word");
      }
      choices[static_cast<std::size_t>(--next_up)] = word.back();
      word.pop_back();
      --pos;
      continue;
    }
    const EraseRun& run = structure->runs[static_cast<std::size_t>(b)];
    const int d = run.length;
    if (static_cast<int>(word.size()) != run.height_before - d ||
        static_cast<int>(word.size()) < d) {
      fail(ErrorKind::kMalformedLog, "erased block has no surviving twin");
    }
    const std::size_t base = word.size() - static_cast<std::size_t>(d);
    std::vector<Letter> lcs_letters;
    for (int j = 0; j < d; ++j) {
      if (log.y[static_cast<std::size_t>(offsets[static_cast<std::size_t>(b)] + j)] == kStar) {
        lcs_letters.push_back(word[base + static_cast<std::size_t>(j)]);
      }
    }
    std::size_t next_lcs = 0;
    for (int j = 0; j < d; ++j) {
      const Letter symbol =
          log.x[static_cast<std::size_t>(offsets[static_cast<std::size_t>(b)] + j)];
      word.push_back(symbol == kStar ? lcs_letters[next_lcs++] : symbol);
    }
    pos -= d;
    --b;
  }
  if (!word.empty() || next_up != 0) {
    fail(ErrorKind::kMalformedLog, "route does not account for every letter");
  }
  return choices;
}

std::vector<LogIssue> validate(const ExecutionLog& log) {
  std::vector<LogIssue> issues;
  const auto structure = analyze(log, &issues);
  if (structure) check_blocks(log, *structure, &issues);
  for (const Letter c : log.s) {
    if (c < 1 || c > log.params.k) {
      issues.push_back({"s-letter", "surviving letter " + std::to_string(c) +
                                        " outside the alphabet"});
      break;
    }
  }
  return issues;
}

nlohmann::json log_to_json(const ExecutionLog& log) {
  nlohmann::json x = nlohmann::json::array();
  for (const Letter symbol : log.x) x.push_back(symbol_to_string(symbol));
  nlohmann::json y = nlohmann::json::array();
  for (const Letter symbol : log.y) y.push_back(symbol_to_string(symbol));
  return nlohmann::json{{"schema", "lcs-sim-log/1"},
                        {"m", log.m},
                        {"params", params_to_json(log.params)},
                        {"route", log.route.steps},
                        {"s", log.s},
                        {"x", x},
                        {"y", y}};
}

ExecutionLog log_from_json(const nlohmann::json& doc) {
  try {
    ExecutionLog log;
    if (doc.at("schema").get<std::string>() != "lcs-sim-log/1") {
      fail(ErrorKind::kMalformedLog, "unknown log schema");
    }
    log.m = doc.at("m").get<int>();
    log.params = params_from_json(doc.at("params"));
    log.route.steps = doc.at("route").get<std::string>();
    log.s = doc.at("s").get<std::vector<Letter>>();
    for (const auto& symbol : doc.at("x")) {
      log.x.push_back(symbol_from_string(symbol.get<std::string>()));
    }
    for (const auto& symbol : doc.at("y")) {
      log.y.push_back(symbol_from_string(symbol.get<std::string>()));
    }
    return log;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::kMalformedLog, std::string("bad log document: ") + e.what());
  }
}

std::string log_to_string(const ExecutionLog& log) {
  return log_to_json(log).dump(2) + "\n";
}

ExecutionLog log_from_string(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::kMalformedLog, std::string("bad log JSON: ") + e.what());
  }
  return log_from_json(doc);
}

nlohmann::json trace_to_json(const RunTrace& trace) {
  nlohmann::json events = nlohmann::json::array();
  for (const RunEvent& event : trace.events) {
    if (const auto* append = std::get_if<AppendEvent>(&event)) {
      events.push_back({{"type", "append"}, {"letter", append->letter}});
      continue;
    }
    const auto& erase = std::get<EraseEvent>(event);
    nlohmann::json x_block = nlohmann::json::array();
    for (const Letter symbol : erase.x_block) x_block.push_back(symbol_to_string(symbol));
    nlohmann::json y_block = nlohmann::json::array();
    for (const Letter symbol : erase.y_block) y_block.push_back(symbol_to_string(symbol));
    events.push_back({{"type", "erase"},
                      {"t", erase.t},
                      {"ell", erase.ell},
                      {"x_block", x_block},
                      {"y_block", y_block}});
  }
  return nlohmann::json{
      {"schema", "lcs-sim-trace/1"},
      {"params", params_to_json(trace.params)},
      {"choices", trace.random_choices},
      {"events", events},
      {"outcome", trace.outcome == RunOutcome::kCompleted ? "completed"
                                                          : "step_budget_exhausted"},
      {"word", trace.word.letters()}};
}

}  // namespace simwords
