// Command-line surface: generate words, decode and validate logs, evaluate
// the counting bound, run the backtracking search, profile morphic words.
// Exit codes: 0 success, 2 invalid parameters, 3 budget exhausted,
// 4 malformed input.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "simwords/bounds.hpp"
#include "simwords/config.hpp"
#include "simwords/error.hpp"
#include "simwords/generator.hpp"
#include "simwords/log_codec.hpp"
#include "simwords/morphism.hpp"
#include "simwords/search.hpp"
#include "simwords/similarity.hpp"

namespace {

using namespace simwords;

constexpr int kExitOk = 0;
constexpr int kExitInvalidParams = 2;
constexpr int kExitBudgetExhausted = 3;
constexpr int kExitMalformedInput = 4;

int exit_code_for(const Error& error) {
  switch (error.kind()) {
    case ErrorKind::kInconsistentTrace:
    case ErrorKind::kMalformedLog:
    case ErrorKind::kMalformedInput:
      return kExitMalformedInput;
    default:
      return kExitInvalidParams;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kMalformedInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kInvalidParams, "cannot write " + path.string());
  out << content;
}

std::filesystem::path prepare_out_dir(const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

struct GenerateOptions {
  int k = 43;
  std::string alpha = "37/50";
  int n = 100;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  std::string replay_path;
  std::string out_dir;
};

int run_generate(const GenerateOptions& options) {
  RunParams params;
  params.k = options.k;
  params.alpha = parse_rational(options.alpha);
  params.n = options.n;
  params.seed = options.seed;
  params.max_steps = options.max_steps;

  RunTrace trace;
  if (options.replay_path.empty()) {
    trace = run(params);
  } else {
    trace = replay(params, parse_letters(read_file(options.replay_path)));
  }

  const ExecutionLog log = encode(trace);
  const auto coefficient = similarity_coefficient(trace.word);

  std::cout << "outcome: "
            << (trace.outcome == RunOutcome::kCompleted ? "completed"
                                                        : "step_budget_exhausted")
            << "\nsteps: " << trace.random_choices.size()
            << "\nlength: " << trace.word.size()
            << "\nword: " << format_word(trace.word)
            << "\nsimc = " << format_rational(coefficient.value)
            << "; simc <= alpha (" << format_rational(params.alpha)
            << "): " << (coefficient.value <= params.alpha ? "yes" : "no")
            << "\n";

  if (!options.out_dir.empty()) {
    const auto dir = prepare_out_dir(options.out_dir);
    write_file(dir / "word.txt", format_word(trace.word) + "\n");
    write_file(dir / "trace.json", trace_to_json(trace).dump(2) + "\n");
    write_file(dir / "log.json", log_to_string(log));

    ExperimentConfig config;
    config.subcommand = "generate";
    config.k = params.k;
    config.alpha = format_rational(params.alpha);
    config.n = params.n;
    config.seed = params.seed;
    config.max_steps = params.max_steps;
    config.replay_path = options.replay_path;
    config.out_dir = options.out_dir;
    write_file(dir / "config.json", config_to_string(config));
  }
  return trace.outcome == RunOutcome::kCompleted ? kExitOk : kExitBudgetExhausted;
}

int run_codec_decode(const std::string& path) {
  const ExecutionLog log = log_from_string(read_file(path));
  std::cout << format_word(decode(log)) << "\n";
  return kExitOk;
}

int run_codec_validate(const std::string& path) {
  const ExecutionLog log = log_from_string(read_file(path));
  const auto issues = validate(log);
  if (issues.empty()) {
    std::cout << "log is well-formed\n";
    return kExitOk;
  }
  for (const auto& issue : issues) {
    std::cout << issue.code << ": " << issue.message << "\n";
  }
  return kExitMalformedInput;
}

struct RoundtripOptions {
  int runs = 100;
  int k = 43;
  std::string alpha = "37/50";
  int n = 40;
  std::uint64_t max_steps = 400;
  std::uint64_t seed = 0;
};

int run_codec_roundtrip(const RoundtripOptions& options) {
  RunParams params;
  params.k = options.k;
  params.alpha = parse_rational(options.alpha);
  params.n = options.n;
  params.max_steps = options.max_steps;

  int failures = 0;
  for (int i = 0; i < options.runs; ++i) {
    params.seed = options.seed + static_cast<std::uint64_t>(i);
    const RunTrace trace = run(params);
    if (decode(encode(trace)) != trace.random_choices) ++failures;
  }
  std::cout << options.runs << " runs, " << failures << " failures\n";
  return failures == 0 ? kExitOk : 1;
}

struct BoundsOptions {
  std::string alpha;
  int k = 0;
  long long n = 0;
  long long m = 0;
  long long m_max = 0;
  bool relaxed = false;
  std::string out_dir;
};

void print_report(const BoundReport& report, bool relaxed) {
  std::cout << "k=" << report.k << " alpha=" << format_rational(report.alpha)
            << " n=" << report.n << " M=" << report.m
            << " lhs_digits=" << report.lhs.get_str().size()
            << " rhs_digits=" << report.rhs.get_str().size()
            << " contradiction=" << (report.contradiction ? "true" : "false")
            << "\n";
  if (relaxed) {
    const RelaxedBound diag =
        relaxed_bound(report.k, report.alpha, report.n, report.m);
    std::cout << "relaxed: ln_lhs=" << diag.ln_lhs << " ln_rhs=" << diag.ln_rhs
              << " exact: ln_lhs=" << ln_bigint(report.lhs)
              << " ln_rhs=" << ln_bigint(report.rhs) << "\n";
  }
}

void maybe_write_csv(const BoundsOptions& options,
                     const std::vector<BoundReport>& rows) {
  if (options.out_dir.empty()) return;
  const auto dir = prepare_out_dir(options.out_dir);
  std::ostringstream csv;
  write_bound_csv(csv, rows);
  write_file(dir / "bounds.csv", csv.str());

  ExperimentConfig config;
  config.subcommand = "bounds";
  config.alpha = format_rational(parse_rational(options.alpha));
  config.k = options.k;
  config.n = options.n;
  config.m = options.m;
  config.m_max = options.m_max;
  config.out_dir = options.out_dir;
  config.format = "csv";
  write_file(dir / "config.json", config_to_string(config));
}

int run_bounds(const BoundsOptions& options) {
  const Rational alpha = parse_rational(options.alpha);
  if (options.k == 0) {
    // Threshold query alone: the smallest k with k > 16^(1/alpha).
    std::cout << min_alphabet(alpha).get_str() << "\n";
    return kExitOk;
  }
  if (options.n == 0 || (options.m == 0 && options.m_max == 0)) {
    fail(ErrorKind::kInvalidParams,
         "bounds with -k needs -n and one of --m or --m-max");
  }
  if (options.m > 0) {
    const BoundReport report = bound_report(options.k, alpha, options.n, options.m);
    print_report(report, options.relaxed);
    maybe_write_csv(options, {report});
    return kExitOk;
  }
  const auto found = find_contradiction_m(options.k, alpha, options.n, options.m_max);
  if (!found) {
    std::cout << "no contradiction for M <= " << options.m_max << "\n";
    maybe_write_csv(options, {});
    return kExitBudgetExhausted;
  }
  std::cout << "first contradiction at M = " << found->m << "\n";
  print_report(*found, options.relaxed);
  maybe_write_csv(options, {*found});
  return kExitOk;
}

struct SearchOptions {
  int k = 3;
  std::string alpha = "1/2";
  int n = 100;
  std::uint64_t node_budget = 100'000'000;
  std::string predicate = "lt";
  bool fix_first_letter = false;
  std::string out_dir;
  std::string format = "text";
};

int run_search(const SearchOptions& options) {
  SearchParams params;
  params.k = options.k;
  params.alpha = parse_rational(options.alpha);
  params.n = options.n;
  params.node_budget = options.node_budget;
  if (options.predicate == "lt") {
    params.predicate = AvoidPredicate::kKeepBelow;
  } else if (options.predicate == "le") {
    params.predicate = AvoidPredicate::kKeepAtMost;
  } else {
    fail(ErrorKind::kInvalidParams, "predicate must be lt or le");
  }
  params.fix_first_letter = options.fix_first_letter;

  const SearchResult result = search(params);
  const char* outcome = result.outcome == SearchResult::Outcome::kFound
                            ? "found"
                            : result.outcome == SearchResult::Outcome::kExhausted
                                  ? "exhausted"
                                  : "budget_exceeded";
  nlohmann::json record{{"outcome", outcome},
                        {"max_length", result.max_length},
                        {"nodes_visited", result.nodes_visited},
                        {"k", params.k},
                        {"alpha", format_rational(params.alpha)},
                        {"n", params.n},
                        {"predicate", options.predicate},
                        {"longest", result.longest.letters()}};
  if (options.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else {
    // The search prunes on s >= alpha (lt) or s > alpha (le).
    std::cout << "outcome: " << outcome << "\nmax_length: " << result.max_length
              << "\nnodes_visited: " << result.nodes_visited
              << "\npredicate: simc " << (options.predicate == "lt" ? "<" : "<=")
              << " " << format_rational(params.alpha)
              << "\nlongest: " << format_word(result.longest) << "\n";
  }

  if (!options.out_dir.empty()) {
    const auto dir = prepare_out_dir(options.out_dir);
    write_file(dir / "result.json", record.dump(2) + "\n");
    write_file(dir / "longest.txt", format_word(result.longest) + "\n");

    ExperimentConfig config;
    config.subcommand = "search";
    config.k = params.k;
    config.alpha = format_rational(params.alpha);
    config.n = params.n;
    config.node_budget = params.node_budget;
    config.predicate = options.predicate;
    config.fix_first_letter = params.fix_first_letter;
    config.out_dir = options.out_dir;
    config.format = options.format;
    write_file(dir / "config.json", config_to_string(config));
  }
  return result.outcome == SearchResult::Outcome::kBudgetExceeded
             ? kExitBudgetExhausted
             : kExitOk;
}

struct ProfileOptions {
  std::string spec_path;
  std::int64_t prefix_length = 1024;
  int max_ell = 100;
  std::string out_dir;
};

int run_profile(const ProfileOptions& options) {
  const MorphismSpec spec = load_morphism(options.spec_path);
  const Word word = iterate(spec, options.prefix_length);
  const SimilarityProfile result = profile(word, options.max_ell);

  std::ostringstream summary;
  write_profile_summary_csv(summary, result, spec.alphabet_size);
  std::cout << summary.str();
  if (result.witness) {
    std::cout << "best = " << format_rational(result.best) << " at t="
              << result.witness->t << " ell=" << result.witness->ell << "\n";
  }

  if (!options.out_dir.empty()) {
    const auto dir = prepare_out_dir(options.out_dir);
    write_file(dir / "word.txt", format_word(word) + "\n");
    std::ostringstream per_ell;
    write_profile_csv(per_ell, result);
    write_file(dir / "profile.csv", per_ell.str());
    write_file(dir / "summary.csv", summary.str());

    ExperimentConfig config;
    config.subcommand = "profile";
    config.k = spec.alphabet_size;
    config.alpha = "0";
    config.prefix_length = options.prefix_length;
    config.max_factor_length = options.max_ell;
    config.spec_path = options.spec_path;
    config.out_dir = options.out_dir;
    config.format = "csv";
    write_file(dir / "config.json", config_to_string(config));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Words over {1..k} with bounded adjacent-factor LCS similarity"};
  app.require_subcommand(1);

  GenerateOptions generate_options;
  auto* generate = app.add_subcommand(
      "generate", "Run the randomized generator (or replay a choice file)");
  generate->add_option("-k", generate_options.k, "alphabet size");
  generate->add_option("--alpha", generate_options.alpha, "threshold, p/q or decimal");
  generate->add_option("-n", generate_options.n, "target length");
  generate->add_option("--seed", generate_options.seed, "PRNG seed");
  generate->add_option("--max-steps", generate_options.max_steps, "append budget");
  generate->add_option("--replay", generate_options.replay_path,
                       "file of letter choices to replay");
  generate->add_option("--out", generate_options.out_dir, "output directory");

  auto* codec = app.add_subcommand("codec", "Encode/decode execution logs");
  codec->require_subcommand(1);
  std::string decode_path;
  auto* codec_decode = codec->add_subcommand("decode", "Print r_1..r_M of a log");
  codec_decode->add_option("log", decode_path, "log JSON file")->required();
  std::string validate_path;
  auto* codec_validate = codec->add_subcommand("validate", "Check log invariants");
  codec_validate->add_option("log", validate_path, "log JSON file")->required();
  RoundtripOptions roundtrip_options;
  auto* codec_roundtrip =
      codec->add_subcommand("roundtrip", "Random decode(encode(run)) checks");
  codec_roundtrip->add_option("--runs", roundtrip_options.runs, "number of runs");
  codec_roundtrip->add_option("-k", roundtrip_options.k, "alphabet size");
  codec_roundtrip->add_option("--alpha", roundtrip_options.alpha, "threshold");
  codec_roundtrip->add_option("-n", roundtrip_options.n, "target length");
  codec_roundtrip->add_option("--max-steps", roundtrip_options.max_steps,
                              "append budget per run");
  codec_roundtrip->add_option("--seed", roundtrip_options.seed, "base seed");

  BoundsOptions bounds_options;
  auto* bounds = app.add_subcommand(
      "bounds", "Alphabet threshold and the exact counting bound");
  bounds->add_option("--alpha", bounds_options.alpha, "threshold")->required();
  bounds->add_option("-k", bounds_options.k, "alphabet size");
  bounds->add_option("-n", bounds_options.n, "word length bound");
  bounds->add_option("--m", bounds_options.m, "evaluate one step count M");
  bounds->add_option("--m-max", bounds_options.m_max,
                     "search the smallest contradicting M");
  bounds->add_flag("--relaxed", bounds_options.relaxed,
                   "also print the asymptotic-chain diagnostic");
  bounds->add_option("--out", bounds_options.out_dir, "output directory");

  SearchOptions search_options;
  auto* search_cmd =
      app.add_subcommand("search", "Deterministic backtracking search");
  search_cmd->add_option("-k", search_options.k, "alphabet size");
  search_cmd->add_option("--alpha", search_options.alpha, "threshold");
  search_cmd->add_option("-n", search_options.n, "target length");
  search_cmd->add_option("--node-budget", search_options.node_budget,
                         "candidate evaluations before giving up");
  search_cmd->add_option("--predicate", search_options.predicate,
                         "lt (keep simc < alpha) or le (keep simc <= alpha)");
  search_cmd->add_flag("--fix-first-letter", search_options.fix_first_letter,
                       "branch the root only on letter 1");
  search_cmd->add_option("--out", search_options.out_dir, "output directory");
  search_cmd->add_option("--format", search_options.format, "text or json");

  ProfileOptions profile_options;
  auto* profile_cmd =
      app.add_subcommand("profile", "Similarity profile of a morphic word");
  profile_cmd->add_option("--spec", profile_options.spec_path, "morphism JSON file")
      ->required();
  profile_cmd->add_option("--prefix", profile_options.prefix_length,
                          "prefix length to build");
  profile_cmd->add_option("--max-ell", profile_options.max_ell,
                          "largest factor length ell to scan");
  profile_cmd->add_option("--out", profile_options.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidParams;
  }

  try {
    if (*generate) return run_generate(generate_options);
    if (*codec_decode) return run_codec_decode(decode_path);
    if (*codec_validate) return run_codec_validate(validate_path);
    if (*codec_roundtrip) return run_codec_roundtrip(roundtrip_options);
    if (*bounds) return run_bounds(bounds_options);
    if (*search_cmd) return run_search(search_options);
    if (*profile_cmd) return run_profile(profile_options);
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return kExitInvalidParams;
}
