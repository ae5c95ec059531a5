#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "simwords/generator.hpp"

namespace simwords {

// Lattice path over moves (1,1) and (1,-1), recorded as '1'/'0'.
struct DyckRoute {
  std::string steps;

  // Balanced and never below the axis.
  bool valid() const;
  int up_count() const;

  bool operator==(const DyckRoute&) const = default;
};

// The log of one execution prefix: route, masked erase blocks, survivors.
// X and Y are padded with stars to length m; s is the surviving word.
struct ExecutionLog {
  DyckRoute route;
  StarWord x;
  StarWord y;
  std::vector<Letter> s;
  int m = 0;  // number of appends
  RunParams params;

  bool operator==(const ExecutionLog&) const = default;
};

// Trace -> log. Appends become up-steps; each erase contributes ell
// down-steps plus its X/Y blocks; the run is closed with one down-step per
// surviving letter and star padding up to length m.
ExecutionLog encode(const RunTrace& trace);

// Log -> the unique choice sequence r_1..r_M that produced it. Throws
// kMalformedLog when the log cannot have come from any execution.
std::vector<Letter> decode(const ExecutionLog& log);

struct LogIssue {
  std::string code;
  std::string message;
};

// Reports every broken structural invariant without stopping at the first.
std::vector<LogIssue> validate(const ExecutionLog& log);

nlohmann::json log_to_json(const ExecutionLog& log);
ExecutionLog log_from_json(const nlohmann::json& doc);

// Canonical serialization: two-space indent, alphabetical keys, trailing
// newline. Golden files compare byte-for-byte against this form.
std::string log_to_string(const ExecutionLog& log);
ExecutionLog log_from_string(std::string_view text);

nlohmann::json trace_to_json(const RunTrace& trace);

}  // namespace simwords
