#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "farkas/cli/problem.hpp"
#include "farkas/support/options.hpp"

namespace farkas::cli {

enum class Verdict { kDominance, kWitness, kUndecided, kInconsistent, kError };

std::string verdict_name(Verdict v);
/// 0 DOMINANCE, 1 WITNESS, 2 UNDECIDED, 3 INCONSISTENT, 4 ERROR.
int exit_code(Verdict v);

struct Stats {
  double millis = 0;
  std::uint64_t lp_solves = 0;
  std::uint64_t lp_pivots = 0;
};

struct Report {
  Kind kind = Kind::kHomogeneous;
  Verdict verdict = Verdict::kError;
  Json artifact;
  /// True when the artifact passed the independent verifier; UNDECIDED
  /// reports carry bounds only and stay false.
  bool verified = false;
  Stats stats;
};

/// Command-line settings; unset fields fall back to the file, then to defaults.
struct Overrides {
  std::optional<int> polygon_sides;
  std::optional<std::size_t> orthant_cap;
  unsigned jobs = 1;
};
SolveOptions effective_options(const ProblemFile& problem, const Overrides& overrides);

/// Dispatches by kind and re-checks the artifact with verify_artifact before
/// returning; a failed re-check throws std::logic_error.
Report solve(const ProblemFile& problem, const SolveOptions& options);

/// {"kind", "verdict", "verified", "artifact", "stats"}.
Json report_json(const Report& report);

/// The artifact set against the statement it instantiates.
std::string explain(const ProblemFile& problem, const Report& report);

}  // namespace farkas::cli
