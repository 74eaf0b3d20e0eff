#pragma once

// One problem per file. The "kind" field selects the engine; the remaining
// fields mirror the library types. See docs/file-format.md.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "farkas/cli/codec.hpp"
#include "farkas/complex/complex_ineq.hpp"
#include "farkas/interval/interval.hpp"
#include "farkas/op/operator_farkas.hpp"

namespace farkas::cli {

enum class Kind {
  kHomogeneous,
  kAlternative,
  kInhomogeneous,
  kMatrix,
  kReconstruct,
  kFactorize,
  kSublinear,
  kInterval,
  kComplex,
  kLagrange,
};

std::string kind_name(Kind kind);
/// Throws InputError naming the accepted kinds.
Kind parse_kind(const std::string& name, const std::string& path);

/// homogeneous, alternative, inhomogeneous (u and v present for the last).
using OperatorPayload = OperatorSystem;

/// A is (s*m) x n, B is (t*m) x n, u has s*m entries, v has t*m.
struct MatrixPayload {
  RatMatrix a;
  RatMatrix b;
  RatVector u;
  RatVector v;
};

struct ReconstructPayload {
  RatMatrix a;
  RatMatrix b;
};

/// X A = B, or with `positive` a nonnegative row x with x A = B (B one row).
struct FactorizePayload {
  RatMatrix a;
  RatMatrix b;
  bool positive = false;
};

/// sublinear uses v; lagrange uses stratum.
struct SublinearPayload {
  std::vector<SublinearOperator> p_list;
  std::vector<RatVector> u_list;
  SublinearOperator target;
  RatVector v;
  std::size_t stratum = 0;
};

struct IntervalPayload {
  std::vector<IntervalOperator> a_list;
  IntervalOperator b;
};

using ComplexPayload = ComplexProblem;

using Payload = std::variant<OperatorPayload, MatrixPayload, ReconstructPayload, FactorizePayload, SublinearPayload,
                             IntervalPayload, ComplexPayload>;

struct FileOptions {
  std::optional<int> polygon_sides;
  std::optional<int> max_polygon_sides;
  std::optional<std::size_t> orthant_cap;
  friend bool operator==(const FileOptions&, const FileOptions&) = default;
};

struct ProblemFile {
  Kind kind = Kind::kHomogeneous;
  SpaceSpec space;
  Payload payload;
  FileOptions options;
};

/// Exact parse; InputError on syntax errors (line and column) or on shape
/// and value errors (field path).
ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem(const Json& doc);
Json serialize_problem(const ProblemFile& problem);

}  // namespace farkas::cli
