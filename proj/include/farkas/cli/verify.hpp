#pragma once

// Artifact checks that share nothing with the engines beyond exact
// arithmetic: every identity and inequality is recomputed here.

#include <string>

#include "farkas/cli/problem.hpp"

namespace farkas::cli {

struct VerifyResult {
  bool ok = false;
  std::string message;  // names the violated equation when !ok
};

/// `artifact` is the "artifact" object of a report (a whole report is also
/// accepted). Throws InputError when the artifact does not parse or does not
/// fit the problem's shapes.
VerifyResult verify_artifact(const ProblemFile& problem, const Json& artifact);

}  // namespace farkas::cli
