#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "farkas/cli/run.hpp"
#include "farkas/cli/verify.hpp"

namespace {

using farkas::cli::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw farkas::cli::InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Settings {
  std::string input;
  std::string artifact;
  std::string format = "human";
  std::optional<int> polygon_sides;
  std::optional<std::size_t> orthant_cap;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

int fail(const Settings& s, const std::string& message) {
  if (s.format == "machine") {
    std::cout << Json{{"verdict", "ERROR"}, {"error", message}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return farkas::cli::exit_code(farkas::cli::Verdict::kError);
}

// check prints the whole report; certificate and witness print the artifact
// only when the verdict matches and otherwise report what was found instead.
int run(const std::string& command, const Settings& s) {
  using namespace farkas::cli;
  const ProblemFile problem = parse_problem(read_file(s.input));
  if (command == "verify") {
    const VerifyResult result = verify_artifact(problem, parse_json(read_file(s.artifact)));
    if (s.format == "machine") {
      std::cout << Json{{"ok", result.ok}, {"message", result.message}}.dump(2) << "\n";
    } else {
      std::cout << (result.ok ? "OK: " : "REJECTED: ") << result.message << "\n";
    }
    return result.ok ? 0 : 1;
  }
  const Report report = solve(problem, effective_options(problem, Overrides{s.polygon_sides, s.orthant_cap, s.jobs}));
  const Verdict wanted = command == "certificate" ? Verdict::kDominance : Verdict::kWitness;
  if (command != "check" && report.verdict != wanted) {
    if (s.format == "machine") {
      std::cout << report_json(report).dump(2) << "\n";
    } else {
      std::cout << "no " << command << ": the verdict is " << verdict_name(report.verdict) << "\n";
    }
    return exit_code(report.verdict);
  }
  if (s.format == "machine") {
    std::cout << (command == "check" ? report_json(report) : report.artifact).dump(2) << "\n";
  } else {
    std::cout << explain(problem, report);
  }
  return exit_code(report.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Farkas-type alternatives for operator inequalities over Q^n"};
  app.require_subcommand(1);
  Settings s;
  auto common = [&](CLI::App* sub) {
    sub->add_option("input", s.input, "Problem file (JSON)")->required();
    sub->add_option("--format", s.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  };
  auto solving = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--polygon-sides", s.polygon_sides, "Starting polygon size for complex moduli")
        ->check(CLI::Range(4, 1 << 20));
    sub->add_option("--orthant-cap", s.orthant_cap, "Largest n for orthant enumeration");
    sub->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  solving(app.add_subcommand("check", "Decide a problem and print the verdict with its artifact"));
  solving(app.add_subcommand("certificate", "Print the dominance certificate if there is one"));
  solving(app.add_subcommand("witness", "Print the counterexample if there is one"));
  auto* verify = app.add_subcommand("verify", "Check an artifact against a problem");
  common(verify);
  verify->add_option("--artifact", s.artifact, "Artifact or report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : farkas::cli::exit_code(farkas::cli::Verdict::kError);
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, s);
  } catch (const farkas::cli::InputError& e) {
    return fail(s, e.what());
  } catch (const farkas::HypothesisFailed& e) {
    return fail(s, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(s, e.what());
  } catch (const std::exception& e) {
    return fail(s, std::string("internal: ") + e.what());
  }
}
