// Batch front end: scenario files in, reports out.
//
// A scenario is a UTF-8 JSON document with schema tag "cone22/1" holding
// optional Weyl data (10 components or a full 256-entry array), an optional
// hypersurface jet, a nonempty task list, and optional tolerance overrides.
// Unknown fields are rejected. Reports are deterministic: stable key order,
// and numbers rendered identically in the text and JSON formats.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cone22 {

// Structural problem in a scenario file (bad JSON, schema violation,
// missing task input). Maps to exit code 2.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A task whose mathematical precondition fails on the given data. Maps to
// exit code 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { text, json };

struct RunOptions {
  ReportFormat format = ReportFormat::json;
  bool exact = false;          // exact rational backend, scalars as "p/q"
  double tol = 1e-10;          // zero tolerance for the floating backend
  double mult_tol = 1e-7;      // root clustering tolerance
};

// Executes the scenario's tasks in declared order and writes the report.
// Throws ScenarioError / PreconditionError; any other exception indicates a
// bug.
void run_scenario(const std::string& scenario_path, const RunOptions& options,
                  std::ostream& out);

// Same, on an in-memory document (used by the tests).
void run_scenario_text(const std::string& scenario_json, const RunOptions& options,
                       std::ostream& out);

// Structural and invariant diagnostics without running tasks; empty means
// well formed. Unreadable files and unparsable JSON produce diagnostics,
// not exceptions.
std::vector<std::string> validate_scenario(const std::string& scenario_path);

std::vector<std::string> validate_scenario_text(const std::string& scenario_json);

}  // namespace cone22
