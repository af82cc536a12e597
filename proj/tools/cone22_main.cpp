// Command-line front end.
//
//   cone22 analyze <file> [--format text|json] [--tol X] [--mult-tol Y]
//                         [--exact] [-o FILE]
//   cone22 validate <file>
//
// Exit codes: 0 success, 2 scenario parse/validation error, 3 task
// precondition failure.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cone22/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Pseudoconformal CO(2,2) structure and lightlike hypersurface analyzer"};
  app.require_subcommand(1);

  std::string analyze_path;
  std::string format = "json";
  std::string output_path;
  cone22::RunOptions options;

  auto* analyze = app.add_subcommand("analyze", "run the tasks of a scenario file");
  analyze->add_option("file", analyze_path, "scenario JSON file")->required();
  analyze->add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--tol", options.tol, "zero tolerance for the floating backend");
  analyze->add_option("--mult-tol", options.mult_tol, "root clustering tolerance");
  analyze->add_flag("--exact", options.exact, "exact rational backend");
  analyze->add_option("-o,--output", output_path, "write the report to a file");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a scenario file without running it");
  validate->add_option("file", validate_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    options.format = format == "text" ? cone22::ReportFormat::text : cone22::ReportFormat::json;
    std::ostringstream report;
    try {
      cone22::run_scenario(analyze_path, options, report);
    } catch (const cone22::PreconditionError& e) {
      std::cerr << "precondition failure: " << e.what() << "\n";
      return 3;
    } catch (const cone22::ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    if (output_path.empty()) {
      std::cout << report.str();
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return 2;
      }
      out << report.str();
    }
    return 0;
  }

  const auto diagnostics = cone22::validate_scenario(validate_path);
  for (const auto& d : diagnostics) std::cout << d << "\n";
  if (diagnostics.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  return 2;
}
