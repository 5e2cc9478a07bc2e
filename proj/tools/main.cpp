// darboux: command-line front end.
//
//   darboux <check|invariant|integrate|verify> <file> [--machine] [--max-degree N] [--quiet]
//   darboux verify <file> --report previous.txt

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "darboux/driver.hpp"
#include "darboux/error.hpp"

namespace {

bool slurp(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux first-integral tool for polynomial plane fields"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string report_file;
  bool machine = false;
  bool quiet = false;
  int max_degree = -1;

  const std::pair<const char*, const char*> commands[] = {
      {"check", "test decomposability and integrability of omega"},
      {"invariant", "compute cofactors of the listed hypersurfaces"},
      {"integrate", "build a Darboux first integral"},
      {"verify", "re-check a machine report against its problem"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "problem file")->required();
    sub->add_flag("--machine", machine, "emit the key = value report");
    sub->add_flag("--quiet", quiet, "suppress report output; exit code only");
    sub->add_option("--max-degree", max_degree, "reject polynomials of higher total degree")
        ->check(CLI::NonNegativeNumber);
    if (std::string(name) == "verify") {
      sub->add_option("--report", report_file, "machine report to re-check")->required();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : darboux::exit_codes::kInvalidInput;
  }

  const auto cmd = darboux::parse_subcommand(app.get_subcommands().front()->get_name());
  darboux::RunOptions options;
  if (max_degree >= 0) options.max_degree = max_degree;

  std::string text;
  if (!slurp(file, text)) {
    std::cerr << "darboux: cannot read " << file << "\n";
    return darboux::exit_codes::kInvalidInput;
  }
  if (!report_file.empty()) {
    std::string previous;
    if (!slurp(report_file, previous)) {
      std::cerr << "darboux: cannot read " << report_file << "\n";
      return darboux::exit_codes::kInvalidInput;
    }
    try {
      options.previous = darboux::parse_report(previous);
    } catch (const darboux::ParseError& e) {
      std::cerr << "darboux: " << report_file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
      return darboux::exit_codes::kInvalidInput;
    }
  }

  const darboux::Report report = darboux::run_text(*cmd, text, options);
  if (!quiet) {
    std::cout << darboux::serialize_report(
        report, machine ? darboux::ReportMode::machine : darboux::ReportMode::human);
  }
  return report.exit_code;
}
