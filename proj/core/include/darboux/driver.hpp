#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "darboux/problem.hpp"
#include "darboux/report.hpp"

namespace darboux {

enum class Subcommand { check, invariant, integrate, verify };

std::string_view to_string(Subcommand cmd);
std::optional<Subcommand> parse_subcommand(std::string_view text);

struct RunOptions {
  /// Reject inputs whose polynomial degree exceeds this bound.
  std::optional<int> max_degree;
  /// Previously emitted machine report; required by `verify`.
  std::optional<Report> previous;
};

/// Dispatches one subcommand. Every failure is mapped into the returned
/// report (status, exit code, diagnostics); nothing is thrown for input
/// errors.
///
///   check      plane-field validation only
///   invariant  per-hypersurface cofactor or rejection
///   integrate  the full first-integral pipeline
///   verify     re-checks the certificates of `options.previous`
Report run(Subcommand cmd, const ProblemFile& problem, const RunOptions& options = {});

/// Parses `problem_text` first; parse failures become an error report with
/// the line/column in its diagnostics.
Report run_text(Subcommand cmd, std::string_view problem_text, const RunOptions& options = {});

}  // namespace darboux
