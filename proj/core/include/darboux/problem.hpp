#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/expression.hpp"
#include "darboux/kform.hpp"
#include "darboux/mpoly.hpp"

namespace darboux {

/// A parsed problem file:
///
///     # comment
///     vars x y
///     codim 1
///     omega x*dy - 2*y*dx
///     hyp x
///     hyp y
///
/// `vars` must precede `omega` and `hyp`; `vars`, `codim` and `omega` are
/// required and may appear once each.
struct ProblemFile {
  VariableTable vars;
  std::size_t codim = 0;
  KForm omega;
  std::vector<MPoly> hyps;
  /// Driver flags (not part of the file text).
  std::map<std::string, std::string> options;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ParseError with a 1-based line/column on any failure.
ProblemFile parse_problem(std::string_view text);

/// Canonical problem text; parse_problem(serialize_problem(p)) == p for
/// problems without options.
std::string serialize_problem(const ProblemFile& problem);

}  // namespace darboux
