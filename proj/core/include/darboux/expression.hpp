#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/kform.hpp"
#include "darboux/mpoly.hpp"

namespace darboux {

/// Where an expression starts in its source file, for error positions.
struct SourcePosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Declared variable names in order. Names are identifiers; `i` is reserved
/// for the imaginary unit and `d<name>` must not shadow another variable's
/// differential.
class VariableTable {
 public:
  VariableTable() = default;
  /// Throws InvalidArgument on a malformed, duplicate or reserved name.
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Index of `name`, or size() when undeclared.
  std::size_t find(std::string_view name) const;

  friend bool operator==(const VariableTable&, const VariableTable&) = default;

 private:
  std::vector<std::string> names_;
};

/// Checks a variable name without building a table; returns an error
/// message or empty.
std::string validate_identifier(std::string_view name);

/// Parses a polynomial expression: sums, products, integer powers,
/// parentheses, scalar literals and division by nonzero constants.
/// Throws ParseError (SyntaxError, UndeclaredVariable, DegreeMismatch).
MPoly parse_polynomial(std::string_view text, const VariableTable& vars, SourcePosition at = {});

/// Parses a form expression such as `x*dy^dz - y*dx^dz + z*dx^dy`. A zero
/// expression (e.g. `0`) yields the zero form of `expected_degree`; any
/// other degree mismatch throws ParseError(DegreeMismatch).
KForm parse_form(std::string_view text, const VariableTable& vars, std::size_t expected_degree,
                 SourcePosition at = {});

/// As parse_form, taking the degree from the expression itself (0 for a
/// plain polynomial or zero).
KForm parse_form_any_degree(std::string_view text, const VariableTable& vars, SourcePosition at = {});

/// Canonical text, terms in descending graded-lex order: `x^2 - 2/3*y + 1`.
std::string format_polynomial(const MPoly& p, const VariableTable& vars);

/// Canonical text, terms in basis order: `-2*y*dx + x*dy`,
/// `(x + y)*dx^dy`. The zero form prints as `0`.
std::string format_form(const KForm& form, const VariableTable& vars);

}  // namespace darboux
