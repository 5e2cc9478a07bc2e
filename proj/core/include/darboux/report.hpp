#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darboux/expression.hpp"
#include "darboux/integrator.hpp"
#include "darboux/rational_function.hpp"

namespace darboux {

enum class Status { ok, not_lds, not_invariant, insufficient, error };

std::string_view to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

/// Process exit code contract: 0 ok, 1 not integrable / insufficient /
/// rejected input object, 2 invalid input, 3 internal certificate failure.
namespace exit_codes {
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kCertificateFailure = 3;
}  // namespace exit_codes

struct ComponentEntry {
  std::string expression;  ///< e.g. `y * x^-2`
  WeightVector exponents;  ///< one per hypersurface
  bool rational = false;

  friend bool operator==(const ComponentEntry&, const ComponentEntry&) = default;
};

struct Report {
  std::string command;
  Status status = Status::error;
  int exit_code = exit_codes::kInvalidInput;
  VariableTable vars;
  std::size_t codim = 0;
  bool lds = false;
  bool integrable = false;
  MPoly content;
  std::vector<MPoly> hyps;
  /// One entry per hypersurface once cofactors were computed; nullopt marks
  /// a hypersurface that is not invariant.
  std::vector<std::optional<KForm>> cofactors;
  std::vector<WeightVector> kernel;
  std::vector<ComponentEntry> components;
  bool verified = false;
  std::optional<RationalFunction> proportionality;
  std::vector<std::string> diagnostics;

  std::size_t kernel_dim() const noexcept { return kernel.size(); }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportMode { human, machine };

/// Machine mode is line-oriented `key = value` with canonical scalar,
/// polynomial and form syntax and a fixed key order; human mode is prose.
std::string serialize_report(const Report& report, ReportMode mode);

/// Inverse of the machine serialization. Throws ParseError.
Report parse_report(std::string_view text);

/// `prod f_j^{e_j}` with positive exponents first, e.g. `y * x^-2`.
std::string format_component(const WeightVector& exponents, const std::vector<MPoly>& hyps,
                             const VariableTable& vars);

/// `[-2, 1]`
std::string format_weights(const WeightVector& weights);

}  // namespace darboux
