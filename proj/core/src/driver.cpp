#include "darboux/driver.hpp"

#include <string>
#include <utility>

#include "darboux/error.hpp"
#include "darboux/integrator.hpp"
#include "darboux/plane_field.hpp"

namespace darboux {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotLDS: return "NotLDS";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::FlatnessViolated: return "FlatnessViolated";
    case ErrorCode::InsufficientHypersurfaces: return "InsufficientHypersurfaces";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::RatioNotFirstIntegral: return "RatioNotFirstIntegral";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(Subcommand cmd) {
  switch (cmd) {
    case Subcommand::check: return "check";
    case Subcommand::invariant: return "invariant";
    case Subcommand::integrate: return "integrate";
    case Subcommand::verify: return "verify";
  }
  return "check";
}

std::optional<Subcommand> parse_subcommand(std::string_view text) {
  for (auto c : {Subcommand::check, Subcommand::invariant, Subcommand::integrate, Subcommand::verify}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

namespace {

void finish(Report& r, Status status, int code) {
  r.status = status;
  r.exit_code = code;
}

std::string hyp_name(const Report& r, const std::string& subject) {
  try {
    const auto i = std::stoul(subject);
    if (i < r.hyps.size()) return "hypersurface " + format_polynomial(r.hyps[i], r.vars);
  } catch (const std::logic_error&) {
  }
  return subject.empty() ? std::string() : "'" + subject + "'";
}

std::string describe(const Error& e, const Report& r) {
  std::string out = std::string(to_string(e.code())) + ": " + e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    out += " (line " + std::to_string(pe->line()) + ", column " + std::to_string(pe->column()) + ")";
  } else if (auto name = hyp_name(r, e.subject()); !name.empty()) {
    out += " [" + name + "]";
  }
  return out;
}

void fail_with(Report& r, const Error& e) {
  r.diagnostics.push_back(describe(e, r));
  finish(r, Status::error,
         e.code() == ErrorCode::InternalInconsistency ? exit_codes::kCertificateFailure : exit_codes::kInvalidInput);
}

Report base_report(Subcommand cmd, const ProblemFile& problem) {
  Report r;
  r.command = std::string(to_string(cmd));
  r.vars = problem.vars;
  r.codim = problem.codim;
  r.content = MPoly::constant(problem.vars.size(), GaussianRational(1));
  r.hyps = problem.hyps;
  return r;
}

void check_max_degree(const ProblemFile& problem, const RunOptions& options) {
  if (!options.max_degree) return;
  const int bound = *options.max_degree;
  if (problem.omega.max_coefficient_degree() > bound) {
    throw Error(ErrorCode::InvalidArgument, "omega exceeds --max-degree " + std::to_string(bound), "omega");
  }
  for (std::size_t i = 0; i < problem.hyps.size(); ++i) {
    if (problem.hyps[i].total_degree() > bound) {
      throw Error(ErrorCode::InvalidArgument, "polynomial exceeds --max-degree " + std::to_string(bound),
                  std::to_string(i));
    }
  }
}

/// Loads the plane field into `r`; nullopt (with status not_lds) when the
/// form is not decomposable.
std::optional<PlaneField> load_field(Report& r, const ProblemFile& problem) {
  r.content = normalize_content(problem.omega).content;
  try {
    PlaneField field = load_plane_field(problem.vars.size(), problem.codim, problem.omega);
    r.lds = true;
    r.integrable = field.integrable().value_or(false);
    return field;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotLDS) throw;
    r.lds = false;
    r.diagnostics.push_back(describe(e, r));
    finish(r, Status::not_lds, exit_codes::kNegative);
    return std::nullopt;
  }
}

bool compute_cofactors(Report& r, const PlaneField& field) {
  bool all = true;
  for (std::size_t i = 0; i < r.hyps.size(); ++i) {
    try {
      r.cofactors.emplace_back(invariance_cofactor(field, r.hyps[i]).cofactor);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInvariant) throw Error(e.code(), e.what(), std::to_string(i));
      r.cofactors.emplace_back(std::nullopt);
      r.diagnostics.push_back(describe(Error(e.code(), e.what(), std::to_string(i)), r));
      all = false;
    }
  }
  return all;
}

std::vector<CofactorRecord> records_of(const Report& r) {
  std::vector<CofactorRecord> out;
  for (std::size_t i = 0; i < r.hyps.size(); ++i) out.push_back({Hypersurface(r.hyps[i]), *r.cofactors[i]});
  return out;
}

void integrate(Report& r, const PlaneField& field) {
  try {
    FirstIntegralReport fi = first_integral(field, r.hyps);
    r.kernel = fi.system.kernel_basis;
    for (const auto& c : fi.components) {
      r.components.push_back({format_component(c.exponents, r.hyps, r.vars), c.exponents, c.rational});
    }
    r.verified = fi.verified;
    r.proportionality = fi.proportionality_factor;
    finish(r, Status::ok, exit_codes::kOk);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientHypersurfaces) throw;
    r.kernel = flat_kernel(cofactor_matrix(records_of(r)));
    r.diagnostics.push_back(describe(e, r));
    finish(r, Status::insufficient, exit_codes::kNegative);
  }
}

// ---------------------------------------------------------------- verify

class CertificateCheck {
 public:
  explicit CertificateCheck(Report& r) : r_(r) {}

  void require(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) {
      r_.diagnostics.push_back("certificate failed: " + what);
      ok_ = false;
    }
  }
  bool ok() const { return ok_; }
  std::size_t checked() const { return checked_; }

 private:
  Report& r_;
  bool ok_ = true;
  std::size_t checked_ = 0;
};

void verify(Report& r, const ProblemFile& problem, const Report& prev) {
  if (prev.vars != problem.vars || prev.codim != problem.codim || prev.hyps != problem.hyps) {
    throw Error(ErrorCode::InvalidArgument, "report does not belong to this problem");
  }
  r.cofactors = prev.cofactors;
  r.kernel = prev.kernel;
  r.components = prev.components;
  r.proportionality = prev.proportionality;

  CertificateCheck check(r);
  auto field = load_field(r, problem);
  r.diagnostics.clear();
  check.require(r.content == prev.content, "extracted content differs");
  check.require(r.lds == prev.lds, "decomposability flag differs");
  if (!field) {
    check.require(prev.status == Status::not_lds, "form is not decomposable");
    if (check.ok()) {
      r.diagnostics.push_back(std::to_string(check.checked()) + " certificates re-checked");
      finish(r, Status::not_lds, exit_codes::kNegative);
    } else {
      finish(r, Status::error, exit_codes::kCertificateFailure);
    }
    return;
  }
  check.require(r.integrable == prev.integrable, "integrability flag differs");

  const std::size_t n = problem.vars.size();
  std::vector<Hypersurface> surfaces;
  if (!prev.cofactors.empty()) {
    check.require(prev.cofactors.size() == prev.hyps.size(), "cofactor count differs from hypersurface count");
  }
  for (std::size_t i = 0; i < prev.cofactors.size() && i < prev.hyps.size(); ++i) {
    const auto label = format_polynomial(prev.hyps[i], r.vars);
    if (prev.cofactors[i]) {
      const KForm& c = *prev.cofactors[i];
      check.require(c.nvars() == n && c.degree() == problem.codim + 1 &&
                        cofactor_residual(*field, prev.hyps[i], c).is_zero(),
                    "cofactor identity for " + label);
    } else {
      bool rejected = false;
      try {
        invariance_cofactor(*field, prev.hyps[i]);
      } catch (const Error& e) {
        rejected = e.code() == ErrorCode::NotInvariant;
      }
      check.require(rejected, label + " reported not invariant but is invariant");
    }
  }
  const bool all_cofactors = !prev.cofactors.empty() && prev.cofactors.size() == prev.hyps.size() &&
                             std::all_of(prev.cofactors.begin(), prev.cofactors.end(),
                                         [](const auto& c) { return c.has_value(); });
  if (all_cofactors) {
    for (const auto& h : prev.hyps) surfaces.emplace_back(h);
  }

  // integrate output must carry the whole chain of certificates
  const bool integrate_report = prev.command == "integrate" || !prev.components.empty();
  if (!prev.kernel.empty() || (integrate_report && prev.status != Status::not_invariant)) {
    check.require(all_cofactors, "kernel reported without a full cofactor list");
  }
  if (all_cofactors && integrate_report) {
    std::vector<KForm> cofs;
    for (const auto& c : prev.cofactors) cofs.push_back(*c);
    for (std::size_t k = 0; k < prev.kernel.size(); ++k) {
      const auto& v = prev.kernel[k];
      const bool shaped = v.size() == cofs.size() &&
                          std::any_of(v.begin(), v.end(), [](const auto& w) { return !w.is_zero(); });
      check.require(shaped && weighted_cofactor_sum(cofs, v).is_zero(),
                    "kernel vector " + std::to_string(k) + " does not annihilate the cofactors");
    }
    const auto kernel = flat_kernel(cofactor_matrix(records_of(prev)));
    check.require(kernel.size() == prev.kernel.size(), "kernel dimension differs");
    if (!prev.kernel.empty() && prev.kernel.front().size() == cofs.size()) {
      ExactMatrix basis(cofs.size(), prev.kernel.size());
      for (std::size_t c = 0; c < prev.kernel.size(); ++c) {
        for (std::size_t row = 0; row < cofs.size() && row < prev.kernel[c].size(); ++row) {
          basis(row, c) = prev.kernel[c][row];
        }
      }
      check.require(flat_kernel(basis).empty(), "kernel vectors are linearly dependent");
    }
  }

  if (integrate_report && prev.status == Status::ok) {
    check.require(prev.components.size() == problem.codim, "component count differs from codimension");
  }
  std::vector<LogForm> forms;
  for (std::size_t k = 0; k < prev.components.size(); ++k) {
    const auto& c = prev.components[k];
    const std::string label = "component " + std::to_string(k);
    if (c.exponents.size() != prev.hyps.size() || surfaces.empty() ||
        std::all_of(c.exponents.begin(), c.exponents.end(), [](const auto& w) { return w.is_zero(); })) {
      check.require(false, label + " is malformed");
      continue;
    }
    LogForm xi(c.exponents, surfaces);
    check.require(verify_first_integral(*field, xi), label + " is not a first integral");
    check.require(c.expression == format_component(c.exponents, prev.hyps, prev.vars),
                  label + " expression does not match its exponents");
    check.require(c.rational == make_component(c.exponents).rational, label + " rationality flag");
    forms.push_back(std::move(xi));
  }
  if (!forms.empty()) {
    const KForm xi = cleared_wedge(forms);
    check.require(!xi.is_zero(), "components are not independent");
    if (prev.proportionality && !xi.is_zero() && xi.degree() == problem.codim) {
      check.require(prev.proportionality->den() * field->form() == prev.proportionality->num() * xi,
                    "omega is not proportional to the components' wedge");
    }
  }

  if (check.ok()) {
    r.verified = prev.status == Status::ok;
    r.diagnostics.push_back(std::to_string(check.checked()) + " certificates re-checked");
    finish(r, prev.status, prev.exit_code);
  } else {
    finish(r, Status::error, exit_codes::kCertificateFailure);
  }
}

}  // namespace

Report run(Subcommand cmd, const ProblemFile& problem, const RunOptions& options) {
  Report r = base_report(cmd, problem);
  try {
    check_max_degree(problem, options);
    if (cmd == Subcommand::verify) {
      if (!options.previous) throw Error(ErrorCode::InvalidArgument, "verify needs a previously emitted report");
      verify(r, problem, *options.previous);
      return r;
    }
    auto field = load_field(r, problem);
    if (!field) return r;
    finish(r, Status::ok, exit_codes::kOk);
    if (cmd == Subcommand::check) return r;

    if (!compute_cofactors(r, *field)) {
      finish(r, Status::not_invariant, exit_codes::kNegative);
      return r;
    }
    if (cmd == Subcommand::invariant) return r;
    if (r.hyps.empty()) throw Error(ErrorCode::InvalidArgument, "integrate needs at least one 'hyp' line");
    integrate(r, *field);
  } catch (const Error& e) {
    fail_with(r, e);
  }
  return r;
}

Report run_text(Subcommand cmd, std::string_view problem_text, const RunOptions& options) {
  ProblemFile problem;
  try {
    problem = parse_problem(problem_text);
  } catch (const Error& e) {
    Report r;
    r.command = std::string(to_string(cmd));
    fail_with(r, e);
    return r;
  }
  return run(cmd, problem, options);
}

}  // namespace darboux
