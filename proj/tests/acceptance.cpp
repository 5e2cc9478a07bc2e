// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "darboux/driver.hpp"
#include "darboux/error.hpp"
#include "darboux/integrator.hpp"
#include "darboux/plane_field.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"
#include "support/reports.hpp"

using namespace darboux;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool threw(ErrorCode expected, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == expected;
  }
  return false;
}

WeightVector W(std::initializer_list<long> ws) {
  WeightVector out;
  for (long w : ws) out.emplace_back(w);
  return out;
}

/// cleared(xi) ^ w vanishes at random points, evaluated without the library's algebra.
bool oracle_first_integral(oracle::Rng& rng, const WeightVector& weights, const std::vector<MPoly>& hyps,
                           const KForm& w, int samples) {
  for (int s = 0; s < samples; ++s) {
    auto x = rng.point(w.nvars());
    auto v = rng.vectors(w.nvars(), w.degree() + 1);
    if (!oracle::cleared_log_wedge_value(weights, hyps, w, x, v).is_zero()) return false;
  }
  return true;
}

const char* const kLinear = "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x\nhyp y\n";
const char* const kRadial = "vars x y z\ncodim 2\nomega x*dy^dz - y*dx^dz + z*dx^dy\nhyp x\nhyp y\nhyp z\n";

void linear_example(Outcome& out) {
  const auto t0 = Clock::now();
  const Report r = run_text(Subcommand::integrate, kLinear);
  const double elapsed = seconds_since(t0);
  out.require(r.status == Status::ok && r.exit_code == 0, "status ok");
  out.require(r.kernel.size() == 1 && instances::same_span(r.kernel, {W({-2, 1})}, 2), "kernel spans (-2, 1)");
  out.require(r.components.size() == 1, "one component");
  if (!r.components.empty()) {
    out.require(r.components[0].exponents == W({-2, 1}), "exponents (-2, 1)");
    out.require(r.components[0].expression == "y * x^-2", "component y/x^2");
  }
  out.require(r.verified, "verified");
  const auto vars = VariableTable({"x", "y"});
  oracle::Rng rng(7001);
  const auto w = parse_form("x*dy - 2*y*dx", vars, 1);
  out.require(oracle_first_integral(rng, W({-2, 1}), {parse_polynomial("x", vars), parse_polynomial("y", vars)}, w, 25),
              "oracle: dH ^ w = 0");
  out.require(elapsed < 1.0, "runtime < 1 s");
  out.note << "kernel=" << (r.kernel.empty() ? "[]" : format_weights(r.kernel[0]))
           << " H=" << (r.components.empty() ? "-" : r.components[0].expression) << " t=" << elapsed * 1e3 << "ms";
}

void radial_example(Outcome& out) {
  const auto t0 = Clock::now();
  const Report r = run_text(Subcommand::integrate, kRadial);
  const auto vars = VariableTable({"x", "y", "z"});
  const auto field = load_plane_field(3, 2, parse_form("x*dy^dz - y*dx^dz + z*dx^dy", vars, 2));
  std::vector<MPoly> hyps{parse_polynomial("x", vars), parse_polynomial("y", vars), parse_polynomial("z", vars)};
  const FirstIntegralReport fi = first_integral(field, hyps);
  const double elapsed = seconds_since(t0);

  out.require(r.status == Status::ok && r.verified && fi.verified, "verified");
  out.require(r.kernel_dim() == 2, "kernel dimension 2");
  std::vector<WeightVector> exps;
  for (const auto& c : r.components) exps.push_back(c.exponents);
  out.require(exps.size() == 2 && instances::same_span(exps, {W({1, -1, 0}), W({0, 1, -1})}, 3),
              "components equivalent to (x/y, y/z)");
  oracle::Rng rng(7002);
  for (const auto& e : exps) out.require(oracle_first_integral(rng, e, hyps, field.form(), 25), "oracle per component");
  bool divides = false;
  try {
    const RationalFunction h = divide_forms(field, cleared_wedge(fi.log_forms));
    divides = h.den() * field.form() == h.num() * fi.cleared_wedge && r.proportionality == h;
  } catch (const Error&) {
  }
  out.require(divides, "divide_forms consistency");
  out.require(elapsed < 1.0, "runtime < 1 s");
  out.note << "kernel_dim=" << r.kernel_dim() << " H=(";
  for (std::size_t i = 0; i < r.components.size(); ++i) out.note << (i ? ", " : "") << r.components[i].expression;
  out.note << ") t=" << elapsed * 1e3 << "ms";
}

void pullback_recovery(Outcome& out) {
  oracle::Rng rng(7003);
  const int target = 60;
  int accepted = 0, draws = 0, recovered = 0;
  std::size_t identities = 0;
  const auto t0 = Clock::now();
  while (accepted < target) {
    ++draws;
    auto inst = instances::draw_pullback(rng);
    if (!inst) continue;
    ++accepted;
    try {
      const auto field = load_plane_field(inst->n, inst->p, inst->omega);
      const auto rep = first_integral(field, inst->hyps);
      bool ok = rep.verified && rep.components.size() == inst->p;
      std::vector<KForm> cof;
      for (std::size_t j = 0; j < inst->hyps.size(); ++j) {
        ok = ok && cofactor_residual(field, inst->hyps[j], rep.system.records[j].cofactor).is_zero();
        cof.push_back(rep.system.records[j].cofactor);
        ++identities;
      }
      for (const auto& v : rep.system.kernel_basis) {
        ok = ok && weighted_cofactor_sum(cof, v).is_zero();
        ++identities;
      }
      for (const auto& lf : rep.log_forms) {
        ok = ok && verify_first_integral(field, lf);
        ++identities;
      }
      const auto& h = rep.proportionality_factor;
      ok = ok && h && h->den() * field.form() == h->num() * rep.cleared_wedge;
      ++identities;
      recovered += ok ? 1 : 0;
    } catch (const Error& e) {
      out.note << "instance " << accepted << " threw " << to_string(e.code()) << "; ";
    }
  }
  out.require(accepted >= 50, ">= 50 instances");
  out.require(recovered == accepted, "100% verified with p components");
  out.note << recovered << "/" << accepted << " recovered (" << draws - accepted
           << " draws outside the input contract), " << identities << " identities exactly zero, t="
           << seconds_since(t0) << "s";
}

void negative_suite(Outcome& out) {
  const VariableTable v2({"x", "y"}), v3({"x", "y", "z"}), v4({"x", "y", "z", "w"});
  out.require(threw(ErrorCode::NotLDS, [&] { load_plane_field(4, 2, parse_form("dx^dy + dz^dw", v4, 2)); }),
              "dx^dy + dz^dw -> NotLDS");
  out.require(threw(ErrorCode::NotInvariant,
                    [&] {
                      invariance_cofactor(load_plane_field(2, 1, parse_form("x*dy - y*dx", v2, 1)),
                                          parse_polynomial("x+1", v2));
                    }),
              "x+1 -> NotInvariant");
  const std::vector<Hypersurface> hs{Hypersurface(parse_polynomial("x", v3)), Hypersurface(parse_polynomial("y", v3)),
                                     Hypersurface(parse_polynomial("z", v3))};
  out.require(threw(ErrorCode::InsufficientHypersurfaces,
                    [&] { select_independent({LogForm(W({1, -1, 0}), hs), LogForm(W({2, -2, 0}), hs)}, 2); }),
              "proportional candidates -> InsufficientHypersurfaces");
  const auto field = load_plane_field(2, 1, parse_form("x*dy - 2*y*dx", v2, 1));
  const auto& w = field.form();
  out.require(threw(ErrorCode::RatioNotFirstIntegral,
                    [&] { extract_ratio(parse_polynomial("x", v2) * w, parse_polynomial("y", v2) * w, field); }),
              "x*w vs y*w -> RatioNotFirstIntegral");
  // the driver maps the same rejections to exit code 1
  out.require(run_text(Subcommand::check, "vars x y z w\ncodim 2\nomega dx^dy + dz^dw\n").exit_code == 1,
              "cli not_lds exit 1");
  out.require(run_text(Subcommand::invariant, "vars x y\ncodim 1\nomega x*dy - y*dx\nhyp x+1\n").exit_code == 1,
              "cli not_invariant exit 1");
  out.note << "4 rejections with the expected error codes";
}

void exterior_properties(Outcome& out) {
  oracle::Rng rng(7004);
  const int cases = 1000;
  int failures = 0;
  const auto t0 = Clock::now();
  auto shape = [&](std::size_t& n, std::size_t& ka, std::size_t& kb) {
    n = 1 + rng.index(4);
    ka = rng.index(n + 1);
    kb = rng.index(n + 1);
  };
  for (int k = 0; k < cases; ++k) {  // anticommutativity
    std::size_t n, ka, kb;
    shape(n, ka, kb);
    auto a = rng.form(n, ka, 2, 3), b = rng.form(n, kb, 2, 3);
    failures += wedge(a, b) == ((ka * kb) % 2 ? -wedge(b, a) : wedge(b, a)) ? 0 : 1;
  }
  for (int k = 0; k < cases; ++k) {  // associativity
    std::size_t n, ka, kb;
    shape(n, ka, kb);
    auto a = rng.form(n, ka, 2, 2), b = rng.form(n, kb, 2, 2), c = rng.form(n, rng.index(n + 1), 2, 2);
    failures += wedge(wedge(a, b), c) == wedge(a, wedge(b, c)) ? 0 : 1;
  }
  for (int k = 0; k < cases; ++k) {  // d o d
    const std::size_t n = 1 + rng.index(4);
    auto a = rng.form(n, rng.index(n + 1), 3, 3);
    failures += exterior_derivative(exterior_derivative(a)).is_zero() ? 0 : 1;
  }
  for (int k = 0; k < cases; ++k) {  // Leibniz
    std::size_t n, ka, kb;
    shape(n, ka, kb);
    auto a = rng.form(n, ka, 3, 3), b = rng.form(n, kb, 3, 3);
    auto second = wedge(a, exterior_derivative(b));
    auto rhs = wedge(exterior_derivative(a), b) + (ka % 2 ? -second : second);
    failures += exterior_derivative(wedge(a, b)) == rhs ? 0 : 1;
  }
  for (int k = 0; k < cases; ++k) {  // contraction anti-derivation
    const std::size_t n = 1 + rng.index(4);
    const std::size_t ka = 1 + rng.index(n), kb = 1 + rng.index(n);
    auto a = rng.form(n, ka, 2, 3), b = rng.form(n, kb, 2, 3);
    const std::size_t j = rng.index(n);
    auto second = wedge(a, contract(j, b));
    auto rhs = wedge(contract(j, a), b) + (ka % 2 ? -second : second);
    failures += contract(j, wedge(a, b)) == rhs ? 0 : 1;
  }
  const double elapsed = seconds_since(t0);
  out.require(failures == 0, "zero failures");
  out.require(elapsed < 30.0, "runtime < 30 s");
  out.note << "5 x " << cases << " cases, " << failures << " failures, t=" << elapsed << "s";
}

void determinism_roundtrip(Outcome& out) {
  const std::vector<std::string> problems{
      kLinear, kRadial, "vars x y z w\ncodim 2\nomega dx^dy + dz^dw\n",
      "vars x y z\ncodim 2\nomega (dx + 2*y*dy)^dz\nhyp x + y^2\nhyp x + y^2 - 1\nhyp z\nhyp z - 1\n",
      "vars x y\ncodim 1\nomega x*dy - y*dx\nhyp x+1\n"};
  int identical = 0, runs = 0;
  for (const auto& p : problems) {
    for (auto cmd : {Subcommand::check, Subcommand::invariant, Subcommand::integrate}) {
      const auto first = serialize_report(run_text(cmd, p), ReportMode::machine);
      for (int k = 0; k < 5; ++k) {
        ++runs;
        identical += serialize_report(run_text(cmd, p), ReportMode::machine) == first ? 1 : 0;
      }
    }
  }
  out.require(identical == runs, "byte-identical machine reports");

  oracle::Rng rng(7005);
  const int reports_n = 100;
  int round_trips = 0;
  for (int k = 0; k < reports_n; ++k) {
    const Report r = reports::random_report(rng);
    try {
      round_trips += parse_report(serialize_report(r, ReportMode::machine)) == r ? 1 : 0;
    } catch (const Error&) {
    }
  }
  out.require(round_trips == reports_n, "parse o serialize identity");
  out.note << identical << "/" << runs << " repeated runs identical, " << round_trips << "/" << reports_n
           << " random reports round-tripped";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"linear_example", linear_example},
      {"radial_example", radial_example},
      {"pullback_recovery", pullback_recovery},
      {"negative_suite", negative_suite},
      {"exterior_properties", exterior_properties},
      {"determinism_roundtrip", determinism_roundtrip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.note << "uncaught: " << e.what();
    }
    std::printf("%s %s: %s\n", out.pass ? "PASS" : "FAIL", name, out.note.str().c_str());
    failed += out.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
