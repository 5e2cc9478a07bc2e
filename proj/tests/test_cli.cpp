#include <string>

#include "darboux/driver.hpp"
#include "darboux/expression.hpp"
#include "darboux/problem.hpp"
#include "darboux/report.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "support/reports.hpp"

using namespace darboux;
using th::F;
using th::P;

namespace {

const char* const kLinear = "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x\nhyp y\n";
const char* const kRadial = "vars x y z\ncodim 2\nomega x*dy^dz - y*dx^dz + z*dx^dy\nhyp x\nhyp y\nhyp z\n";
const char* const kSymplectic = "vars x y z w\ncodim 2\nomega dx^dy + dz^dw\n";

ParseError parse_error_of(std::string_view text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(ErrorCode::SyntaxError, "", 0, 0);
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_SUITE("variables") {
  TEST_CASE("table") {
    VariableTable v({"x", "y2", "t_1"});
    CHECK(v.find("y2") == 1);
    CHECK(v.find("q") == 3);
    CHECK_THROWS_CODE(VariableTable({"x", "x"}), ErrorCode::InvalidArgument);
    CHECK_THROWS_CODE(VariableTable({"i"}), ErrorCode::InvalidArgument);
    CHECK_THROWS_CODE(VariableTable({"2x"}), ErrorCode::InvalidArgument);
    CHECK_THROWS_CODE(VariableTable({"x", "dx"}), ErrorCode::InvalidArgument);
    CHECK(validate_identifier("ok_name").empty());
    CHECK_FALSE(validate_identifier("bad-name").empty());
  }
}

TEST_SUITE("expression parser") {
  const auto& V = th::xyz();

  TEST_CASE("polynomials") {
    MPoly hand(3);
    hand.add_term(Monomial({2, 0, 0}), 1);
    hand.add_term(Monomial({0, 1, 1}), GaussianRational(Rational(-2, 3)));
    hand.add_term(Monomial({0, 0, 0}), GaussianRational::imaginary_unit());
    CHECK(P(V, "x^2 - 2/3*y*z + i") == hand);
    CHECK(P(V, "(x+1)^2") == P(V, "x^2 + 2*x + 1"));
    CHECK(P(V, "-(x - y)") == P(V, "y - x"));
    CHECK(P(V, "x/2") == P(V, "1/2*x"));
    CHECK(P(V, "3i*x") == P(V, "3*i*x"));
    CHECK_THROWS_CODE(P(V, "2 x"), ErrorCode::SyntaxError);
    CHECK(P(V, "x*y*z") == P(V, "z*y*x"));
    CHECK(P(V, "0").is_zero());
    CHECK(P(V, "x^0") == P(V, "1"));
  }

  TEST_CASE("forms") {
    auto w = F(V, "x*dy^dz - y*dx^dz + z*dx^dy", 2);
    CHECK(w.coefficient(BasisIndex{1, 2}) == P(V, "x"));
    CHECK(w.coefficient(BasisIndex{0, 2}) == P(V, "-y"));
    CHECK(F(V, "-2/3*dx", 1).coefficient(BasisIndex{0}) == P(V, "-2/3"));
    CHECK(F(V, "(x+y)*dx^dy^dz", 3).coefficient(BasisIndex{0, 1, 2}) == P(V, "x+y"));
    CHECK(F(V, "dy^dx", 2) == F(V, "-dx^dy", 2));
    CHECK(F(V, "dx^dx", 2).is_zero());
    CHECK(F(V, "0", 2) == KForm(3, 2));
    CHECK(parse_form_any_degree("x*dy", V).degree() == 1);
    CHECK(parse_form_any_degree("x", V).degree() == 0);
  }

  TEST_CASE("errors carry positions") {
    auto err = [&](std::string_view text) -> ParseError {
      try {
        parse_form_any_degree(text, V, {4, 7});
      } catch (const ParseError& e) {
        return e;
      }
      FAIL("expected a parse error for " << std::string(text));
      return ParseError(ErrorCode::SyntaxError, "", 0, 0);
    };
    auto e1 = err("x + q");
    CHECK(e1.code() == ErrorCode::UndeclaredVariable);
    CHECK(e1.line() == 4);
    CHECK(e1.column() == 11);
    CHECK(e1.subject() == "q");
    auto e2 = err("x + * y");
    CHECK(e2.code() == ErrorCode::SyntaxError);
    CHECK(e2.column() == 11);
    auto e3 = err("(x + y");
    CHECK(e3.code() == ErrorCode::SyntaxError);
    auto e4 = err("dx + x*dx^dy");
    CHECK(e4.code() == ErrorCode::DegreeMismatch);
    auto e5 = err("x/y");
    CHECK(e5.code() == ErrorCode::SyntaxError);
    auto e6 = err("x/0");
    CHECK(e6.code() == ErrorCode::DivisionByZero);
    auto e7 = err("sqrt(2)*x");
    CHECK(e7.code() == ErrorCode::UndeclaredVariable);
    auto e8 = err("x^-1");
    CHECK(e8.code() == ErrorCode::SyntaxError);
    auto e9 = err("x $ y");
    CHECK(e9.code() == ErrorCode::SyntaxError);
    CHECK(e9.column() == 9);
    CHECK_THROWS_CODE(parse_form("x*dy", V, 2), ErrorCode::DegreeMismatch);
    CHECK_THROWS_CODE(parse_polynomial("x*dy", V), ErrorCode::DegreeMismatch);
  }

  TEST_CASE("canonical formatting") {
    CHECK(format_polynomial(P(V, "1 - 2/3*y + x^2"), V) == "x^2 - 2/3*y + 1");
    CHECK(format_polynomial(P(V, "0"), V) == "0");
    CHECK(format_polynomial(P(V, "-x*y"), V) == "-x*y");
    CHECK(format_polynomial(P(V, "(1+2i)*x - i"), V) == "(1+2*i)*x - i");
    CHECK(format_form(F(V, "x*dy - 2*y*dx", 1), V) == "-2*y*dx + x*dy");
    CHECK(format_form(F(V, "(x+y)*dx^dy", 2), V) == "(x + y)*dx^dy");
    CHECK(format_form(F(V, "-dx^dy^dz", 3), V) == "-dx^dy^dz");
    CHECK(format_form(KForm(3, 1), V) == "0");
  }

  TEST_CASE("format then parse is the identity") {
    oracle::Rng rng(601);
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = 1 + rng.index(3);
      const auto vars = th::generic_vars(n);
      auto p = rng.poly(n, 3, 5, 0.3);
      REQUIRE(parse_polynomial(format_polynomial(p, vars), vars) == p);
      const std::size_t deg = rng.index(n + 1);
      auto a = rng.form(n, deg, 2, 4);
      REQUIRE(parse_form(format_form(a, vars), vars, deg) == a);
    }
  }
}

TEST_SUITE("problem file") {
  TEST_CASE("grammar examples") {
    auto lin = parse_problem(kLinear);
    CHECK(lin.vars.size() == 2);
    CHECK(lin.codim == 1);
    CHECK(lin.omega == F(th::xy(), "x*dy - 2*y*dx", 1));
    CHECK(lin.hyps.size() == 2);
    auto rad = parse_problem(kRadial);
    CHECK(rad.vars.size() == 3);
    CHECK(rad.codim == 2);
    CHECK(rad.hyps.size() == 3);
    auto e = parse_error_of("omega dx\n");
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
    CHECK(std::string(e.what()).find("vars") != std::string::npos);
  }

  TEST_CASE("comments, blank lines and whitespace") {
    auto p = parse_problem("# header\n\n  vars x y   # trailing\ncodim 1\n\tomega x*dy - y*dx\n");
    CHECK(p.omega == F(th::xy(), "x*dy - y*dx", 1));
    CHECK(p.hyps.empty());
  }

  TEST_CASE("errors") {
    auto unknown = parse_error_of("vars x\nfoo 3\n");
    CHECK(unknown.line() == 2);
    CHECK(unknown.column() == 1);
    CHECK(std::string(unknown.what()).find("hyp") != std::string::npos);
    CHECK(parse_error_of("vars x y\ncodim 1\nomega x*dq\n").code() == ErrorCode::UndeclaredVariable);
    auto undeclared = parse_error_of("vars x y\ncodim 1\nomega x*dy\nhyp x + q\n");
    CHECK(undeclared.code() == ErrorCode::UndeclaredVariable);
    CHECK(undeclared.line() == 4);
    CHECK(undeclared.column() == 9);
    CHECK(parse_error_of("vars x y\ncodim 2\nomega x*dy\n").code() == ErrorCode::DegreeMismatch);
    CHECK(parse_error_of("vars x y\ncodim one\n").code() == ErrorCode::SyntaxError);
    CHECK(parse_error_of("vars x y\nvars z\n").line() == 2);
    CHECK(parse_error_of("vars x y\ncodim 1\nomega dx\nomega dy\n").line() == 4);
    CHECK(parse_error_of("vars x y\ncodim 1\n").code() == ErrorCode::SyntaxError);
    CHECK(parse_error_of("vars x x\n").code() == ErrorCode::SyntaxError);
    CHECK(parse_error_of("vars\n").code() == ErrorCode::SyntaxError);
  }

  TEST_CASE("serialize then parse is the identity") {
    for (const char* text : {kLinear, kRadial, kSymplectic}) {
      auto p = parse_problem(text);
      CHECK(parse_problem(serialize_problem(p)) == p);
    }
    oracle::Rng rng(602);
    for (int k = 0; k < 200; ++k) {
      ProblemFile p;
      const std::size_t n = 2 + rng.index(3);
      p.vars = th::generic_vars(n);
      p.codim = 1 + rng.index(n - 1);
      p.omega = rng.form(n, p.codim, 2, 4);
      for (std::size_t i = rng.index(4); i > 0; --i) p.hyps.push_back(rng.poly(n, 3, 3, 0.2));
      REQUIRE(parse_problem(serialize_problem(p)) == p);
    }
  }
}

TEST_SUITE("report") {
  TEST_CASE("machine lines") {
    auto r = run_text(Subcommand::integrate, kLinear);
    auto text = serialize_report(r, ReportMode::machine);
    CHECK(has_line(text, "kernel.0 = [-2, 1]"));
    CHECK(has_line(text, "component.0 = y * x^-2"));
    CHECK(has_line(text, "exponents.0 = [-2, 1]"));
    CHECK(has_line(text, "kernel_dim = 1"));
    CHECK(has_line(text, "verified = true"));
    auto nk = run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x\n");
    CHECK(has_line(serialize_report(nk, ReportMode::machine), "kernel_dim = 0"));
  }

  TEST_CASE("formatting helpers") {
    CHECK(format_weights({GaussianRational(-2), GaussianRational(1)}) == "[-2, 1]");
    CHECK(format_weights({}) == "[]");
    const auto& V = th::xy();
    CHECK(format_component({GaussianRational(-2), GaussianRational(1)}, {P(V, "x"), P(V, "y")}, V) == "y * x^-2");
    CHECK(format_component({GaussianRational(1), GaussianRational(-1)}, {P(V, "x+y"), P(V, "x-1")}, V) ==
          "(x + y) * (x - 1)^-1");
    CHECK(format_component({GaussianRational::imaginary_unit(), GaussianRational(0)}, {P(V, "x"), P(V, "y")}, V) ==
          "x^(i)");
  }

  TEST_CASE("human mode carries the same data") {
    auto r = run_text(Subcommand::integrate, kRadial);
    auto human = serialize_report(r, ReportMode::human);
    CHECK(human.find("ok") != std::string::npos);
    for (const auto& c : r.components) CHECK(human.find(c.expression) != std::string::npos);
    for (const auto& k : r.kernel) CHECK(human.find(format_weights(k)) != std::string::npos);
    CHECK(human.find("verified: yes") != std::string::npos);
  }

  TEST_CASE("parse rejects malformed reports") {
    auto text = serialize_report(run_text(Subcommand::integrate, kLinear), ReportMode::machine);
    CHECK_THROWS_CODE(parse_report(text + "bogus = 1\n"), ErrorCode::SyntaxError);
    CHECK_THROWS_CODE(parse_report(text + "status = ok\n"), ErrorCode::SyntaxError);
    CHECK_THROWS_CODE(parse_report("command = check\n"), ErrorCode::SyntaxError);
    std::string broken = text;
    broken.replace(broken.find("status = ok"), 11, "status = maybe");
    CHECK_THROWS_CODE(parse_report(broken), ErrorCode::SyntaxError);
  }

  TEST_CASE("round trip on random reports") {
    oracle::Rng rng(603);
    for (int k = 0; k < 300; ++k) {
      auto r = reports::random_report(rng);
      auto text = serialize_report(r, ReportMode::machine);
      auto back = parse_report(text);
      REQUIRE(back == r);
      REQUIRE(serialize_report(back, ReportMode::machine) == text);
    }
  }

  TEST_CASE("round trip on pipeline reports") {
    for (auto cmd : {Subcommand::check, Subcommand::invariant, Subcommand::integrate}) {
      for (const char* text : {kLinear, kRadial, kSymplectic, "garbage\n"}) {
        auto r = run_text(cmd, text);
        CHECK(parse_report(serialize_report(r, ReportMode::machine)) == r);
      }
    }
  }
}

TEST_SUITE("driver") {
  TEST_CASE("subcommand names") {
    CHECK(parse_subcommand("verify") == Subcommand::verify);
    CHECK_FALSE(parse_subcommand("solve").has_value());
    CHECK(to_string(Subcommand::integrate) == "integrate");
  }

  TEST_CASE("integrate the linear problem") {
    auto r = run_text(Subcommand::integrate, kLinear);
    CHECK(r.status == Status::ok);
    CHECK(r.exit_code == 0);
    CHECK(r.verified);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].expression == "y * x^-2");
  }

  TEST_CASE("not invariant names the polynomial") {
    auto r = run_text(Subcommand::invariant, "vars x y\ncodim 1\nomega x*dy - y*dx\nhyp x+1\n");
    CHECK(r.status == Status::not_invariant);
    CHECK(r.exit_code == 1);
    REQUIRE(r.cofactors.size() == 1);
    CHECK_FALSE(r.cofactors[0].has_value());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].find("x + 1") != std::string::npos);
  }

  TEST_CASE("check rejects the symplectic form") {
    auto r = run_text(Subcommand::check, kSymplectic);
    CHECK(r.status == Status::not_lds);
    CHECK(r.exit_code == 1);
    CHECK_FALSE(r.lds);
  }

  TEST_CASE("check reports flags and content") {
    auto r = run_text(Subcommand::check, "vars x y z\ncodim 1\nomega x*dz - x*y*dx\n");
    CHECK(r.status == Status::ok);
    CHECK(r.lds);
    CHECK_FALSE(r.integrable);
    CHECK(r.content == P(th::xyz(), "x"));
  }

  TEST_CASE("exit codes") {
    CHECK(run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x\n").exit_code == 1);
    CHECK(run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x\nhyp 2*x\n").exit_code ==
          2);
    CHECK(run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp x^2\n").exit_code == 2);
    CHECK(run_text(Subcommand::invariant, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp 3\n").exit_code == 2);
    CHECK(run_text(Subcommand::check, "vars x y\ncodim 1\nomega 0\n").exit_code == 2);
    CHECK(run_text(Subcommand::check, "vars x y\ncodim 1\nomega x*dy +\n").exit_code == 2);
    CHECK(run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\n").exit_code == 2);
    CHECK(run_text(Subcommand::verify, kLinear).exit_code == 2);
  }

  TEST_CASE("parse failures report their position") {
    auto r = run_text(Subcommand::check, "vars x y\ncodim 1\nomega x*dq\n");
    CHECK(r.status == Status::error);
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].find("line 3") != std::string::npos);
    CHECK(r.diagnostics[0].find("column") != std::string::npos);
  }

  TEST_CASE("max degree") {
    RunOptions opt;
    opt.max_degree = 1;
    CHECK(run_text(Subcommand::check, kLinear, opt).exit_code == 0);
    auto r = run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - 2*y*dx\nhyp y - x^2\n", opt);
    CHECK(r.exit_code == 2);
    CHECK(r.diagnostics[0].find("-x^2 + y") != std::string::npos);
  }

  TEST_CASE("verify accepts genuine reports") {
    for (const char* text : {kLinear, kRadial, kSymplectic}) {
      for (auto cmd : {Subcommand::check, Subcommand::invariant, Subcommand::integrate}) {
        auto first = run_text(cmd, text);
        RunOptions opt;
        opt.previous = parse_report(serialize_report(first, ReportMode::machine));
        auto again = run_text(Subcommand::verify, text, opt);
        CHECK(again.exit_code == first.exit_code);
        CHECK(again.status == first.status);
        CHECK(again.verified == (first.status == Status::ok));
      }
    }
    auto inv = run_text(Subcommand::integrate, "vars x y\ncodim 1\nomega x*dy - y*dx\nhyp x+1\nhyp x\n");
    CHECK(inv.status == Status::not_invariant);
    RunOptions opt;
    opt.previous = inv;
    CHECK(run_text(Subcommand::verify, "vars x y\ncodim 1\nomega x*dy - y*dx\nhyp x+1\nhyp x\n", opt).exit_code ==
          1);
  }

  TEST_CASE("verify rejects tampered certificates") {
    const auto first = run_text(Subcommand::integrate, kLinear);
    auto tamper = [&](auto&& edit) {
      Report r = first;
      edit(r);
      RunOptions opt;
      opt.previous = r;
      return run_text(Subcommand::verify, kLinear, opt);
    };
    const auto& V = th::xy();
    auto bad_cof = tamper([&](Report& r) { r.cofactors[0] = F(V, "-3*dx^dy", 2); });
    CHECK(bad_cof.exit_code == 3);
    CHECK(bad_cof.status == Status::error);
    CHECK(tamper([&](Report& r) { r.kernel[0] = {GaussianRational(1), GaussianRational(1)}; }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.kernel.clear(); }).exit_code == 3);
    CHECK(tamper([&](Report& r) {
            r.components[0].exponents = {GaussianRational(1), GaussianRational(1)};
          }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.components[0].expression = "x * y"; }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.proportionality = RationalFunction(P(V, "2")); }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.content = P(V, "x"); }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.integrable = false; }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.cofactors[1] = std::nullopt; }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.components.pop_back(); }).exit_code == 3);
    CHECK(tamper([&](Report& r) { r.hyps.pop_back(); }).exit_code == 2);
  }

  TEST_CASE("determinism") {
    for (const char* text : {kLinear, kRadial, kSymplectic}) {
      for (auto cmd : {Subcommand::check, Subcommand::invariant, Subcommand::integrate}) {
        auto a = serialize_report(run_text(cmd, text), ReportMode::machine);
        auto b = serialize_report(run_text(cmd, text), ReportMode::machine);
        CHECK(a == b);
      }
    }
  }
}
