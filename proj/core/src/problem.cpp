#include "darboux/problem.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "darboux/error.hpp"

namespace darboux {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_spaces(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_space(s[pos])) ++pos;
  return pos;
}

std::size_t word_end(std::string_view s, std::size_t pos) {
  while (pos < s.size() && !is_space(s[pos])) ++pos;
  return pos;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  bool have_vars = false;
  std::optional<std::size_t> codim;
  std::optional<std::pair<std::string_view, SourcePosition>> omega_text;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t pos = skip_spaces(line, 0);
    if (pos == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t kw_end = word_end(line, pos);
    const std::string_view keyword = line.substr(pos, kw_end - pos);
    const std::size_t arg_pos = skip_spaces(line, kw_end);
    const std::string_view arg = line.substr(arg_pos);
    const SourcePosition arg_at{line_no, arg_pos + 1};

    auto fail = [&](ErrorCode code, const std::string& msg, std::size_t column, std::string subject = {}) {
      throw ParseError(code, msg, line_no, column, std::move(subject));
    };

    if (keyword == "vars") {
      if (have_vars) fail(ErrorCode::SyntaxError, "duplicate 'vars' declaration", pos + 1);
      std::vector<std::string> names;
      std::size_t p = arg_pos;
      while (p < line.size()) {
        const std::size_t e = word_end(line, p);
        const std::string name(line.substr(p, e - p));
        if (auto msg = validate_identifier(name); !msg.empty()) fail(ErrorCode::SyntaxError, msg, p + 1, name);
        names.push_back(name);
        p = skip_spaces(line, e);
      }
      if (names.empty()) fail(ErrorCode::SyntaxError, "expected at least one variable name after 'vars'", arg_pos + 1);
      try {
        out.vars = VariableTable(std::move(names));
      } catch (const Error& e) {
        fail(ErrorCode::SyntaxError, e.what(), arg_pos + 1, e.subject());
      }
      have_vars = true;
    } else if (keyword == "codim") {
      if (codim) fail(ErrorCode::SyntaxError, "duplicate 'codim' declaration", pos + 1);
      const std::size_t e = word_end(line, arg_pos);
      const std::string_view num = line.substr(arg_pos, e - arg_pos);
      if (num.empty() || num.size() > 2 ||
          !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail(ErrorCode::SyntaxError, "expected integer after 'codim'", arg_pos + 1, std::string(num));
      }
      if (skip_spaces(line, e) != line.size()) fail(ErrorCode::SyntaxError, "expected end of line", skip_spaces(line, e) + 1);
      codim = static_cast<std::size_t>(std::stoul(std::string(num)));
    } else if (keyword == "omega" || keyword == "hyp") {
      if (!have_vars) {
        fail(ErrorCode::SyntaxError, "expected 'vars' declaration before '" + std::string(keyword) + "'", pos + 1,
             std::string(keyword));
      }
      if (arg.empty()) fail(ErrorCode::SyntaxError, "expected an expression after '" + std::string(keyword) + "'", arg_pos + 1);
      if (keyword == "omega") {
        if (omega_text) fail(ErrorCode::SyntaxError, "duplicate 'omega' declaration", pos + 1);
        omega_text.emplace(arg, arg_at);
        out.omega = parse_form_any_degree(arg, out.vars, arg_at);
      } else {
        out.hyps.push_back(parse_polynomial(arg, out.vars, arg_at));
      }
    } else {
      fail(ErrorCode::SyntaxError,
           "expected one of 'vars', 'codim', 'omega', 'hyp', '#', found '" + std::string(keyword) + "'", pos + 1,
           std::string(keyword));
    }
    if (end == text.size()) break;
  }

  if (!have_vars) throw ParseError(ErrorCode::SyntaxError, "expected 'vars' declaration", line_no, 1, "vars");
  if (!codim) throw ParseError(ErrorCode::SyntaxError, "expected 'codim' declaration", line_no, 1, "codim");
  if (!omega_text) throw ParseError(ErrorCode::SyntaxError, "expected 'omega' declaration", line_no, 1, "omega");
  out.codim = *codim;
  if (out.omega.is_zero()) {
    out.omega = KForm(out.vars.size(), out.codim);
  } else if (out.omega.degree() != out.codim) {
    throw ParseError(ErrorCode::DegreeMismatch,
                     "omega has degree " + std::to_string(out.omega.degree()) + " but codim is " +
                         std::to_string(out.codim),
                     omega_text->second.line, omega_text->second.column, "omega");
  }
  return out;
}

std::string serialize_problem(const ProblemFile& problem) {
  std::string out = "vars";
  for (const auto& name : problem.vars.names()) out += " " + name;
  out += "\ncodim " + std::to_string(problem.codim) + "\n";
  out += "omega " + format_form(problem.omega, problem.vars) + "\n";
  for (const auto& h : problem.hyps) out += "hyp " + format_polynomial(h, problem.vars) + "\n";
  return out;
}

}  // namespace darboux
