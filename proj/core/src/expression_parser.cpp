#include <cctype>
#include <limits>
#include <optional>
#include <string>

#include "darboux/error.hpp"
#include "darboux/expression.hpp"

namespace darboux {

// ---------------------------------------------------------------- variables

std::string validate_identifier(std::string_view name) {
  if (name.empty()) return "empty variable name";
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return "variable name '" + std::string(name) + "' must start with a letter";
  }
  for (char ch : name) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
      return "variable name '" + std::string(name) + "' contains '" + std::string(1, ch) + "'";
    }
  }
  if (name == "i") return "'i' is reserved for the imaginary unit";
  return {};
}

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxFormVariables) {
    throw Error(ErrorCode::InvalidArgument, "too many variables");
  }
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (auto msg = validate_identifier(names_[k]); !msg.empty()) {
      throw Error(ErrorCode::InvalidArgument, msg, names_[k]);
    }
    for (std::size_t j = 0; j < names_.size(); ++j) {
      if (j < k && names_[j] == names_[k]) {
        throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + names_[k] + "'", names_[k]);
      }
      if (names_[k] == "d" + names_[j]) {
        throw Error(ErrorCode::InvalidArgument,
                    "variable '" + names_[k] + "' collides with the differential of '" + names_[j] + "'",
                    names_[k]);
      }
    }
  }
}

std::size_t VariableTable::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return k;
  }
  return names_.size();
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Number, ImagNumber, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 0-based offset into the expression
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Number:
    case Tok::ImagNumber:
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  Lexer(std::string_view text, SourcePosition at) : text_(text), at_(at) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < text_.size()) {
      const char ch = text_[pos];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos;
        continue;
      }
      const std::size_t start = pos;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        while (pos < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos]))) ++pos;
        // `3i` is an imaginary literal when `i` stands alone.
        if (pos < text_.size() && text_[pos] == 'i' &&
            (pos + 1 == text_.size() || !is_ident_char(text_[pos + 1]))) {
          out.push_back({Tok::ImagNumber, std::string(text_.substr(start, pos - start)), start});
          ++pos;
          continue;
        }
        if (pos < text_.size() && is_ident_char(text_[pos])) {
          fail("expected an operator after number", pos);
        }
        out.push_back({Tok::Number, std::string(text_.substr(start, pos - start)), start});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        while (pos < text_.size() && is_ident_char(text_[pos])) ++pos;
        out.push_back({Tok::Ident, std::string(text_.substr(start, pos - start)), start});
        continue;
      }
      Tok kind;
      switch (ch) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: fail("unexpected character '" + std::string(1, ch) + "'", pos);
      }
      out.push_back({kind, std::string(1, ch), start});
      ++pos;
    }
    out.push_back({Tok::End, "", text_.size()});
    return out;
  }

 private:
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    throw ParseError(ErrorCode::SyntaxError, msg, at_.line, at_.column + offset);
  }

  std::string_view text_;
  SourcePosition at_;
};

// ---------------------------------------------------------------- parser

// Every value is a form; polynomials are 0-forms. A zero value has no
// definite degree and combines with anything.
struct Value {
  KForm form;
  bool definite = true;
};

class Parser {
 public:
  Parser(std::string_view text, const VariableTable& vars, SourcePosition at)
      : vars_(vars), at_(at), tokens_(Lexer(text, at).run()) {}

  Value parse_all() {
    Value v = expression();
    if (peek().kind != Tok::End) fail_expected("'+', '-', '*', '/', '^' or end of input");
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  std::size_t column_of(const Token& t) const { return at_.column + t.column; }

  [[noreturn]] void fail_expected(const std::string& expected) const {
    throw ParseError(ErrorCode::SyntaxError, "expected " + expected + ", found " + describe(peek()), at_.line,
                     column_of(peek()), peek().text);
  }
  [[noreturn]] void fail_at(ErrorCode code, const std::string& msg, const Token& t) const {
    throw ParseError(code, msg, at_.line, column_of(t), t.text);
  }

  std::size_t n() const { return vars_.size(); }

  Value scalar(const GaussianRational& c) const { return {KForm::function(MPoly::constant(n(), c)), !c.is_zero()}; }

  Value combine_sum(Value a, const Value& b, bool subtract, const Token& op) const {
    if (!b.definite) return a;
    if (!a.definite) return subtract ? Value{-b.form, true} : b;
    if (a.form.degree() != b.form.degree()) {
      fail_at(ErrorCode::DegreeMismatch,
              "cannot add forms of degree " + std::to_string(a.form.degree()) + " and " +
                  std::to_string(b.form.degree()),
              op);
    }
    if (subtract) {
      a.form -= b.form;
    } else {
      a.form += b.form;
    }
    return a;
  }

  Value combine_product(const Value& a, const Value& b) const {
    if (!a.definite || !b.definite) return scalar(GaussianRational(0));
    return {wedge(a.form, b.form), true};
  }

  // expression = ["+"|"-"] term (("+"|"-") term)*
  Value expression() {
    Value acc;
    bool first = true;
    for (;;) {
      const Token& op = peek();
      bool negate = false;
      if (op.kind == Tok::Plus || op.kind == Tok::Minus) {
        negate = op.kind == Tok::Minus;
        advance();
      } else if (!first) {
        return acc;
      }
      Value t = term();
      if (first) {
        acc = negate ? Value{-t.form, t.definite} : t;
        first = false;
      } else {
        acc = combine_sum(std::move(acc), t, negate, op);
      }
    }
  }

  // term = power (("*" | "/") power)*
  Value term() {
    Value acc = power();
    for (;;) {
      if (accept(Tok::Star)) {
        acc = combine_product(acc, power());
      } else if (peek().kind == Tok::Slash) {
        const Token& op = advance();
        Value d = power();
        if (!d.definite) fail_at(ErrorCode::DivisionByZero, "division by zero", op);
        if (d.form.degree() != 0 || !d.form.coefficient(BasisIndex{}).is_constant()) {
          fail_at(ErrorCode::SyntaxError, "division is only allowed by a nonzero constant", op);
        }
        const GaussianRational c = d.form.coefficient(BasisIndex{}).constant_value();
        acc = acc.definite ? Value{c.inverse() * acc.form, true} : acc;
      } else {
        return acc;
      }
    }
  }

  // power = unary ("^" (integer | unary))*; `^` after a form of positive
  // degree is the wedge product.
  Value power() {
    Value acc = unary();
    while (peek().kind == Tok::Caret) {
      const Token& op = advance();
      if (acc.definite && acc.form.degree() > 0) {
        Value rhs = unary();
        if (!rhs.definite || rhs.form.degree() == 0) {
          fail_at(ErrorCode::SyntaxError, "expected a differential after '^'", op);
        }
        acc = combine_product(acc, rhs);
        continue;
      }
      if (peek().kind != Tok::Number) fail_expected("integer exponent");
      const Token& e = advance();
      if (e.text.size() > 6) fail_at(ErrorCode::SyntaxError, "exponent too large", e);
      const auto k = static_cast<unsigned>(std::stoul(e.text));
      if (acc.definite) {
        acc.form = KForm::function(pow(acc.form.coefficient(BasisIndex{}), k));
        acc.definite = !acc.form.is_zero();
      } else if (k == 0) {
        acc = scalar(GaussianRational(1));
      }
    }
    return acc;
  }

  Value unary() {
    if (accept(Tok::Minus)) {
      Value v = unary();
      return {-v.form, v.definite};
    }
    if (accept(Tok::Plus)) return unary();
    return primary();
  }

  Value primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        advance();
        return scalar(GaussianRational(Rational(Integer(t.text))));
      }
      case Tok::ImagNumber: {
        advance();
        return scalar(GaussianRational(Rational(0), Rational(Integer(t.text))));
      }
      case Tok::LParen: {
        advance();
        Value v = expression();
        if (!accept(Tok::RParen)) fail_expected("')'");
        return v;
      }
      case Tok::Ident: {
        advance();
        const std::size_t var = vars_.find(t.text);
        if (var < n()) return {KForm::function(MPoly::variable(n(), var)), true};
        if (t.text.size() > 1 && t.text[0] == 'd') {
          const std::size_t dv = vars_.find(std::string_view(t.text).substr(1));
          if (dv < n()) return {KForm::basis(n(), BasisIndex{dv}, MPoly::constant(n(), GaussianRational(1))), true};
        }
        if (t.text == "i") return scalar(GaussianRational::imaginary_unit());
        fail_at(ErrorCode::UndeclaredVariable, "undeclared variable '" + t.text + "'", t);
      }
      default: fail_expected("number, variable, differential or '('");
    }
  }

  const VariableTable& vars_;
  SourcePosition at_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_polynomial(std::string_view text, const VariableTable& vars, SourcePosition at) {
  Value v = Parser(text, vars, at).parse_all();
  if (!v.definite) return MPoly(vars.size());
  if (v.form.degree() != 0) {
    throw ParseError(ErrorCode::DegreeMismatch, "expected a polynomial, found a " +
                                                    std::to_string(v.form.degree()) + "-form",
                     at.line, at.column);
  }
  return v.form.coefficient(BasisIndex{});
}

KForm parse_form_any_degree(std::string_view text, const VariableTable& vars, SourcePosition at) {
  Value v = Parser(text, vars, at).parse_all();
  if (!v.definite) return KForm(vars.size(), 0);
  return v.form;
}

KForm parse_form(std::string_view text, const VariableTable& vars, std::size_t expected_degree,
                 SourcePosition at) {
  Value v = Parser(text, vars, at).parse_all();
  if (!v.definite || v.form.is_zero()) return KForm(vars.size(), expected_degree);
  if (v.form.degree() != expected_degree) {
    throw ParseError(ErrorCode::DegreeMismatch,
                     "expected a " + std::to_string(expected_degree) + "-form, found a " +
                         std::to_string(v.form.degree()) + "-form",
                     at.line, at.column);
  }
  return v.form;
}

std::optional<GaussianRational> parse_scalar(std::string_view text) {
  try {
    MPoly p = parse_polynomial(text, VariableTable{});
    return p.constant_value();
  } catch (const Error&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------- formatting

namespace {

bool both_parts(const GaussianRational& c) { return !c.is_real() && sgn(c.re()) != 0; }

bool is_negative(const GaussianRational& c) {
  if (both_parts(c)) return false;
  return c.is_real() ? sgn(c.re()) < 0 : sgn(c.im()) < 0;
}

std::string monomial_text(const Monomial& m, const VariableTable& vars) {
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string basis_text(BasisIndex b, const VariableTable& vars) {
  std::string out;
  for (std::size_t v : b.indices()) {
    if (!out.empty()) out += '^';
    out += "d" + vars.name(v);
  }
  return out;
}

// A term c * rest where `rest` is a product (possibly empty). Returns the
// text without its sign and whether it is negative.
std::pair<std::string, bool> signed_term(const GaussianRational& c, const std::string& rest, bool standalone) {
  const bool neg = is_negative(c);
  const GaussianRational mag = neg ? -c : c;
  std::string coeff = mag.to_string();
  if (both_parts(mag) && (!rest.empty() || !standalone)) coeff = "(" + coeff + ")";
  if (rest.empty()) return {coeff, neg};
  if (mag.is_one()) return {rest, neg};
  return {coeff + "*" + rest, neg};
}

void append_term(std::string& out, std::pair<std::string, bool> term) {
  if (out.empty()) {
    out = term.second ? "-" + term.first : term.first;
  } else {
    out += term.second ? " - " : " + ";
    out += term.first;
  }
}

}  // namespace

std::string format_polynomial(const MPoly& p, const VariableTable& vars) {
  if (p.is_zero()) return "0";
  const bool single = p.size() == 1;
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, signed_term(it->second, monomial_text(it->first, vars), single));
  }
  return out;
}

std::string format_form(const KForm& form, const VariableTable& vars) {
  if (form.is_zero()) return "0";
  if (form.degree() == 0) return format_polynomial(form.coefficient(BasisIndex{}), vars);
  std::string out;
  for (const auto& [index, coeff] : form.terms()) {
    const std::string basis = basis_text(index, vars);
    if (coeff.size() == 1) {
      const auto& [m, c] = *coeff.terms().begin();
      std::string mono = monomial_text(m, vars);
      append_term(out, signed_term(c, mono.empty() ? basis : mono + "*" + basis, false));
    } else {
      append_term(out, {"(" + format_polynomial(coeff, vars) + ")*" + basis, false});
    }
  }
  return out;
}

}  // namespace darboux
