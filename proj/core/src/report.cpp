#include "darboux/report.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

#include "darboux/error.hpp"

namespace darboux {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::not_lds: return "not_lds";
    case Status::not_invariant: return "not_invariant";
    case Status::insufficient: return "insufficient";
    case Status::error: return "error";
  }
  return "error";
}

std::optional<Status> parse_status(std::string_view text) {
  for (Status s : {Status::ok, Status::not_lds, Status::not_invariant, Status::insufficient, Status::error}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::string format_weights(const WeightVector& weights) {
  std::string out = "[";
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (k) out += ", ";
    out += weights[k].to_string();
  }
  return out + "]";
}

std::string format_component(const WeightVector& exponents, const std::vector<MPoly>& hyps,
                             const VariableTable& vars) {
  std::vector<std::string> factors;
  auto factor = [&](std::size_t j) {
    const MPoly& f = hyps[j];
    std::string base = format_polynomial(f, vars);
    const GaussianRational& e = exponents[j];
    const bool compound = f.size() > 1;
    const bool product = base.find_first_of("*^") != std::string::npos;
    if (e.is_one()) return compound ? "(" + base + ")" : base;
    if (compound || product) base = "(" + base + ")";
    const bool integer = e.is_real() && e.re().get_den() == 1;
    return base + "^" + (integer ? e.to_string() : "(" + e.to_string() + ")");
  };
  // Numerator factors first, then the rest, each in hypersurface order.
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j].is_real() && sgn(exponents[j].re()) > 0) factors.push_back(factor(j));
  }
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (!exponents[j].is_zero() && !(exponents[j].is_real() && sgn(exponents[j].re()) > 0)) {
      factors.push_back(factor(j));
    }
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out += " * " + factors[k];
  return out;
}

// ---------------------------------------------------------------- machine

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string machine_text(const Report& r) {
  std::ostringstream out;
  auto kv = [&out](const std::string& key, const std::string& value) { out << key << " = " << value << '\n'; };
  const auto& vars = r.vars;

  kv("command", r.command);
  kv("status", std::string(to_string(r.status)));
  kv("exit_code", std::to_string(r.exit_code));
  std::string names;
  for (const auto& n : vars.names()) names += (names.empty() ? "" : " ") + n;
  kv("vars", names);
  kv("codim", std::to_string(r.codim));
  kv("lds", bool_text(r.lds));
  kv("integrable", bool_text(r.integrable));
  kv("content", format_polynomial(r.content, vars));
  kv("hyp_count", std::to_string(r.hyps.size()));
  for (std::size_t i = 0; i < r.hyps.size(); ++i) kv("hyp." + std::to_string(i), format_polynomial(r.hyps[i], vars));
  kv("cofactor_count", std::to_string(r.cofactors.size()));
  for (std::size_t i = 0; i < r.cofactors.size(); ++i) {
    kv("cofactor." + std::to_string(i), r.cofactors[i] ? format_form(*r.cofactors[i], vars) : "none");
  }
  kv("kernel_dim", std::to_string(r.kernel_dim()));
  for (std::size_t i = 0; i < r.kernel.size(); ++i) kv("kernel." + std::to_string(i), format_weights(r.kernel[i]));
  kv("component_count", std::to_string(r.components.size()));
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    kv("component." + std::to_string(i), c.expression);
    kv("exponents." + std::to_string(i), format_weights(c.exponents));
    kv("rational." + std::to_string(i), bool_text(c.rational));
  }
  kv("verified", bool_text(r.verified));
  if (r.proportionality) {
    kv("proportionality.num", format_polynomial(r.proportionality->num(), vars));
    kv("proportionality.den", format_polynomial(r.proportionality->den(), vars));
  }
  kv("diagnostic_count", std::to_string(r.diagnostics.size()));
  for (std::size_t i = 0; i < r.diagnostics.size(); ++i) kv("diagnostic." + std::to_string(i), quoted(r.diagnostics[i]));
  return out.str();
}

std::string human_text(const Report& r) {
  std::ostringstream out;
  const auto& vars = r.vars;
  out << "darboux " << r.command << ": " << to_string(r.status) << " (exit " << r.exit_code << ")\n";
  if (r.vars.size() != 0) {
    out << "  plane field of codimension " << r.codim << " in " << vars.size() << " variables\n";
    if (r.status != Status::error || r.lds) {
      out << "  locally decomposable: " << (r.lds ? "yes" : "no") << ", integrable: " << (r.integrable ? "yes" : "no")
          << '\n';
    }
    if (!r.content.is_one() && !r.content.is_zero()) {
      out << "  divided out content " << format_polynomial(r.content, vars) << '\n';
    }
  }
  for (std::size_t i = 0; i < r.cofactors.size(); ++i) {
    out << "  hypersurface " << format_polynomial(r.hyps[i], vars) << ": ";
    if (r.cofactors[i]) {
      out << "invariant, cofactor " << format_form(*r.cofactors[i], vars) << '\n';
    } else {
      out << "NOT invariant\n";
    }
  }
  if (!r.cofactors.empty() && r.command != "invariant") {
    out << "  flat divisors: kernel of dimension " << r.kernel_dim() << '\n';
    for (const auto& k : r.kernel) out << "    " << format_weights(k) << '\n';
  }
  if (!r.components.empty()) {
    out << "  first integral components:\n";
    for (const auto& c : r.components) {
      out << "    H = " << c.expression << (c.rational ? "" : "  (Darboux function, non-real exponents)") << '\n';
    }
    out << "  verified: " << (r.verified ? "yes" : "no") << '\n';
  }
  if (r.proportionality) {
    out << "  omega = h * (cleared wedge) with h = (" << format_polynomial(r.proportionality->num(), vars) << ") / ("
        << format_polynomial(r.proportionality->den(), vars) << ")\n";
  }
  if (r.status == Status::ok && r.vars.size() != 0) {
    out << "  note: singular-set codimension is certified only in its divisorial part (unit content)\n";
  }
  for (const auto& d : r.diagnostics) out << "  - " << d << '\n';
  return out.str();
}

}  // namespace

std::string serialize_report(const Report& report, ReportMode mode) {
  return mode == ReportMode::machine ? machine_text(report) : human_text(report);
}

// ---------------------------------------------------------------- parsing

namespace {

class ReportReader {
 public:
  explicit ReportReader(std::string_view text) {
    std::size_t start = 0;
    std::size_t line = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(start, end - start);
      ++line;
      start = end + 1;
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      if (l.empty()) continue;
      const std::size_t eq = l.find(" =");
      if (eq == std::string_view::npos) {
        throw ParseError(ErrorCode::SyntaxError, "expected 'key = value'", line, 1);
      }
      std::string key(l.substr(0, eq));
      std::string_view value = l.substr(eq + 2);
      if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
      if (!entries_.emplace(key, Entry{std::string(value), line}).second) {
        throw ParseError(ErrorCode::SyntaxError, "duplicate key '" + key + "'", line, 1, key);
      }
    }
  }

  const std::string& get(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw ParseError(ErrorCode::SyntaxError, "missing key '" + key + "'", 0, 0, key);
    it->second.used = true;
    return it->second.value;
  }
  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  SourcePosition where(const std::string& key) const {
    auto it = entries_.find(key);
    return {it == entries_.end() ? 0 : it->second.line, key.size() + 4};
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const auto at = where(key);
    throw ParseError(ErrorCode::SyntaxError, msg, at.line, at.column, key);
  }

  std::size_t count(const std::string& key) {
    const std::string& v = get(key);
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(v, &used);
      if (used != v.size() || n > 1000000) fail(key, "expected a count");
      return n;
    } catch (const std::logic_error&) {
      fail(key, "expected a count");
    }
  }

  bool boolean(const std::string& key) {
    const std::string& v = get(key);
    if (v == "true") return true;
    if (v == "false") return false;
    fail(key, "expected 'true' or 'false'");
  }

  WeightVector weights(const std::string& key) {
    const std::string& v = get(key);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']') fail(key, "expected '[...]'");
    WeightVector out;
    std::string_view body = std::string_view(v).substr(1, v.size() - 2);
    if (body.empty()) return out;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = body.find(',', start);
      auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      auto s = parse_scalar(item);
      if (!s) fail(key, "malformed scalar '" + std::string(item) + "'");
      out.push_back(*s);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  void check_all_used() const {
    for (const auto& [key, e] : entries_) {
      if (!e.used) throw ParseError(ErrorCode::SyntaxError, "unknown key '" + key + "'", e.line, 1, key);
    }
  }

 private:
  struct Entry {
    std::string value;
    std::size_t line;
    bool used = false;
  };
  std::map<std::string, Entry> entries_;
};

}  // namespace

Report parse_report(std::string_view text) {
  ReportReader in(text);
  Report r;
  r.command = in.get("command");
  auto status = parse_status(in.get("status"));
  if (!status) in.fail("status", "unknown status");
  r.status = *status;
  {
    const std::string& code = in.get("exit_code");
    if (code.size() != 1 || code[0] < '0' || code[0] > '3') in.fail("exit_code", "expected exit code 0-3");
    r.exit_code = code[0] - '0';
  }

  std::vector<std::string> names;
  {
    std::istringstream words(in.get("vars"));
    for (std::string w; words >> w;) names.push_back(w);
  }
  try {
    r.vars = VariableTable(std::move(names));
  } catch (const Error& e) {
    in.fail("vars", e.what());
  }

  r.codim = in.count("codim");
  r.lds = in.boolean("lds");
  r.integrable = in.boolean("integrable");
  r.content = parse_polynomial(in.get("content"), r.vars, in.where("content"));

  const std::size_t nh = in.count("hyp_count");
  for (std::size_t i = 0; i < nh; ++i) {
    const std::string key = "hyp." + std::to_string(i);
    r.hyps.push_back(parse_polynomial(in.get(key), r.vars, in.where(key)));
  }
  const std::size_t nc = in.count("cofactor_count");
  for (std::size_t i = 0; i < nc; ++i) {
    const std::string key = "cofactor." + std::to_string(i);
    const std::string& v = in.get(key);
    if (v == "none") {
      r.cofactors.emplace_back(std::nullopt);
    } else {
      r.cofactors.emplace_back(parse_form(v, r.vars, r.codim + 1, in.where(key)));
    }
  }
  const std::size_t nk = in.count("kernel_dim");
  for (std::size_t i = 0; i < nk; ++i) r.kernel.push_back(in.weights("kernel." + std::to_string(i)));
  const std::size_t ncomp = in.count("component_count");
  for (std::size_t i = 0; i < ncomp; ++i) {
    ComponentEntry c;
    c.expression = in.get("component." + std::to_string(i));
    c.exponents = in.weights("exponents." + std::to_string(i));
    c.rational = in.boolean("rational." + std::to_string(i));
    r.components.push_back(std::move(c));
  }
  r.verified = in.boolean("verified");
  if (in.has("proportionality.num") || in.has("proportionality.den")) {
    MPoly num = parse_polynomial(in.get("proportionality.num"), r.vars, in.where("proportionality.num"));
    MPoly den = parse_polynomial(in.get("proportionality.den"), r.vars, in.where("proportionality.den"));
    if (den.is_zero()) in.fail("proportionality.den", "zero denominator");
    r.proportionality = RationalFunction(std::move(num), std::move(den));
  }
  const std::size_t nd = in.count("diagnostic_count");
  for (std::size_t i = 0; i < nd; ++i) {
    const std::string key = "diagnostic." + std::to_string(i);
    try {
      auto j = nlohmann::json::parse(in.get(key));
      if (!j.is_string()) in.fail(key, "expected a quoted string");
      r.diagnostics.push_back(j.get<std::string>());
    } catch (const nlohmann::json::exception&) {
      in.fail(key, "malformed quoted string");
    }
  }
  in.check_all_used();
  return r;
}

}  // namespace darboux
