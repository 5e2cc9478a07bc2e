#include "darboux/mpoly.hpp"

#include <algorithm>
#include <string>

#include "darboux/error.hpp"

namespace darboux {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(other.nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Equal degree: lex with x_0 most significant.
  return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                      b.exponents().begin(), b.exponents().end());
}

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(std::size_t nvars, const GaussianRational& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Monomial(nvars), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  MPoly p(nvars);
  p.terms_.emplace(Monomial::variable(nvars, index), GaussianRational(1));
  return p;
}

MPoly MPoly::term(const Monomial& m, const GaussianRational& c) {
  MPoly p(m.nvars());
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

GaussianRational MPoly::constant_value() const {
  if (terms_.empty() || !terms_.begin()->first.is_one()) return GaussianRational(0);
  return terms_.begin()->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(leading_monomial().degree());
}

int MPoly::degree_in(std::size_t var) const {
  if (var >= nvars_) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return static_cast<int>(d);
}

bool MPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const auto& t) { return t.first[var] != 0; });
}

GaussianRational MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const GaussianRational& c) {
  if (m.nvars() != nvars_) {
    throw Error(ErrorCode::VariableCountMismatch, "monomial variable count mismatch");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational MPoly::evaluate(const std::vector<GaussianRational>& point) const {
  if (point.size() != nvars_) {
    throw Error(ErrorCode::VariableCountMismatch, "evaluation point has wrong dimension");
  }
  GaussianRational sum;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t *= pow(point[i], m[i]);
    }
    sum += t;
  }
  return sum;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw Error(ErrorCode::VariableCountMismatch,
                "polynomials over " + std::to_string(nvars_) + " and " +
                    std::to_string(o.nvars_) + " variables");
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::mul_term(const Monomial& m, const GaussianRational& c) const {
  MPoly out(nvars_);
  if (c.is_zero()) return out;
  // Multiplying by a monomial preserves the order, so append with a hint.
  for (const auto& [mt, ct] : terms_) out.terms_.emplace_hint(out.terms_.end(), mt * m, ct * c);
  return out;
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = MPoly::constant(base.nvars(), GaussianRational(1));
  MPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------- division

std::optional<MPoly> try_exact_div(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "division variable count mismatch");
  }
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  MPoly q(a.nvars());
  if (a.is_zero()) return q;
  const Monomial& lm_b = b.leading_monomial();
  const GaussianRational lc_inv = b.leading_coefficient().inverse();
  MPoly r = a;
  // If b | r then LT(r) = LT(b) * LT(r/b), so the leading term must divide.
  while (!r.is_zero()) {
    const Monomial& lm_r = r.leading_monomial();
    if (!lm_b.divides(lm_r)) return std::nullopt;
    Monomial t = lm_b.quotient_of(lm_r);
    GaussianRational c = r.leading_coefficient() * lc_inv;
    q.add_term(t, c);
    r -= b.mul_term(t, c);
  }
  return q;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error(ErrorCode::NotDivisible, "polynomial is not divisible");
  return std::move(*q);
}

MPoly monic(const MPoly& a) {
  if (a.is_zero() || a.leading_coefficient().is_one()) return a;
  return a * a.leading_coefficient().inverse();
}

MPoly partial(const MPoly& a, std::size_t var) {
  if (var >= a.nvars()) throw Error(ErrorCode::IndexOutOfRange, "partial: variable index out of range");
  MPoly out(a.nvars());
  for (const auto& [m, c] : a.terms()) {
    if (m[var] == 0) continue;
    std::vector<std::uint32_t> e = m.exponents();
    const long k = e[var];
    e[var] -= 1;
    out.add_term(Monomial(std::move(e)), c * GaussianRational(k));
  }
  return out;
}

std::vector<MPoly> coefficients_in(const MPoly& a, std::size_t var) {
  const int deg = a.degree_in(var);
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(deg + 1, 0)), MPoly(a.nvars()));
  for (const auto& [m, c] : a.terms()) {
    std::vector<std::uint32_t> e = m.exponents();
    const auto k = e[var];
    e[var] = 0;
    out[k].add_term(Monomial(std::move(e)), c);
  }
  return out;
}

// ---------------------------------------------------------------- gcd

namespace {

MPoly one_like(const MPoly& a) { return MPoly::constant(a.nvars(), GaussianRational(1)); }

MPoly leading_coeff_in(const MPoly& a, std::size_t var) {
  return coefficients_in(a, var).back();
}

MPoly var_power(std::size_t nvars, std::size_t var, std::uint32_t k) {
  return MPoly::term(Monomial::variable(nvars, var, k), GaussianRational(1));
}

MPoly monomial_content(const MPoly& a) {
  auto it = a.terms().begin();
  Monomial g = it->first;
  for (++it; it != a.terms().end() && !g.is_one(); ++it) g = gcd(g, it->first);
  return MPoly::term(g, GaussianRational(1));
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

/// gcd of the coefficients of `a` in `var`, up to a unit.
MPoly content_in(const MPoly& a, std::size_t var) {
  MPoly g(a.nvars());
  for (const auto& c : coefficients_in(a, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return one_like(a);
  }
  return g;
}

/// lc(B)^(degA-degB+1) * A reduced modulo B, viewing both as univariate in var.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MPoly lb = leading_coeff_in(b, var);
  int e = a.degree_in(var) - db + 1;
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    MPoly t = leading_coeff_in(r, var) * var_power(a.nvars(), var, static_cast<std::uint32_t>(dr - db));
    r = lb * r - t * b;
    --e;
  }
  if (e > 0) r *= pow(lb, static_cast<unsigned>(e));
  return r;
}

/// gcd of two polynomials primitive in `var`, both involving it, via the
/// subresultant remainder sequence.
MPoly primitive_gcd(MPoly a, MPoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  MPoly g = one_like(a);
  MPoly h = one_like(a);
  for (;;) {
    const int d = a.degree_in(var) - b.degree_in(var);
    MPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) return exact_div(b, content_in(b, var));
    if (r.degree_in(var) == 0) return one_like(a);
    a = std::move(b);
    b = exact_div(r, g * pow(h, static_cast<unsigned>(d)));
    g = leading_coeff_in(a, var);
    if (d == 1) {
      h = g;
    } else if (d > 1) {
      h = exact_div(pow(g, static_cast<unsigned>(d)), pow(h, static_cast<unsigned>(d - 1)));
    }
  }
}

std::optional<std::size_t> first_variable(const MPoly& a) {
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.involves(v)) return v;
  }
  return std::nullopt;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return a;
  // A divisor of a monomial is a monomial, and a monomial divides a
  // polynomial iff it divides every term.
  if (a.size() == 1 || b.size() == 1) {
    MPoly ma = monomial_content(a);
    MPoly mb = monomial_content(b);
    return MPoly::term(gcd(ma.leading_monomial(), mb.leading_monomial()), GaussianRational(1));
  }
  const std::size_t var = std::min(first_variable(a).value_or(a.nvars()), first_variable(b).value_or(b.nvars()));
  if (!a.involves(var)) return gcd_rec(a, content_in(b, var));
  if (!b.involves(var)) return gcd_rec(content_in(a, var), b);

  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly c = gcd_rec(ca, cb);
  MPoly g = primitive_gcd(exact_div(a, ca), exact_div(b, cb), var);
  return c * g;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "gcd variable count mismatch");
  }
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  return monic(gcd_rec(a, b));
}

bool is_squarefree(const MPoly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "squarefree check on a constant");
  MPoly g = f;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    MPoly df = partial(f, v);
    if (df.is_zero()) continue;
    g = gcd(g, df);
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

}  // namespace darboux
