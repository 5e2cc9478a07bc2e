#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "darboux/scalar.hpp"

namespace darboux {

/// Exponent vector x_0^e_0 * ... * x_{n-1}^e_{n-1}; total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with x_0 > x_1 > ... (declared variable order).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the Gaussian rationals.
///
/// Terms are kept in ascending graded-lex order, so the leading term is the
/// last entry. No stored coefficient is zero.
class MPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const GaussianRational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly term(const Monomial& m, const GaussianRational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant term (zero if absent).
  GaussianRational constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const;

  /// Requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const GaussianRational& leading_coefficient() const { return terms_.rbegin()->second; }

  GaussianRational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const GaussianRational& c);

  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const GaussianRational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const GaussianRational& c) { return a *= c; }
  friend MPoly operator*(const GaussianRational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly mul_term(const Monomial& m, const GaussianRational& c) const;

 private:
  void check_compatible(const MPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

/// Returns q with a = b*q, or nullopt when b does not divide a.
/// Throws DivisionByZero for b = 0.
std::optional<MPoly> try_exact_div(const MPoly& a, const MPoly& b);

/// As try_exact_div, throwing NotDivisible instead of returning nullopt.
MPoly exact_div(const MPoly& a, const MPoly& b);

/// Scales so that the graded-lex leading coefficient is 1; zero stays zero.
MPoly monic(const MPoly& a);

/// Monic greatest common divisor. Throws BothZero when a = b = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Formal partial derivative with respect to variable `var`.
MPoly partial(const MPoly& a, std::size_t var);

/// True iff gcd(f, df/dx_1, ..., df/dx_n) is a unit. Throws ConstantInput
/// for constant f.
bool is_squarefree(const MPoly& f);

/// Coefficients of `a` viewed as a univariate polynomial in `var`:
/// result[k] is the coefficient of var^k (a polynomial not involving var).
std::vector<MPoly> coefficients_in(const MPoly& a, std::size_t var);

}  // namespace darboux
