#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace darboux {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element re + im*i of the Gaussian rationals Q(i).
///
/// Both parts are kept canonical (positive denominators, reduced), so
/// structural equality is numeric equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical text: `a/b`, `c/d*i`, `a/b+c/d*i`; integer parts drop the
  /// denominator, unit imaginary parts print as `i` / `-i`.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Parses the scalar syntax accepted on input (`-3`, `5/7`, `i`, `1/2-3i`,
/// `2/3*i`). Returns nullopt on malformed text.
std::optional<GaussianRational> parse_scalar(std::string_view text);

GaussianRational pow(const GaussianRational& base, unsigned exponent);

}  // namespace darboux
