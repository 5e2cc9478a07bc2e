#pragma once

#include "darboux/mpoly.hpp"

namespace darboux {

/// Reduced quotient num/den: gcd(num, den) = 1 and den is monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(MPoly num);
  /// Reduces on construction. Throws DivisionByZero when den = 0.
  RationalFunction(MPoly num, MPoly den);

  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }
  std::size_t nvars() const noexcept { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  MPoly num_;
  MPoly den_;
};

}  // namespace darboux
