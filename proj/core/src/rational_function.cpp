#include "darboux/rational_function.hpp"

#include "darboux/error.hpp"

namespace darboux {

RationalFunction::RationalFunction(MPoly num)
    : num_(std::move(num)), den_(MPoly::constant(num_.nvars(), GaussianRational(1))) {}

RationalFunction::RationalFunction(MPoly num, MPoly den) {
  if (num.nvars() != den.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "rational function variable count mismatch");
  }
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = MPoly::constant(num_.nvars(), GaussianRational(1));
    return;
  }
  MPoly g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const GaussianRational lc_inv = den.leading_coefficient().inverse();
  num_ = num * lc_inv;
  den_ = den * lc_inv;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

}  // namespace darboux
