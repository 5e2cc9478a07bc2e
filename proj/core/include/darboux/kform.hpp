#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "darboux/mpoly.hpp"

namespace darboux {

/// Maximum ambient dimension supported by the bitmask basis representation.
inline constexpr std::size_t kMaxFormVariables = 64;

/// Strictly increasing set of variable indices naming dx_{i1}^...^dx_{ik},
/// stored as a bitmask.
class BasisIndex {
 public:
  BasisIndex() = default;
  /// Throws InvalidArgument unless `indices` is strictly increasing and
  /// every index is below kMaxFormVariables.
  explicit BasisIndex(const std::vector<std::size_t>& indices);
  BasisIndex(std::initializer_list<std::size_t> indices)
      : BasisIndex(std::vector<std::size_t>(indices)) {}

  static BasisIndex from_mask(std::uint64_t mask) {
    BasisIndex b;
    b.mask_ = mask;
    return b;
  }

  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool contains(std::size_t i) const noexcept { return i < 64 && ((mask_ >> i) & 1U) != 0; }
  /// Index of the highest variable, or -1 when empty.
  int max_index() const noexcept;
  std::vector<std::size_t> indices() const;

  friend bool operator==(BasisIndex a, BasisIndex b) { return a.mask_ == b.mask_; }
  friend bool operator!=(BasisIndex a, BasisIndex b) { return a.mask_ != b.mask_; }

 private:
  std::uint64_t mask_ = 0;
};

/// Lexicographic order on the sorted index sequences (dx^dy < dx^dz < dy^dz).
struct BasisLess {
  bool operator()(BasisIndex a, BasisIndex b) const noexcept;
};

/// All basis indices of length k over n variables, in BasisLess order.
std::vector<BasisIndex> basis_of_degree(std::size_t nvars, std::size_t k);

/// Polynomial differential k-form sum_I c_I dx_I. No stored coefficient is
/// zero; the degree is carried even when the form is zero. A form whose
/// degree exceeds nvars exists only as zero (the result of an over-full
/// wedge or derivative).
class KForm {
 public:
  using TermMap = std::map<BasisIndex, MPoly, BasisLess>;

  KForm() = default;
  /// Zero form. Throws InvalidArgument when nvars exceeds kMaxFormVariables.
  KForm(std::size_t nvars, std::size_t degree);

  static KForm basis(std::size_t nvars, BasisIndex index, const MPoly& coeff);
  /// The 0-form f.
  static KForm function(const MPoly& f);

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  MPoly coefficient(BasisIndex index) const;
  void add_term(BasisIndex index, const MPoly& coeff);
  /// Coefficient total degree, -1 for the zero form.
  int max_coefficient_degree() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  KForm operator-() const;

  /// Multiplication by a 0-form.
  friend KForm operator*(const MPoly& f, const KForm& a);
  friend KForm operator*(const GaussianRational& c, const KForm& a);

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

 private:
  void check_compatible(const KForm& o) const;

  std::size_t nvars_ = 0;
  std::size_t degree_ = 0;
  TermMap terms_;
};

/// Sign (+1/-1) of the permutation sorting the concatenation (a, b) of two
/// disjoint index sets; 0 when they overlap.
int wedge_sign(BasisIndex a, BasisIndex b) noexcept;

/// a ^ b. The result is the zero form of degree deg a + deg b when that
/// exceeds nvars.
KForm wedge(const KForm& a, const KForm& b);

/// Exterior derivative, a (k+1)-form.
KForm exterior_derivative(const KForm& a);

/// Interior product i_{e_j} with the coordinate vector field e_j:
/// i_{e_j}(dx_I) = (-1)^{#{i in I : i < j}} dx_{I \ j} when j is in I.
KForm contract(std::size_t j, const KForm& a);

/// i_{e_{j_m}} o ... o i_{e_{j_1}} applied to `a` for J = (j_1 < ... < j_m),
/// i.e. a(e_{j_1}, ..., e_{j_m}, ...). Throws IndexOutOfRange when |J| > deg a
/// or an index is not below nvars.
KForm contract_basis(BasisIndex J, const KForm& a);

/// df = sum_i (df/dx_i) dx_i.
KForm gradient_form(const MPoly& f);

}  // namespace darboux
