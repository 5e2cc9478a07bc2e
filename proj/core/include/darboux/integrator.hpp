#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "darboux/kform.hpp"
#include "darboux/plane_field.hpp"
#include "darboux/rational_function.hpp"

namespace darboux {

/// A reduced candidate hypersurface f = 0: nonconstant, squarefree, stored
/// monic under graded-lex.
class Hypersurface {
 public:
  /// Throws ConstantPolynomial or NotSquarefree.
  explicit Hypersurface(const MPoly& poly);

  const MPoly& poly() const noexcept { return poly_; }
  std::size_t nvars() const noexcept { return poly_.nvars(); }

  friend bool operator==(const Hypersurface& a, const Hypersurface& b) { return a.poly_ == b.poly_; }

 private:
  MPoly poly_;
};

/// w ^ df = f * cofactor.
struct CofactorRecord {
  Hypersurface hypersurface;
  KForm cofactor;
};

using WeightVector = std::vector<GaussianRational>;

/// Dense matrix over the Gaussian rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// xi = sum_j weights[j] * dlog(hypersurfaces[j]). Zero weights are allowed
/// and contribute nothing; at least one weight is nonzero.
class LogForm {
 public:
  /// Throws InvalidArgument on length mismatch or an all-zero weight vector.
  LogForm(WeightVector weights, std::vector<Hypersurface> hypersurfaces);

  const WeightVector& weights() const noexcept { return weights_; }
  const std::vector<Hypersurface>& hypersurfaces() const noexcept { return hyps_; }
  std::size_t nvars() const noexcept { return hyps_.front().nvars(); }

  /// The polynomial 1-form D * xi with D the product of the hypersurfaces
  /// carrying nonzero weight: sum_j w_j (prod_{k != j} f_k) df_j.
  KForm cleared() const;
  /// D itself.
  MPoly clearing_denominator() const;

 private:
  WeightVector weights_;
  std::vector<Hypersurface> hyps_;
};

struct DarbouxSystem {
  std::vector<CofactorRecord> records;
  ExactMatrix matrix;
  std::vector<WeightVector> kernel_basis;
};

/// One multiplicative first-integral component prod_j f_j^{exponents[j]}.
struct Component {
  WeightVector exponents;
  /// All exponents real rational; they are then scaled to coprime integers
  /// and the component is a genuine rational function.
  bool rational = false;
};

struct FirstIntegralReport {
  DarbouxSystem system;
  std::vector<LogForm> log_forms;
  std::vector<Component> components;
  /// Cleared wedge of the selected log forms.
  KForm cleared_wedge;
  /// h with w = h * cleared_wedge.
  std::optional<RationalFunction> proportionality_factor;
  bool verified = false;
};

/// Cofactor of an invariant hypersurface. Throws NotInvariant (with the
/// polynomial's position in `subject`), ConstantPolynomial, NotSquarefree.
CofactorRecord invariance_cofactor(const PlaneField& field, const MPoly& f);

/// Column j stacks the coefficients of cofactor j; rows are the
/// (basis index, monomial) pairs occurring in any cofactor, in sorted order.
/// Throws InvalidArgument when empty, MixedDimensions on differing spaces.
ExactMatrix cofactor_matrix(const std::vector<CofactorRecord>& records);

/// Basis of the exact nullspace by fraction-free elimination. Each basis
/// vector has a 1 in its free column and 0 in the other free columns.
std::vector<WeightVector> flat_kernel(const ExactMatrix& matrix);

/// Builds xi and certifies cleared(xi ^ w) = 0; throws FlatnessViolated.
LogForm build_log_form(const PlaneField& field, const WeightVector& weights,
                       const std::vector<Hypersurface>& hyps);

/// Cleared wedge of the log forms: the wedge of their cleared 1-forms.
KForm cleared_wedge(const std::vector<LogForm>& forms);

/// Greedy selection in input order; a candidate is kept when the cleared
/// wedge with the already chosen forms stays nonzero. Throws
/// InsufficientHypersurfaces when fewer than p are independent.
std::vector<LogForm> select_independent(const std::vector<LogForm>& candidates, std::size_t p);

/// Cleared wedge of a selection; never zero for a valid selection.
KForm wedge_log_forms(const std::vector<LogForm>& selected);

/// h with w = h * xi_wedge, certified on every coefficient by
/// cross-multiplication. Throws NotProportional.
RationalFunction divide_forms(const PlaneField& field, const KForm& xi_wedge);

/// h with xi_i = h * xi_j, certified by cross-multiplication and by
/// cleared(dh ^ w) = 0. Throws NotProportional or RatioNotFirstIntegral.
RationalFunction extract_ratio(const KForm& xi_i, const KForm& xi_j, const PlaneField& field);

/// cleared(xi ^ w) = 0 exactly.
bool verify_first_integral(const PlaneField& field, const LogForm& xi);

/// Integer exponents (coprime, sign preserved) when every weight is real
/// rational; otherwise the weights unchanged.
Component make_component(const WeightVector& weights);

/// End-to-end pipeline. Throws NotInvariant, NotCoprime,
/// InsufficientHypersurfaces, InternalInconsistency.
FirstIntegralReport first_integral(const PlaneField& field, const std::vector<MPoly>& hyps);

/// The cofactor identity w ^ df - f * cofactor, recomputed from scratch.
KForm cofactor_residual(const PlaneField& field, const MPoly& f, const KForm& cofactor);

/// sum_j weights[j] * cofactors[j].
KForm weighted_cofactor_sum(const std::vector<KForm>& cofactors, const WeightVector& weights);

}  // namespace darboux
