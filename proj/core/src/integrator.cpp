#include "darboux/integrator.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "darboux/error.hpp"

namespace darboux {

// ---------------------------------------------------------------- Hypersurface

Hypersurface::Hypersurface(const MPoly& poly) {
  if (poly.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "hypersurface equation is constant");
  if (!is_squarefree(poly)) throw Error(ErrorCode::NotSquarefree, "hypersurface equation has a repeated factor");
  poly_ = monic(poly);
}

// ---------------------------------------------------------------- LogForm

LogForm::LogForm(WeightVector weights, std::vector<Hypersurface> hypersurfaces)
    : weights_(std::move(weights)), hyps_(std::move(hypersurfaces)) {
  if (weights_.size() != hyps_.size() || hyps_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "log form needs one weight per hypersurface");
  }
  if (std::all_of(weights_.begin(), weights_.end(), [](const auto& w) { return w.is_zero(); })) {
    throw Error(ErrorCode::InvalidArgument, "log form with all weights zero");
  }
}

MPoly LogForm::clearing_denominator() const {
  MPoly d = MPoly::constant(nvars(), GaussianRational(1));
  for (std::size_t j = 0; j < hyps_.size(); ++j) {
    if (!weights_[j].is_zero()) d *= hyps_[j].poly();
  }
  return d;
}

KForm LogForm::cleared() const {
  const std::size_t n = nvars();
  KForm out(n, 1);
  for (std::size_t j = 0; j < hyps_.size(); ++j) {
    if (weights_[j].is_zero()) continue;
    MPoly others = MPoly::constant(n, weights_[j]);
    for (std::size_t k = 0; k < hyps_.size(); ++k) {
      if (k != j && !weights_[k].is_zero()) others *= hyps_[k].poly();
    }
    out += others * gradient_form(hyps_[j].poly());
  }
  return out;
}

// ---------------------------------------------------------------- cofactors

CofactorRecord invariance_cofactor(const PlaneField& field, const MPoly& f) {
  if (f.nvars() != field.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "hypersurface is over a different space");
  }
  Hypersurface hyp(f);
  const KForm w = wedge(field.form(), gradient_form(hyp.poly()));
  KForm cofactor(field.nvars(), field.codim() + 1);
  for (const auto& [index, coeff] : w.terms()) {
    auto q = try_exact_div(coeff, hyp.poly());
    if (!q) throw Error(ErrorCode::NotInvariant, "hypersurface is not invariant: f does not divide w ^ df");
    cofactor.add_term(index, *q);
  }
  return {std::move(hyp), std::move(cofactor)};
}

KForm cofactor_residual(const PlaneField& field, const MPoly& f, const KForm& cofactor) {
  return wedge(field.form(), gradient_form(f)) - f * cofactor;
}

KForm weighted_cofactor_sum(const std::vector<KForm>& cofactors, const WeightVector& weights) {
  if (cofactors.size() != weights.size() || cofactors.empty()) {
    throw Error(ErrorCode::InvalidArgument, "weight vector length does not match cofactor count");
  }
  KForm sum(cofactors.front().nvars(), cofactors.front().degree());
  for (std::size_t j = 0; j < cofactors.size(); ++j) sum += weights[j] * cofactors[j];
  return sum;
}

ExactMatrix cofactor_matrix(const std::vector<CofactorRecord>& records) {
  if (records.empty()) throw Error(ErrorCode::InvalidArgument, "cofactor matrix of an empty record list");
  const std::size_t n = records.front().cofactor.nvars();
  const std::size_t degree = records.front().cofactor.degree();
  for (const auto& r : records) {
    if (r.cofactor.nvars() != n || r.cofactor.degree() != degree) {
      throw Error(ErrorCode::MixedDimensions, "cofactor records come from different plane fields");
    }
  }

  struct RowKeyLess {
    bool operator()(const std::pair<BasisIndex, Monomial>& a, const std::pair<BasisIndex, Monomial>& b) const {
      if (a.first != b.first) return BasisLess{}(a.first, b.first);
      return GrlexLess{}(a.second, b.second);
    }
  };
  std::set<std::pair<BasisIndex, Monomial>, RowKeyLess> keys;
  for (const auto& r : records) {
    for (const auto& [index, coeff] : r.cofactor.terms()) {
      for (const auto& [m, c] : coeff.terms()) keys.emplace(index, m);
    }
  }

  ExactMatrix out(keys.size(), records.size());
  std::size_t row = 0;
  for (const auto& [index, m] : keys) {
    for (std::size_t col = 0; col < records.size(); ++col) {
      out(row, col) = records[col].cofactor.coefficient(index).coefficient(m);
    }
    ++row;
  }
  return out;
}

// ---------------------------------------------------------------- nullspace

namespace {

Integer lcm_of_denominators(const ExactMatrix& m, std::size_t row) {
  Integer l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, c).re().get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, c).im().get_den().get_mpz_t());
  }
  return l;
}

}  // namespace

std::vector<WeightVector> flat_kernel(const ExactMatrix& matrix) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  ExactMatrix m = matrix;

  // Clear denominators row by row so elimination runs over Z[i].
  for (std::size_t r = 0; r < rows; ++r) {
    const GaussianRational scale{Rational(lcm_of_denominators(m, r))};
    for (std::size_t c = 0; c < cols; ++c) m(r, c) *= scale;
  }

  // Bareiss elimination: every division by the previous pivot is exact.
  std::vector<std::size_t> pivot_cols;
  GaussianRational prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(rank, j));
    }
    const GaussianRational pivot = m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const GaussianRational lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - lead * m(rank, j)) / prev;
      }
      m(i, c) = GaussianRational(0);
    }
    prev = pivot;
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<WeightVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    WeightVector x(cols, GaussianRational(0));
    x[free] = GaussianRational(1);
    for (std::size_t k = rank; k-- > 0;) {
      const std::size_t pc = pivot_cols[k];
      GaussianRational acc;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (!x[j].is_zero() && !m(k, j).is_zero()) acc += m(k, j) * x[j];
      }
      x[pc] = -acc / m(k, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------- log forms

LogForm build_log_form(const PlaneField& field, const WeightVector& weights,
                       const std::vector<Hypersurface>& hyps) {
  LogForm xi(weights, hyps);
  if (xi.nvars() != field.nvars()) {
    throw Error(ErrorCode::VariableCountMismatch, "log form is over a different space");
  }
  if (!verify_first_integral(field, xi)) {
    throw Error(ErrorCode::FlatnessViolated, "weighted log form does not annihilate the plane field");
  }
  return xi;
}

bool verify_first_integral(const PlaneField& field, const LogForm& xi) {
  return wedge(xi.cleared(), field.form()).is_zero();
}

KForm cleared_wedge(const std::vector<LogForm>& forms) {
  if (forms.empty()) throw Error(ErrorCode::InvalidArgument, "wedge of an empty log form list");
  KForm acc = forms.front().cleared();
  for (std::size_t i = 1; i < forms.size(); ++i) acc = wedge(acc, forms[i].cleared());
  return acc;
}

std::vector<LogForm> select_independent(const std::vector<LogForm>& candidates, std::size_t p) {
  std::vector<LogForm> chosen;
  std::optional<KForm> acc;
  for (const auto& xi : candidates) {
    if (chosen.size() == p) break;
    KForm next = acc ? wedge(*acc, xi.cleared()) : xi.cleared();
    if (next.is_zero()) continue;
    acc = std::move(next);
    chosen.push_back(xi);
  }
  if (chosen.size() < p) {
    throw Error(ErrorCode::InsufficientHypersurfaces,
                "only " + std::to_string(chosen.size()) + " independent logarithmic forms, need " +
                    std::to_string(p));
  }
  return chosen;
}

KForm wedge_log_forms(const std::vector<LogForm>& selected) {
  KForm xi = cleared_wedge(selected);
  if (xi.is_zero()) throw Error(ErrorCode::InvalidArgument, "selected log forms are dependent");
  return xi;
}

// ---------------------------------------------------------------- division

namespace {

// h with a = h * b on every coefficient, or nullopt. b must be nonzero.
std::optional<RationalFunction> proportionality(const KForm& a, const KForm& b) {
  const auto& [index, b_coeff] = *b.terms().begin();
  RationalFunction h(a.coefficient(index), b_coeff);
  std::set<BasisIndex, BasisLess> keys;
  for (const auto& t : a.terms()) keys.insert(t.first);
  for (const auto& t : b.terms()) keys.insert(t.first);
  for (BasisIndex k : keys) {
    if (a.coefficient(k) * h.den() != h.num() * b.coefficient(k)) return std::nullopt;
  }
  return h;
}

void check_same_shape(const KForm& a, const KForm& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::VariableCountMismatch, "forms over different spaces");
  if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "forms of different degree");
  if (b.is_zero()) throw Error(ErrorCode::ZeroForm, "division by the zero form");
}

}  // namespace

RationalFunction divide_forms(const PlaneField& field, const KForm& xi_wedge) {
  check_same_shape(field.form(), xi_wedge);
  auto h = proportionality(field.form(), xi_wedge);
  if (!h || h->is_zero()) {
    throw Error(ErrorCode::NotProportional, "plane field form is not proportional to the wedge");
  }
  return *h;
}

RationalFunction extract_ratio(const KForm& xi_i, const KForm& xi_j, const PlaneField& field) {
  check_same_shape(xi_i, xi_j);
  divide_forms(field, xi_i);
  divide_forms(field, xi_j);
  auto h = proportionality(xi_i, xi_j);
  if (!h) throw Error(ErrorCode::NotProportional, "forms are not proportional");
  // d(N/D) cleared by D^2.
  const KForm dh = h->den() * gradient_form(h->num()) - h->num() * gradient_form(h->den());
  if (!wedge(dh, field.form()).is_zero()) {
    throw Error(ErrorCode::RatioNotFirstIntegral, "ratio of the forms is not constant along the plane field");
  }
  return *h;
}

// ---------------------------------------------------------------- pipeline

Component make_component(const WeightVector& weights) {
  Component out{weights, false};
  if (!std::all_of(weights.begin(), weights.end(), [](const auto& w) { return w.is_real(); })) return out;
  out.rational = true;
  Integer l = 1;
  for (const auto& w : weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.re().get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& w : weights) {
    Integer num = w.re().get_num() * (l / w.re().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  for (auto& w : out.exponents) {
    Integer num = w.re().get_num() * (l / w.re().get_den());
    w = GaussianRational(Rational(num / g));
  }
  return out;
}

FirstIntegralReport first_integral(const PlaneField& field, const std::vector<MPoly>& hyps) {
  if (hyps.empty()) throw Error(ErrorCode::InvalidArgument, "no candidate hypersurfaces");

  auto tag = [](const Error& e, std::size_t i) { return Error(e.code(), e.what(), std::to_string(i)); };

  std::vector<Hypersurface> surfaces;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i].nvars() != field.nvars()) {
      throw Error(ErrorCode::VariableCountMismatch, "hypersurface is over a different space", std::to_string(i));
    }
    try {
      surfaces.emplace_back(hyps[i]);
    } catch (const Error& e) {
      throw tag(e, i);
    }
  }
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    for (std::size_t j = i + 1; j < surfaces.size(); ++j) {
      if (!gcd(surfaces[i].poly(), surfaces[j].poly()).is_one()) {
        throw Error(ErrorCode::NotCoprime, "hypersurfaces share a common factor",
                    std::to_string(i) + "," + std::to_string(j));
      }
    }
  }

  FirstIntegralReport report;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    try {
      report.system.records.push_back(invariance_cofactor(field, surfaces[i].poly()));
    } catch (const Error& e) {
      throw tag(e, i);
    }
  }
  report.system.matrix = cofactor_matrix(report.system.records);
  report.system.kernel_basis = flat_kernel(report.system.matrix);

  std::vector<LogForm> candidates;
  for (const auto& lambda : report.system.kernel_basis) {
    try {
      candidates.push_back(build_log_form(field, lambda, surfaces));
    } catch (const Error& e) {
      throw Error(ErrorCode::InternalInconsistency, std::string("kernel vector failed certification: ") + e.what());
    }
  }

  // Components carry scaled exponents; the scaled log forms have the same
  // certificates since scaling by a nonzero constant preserves them.
  for (const auto& xi : select_independent(candidates, field.codim())) {
    Component c = make_component(xi.weights());
    LogForm scaled(c.exponents, surfaces);
    if (!verify_first_integral(field, scaled)) {
      throw Error(ErrorCode::InternalInconsistency, "selected component failed verification");
    }
    report.log_forms.push_back(std::move(scaled));
    report.components.push_back(std::move(c));
  }

  report.cleared_wedge = wedge_log_forms(report.log_forms);
  try {
    report.proportionality_factor = divide_forms(field, report.cleared_wedge);
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalInconsistency, std::string("proportionality check failed: ") + e.what());
  }
  report.verified = true;
  return report;
}

}  // namespace darboux
