#include "darboux/plane_field.hpp"

#include <string>

#include "darboux/error.hpp"

namespace darboux {

namespace {

bool plucker_vacuous(const KForm& form) {
  return form.degree() == 1 || form.degree() + 1 >= form.nvars();
}

// Every product (i_{e_J} w) ^ other vanishes for |J| = p - 1.
bool contractions_annihilate(const KForm& form, const KForm& other) {
  for (BasisIndex J : basis_of_degree(form.nvars(), form.degree() - 1)) {
    KForm c = contract_basis(J, form);
    if (c.is_zero()) continue;
    if (!wedge(c, other).is_zero()) return false;
  }
  return true;
}

}  // namespace

ContentSplit normalize_content(const KForm& form) {
  if (form.is_zero()) throw Error(ErrorCode::ZeroForm, "form is identically zero");
  MPoly g(form.nvars());
  for (const auto& [index, coeff] : form.terms()) {
    g = gcd(g, coeff);
    if (g.is_one()) return {form, g};
  }
  KForm out(form.nvars(), form.degree());
  for (const auto& [index, coeff] : form.terms()) out.add_term(index, exact_div(coeff, g));
  return {std::move(out), std::move(g)};
}

bool check_lds(const KForm& form) {
  if (form.degree() == 0) throw Error(ErrorCode::DegreeMismatch, "decomposability of a 0-form");
  if (plucker_vacuous(form)) return true;
  return contractions_annihilate(form, form);
}

bool check_integrability(const KForm& form) {
  if (!check_lds(form)) throw Error(ErrorCode::NotLDS, "integrability requested for a non-decomposable form");
  return contractions_annihilate(form, exterior_derivative(form));
}

PlaneField load_plane_field(std::size_t nvars, std::size_t codim, const KForm& form) {
  if (nvars < 2 || codim < 1 || codim > nvars - 1) {
    throw Error(ErrorCode::DegreeMismatch, "codimension must lie in [1, n-1], got " + std::to_string(codim));
  }
  if (form.nvars() != nvars) throw Error(ErrorCode::VariableCountMismatch, "form is over a different space");
  if (form.degree() != codim) {
    throw Error(ErrorCode::DegreeMismatch, "form degree " + std::to_string(form.degree()) +
                                                " does not match codimension " + std::to_string(codim));
  }
  auto [normalized, content] = normalize_content(form);
  if (!check_lds(normalized)) {
    throw Error(ErrorCode::NotLDS, "form is not locally decomposable; it does not define a plane field");
  }
  const bool integrable = contractions_annihilate(normalized, exterior_derivative(normalized));
  return PlaneField(std::move(normalized), std::move(content), integrable);
}

}  // namespace darboux
