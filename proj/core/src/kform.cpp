#include "darboux/kform.hpp"

#include <bit>
#include <string>

#include "darboux/error.hpp"

namespace darboux {

namespace {

std::uint64_t bits_below(std::size_t j) noexcept {
  return j >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << j) - 1);
}

int sign_of_parity(int count) noexcept { return (count & 1) ? -1 : 1; }

}  // namespace

// ---------------------------------------------------------------- BasisIndex

BasisIndex::BasisIndex(const std::vector<std::size_t>& indices) {
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= kMaxFormVariables) {
      throw Error(ErrorCode::InvalidArgument, "basis index exceeds supported dimension");
    }
    if (k > 0 && indices[k] <= indices[k - 1]) {
      throw Error(ErrorCode::InvalidArgument, "basis indices must be strictly increasing");
    }
    mask_ |= std::uint64_t{1} << indices[k];
  }
}

std::size_t BasisIndex::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

int BasisIndex::max_index() const noexcept {
  return mask_ == 0 ? -1 : 63 - std::countl_zero(mask_);
}

std::vector<std::size_t> BasisIndex::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

bool BasisLess::operator()(BasisIndex a, BasisIndex b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // At the first differing position the set holding the lower index wins.
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask() & lowest) != 0;
}

std::vector<BasisIndex> basis_of_degree(std::size_t nvars, std::size_t k) {
  std::vector<BasisIndex> out;
  if (k > nvars) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.emplace_back(idx);
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == nvars - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

int wedge_sign(BasisIndex a, BasisIndex b) noexcept {
  if ((a.mask() & b.mask()) != 0) return 0;
  int inversions = 0;
  for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
    const auto j = static_cast<std::size_t>(std::countr_zero(m));
    inversions += std::popcount(a.mask() & ~bits_below(j + 1));
  }
  return sign_of_parity(inversions);
}

// ---------------------------------------------------------------- KForm

KForm::KForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {
  if (nvars > kMaxFormVariables) {
    throw Error(ErrorCode::InvalidArgument,
                "forms support at most " + std::to_string(kMaxFormVariables) + " variables");
  }
}

KForm KForm::basis(std::size_t nvars, BasisIndex index, const MPoly& coeff) {
  KForm out(nvars, index.size());
  out.add_term(index, coeff);
  return out;
}

KForm KForm::function(const MPoly& f) { return basis(f.nvars(), BasisIndex{}, f); }

MPoly KForm::coefficient(BasisIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? MPoly(nvars_) : it->second;
}

void KForm::add_term(BasisIndex index, const MPoly& coeff) {
  if (coeff.nvars() != nvars_) {
    throw Error(ErrorCode::VariableCountMismatch, "form coefficient variable count mismatch");
  }
  if (index.size() != degree_) throw Error(ErrorCode::DegreeMismatch, "basis index length != form degree");
  if (index.max_index() >= static_cast<int>(nvars_)) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int KForm::max_coefficient_degree() const {
  int d = -1;
  for (const auto& [b, c] : terms_) d = std::max(d, c.total_degree());
  return d;
}

void KForm::check_compatible(const KForm& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::VariableCountMismatch, "forms over different spaces");
  if (degree_ != o.degree_) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
}

KForm& KForm::operator+=(const KForm& o) {
  check_compatible(o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  check_compatible(o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

KForm KForm::operator-() const {
  KForm out = *this;
  for (auto& [b, c] : out.terms_) c = -c;
  return out;
}

KForm operator*(const MPoly& f, const KForm& a) {
  if (f.nvars() != a.nvars_) throw Error(ErrorCode::VariableCountMismatch, "scaling form by foreign polynomial");
  KForm out(a.nvars_, a.degree_);
  if (f.is_zero()) return out;
  for (const auto& [b, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), b, f * c);
  return out;
}

KForm operator*(const GaussianRational& s, const KForm& a) {
  KForm out(a.nvars_, a.degree_);
  if (s.is_zero()) return out;
  for (const auto& [b, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), b, c * s);
  return out;
}

// ---------------------------------------------------------------- operations

KForm wedge(const KForm& a, const KForm& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::VariableCountMismatch, "wedge of forms over different spaces");
  const std::size_t degree = a.degree() + b.degree();
  if (degree > a.nvars()) return KForm(a.nvars(), degree);
  KForm out(a.nvars(), degree);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      MPoly prod = ca * cb;
      if (s < 0) prod = -prod;
      out.add_term(BasisIndex::from_mask(ia.mask() | ib.mask()), prod);
    }
  }
  return out;
}

KForm exterior_derivative(const KForm& a) {
  const std::size_t n = a.nvars();
  if (a.degree() >= n) return KForm(n, a.degree() + 1);
  KForm out(n, a.degree() + 1);
  for (const auto& [index, coeff] : a.terms()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (index.contains(v)) continue;
      MPoly dc = partial(coeff, v);
      if (dc.is_zero()) continue;
      // dx_v ^ dx_I: move dx_v past the indices of I below v.
      if (std::popcount(index.mask() & bits_below(v)) & 1) dc = -dc;
      out.add_term(BasisIndex::from_mask(index.mask() | (std::uint64_t{1} << v)), dc);
    }
  }
  return out;
}

KForm contract(std::size_t j, const KForm& a) {
  if (j >= a.nvars()) throw Error(ErrorCode::IndexOutOfRange, "contraction index out of range");
  if (a.degree() == 0) throw Error(ErrorCode::DegreeMismatch, "contraction of a 0-form");
  KForm out(a.nvars(), a.degree() - 1);
  for (const auto& [index, coeff] : a.terms()) {
    if (!index.contains(j)) continue;
    const bool odd = (std::popcount(index.mask() & bits_below(j)) & 1) != 0;
    out.add_term(BasisIndex::from_mask(index.mask() & ~(std::uint64_t{1} << j)), odd ? -coeff : coeff);
  }
  return out;
}

KForm contract_basis(BasisIndex J, const KForm& a) {
  if (J.size() > a.degree()) {
    throw Error(ErrorCode::IndexOutOfRange, "contraction multivector longer than form degree");
  }
  if (J.max_index() >= static_cast<int>(a.nvars())) {
    throw Error(ErrorCode::IndexOutOfRange, "contraction index out of range");
  }
  KForm out = a;
  for (std::size_t j : J.indices()) out = contract(j, out);
  return out;
}

KForm gradient_form(const MPoly& f) {
  KForm out(f.nvars(), 1);
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    out.add_term(BasisIndex::from_mask(std::uint64_t{1} << v), partial(f, v));
  }
  return out;
}

}  // namespace darboux
