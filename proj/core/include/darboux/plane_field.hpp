#pragma once

#include <cstddef>
#include <optional>

#include "darboux/kform.hpp"

namespace darboux {

struct ContentSplit {
  KForm form;     ///< form / content, with unit content
  MPoly content;  ///< monic gcd of all coefficients
};

/// Divides a nonzero form by the monic gcd of its coefficients. This removes
/// the divisorial part of the singular set. Throws ZeroForm.
ContentSplit normalize_content(const KForm& form);

/// Decomposability test: (i_{e_J} w) ^ w = 0 for every coordinate
/// multivector e_J of length p-1. Trivially true for p = 1 and p = n-1.
/// Throws DegreeMismatch for a 0-form.
bool check_lds(const KForm& form);

/// Integrability test: (i_{e_J} w) ^ dw = 0 for every J of length p-1.
/// Throws NotLDS when the form is not decomposable.
bool check_integrability(const KForm& form);

/// A validated codimension-p plane field on affine n-space: a nonzero,
/// content-normalized, decomposable p-form.
class PlaneField {
 public:
  std::size_t nvars() const noexcept { return form_.nvars(); }
  std::size_t codim() const noexcept { return form_.degree(); }
  const KForm& form() const noexcept { return form_; }
  /// Content divided out of the input form (1 when none).
  const MPoly& content() const noexcept { return content_; }
  bool lds_checked() const noexcept { return true; }
  std::optional<bool> integrable() const noexcept { return integrable_; }

 private:
  friend PlaneField load_plane_field(std::size_t, std::size_t, const KForm&);
  PlaneField(KForm form, MPoly content, std::optional<bool> integrable)
      : form_(std::move(form)), content_(std::move(content)), integrable_(integrable) {}

  KForm form_;
  MPoly content_;
  std::optional<bool> integrable_;
};

/// Validates and normalizes. Throws DegreeMismatch (codim outside
/// [1, n-1] or form degree != codim), ZeroForm, NotLDS.
PlaneField load_plane_field(std::size_t nvars, std::size_t codim, const KForm& form);

}  // namespace darboux
