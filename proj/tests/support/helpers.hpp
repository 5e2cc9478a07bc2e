#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/expression.hpp"
#include "darboux/kform.hpp"
#include "darboux/mpoly.hpp"
#include "doctest.h"

namespace th {

inline darboux::VariableTable vars(std::vector<std::string> names) { return darboux::VariableTable(std::move(names)); }

inline const darboux::VariableTable& xy() {
  static const darboux::VariableTable v({"x", "y"});
  return v;
}
inline const darboux::VariableTable& xyz() {
  static const darboux::VariableTable v({"x", "y", "z"});
  return v;
}
inline const darboux::VariableTable& xyzw() {
  static const darboux::VariableTable v({"x", "y", "z", "w"});
  return v;
}

inline darboux::MPoly P(const darboux::VariableTable& v, std::string_view text) {
  return darboux::parse_polynomial(text, v);
}
inline darboux::KForm F(const darboux::VariableTable& v, std::string_view text, std::size_t degree) {
  return darboux::parse_form(text, v, degree);
}

inline darboux::VariableTable generic_vars(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return darboux::VariableTable(names);
}

}  // namespace th

namespace doctest {
template <>
struct StringMaker<darboux::GaussianRational> {
  static String convert(const darboux::GaussianRational& c) { return c.to_string().c_str(); }
};
template <>
struct StringMaker<darboux::MPoly> {
  static String convert(const darboux::MPoly& p) {
    return darboux::format_polynomial(p, th::generic_vars(p.nvars())).c_str();
  }
};
template <>
struct StringMaker<darboux::KForm> {
  static String convert(const darboux::KForm& a) {
    return (darboux::format_form(a, th::generic_vars(a.nvars())) + " [deg " + std::to_string(a.degree()) + "]").c_str();
  }
};
}  // namespace doctest

#define CHECK_THROWS_CODE(expr, ecode)                                 \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const darboux::Error& e_) {                               \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(e_.code() == (ecode), std::string(darboux::to_string(e_.code()))); \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "expected " #ecode);                        \
  } while (0)
