#ifndef ZEROSPAN_FIELD_HPP
#define ZEROSPAN_FIELD_HPP

#include <string>

#include "zerospan/error.hpp"

namespace zerospan {

// Coefficient field backends. The two exact backends store reduced
// arbitrary-precision fractions; Complex64 is a double-precision pair with
// tolerance-based comparisons.
enum class Field {
  Rational,
  GaussianRational,
  Complex64,
};

inline bool field_is_exact(Field f) { return f != Field::Complex64; }

inline const char* field_name(Field f) {
  switch (f) {
  case Field::Rational: return "rational";
  case Field::GaussianRational: return "gaussian_rational";
  case Field::Complex64: return "complex64";
  }
  return "?";
}

Field field_from_name(const std::string& name);

inline void require_same_field(Field a, Field b, const char* where) {
  if (a != b)
    raise(Errc::FieldMismatch, std::string(where) + ": operands over " +
                                   field_name(a) + " and " + field_name(b));
}

// Relative residual bound used by the approximate backend. Exact backends
// carry epsilon = 0.
struct Tolerance {
  double epsilon = 0.0;

  static Tolerance exact() { return Tolerance{0.0}; }
  static Tolerance approx(double eps) { return Tolerance{eps}; }
  bool is_exact() const { return epsilon == 0.0; }
};

} // namespace zerospan

#endif
