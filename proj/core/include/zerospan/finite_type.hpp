#ifndef ZEROSPAN_FINITE_TYPE_HPP
#define ZEROSPAN_FINITE_TYPE_HPP

#include <optional>

#include "zerospan/hompoly.hpp"

namespace zerospan {

// P(x) = sum_j a_j <phi_j, x>^m: a finite sum of m-th powers of linear
// functionals, each functional stored as a finitely-supported vector.
class FiniteTypePoly {
public:
  struct Term {
    Scalar weight;
    SparseVector functional;
  };

  FiniteTypePoly(Field f, std::uint32_t degree, std::vector<Term> terms);

  Field field() const { return field_; }
  std::uint32_t degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<SparseVector> functionals() const;

  Scalar evaluate_at(const SparseVector& x) const;

private:
  Field field_;
  std::uint32_t degree_;
  std::vector<Term> terms_;
};

// Multinomial expansion of each power, summed and canonicalized.
HomPoly finite_type_to_hompoly(const FiniteTypePoly& F);

// Recognizes finite-type structure where an exact decomposition is cheap:
// degree 1 always, degree 2 by completing the square over the field,
// degree >= 3 when every monomial is a pure power. Tail rules are never
// finite type. Returns nothing when no decomposition is found.
std::optional<FiniteTypePoly> try_finite_type(const HomPoly& P);

} // namespace zerospan

#endif
