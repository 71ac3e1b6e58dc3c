#ifndef ZEROSPAN_UNIPOLY_HPP
#define ZEROSPAN_UNIPOLY_HPP

#include <vector>

#include "zerospan/scalar.hpp"

namespace zerospan {

// Univariate polynomial indexed by power 0..d. The leading coefficient is
// nonzero unless the polynomial is identically zero.
class UniPoly {
public:
  UniPoly() : field_(Field::Rational) {}
  UniPoly(Field f, std::vector<Scalar> coeffs);

  Field field() const { return field_; }
  int degree() const { return int(coeffs_.size()) - 1; } // -1 when zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& coeff(std::size_t power) const;

  Scalar evaluate(const Scalar& t) const;
  std::complex<double> evaluate(std::complex<double> t) const;

  // Synthetic division by (t - r); remainder must be zero (r a root).
  UniPoly deflate(const Scalar& r) const;

  double max_coeff_abs() const;
  // Residual scale for root acceptance: max|coeff| * (1+|r|)^d.
  double root_scale(std::complex<double> r) const;

private:
  Field field_;
  std::vector<Scalar> coeffs_;
};

struct RootSearchLimits {
  // Norm bound on numerator/denominator divisor enumeration for the
  // rational-root-style search.
  unsigned long divisor_bound = 1000000;
  // Simultaneous-iteration sweep budget for the approximate fallback.
  int iteration_budget = 200;
};

// Every returned value is a bit-exact root lying in the backend field.
// Degree 1 by division, degree 2 by the quadratic formula, degree >= 3 by
// bounded divisor enumeration with deflation; the list may be incomplete.
std::vector<Scalar> find_exact_roots(const UniPoly& p,
                                     const RootSearchLimits& limits = {});

// Durand-Kerner simultaneous refinement from a fixed starting configuration;
// returns degree() roots with multiplicity, each with |p(r)| <= eps*scale.
std::vector<Scalar> find_approx_roots(const UniPoly& p, const Tolerance& tol,
                                      const RootSearchLimits& limits = {});

} // namespace zerospan

#endif
