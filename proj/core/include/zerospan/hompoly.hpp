#ifndef ZEROSPAN_HOMPOLY_HPP
#define ZEROSPAN_HOMPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "zerospan/multi_index.hpp"
#include "zerospan/sparse_vector.hpp"

namespace zerospan {

// Shift-periodic tail: the represented polynomial is
//   finite_part + sum_{k>=0} sum_g coeff(g) * shift(g, offset + k*period).
// On a vector supported in [1..N] only finitely many shifts contribute.
struct TailRule {
  std::uint32_t offset = 0;
  std::uint32_t period = 1;
  std::vector<std::pair<MultiIndex, Scalar>> generators;

  std::uint32_t window() const {
    std::uint32_t w = 0;
    for (const auto& [mi, c] : generators) w = std::max(w, mi.max_var());
    return w;
  }
};

// Which arguments of the symmetric form were fixed, and with what
// multiplicities, to produce a derived polynomial.
struct DerivedProvenance {
  std::vector<std::pair<SparseVector, std::uint32_t>> fixed;
  std::uint32_t t = 0;
};

// Sparse homogeneous polynomial of a fixed degree. Coefficients that become
// zero are removed eagerly, so structural equality implies pointwise
// equality. Degree 0 occurs only as the constant wrapper returned by
// derived_poly with t = 0.
class HomPoly {
public:
  HomPoly() : field_(Field::Rational), degree_(1) {}
  HomPoly(Field f, std::uint32_t degree, std::map<MultiIndex, Scalar> terms,
          std::optional<TailRule> tail = std::nullopt);

  static HomPoly zero(Field f, std::uint32_t degree) {
    return HomPoly(f, degree, {});
  }
  static HomPoly constant(const Scalar& value);
  static HomPoly monomial(Field f, const MultiIndex& mi, Scalar coeff);

  Field field() const { return field_; }
  std::uint32_t degree() const { return degree_; }
  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  const std::optional<TailRule>& tail() const { return tail_; }
  bool is_structurally_zero() const { return terms_.empty() && !tail_; }
  Scalar coeff(const MultiIndex& mi) const;
  Scalar constant_value() const; // degree-0 wrapper only
  std::uint32_t max_finite_var() const;

  HomPoly plus(const HomPoly& o) const;   // finite parts only
  HomPoly scaled(const Scalar& s) const;
  HomPoly to_field(Field target) const;
  // Finite polynomial containing every tail shift that can touch [1..N].
  HomPoly materialize_up_to(std::uint32_t N) const;

  double max_coeff_abs() const;

  const std::shared_ptr<const DerivedProvenance>& provenance() const {
    return provenance_;
  }
  void set_provenance(std::shared_ptr<const DerivedProvenance> p) {
    provenance_ = std::move(p);
  }

  bool operator==(const HomPoly& o) const; // structural, provenance ignored

private:
  Field field_;
  std::uint32_t degree_;
  std::map<MultiIndex, Scalar> terms_;
  std::optional<TailRule> tail_;
  std::shared_ptr<const DerivedProvenance> provenance_;
};

Scalar evaluate(const HomPoly& P, const SparseVector& x);

// Formal directional derivative D_v P; degree drops by one. Tail rules
// collapse to a finite polynomial because only shifts meeting supp(v)
// survive.
HomPoly directional_derivative(const HomPoly& P, const SparseVector& v);

// Q(x) = Pcheck(v1^b1, ..., vr^br, x^t) computed as (t!/m!) times the
// iterated directional derivative. sum(b) + t must equal the degree.
HomPoly derived_poly(const HomPoly& P,
                     const std::vector<std::pair<SparseVector, std::uint32_t>>& fixed,
                     std::uint32_t t);

// Pcheck(x1, ..., xm): the symmetric multilinear form at the given m vectors.
Scalar full_polarization(const HomPoly& P, const std::vector<SparseVector>& args);

// Complete coefficient table of P restricted to span(basis), indexed by
// multi-indices over formal coordinates 1..q. Computed through iterated
// polarization; tables come out in deterministic order.
std::map<MultiIndex, Scalar> restrict_to_span(const HomPoly& P,
                                              const std::vector<SparseVector>& basis);

struct SpanCheck {
  bool vanishes = false;
  // Offending table entry when the check fails.
  std::optional<std::pair<MultiIndex, Scalar>> witness;
};

SpanCheck vanishes_on_span(const HomPoly& P, const std::vector<SparseVector>& basis,
                           const Tolerance& tol);

// Residual scale for tolerance comparisons of restricted tables.
double span_scale(const HomPoly& P, const std::vector<SparseVector>& basis);

} // namespace zerospan

#endif
