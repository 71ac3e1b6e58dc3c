#include "zerospan/unipoly.hpp"

#include <cmath>

namespace zerospan {

UniPoly::UniPoly(Field f, std::vector<Scalar> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) require_same_field(f, c.field(), "UniPoly");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Scalar& UniPoly::coeff(std::size_t power) const {
  static const Scalar zero_rat = Scalar::zero(Field::Rational);
  static const Scalar zero_gauss = Scalar::zero(Field::GaussianRational);
  static const Scalar zero_cx = Scalar::complex64({0, 0});
  if (power < coeffs_.size()) return coeffs_[power];
  switch (field_) {
  case Field::Rational: return zero_rat;
  case Field::GaussianRational: return zero_gauss;
  default: return zero_cx;
  }
}

Scalar UniPoly::evaluate(const Scalar& t) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

std::complex<double> UniPoly::evaluate(std::complex<double> t) const {
  std::complex<double> acc{0, 0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + it->approx();
  return acc;
}

UniPoly UniPoly::deflate(const Scalar& r) const {
  if (is_zero() || degree() < 1)
    raise(Errc::InvalidInput, "deflate on constant polynomial");
  std::vector<Scalar> q(coeffs_.size() - 1, Scalar::zero(field_));
  Scalar carry = coeffs_.back();
  for (int i = int(coeffs_.size()) - 2; i >= 0; --i) {
    q[std::size_t(i)] = carry;
    carry = coeffs_[std::size_t(i)] + carry * r;
  }
  if (!carry.is_zero())
    raise(Errc::Internal, "deflate called with a non-root");
  return UniPoly(field_, std::move(q));
}

double UniPoly::max_coeff_abs() const {
  double m = 0;
  for (const auto& c : coeffs_) m = std::max(m, c.abs());
  return m;
}

double UniPoly::root_scale(std::complex<double> r) const {
  double base = 1.0 + std::abs(r);
  return max_coeff_abs() * std::pow(base, std::max(0, degree()));
}

} // namespace zerospan
