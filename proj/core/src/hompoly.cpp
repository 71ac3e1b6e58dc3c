#include "zerospan/hompoly.hpp"

#include <algorithm>
#include <cmath>

namespace zerospan {

HomPoly::HomPoly(Field f, std::uint32_t degree, std::map<MultiIndex, Scalar> terms,
                 std::optional<TailRule> tail)
    : field_(f), degree_(degree), tail_(std::move(tail)) {
  for (auto& [mi, c] : terms) {
    if (mi.degree() != degree)
      raise(Errc::InvalidInput, "monomial degree does not match the polynomial degree");
    require_same_field(f, c.field(), "HomPoly");
    if (!c.is_zero()) terms_.emplace(mi, std::move(c));
  }
  if (tail_) {
    if (tail_->period < 1) raise(Errc::InvalidInput, "tail period must be >= 1");
    if (tail_->offset < max_finite_var())
      raise(Errc::InvalidInput, "tail offset below the finite part's support");
    for (auto& [mi, c] : tail_->generators) {
      if (mi.degree() != degree)
        raise(Errc::InvalidInput, "tail generator degree mismatch");
      require_same_field(f, c.field(), "TailRule");
      if (c.is_zero()) raise(Errc::InvalidInput, "tail generator with zero coefficient");
      if (mi.empty()) raise(Errc::InvalidInput, "tail generator must involve variables");
    }
    if (tail_->generators.empty()) tail_.reset();
  }
}

HomPoly HomPoly::constant(const Scalar& value) {
  std::map<MultiIndex, Scalar> terms;
  if (!value.is_zero()) terms.emplace(MultiIndex{}, value);
  return HomPoly(value.field(), 0, std::move(terms));
}

HomPoly HomPoly::monomial(Field f, const MultiIndex& mi, Scalar coeff) {
  std::map<MultiIndex, Scalar> terms;
  terms.emplace(mi, std::move(coeff));
  return HomPoly(f, mi.degree(), std::move(terms));
}

Scalar HomPoly::coeff(const MultiIndex& mi) const {
  auto it = terms_.find(mi);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar HomPoly::constant_value() const {
  if (degree_ != 0) raise(Errc::Internal, "constant_value on nonconstant polynomial");
  return coeff(MultiIndex{});
}

std::uint32_t HomPoly::max_finite_var() const {
  std::uint32_t m = 0;
  for (const auto& [mi, c] : terms_) m = std::max(m, mi.max_var());
  return m;
}

HomPoly HomPoly::plus(const HomPoly& o) const {
  require_same_field(field_, o.field_, "HomPoly::plus");
  if (degree_ != o.degree_) raise(Errc::ArityMismatch, "adding polynomials of different degree");
  if (tail_ || o.tail_) raise(Errc::InvalidInput, "sum of tail-rule polynomials is not supported");
  std::map<MultiIndex, Scalar> out = terms_;
  for (const auto& [mi, c] : o.terms_) {
    auto it = out.find(mi);
    if (it == out.end()) out.emplace(mi, c);
    else it->second += c;
  }
  return HomPoly(field_, degree_, std::move(out));
}

HomPoly HomPoly::scaled(const Scalar& s) const {
  std::map<MultiIndex, Scalar> out;
  for (const auto& [mi, c] : terms_) out.emplace(mi, c * s);
  std::optional<TailRule> tail = tail_;
  if (tail) {
    if (s.is_zero()) tail.reset();
    else
      for (auto& [mi, c] : tail->generators) c = c * s;
  }
  return HomPoly(field_, degree_, std::move(out), std::move(tail));
}

HomPoly HomPoly::to_field(Field target) const {
  std::map<MultiIndex, Scalar> out;
  for (const auto& [mi, c] : terms_) out.emplace(mi, c.to_field(target));
  std::optional<TailRule> tail = tail_;
  if (tail)
    for (auto& [mi, c] : tail->generators) c = c.to_field(target);
  return HomPoly(target, degree_, std::move(out), std::move(tail));
}

HomPoly HomPoly::materialize_up_to(std::uint32_t N) const {
  std::map<MultiIndex, Scalar> out = terms_;
  if (tail_) {
    for (const auto& [gen, c] : tail_->generators) {
      for (std::uint64_t s = tail_->offset; s + gen.min_var() <= N;
           s += tail_->period) {
        MultiIndex shifted = gen.shifted(std::uint32_t(s));
        auto it = out.find(shifted);
        if (it == out.end()) out.emplace(shifted, c);
        else it->second += c;
      }
    }
  }
  return HomPoly(field_, degree_, std::move(out));
}

double HomPoly::max_coeff_abs() const {
  double m = 0;
  for (const auto& [mi, c] : terms_) m = std::max(m, c.abs());
  if (tail_)
    for (const auto& [mi, c] : tail_->generators) m = std::max(m, c.abs());
  return m;
}

bool HomPoly::operator==(const HomPoly& o) const {
  if (field_ != o.field_ || degree_ != o.degree_ || terms_ != o.terms_)
    return false;
  if (tail_.has_value() != o.tail_.has_value()) return false;
  if (!tail_) return true;
  return tail_->offset == o.tail_->offset && tail_->period == o.tail_->period &&
         tail_->generators == o.tail_->generators;
}

} // namespace zerospan
