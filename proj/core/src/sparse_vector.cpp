#include "zerospan/sparse_vector.hpp"

#include <algorithm>
#include <map>

namespace zerospan {

SparseVector::SparseVector(Field f, std::vector<Entry> entries) : field_(f) {
  std::map<std::uint32_t, Scalar> acc;
  for (auto& [idx, val] : entries) {
    if (idx == 0) raise(Errc::InvalidInput, "vector indices are 1-based");
    require_same_field(f, val.field(), "SparseVector");
    auto it = acc.find(idx);
    if (it == acc.end())
      acc.emplace(idx, std::move(val));
    else
      it->second += val;
  }
  for (auto& [idx, val] : acc)
    if (!val.is_zero()) entries_.emplace_back(idx, std::move(val));
}

SparseVector SparseVector::unit(Field f, std::uint32_t index) {
  return SparseVector(f, {{index, Scalar::one(f)}});
}

Scalar SparseVector::at(std::uint32_t index) const {
  for (const auto& [idx, val] : entries_) {
    if (idx == index) return val;
    if (idx > index) break;
  }
  return Scalar::zero(field_);
}

SparseVector SparseVector::scaled(const Scalar& s) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [idx, val] : entries_) out.emplace_back(idx, val * s);
  return SparseVector(field_, std::move(out));
}

SparseVector SparseVector::plus(const SparseVector& o) const {
  require_same_field(field_, o.field_, "SparseVector::plus");
  std::vector<Entry> out = entries_;
  out.insert(out.end(), o.entries_.begin(), o.entries_.end());
  return SparseVector(field_, std::move(out));
}

SparseVector SparseVector::minus(const SparseVector& o) const {
  return plus(o.scaled(Scalar::integer(field_, -1)));
}

SparseVector SparseVector::to_field(Field target) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [idx, val] : entries_) out.emplace_back(idx, val.to_field(target));
  return SparseVector(target, std::move(out));
}

Scalar SparseVector::pair(const SparseVector& x) const {
  require_same_field(field_, x.field(), "SparseVector::pair");
  Scalar acc = Scalar::zero(field_);
  auto a = entries_.begin();
  auto b = x.entries().begin();
  while (a != entries_.end() && b != x.entries().end()) {
    if (a->first < b->first) ++a;
    else if (b->first < a->first) ++b;
    else { acc += a->second * b->second; ++a; ++b; }
  }
  return acc;
}

double SparseVector::max_entry_abs() const {
  double m = 0;
  for (const auto& [idx, val] : entries_) m = std::max(m, val.abs());
  return m;
}

} // namespace zerospan
