#ifndef ZEROSPAN_SPARSE_VECTOR_HPP
#define ZEROSPAN_SPARSE_VECTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "zerospan/scalar.hpp"

namespace zerospan {

// Finitely-supported coordinate vector over the standard basis e1, e2, ...
// Entries are stored with strictly increasing indices and nonzero values.
class SparseVector {
public:
  using Entry = std::pair<std::uint32_t, Scalar>;

  explicit SparseVector(Field f = Field::Rational) : field_(f) {}
  SparseVector(Field f, std::vector<Entry> entries); // canonicalizes

  static SparseVector unit(Field f, std::uint32_t index);

  Field field() const { return field_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::uint32_t min_index() const { return entries_.empty() ? 0 : entries_.front().first; }
  std::uint32_t max_index() const { return entries_.empty() ? 0 : entries_.back().first; }
  Scalar at(std::uint32_t index) const;

  SparseVector scaled(const Scalar& s) const;
  SparseVector plus(const SparseVector& o) const;
  SparseVector minus(const SparseVector& o) const;
  SparseVector to_field(Field target) const;

  // Algebraic pairing sum_i phi_i x_i (no conjugation); used both for
  // functional application and coordinate reads.
  Scalar pair(const SparseVector& x) const;

  double max_entry_abs() const;

  bool operator==(const SparseVector& o) const {
    return field_ == o.field_ && entries_ == o.entries_;
  }

private:
  Field field_;
  std::vector<Entry> entries_;
};

} // namespace zerospan

#endif
