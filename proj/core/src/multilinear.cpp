#include "zerospan/multilinear.hpp"

#include <algorithm>
#include <set>

namespace zerospan {

MultilinearForm::MultilinearForm(Field f, std::uint32_t arity,
                                 std::map<Key, Scalar> entries)
    : field_(f), arity_(arity) {
  if (arity_ < 1) raise(Errc::InvalidInput, "arity must be >= 1");
  for (auto& [key, c] : entries) {
    if (key.size() != arity_)
      raise(Errc::ArityMismatch, "coefficient tuple length does not match arity");
    for (auto idx : key)
      if (idx == 0) raise(Errc::InvalidInput, "slot indices are 1-based");
    require_same_field(f, c.field(), "MultilinearForm");
    if (!c.is_zero()) entries_.emplace(key, std::move(c));
  }
}

SparseVector MultilinearForm::slot_functional(
    std::size_t slot, const std::vector<SparseVector>& fills) const {
  if (fills.size() != arity_ - 1)
    raise(Errc::ArityMismatch, "slot_functional needs arity-1 fill vectors");
  std::vector<SparseVector::Entry> acc;
  for (const auto& [key, c] : entries_) {
    Scalar w = c;
    std::size_t fi = 0;
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (j == slot) continue;
      w *= fills[fi++].at(key[j]);
      if (w.is_zero()) break;
    }
    if (!w.is_zero()) acc.push_back({key[slot], w});
  }
  return SparseVector(field_, std::move(acc));
}

std::vector<std::vector<std::uint32_t>> MultilinearForm::slot_supports() const {
  std::vector<std::set<std::uint32_t>> sets(arity_);
  for (const auto& [key, c] : entries_)
    for (std::size_t j = 0; j < key.size(); ++j) sets[j].insert(key[j]);
  std::vector<std::vector<std::uint32_t>> out(arity_);
  for (std::size_t j = 0; j < sets.size(); ++j)
    out[j].assign(sets[j].begin(), sets[j].end());
  return out;
}

Scalar multilinear_eval(const MultilinearForm& A, const std::vector<SparseVector>& args) {
  if (args.size() != A.arity())
    raise(Errc::ArityMismatch, "multilinear_eval needs exactly arity-many arguments");
  for (const auto& a : args) require_same_field(A.field(), a.field(), "multilinear_eval");
  Scalar acc = Scalar::zero(A.field());
  for (const auto& [key, c] : A.entries()) {
    Scalar term = c;
    for (std::size_t j = 0; j < key.size(); ++j) {
      term *= args[j].at(key[j]);
      if (term.is_zero()) break;
    }
    acc += term;
  }
  return acc;
}

} // namespace zerospan
