#ifndef ZEROSPAN_MULTILINEAR_HPP
#define ZEROSPAN_MULTILINEAR_HPP

#include <map>
#include <vector>

#include "zerospan/sparse_vector.hpp"

namespace zerospan {

// m-linear form with a finite coefficient table keyed by ordered index
// tuples: A(x1,...,xm) = sum_T c_T * prod_j x_j[T_j].
class MultilinearForm {
public:
  using Key = std::vector<std::uint32_t>;

  MultilinearForm(Field f, std::uint32_t arity, std::map<Key, Scalar> entries);

  Field field() const { return field_; }
  std::uint32_t arity() const { return arity_; }
  const std::map<Key, Scalar>& entries() const { return entries_; }

  // Linear functional in the chosen slot, the other slots filled with the
  // given vectors (used by the direct span construction).
  SparseVector slot_functional(std::size_t slot,
                               const std::vector<SparseVector>& fills) const;

  // Active indices per slot (union of table keys).
  std::vector<std::vector<std::uint32_t>> slot_supports() const;

private:
  Field field_;
  std::uint32_t arity_;
  std::map<Key, Scalar> entries_;
};

Scalar multilinear_eval(const MultilinearForm& A, const std::vector<SparseVector>& args);

} // namespace zerospan

#endif
