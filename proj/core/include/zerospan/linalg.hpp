#ifndef ZEROSPAN_LINALG_HPP
#define ZEROSPAN_LINALG_HPP

#include <vector>

#include "zerospan/sparse_vector.hpp"

namespace zerospan {

using DenseMatrix = std::vector<std::vector<Scalar>>;

// Rank over the exact field via fraction-free (Bareiss) elimination after
// clearing row denominators; the approximate backend uses partial pivoting
// with a magnitude threshold relative to the largest entry.
int matrix_rank(DenseMatrix rows, Field field, double pivot_eps = 1e-9);

int exact_rank(const std::vector<SparseVector>& vectors, double pivot_eps = 1e-9);

// Reduced row echelon form in place; returns pivot column indices.
// Approximate backend uses the same relative threshold.
std::vector<std::size_t> rref_in_place(DenseMatrix& rows, Field field,
                                       double pivot_eps = 1e-9);

// Inverse of a square matrix over the field; DependentSeed if singular.
DenseMatrix matrix_inverse(const DenseMatrix& m, Field field, double pivot_eps = 1e-9);

// RREF of an r x p matrix whose columns arrive one at a time, maintained
// through a full row transform so previously classified columns stay valid.
// Supports the pull-and-eliminate kernel stream: each appended column either
// raises the rank or is recorded as a free column, and every free column
// yields one canonical null-space combination of the appended columns.
class IncrementalRref {
public:
  IncrementalRref(std::size_t rows, Field field, double pivot_eps = 1e-9);

  std::size_t rows() const { return nrows_; }
  std::size_t rank() const { return pivot_col_of_row_.size(); }
  std::size_t free_count() const { return free_cols_.size(); }
  std::size_t appended() const { return cols_.size(); }

  // Appends one column (length rows()); returns true if it became a pivot.
  bool append(std::vector<Scalar> column);

  // Canonical null-space vector attached to the k-th free column, as sparse
  // coefficients over appended-column indices. Stable under later appends.
  std::vector<std::pair<std::size_t, Scalar>> null_vector(std::size_t k) const;

private:
  bool negligible(const Scalar& x, double scale) const;

  std::size_t nrows_;
  Field field_;
  double pivot_eps_;
  DenseMatrix transform_;                  // r x r row transform
  std::vector<std::vector<Scalar>> cols_;  // reduced appended columns
  std::vector<std::size_t> pivot_col_of_row_;
  std::vector<std::size_t> free_cols_;
};

} // namespace zerospan

#endif
