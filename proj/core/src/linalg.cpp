#include "zerospan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace zerospan {

namespace {

double matrix_scale(const DenseMatrix& rows) {
  double m = 0;
  for (const auto& r : rows)
    for (const auto& x : r) m = std::max(m, x.abs());
  return m > 0 ? m : 1.0;
}

// Clears denominators row-wise so Bareiss stays in Gaussian integers.
void clear_row_denominators(std::vector<Scalar>& row, Field f) {
  mpz_class lcm = 1;
  for (const auto& x : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.re().get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.im().get_den().get_mpz_t());
  }
  if (lcm == 1) return;
  Scalar s = Scalar::exact(f, Rat(lcm), 0);
  for (auto& x : row) x *= s;
}

int rank_bareiss(DenseMatrix& a, Field f) {
  for (auto& row : a) clear_row_denominators(row, f);
  const std::size_t R = a.size();
  const std::size_t C = R ? a[0].size() : 0;
  std::size_t r = 0;
  Scalar prev = Scalar::one(f);
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t pivot = r;
    while (pivot < R && a[pivot][c].is_zero()) ++pivot;
    if (pivot == R) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = Scalar::zero(f);
    }
    prev = a[r][c];
    ++r;
  }
  return int(r);
}

int rank_threshold(DenseMatrix& a, double eps) {
  const std::size_t R = a.size();
  const std::size_t C = R ? a[0].size() : 0;
  const double scale = matrix_scale(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t pivot = r;
    double best = 0;
    for (std::size_t i = r; i < R; ++i) {
      double v = a[i][c].abs();
      if (v > best) { best = v; pivot = i; }
    }
    if (best <= eps * scale) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      Scalar factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < C; ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return int(r);
}

} // namespace

int matrix_rank(DenseMatrix rows, Field field, double pivot_eps) {
  if (rows.empty()) return 0;
  if (field_is_exact(field)) return rank_bareiss(rows, field);
  return rank_threshold(rows, pivot_eps);
}

int exact_rank(const std::vector<SparseVector>& vectors, double pivot_eps) {
  if (vectors.empty()) return 0;
  Field f = vectors.front().field();
  std::set<std::uint32_t> support;
  for (const auto& v : vectors) {
    require_same_field(f, v.field(), "exact_rank");
    for (const auto& [idx, val] : v.entries()) support.insert(idx);
  }
  std::vector<std::uint32_t> cols(support.begin(), support.end());
  DenseMatrix m(vectors.size(), std::vector<Scalar>(cols.size(), Scalar::zero(f)));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m[i][j] = vectors[i].at(cols[j]);
  return matrix_rank(std::move(m), f, pivot_eps);
}

std::vector<std::size_t> rref_in_place(DenseMatrix& rows, Field field,
                                       double pivot_eps) {
  std::vector<std::size_t> pivots;
  const std::size_t R = rows.size();
  const std::size_t C = R ? rows[0].size() : 0;
  const bool exact = field_is_exact(field);
  const double scale = exact ? 1.0 : matrix_scale(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t pivot = r;
    if (exact) {
      while (pivot < R && rows[pivot][c].is_zero()) ++pivot;
      if (pivot == R) continue;
    } else {
      double best = 0;
      for (std::size_t i = r; i < R; ++i) {
        double v = rows[i][c].abs();
        if (v > best) { best = v; pivot = i; }
      }
      if (best <= pivot_eps * scale) continue;
    }
    std::swap(rows[pivot], rows[r]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < C; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar factor = rows[i][c];
      for (std::size_t j = c; j < C; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

DenseMatrix matrix_inverse(const DenseMatrix& m, Field field, double pivot_eps) {
  const std::size_t n = m.size();
  DenseMatrix aug(n, std::vector<Scalar>(2 * n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) raise(Errc::Internal, "matrix_inverse on non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Scalar::one(field);
  }
  auto pivots = rref_in_place(aug, field, pivot_eps);
  if (pivots.size() != n || (n && pivots.back() != n - 1))
    raise(Errc::DependentSeed, "singular matrix");
  DenseMatrix inv(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

IncrementalRref::IncrementalRref(std::size_t rows, Field field, double pivot_eps)
    : nrows_(rows), field_(field), pivot_eps_(pivot_eps),
      transform_(rows, std::vector<Scalar>(rows, Scalar::zero(field))) {
  for (std::size_t i = 0; i < rows; ++i) transform_[i][i] = Scalar::one(field);
}

bool IncrementalRref::negligible(const Scalar& x, double scale) const {
  if (field_is_exact(field_)) return x.is_zero();
  return x.abs() <= pivot_eps_ * (scale > 0 ? scale : 1.0);
}

bool IncrementalRref::append(std::vector<Scalar> column) {
  if (column.size() != nrows_)
    raise(Errc::Internal, "IncrementalRref column length mismatch");
  // Reduced coordinates of the new column under the current transform.
  std::vector<Scalar> red(nrows_, Scalar::zero(field_));
  double scale = 0;
  for (std::size_t i = 0; i < nrows_; ++i) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t j = 0; j < nrows_; ++j) {
      if (transform_[i][j].is_zero() || column[j].is_zero()) continue;
      acc += transform_[i][j] * column[j];
    }
    scale = std::max(scale, acc.abs());
    red[i] = std::move(acc);
  }

  const std::size_t r = rank();
  std::size_t pivot = nrows_;
  if (field_is_exact(field_)) {
    for (std::size_t i = r; i < nrows_; ++i)
      if (!red[i].is_zero()) { pivot = i; break; }
  } else {
    double best = pivot_eps_ * (scale > 0 ? scale : 1.0);
    for (std::size_t i = r; i < nrows_; ++i)
      if (red[i].abs() > best) { best = red[i].abs(); pivot = i; }
  }

  if (pivot == nrows_) {
    for (std::size_t i = r; i < nrows_; ++i) red[i] = Scalar::zero(field_);
    cols_.push_back(std::move(red));
    free_cols_.push_back(cols_.size() - 1);
    return false;
  }

  std::swap(transform_[pivot], transform_[r]);
  std::swap(red[pivot], red[r]);
  Scalar inv = red[r].inverse();
  for (auto& t : transform_[r]) t *= inv;
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (i == r) continue;
    if (negligible(red[i], scale)) { red[i] = Scalar::zero(field_); continue; }
    for (std::size_t j = 0; j < nrows_; ++j)
      transform_[i][j] -= red[i] * transform_[r][j];
    red[i] = Scalar::zero(field_);
  }
  red[r] = Scalar::one(field_);
  cols_.push_back(std::move(red));
  pivot_col_of_row_.push_back(cols_.size() - 1);
  return true;
}

std::vector<std::pair<std::size_t, Scalar>>
IncrementalRref::null_vector(std::size_t k) const {
  if (k >= free_cols_.size()) raise(Errc::Internal, "null_vector index out of range");
  const std::size_t f = free_cols_[k];
  std::vector<std::pair<std::size_t, Scalar>> out;
  out.emplace_back(f, Scalar::one(field_));
  for (std::size_t row = 0; row < rank(); ++row) {
    const Scalar& entry = cols_[f][row];
    if (entry.is_zero()) continue;
    out.emplace_back(pivot_col_of_row_[row], entry.negate());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

} // namespace zerospan
