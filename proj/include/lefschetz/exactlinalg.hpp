#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lefschetz/rational.hpp"

namespace lefschetz {

/// Dense matrix over Q. Entries are gmp rationals and therefore always kept
/// in lowest terms with a positive denominator.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalVector column(std::size_t j) const;
  std::vector<RationalVector> row_vectors() const;
  std::vector<RationalVector> column_vectors() const;

  bool is_zero() const;
  RationalMatrix transpose() const;
  RationalMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  RationalVector apply(const RationalVector& v) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix power(const RationalMatrix& m, unsigned k);
/// Kronecker product a ⊗ b; index (i*b.rows()+k, j*b.cols()+l).
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
std::string to_string(const RationalMatrix& m);

/// Reduced row echelon form: rows are the nonzero RREF rows, pivots their
/// leading columns (pivot entries equal 1).
struct Echelon {
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;
};

Echelon reduced_row_echelon(const std::vector<RationalVector>& rows, std::size_t cols);

/// A linear subspace of Q^n held as its (unique) reduced echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<RationalVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection along pivot coordinates; zero iff v is in the subspace.
  RationalVector reduce(RationalVector v) const;
  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const RationalMatrix& m);
Subspace kernel_basis(const RationalMatrix& m);
Subspace column_space(const RationalMatrix& m);
/// Image of the subspace u under m.
Subspace image(const RationalMatrix& m, const Subspace& u);
Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersection(const Subspace& u, const Subspace& w);
/// Representatives in u whose classes form a basis of u/w; requires w ⊆ u.
/// Representatives are drawn from u's echelon basis in pivot order.
std::vector<RationalVector> quotient_basis(const Subspace& u, const Subspace& w);

/// Coordinates of each target in terms of independent vectors `basis`
/// (throws ContainmentFailure if a target is outside their span).
std::vector<RationalVector> coordinates(const std::vector<RationalVector>& basis,
                                        const std::vector<RationalVector>& targets, std::size_t ambient_dim);

/// Multiset of Jordan block sizes of a nilpotent operator, non-increasing.
class JordanProfile {
 public:
  JordanProfile() = default;
  explicit JordanProfile(std::vector<int> blocks);

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  int total() const;
  /// (size, multiplicity) pairs with strictly decreasing sizes.
  std::vector<std::pair<int, int>> grouped() const;
  std::string to_string() const;

  friend bool operator==(const JordanProfile&, const JordanProfile&) = default;

 private:
  std::vector<int> blocks_;
};

/// Block sizes by the rank recurrence #(blocks >= k) = rank N^{k-1} - rank N^k.
JordanProfile nilpotent_jordan_profile(const RationalMatrix& n);

}  // namespace lefschetz
