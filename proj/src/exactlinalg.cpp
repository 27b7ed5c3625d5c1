#include "lefschetz/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<RationalVector> RationalMatrix::row_vectors() const {
  std::vector<RationalVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<RationalVector> RationalMatrix::column_vectors() const {
  std::vector<RationalVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::submatrix(std::span<const std::size_t> row_idx,
                                         std::span<const std::size_t> col_idx) const {
  RationalMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
  RationalVector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  RationalMatrix c(a.rows_, b.cols_);
  // Multiplication operators are sparse; skipping zeros dominates the cost.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) != 0) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix power(const RationalMatrix& m, unsigned k) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "power of a non-square matrix");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) result = result * m;
  return result;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

using IntegerRow = std::vector<Integer>;

IntegerRow to_integer_row(const RationalVector& v) {
  Integer common = 1;
  for (const auto& x : v)
    if (x.get_den() != 1) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  IntegerRow row(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) row[j] = v[j].get_num() * (common / v[j].get_den());
  return row;
}

void make_primitive(IntegerRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- target*pivot_value - source*target[col]; zeroes target[col].
void eliminate(IntegerRow& target, const IntegerRow& source, std::size_t col) {
  if (target[col] == 0) return;
  Integer factor = target[col];
  const Integer& p = source[col];
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (source[j] == 0) {
      if (target[j] != 0) target[j] *= p;
      continue;
    }
    target[j] = target[j] * p - source[j] * factor;
  }
  make_primitive(target);
}

// Fraction-free forward elimination; pivot is the first row (at or below the
// current rank) with a nonzero entry in the column.
std::vector<std::size_t> forward_eliminate(std::vector<IntegerRow>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    make_primitive(rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) eliminate(rows[i], rows[r], c);
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Echelon reduced_row_echelon(const std::vector<RationalVector>& input, std::size_t cols) {
  std::vector<IntegerRow> rows;
  rows.reserve(input.size());
  for (const auto& v : input) {
    if (v.size() != cols) throw Error(ErrorKind::DimensionMismatch, "echelon input row length");
    rows.push_back(to_integer_row(v));
  }
  auto pivots = forward_eliminate(rows, cols);
  for (std::size_t k = pivots.size(); k-- > 0;)
    for (std::size_t i = 0; i < k; ++i) eliminate(rows[i], rows[k], pivots[k]);

  Echelon out;
  out.pivots = pivots;
  out.rows.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    RationalVector v(cols);
    const Integer& p = rows[k][pivots[k]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[k][j] == 0) continue;
      v[j] = Rational(rows[k][j], p);
      v[j].canonicalize();
    }
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  std::vector<IntegerRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = to_integer_row(m.row(i));
    if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) rows.push_back(std::move(r));
  }
  return forward_eliminate(rows, m.cols()).size();
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors) {
  Subspace s(ambient_dim);
  auto e = reduced_row_echelon(vectors, ambient_dim);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return Subspace::span(ambient_dim, RationalMatrix::identity(ambient_dim).row_vectors());
}

RationalVector Subspace::reduce(RationalVector v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::AmbientMismatch, "vector outside ambient space");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Rational c = v[pivots_[k]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (sgn(basis_[k][j]) != 0) v[j] -= c * basis_[k][j];
  }
  return v;
}

bool Subspace::contains(const RationalVector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorKind::AmbientMismatch, "subspace ambient dimensions differ");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& v) { return contains(v); });
}

Subspace kernel_basis(const RationalMatrix& m) {
  auto e = reduced_row_echelon(m.row_vectors(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    vectors.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vectors);
}

Subspace column_space(const RationalMatrix& m) { return Subspace::span(m.rows(), m.column_vectors()); }

Subspace image(const RationalMatrix& m, const Subspace& u) {
  if (u.ambient_dim() != m.cols()) throw Error(ErrorKind::AmbientMismatch, "image: subspace not in domain");
  std::vector<RationalVector> vs;
  vs.reserve(u.dim());
  for (const auto& b : u.basis()) vs.push_back(m.apply(b));
  return Subspace::span(m.rows(), vs);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "subspace_sum: ambient dimensions differ");
  auto vs = u.basis();
  vs.insert(vs.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.ambient_dim(), vs);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw Error(ErrorKind::AmbientMismatch, "subspace_intersection: ambient dimensions differ");
  // Solve sum a_i u_i = sum b_j w_j; kernel of [U | -W].
  std::size_t n = u.ambient_dim();
  std::vector<RationalVector> cols = u.basis();
  for (const auto& b : w.basis()) {
    RationalVector neg(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) neg[j] = -b[j];
    cols.push_back(std::move(neg));
  }
  if (cols.empty()) return Subspace(n);
  auto ker = kernel_basis(RationalMatrix::from_columns(cols, n));
  std::vector<RationalVector> vs;
  for (const auto& k : ker.basis()) {
    RationalVector v(n);
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (sgn(k[i]) != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] += k[i] * u.basis()[i][j];
    vs.push_back(std::move(v));
  }
  return Subspace::span(n, vs);
}

std::vector<RationalVector> quotient_basis(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "quotient_basis: ambient dimensions differ");
  if (!u.contains(w)) throw Error(ErrorKind::ContainmentFailure, "quotient_basis: denominator not contained in numerator");
  std::vector<RationalVector> reps;
  Subspace acc = w;
  for (const auto& b : u.basis()) {
    if (acc.dim() == u.dim()) break;
    if (acc.contains(b)) continue;
    reps.push_back(b);
    auto vs = acc.basis();
    vs.push_back(b);
    acc = Subspace::span(u.ambient_dim(), vs);
  }
  return reps;
}

std::vector<RationalVector> coordinates(const std::vector<RationalVector>& basis,
                                        const std::vector<RationalVector>& targets, std::size_t ambient_dim) {
  // RREF of [B | T] as columns: pivots in the B block give coordinates.
  std::size_t m = basis.size();
  std::vector<RationalVector> rows(ambient_dim, RationalVector(m + targets.size()));
  for (std::size_t j = 0; j < m; ++j) {
    if (basis[j].size() != ambient_dim) throw Error(ErrorKind::AmbientMismatch, "coordinates: basis vector length");
    for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][j] = basis[j][i];
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (targets[t].size() != ambient_dim) throw Error(ErrorKind::AmbientMismatch, "coordinates: target length");
    for (std::size_t i = 0; i < ambient_dim; ++i) rows[i][m + t] = targets[t][i];
  }
  auto e = reduced_row_echelon(rows, m + targets.size());
  std::size_t basis_pivots = 0;
  for (auto p : e.pivots) {
    if (p >= m) throw Error(ErrorKind::ContainmentFailure, "coordinates: target outside span");
    ++basis_pivots;
  }
  if (basis_pivots != m) throw Error(ErrorKind::DimensionMismatch, "coordinates: basis vectors are dependent");
  std::vector<RationalVector> out(targets.size(), RationalVector(m));
  for (std::size_t k = 0; k < e.rows.size(); ++k)
    for (std::size_t t = 0; t < targets.size(); ++t) out[t][e.pivots[k]] = e.rows[k][m + t];
  return out;
}

JordanProfile::JordanProfile(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  for (int b : blocks_)
    if (b <= 0) throw Error(ErrorKind::InvalidProfile, "Jordan block sizes must be positive");
  std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
}

int JordanProfile::total() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0); }

std::vector<std::pair<int, int>> JordanProfile::grouped() const {
  std::vector<std::pair<int, int>> out;
  for (int b : blocks_) {
    if (!out.empty() && out.back().first == b)
      ++out.back().second;
    else
      out.emplace_back(b, 1);
  }
  return out;
}

std::string JordanProfile::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
  return s + "}";
}

JordanProfile nilpotent_jordan_profile(const RationalMatrix& n) {
  if (!n.is_square()) throw Error(ErrorKind::NonSquare, "Jordan profile of a non-square matrix");
  const std::size_t dim = n.rows();
  // ranks[k] = rank N^k, stop once zero.
  std::vector<std::size_t> ranks{dim};
  RationalMatrix p = RationalMatrix::identity(dim);
  while (ranks.back() > 0) {
    if (ranks.size() > dim) throw Error(ErrorKind::NotNilpotent, "N^dim is nonzero");
    p = p * n;
    ranks.push_back(rank(p));
    if (ranks.size() >= 2 && ranks[ranks.size() - 1] == ranks[ranks.size() - 2])
      throw Error(ErrorKind::NotNilpotent, "rank of powers stabilizes above zero");
  }
  std::vector<int> blocks;
  // at_least[k] = ranks[k-1] - ranks[k]; exactly k = at_least[k] - at_least[k+1].
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least = ranks[k - 1] - ranks[k];
    std::size_t next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    blocks.insert(blocks.end(), at_least - next, static_cast<int>(k));
  }
  return JordanProfile(std::move(blocks));
}

}  // namespace lefschetz
