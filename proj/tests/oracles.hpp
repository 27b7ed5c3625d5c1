#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond the matrix container and gmp types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "lefschetz/graded.hpp"

namespace oracle {

using lefschetz::Rational;
using lefschetz::RationalMatrix;

// Plain Gaussian elimination with division.
inline std::size_t naive_rank(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  RationalMatrix out(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (x(i, k) != 0)
        for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += x(i, k) * y(k, j);
  return out;
}

inline RationalMatrix identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

// Block sizes from the number of blocks of size exactly k:
// rank N^{k-1} - 2 rank N^k + rank N^{k+1}.
inline std::vector<int> jordan_blocks(const RationalMatrix& n) {
  std::vector<std::size_t> ranks{n.rows()};
  RationalMatrix p = identity(n.rows());
  for (std::size_t k = 1; k <= n.rows() + 1; ++k) {
    p = multiply(p, n);
    ranks.push_back(naive_rank(p));
  }
  std::vector<int> blocks;
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    long exact = static_cast<long>(ranks[k - 1]) - 2 * static_cast<long>(ranks[k]) + static_cast<long>(ranks[k + 1]);
    for (long c = 0; c < exact; ++c) blocks.push_back(static_cast<int>(k));
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

// Direct sum of nilpotent Jordan blocks (sub-diagonal ones).
inline RationalMatrix jordan_matrix(const std::vector<int>& blocks) {
  std::size_t n = 0;
  for (int b : blocks) n += static_cast<std::size_t>(b);
  RationalMatrix m(n, n);
  std::size_t at = 0;
  for (int b : blocks) {
    for (int k = 0; k + 1 < b; ++k) m(at + k + 1, at + k) = 1;
    at += static_cast<std::size_t>(b);
  }
  return m;
}

// z(x)1 + 1(x)z' written out entry by entry.
inline RationalMatrix tensor_operator(const RationalMatrix& z, const RationalMatrix& zp) {
  const std::size_t p = z.rows(), q = zp.rows();
  RationalMatrix out(p * q, p * q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) {
          Rational v = 0;
          if (j == l) v += z(i, k);
          if (i == k) v += zp(j, l);
          if (v != 0) out(i * q + j, k * q + l) = v;
        }
  return out;
}

inline RationalMatrix slice(const RationalMatrix& m, const std::vector<int>& degrees, int from, int to) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == to) rows.push_back(i);
    if (degrees[i] == from) cols.push_back(i);
  }
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

// Every slice map V_i -> V_{i+1} is injective or surjective.
inline bool is_wlp_by_definition(const lefschetz::GradedModule& v, const lefschetz::LinearForm& l) {
  RationalMatrix m = v.operator_of(l);
  auto [lo, hi] = std::minmax_element(v.degrees().begin(), v.degrees().end());
  for (int d = *lo; d < *hi; ++d) {
    RationalMatrix s = slice(m, v.degrees(), d, d + 1);
    std::size_t r = naive_rank(s);
    if (r != s.cols() && r != s.rows()) return false;
  }
  return true;
}

// g^{b-a-2i}: V_{a+i} -> V_{b-i} is bijective for every i.
inline bool is_slp_by_definition(const lefschetz::GradedModule& v, const lefschetz::LinearForm& g) {
  RationalMatrix m = v.operator_of(g);
  auto [lo, hi] = std::minmax_element(v.degrees().begin(), v.degrees().end());
  const int a = *lo, b = *hi;
  for (int i = 0; a + i <= b - i; ++i) {
    RationalMatrix p = identity(v.dim());
    for (int k = 0; k < b - a - 2 * i; ++k) p = multiply(p, m);
    RationalMatrix s = slice(p, v.degrees(), a + i, b - i);
    if (s.rows() != s.cols() || naive_rank(s) != s.rows()) return false;
  }
  return true;
}

// Level sets: strip k spans the degrees where h_d >= k.
inline std::vector<int> strips(const std::map<int, std::int64_t>& h) {
  std::int64_t top = 0;
  for (auto [d, c] : h) top = std::max(top, c);
  std::vector<int> out;
  for (std::int64_t k = 1; k <= top; ++k) {
    int n = 0;
    for (auto [d, c] : h) n += c >= k;
    out.push_back(n);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// prod(1 - q^{d_i}) * prod 1/(1 - q^{w_i}) as a power series up to degree n.
inline std::vector<std::int64_t> series_by_expansion(const std::vector<int>& degs, const std::vector<int>& weights,
                                                     int n) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n) + 1, 0);
  s[0] = 1;
  for (int d : degs)
    for (int k = n; k >= d; --k) s[k] -= s[k - d];
  for (int w : weights)
    for (int k = w; k <= n; ++k) s[k] += s[k - w];
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

// Exponent vectors in the box [0, bound) not divisible by any generator.
inline std::vector<std::vector<int>> standard_monomials(const std::vector<std::vector<int>>& gens,
                                                        const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(bound.size(), 0);
  while (true) {
    bool divisible = std::any_of(gens.begin(), gens.end(), [&](const std::vector<int>& g) {
      for (std::size_t i = 0; i < g.size(); ++i)
        if (e[i] < g[i]) return false;
      return true;
    });
    if (!divisible) out.push_back(e);
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) break;
  }
  return out;
}

}  // namespace oracle
