#include <doctest.h>

#include <random>

#include "lefschetz/error.hpp"
#include "lefschetz/exactlinalg.hpp"
#include "oracles.hpp"

using namespace lefschetz;

namespace {

RationalMatrix from_ints(std::vector<std::vector<int>> rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RationalVector vec(std::vector<int> v) { return RationalVector(v.begin(), v.end()); }

// Multiplication by X+Y on K[X,Y]/(X^2,Y^2) in the basis 1, X, Y, XY.
RationalMatrix x_plus_y() { return from_ints({{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 1, 0}}); }

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3), zero(0, 2);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (zero(rng) != 0) m(i, j) = Rational(d(rng), 1 + zero(rng));
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  CHECK(rank(RationalMatrix::identity(2)) == 2);
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(x_plus_y()) == oracle::naive_rank(x_plus_y()));
  CHECK(rank(x_plus_y()) == 2);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(RationalMatrix::identity(3)).dim() == 0);
  CHECK(kernel_basis(RationalMatrix(3, 3)).dim() == 3);
  Subspace k = kernel_basis(from_ints({{0, 0}, {1, 0}}));  // x on K[x]/(x^2)
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(vec({0, 1})));
  CHECK_FALSE(k.contains(vec({1, 0})));
}

TEST_CASE("rank-nullity and kernel correctness on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    RationalMatrix m = random_matrix(rng, r, c);
    Subspace k = kernel_basis(m);
    CHECK(rank(m) == oracle::naive_rank(m));
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("subspace sums and intersections") {
  Subspace e1 = Subspace::span(2, {vec({1, 0})});
  Subspace e2 = Subspace::span(2, {vec({0, 1})});
  CHECK(subspace_sum(e1, Subspace(2)) == e1);
  CHECK(subspace_sum(e1, e1) == e1);
  CHECK(subspace_sum(e1, e2) == Subspace::full(2));
  CHECK(subspace_intersection(e1, e2).dim() == 0);
  CHECK_THROWS_AS(subspace_sum(e1, Subspace(3)), Error);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    Subspace u = column_space(random_matrix(rng, 5, 1 + rng() % 4));
    Subspace w = column_space(random_matrix(rng, 5, 1 + rng() % 4));
    Subspace x = column_space(random_matrix(rng, 5, 1 + rng() % 3));
    CHECK(subspace_sum(u, w) == subspace_sum(w, u));
    CHECK(subspace_sum(subspace_sum(u, w), x) == subspace_sum(u, subspace_sum(w, x)));
    CHECK(subspace_sum(u, w).dim() + subspace_intersection(u, w).dim() == u.dim() + w.dim());
  }
}

TEST_CASE("quotient bases") {
  Subspace e1 = Subspace::span(2, {vec({1, 0})});
  Subspace full = Subspace::full(2);
  CHECK(quotient_basis(full, full).empty());
  CHECK(quotient_basis(full, Subspace(2)).size() == 2);
  auto reps = quotient_basis(full, e1);
  REQUIRE(reps.size() == 1);
  CHECK(e1.reduce(reps[0]) == vec({0, 1}));
  CHECK_THROWS_AS(quotient_basis(e1, full), Error);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Subspace w = column_space(random_matrix(rng, 6, 2));
    Subspace u = subspace_sum(w, column_space(random_matrix(rng, 6, 2)));
    auto r = quotient_basis(u, w);
    CHECK(r.size() == u.dim() - w.dim());
    std::vector<RationalVector> all = r;
    all.insert(all.end(), w.basis().begin(), w.basis().end());
    CHECK(Subspace::span(6, all) == u);
  }
}

TEST_CASE("coordinates against a basis") {
  std::vector<RationalVector> basis{vec({1, 1, 0}), vec({0, 1, 1})};
  auto c = coordinates(basis, {vec({1, 2, 1}), vec({2, 2, 0})}, 3);
  CHECK(c[0] == vec({1, 1}));
  CHECK(c[1] == vec({2, 0}));
  CHECK_THROWS_AS(coordinates(basis, {vec({1, 0, 0})}, 3), Error);
}

TEST_CASE("nilpotent Jordan profiles") {
  CHECK(nilpotent_jordan_profile(oracle::jordan_matrix({3})).blocks() == std::vector<int>{3});
  CHECK(nilpotent_jordan_profile(RationalMatrix(4, 4)).blocks() == std::vector<int>{1, 1, 1, 1});
  CHECK(nilpotent_jordan_profile(x_plus_y()).blocks() == oracle::jordan_blocks(x_plus_y()));
  CHECK(nilpotent_jordan_profile(x_plus_y()).to_string() == "{3,1}");
  CHECK_THROWS_AS(nilpotent_jordan_profile(RationalMatrix::identity(2)), Error);
  CHECK_THROWS_AS(nilpotent_jordan_profile(RationalMatrix(2, 3)), Error);
}

TEST_CASE("Jordan profiles of conjugated block matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> blocks;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) blocks.push_back(1 + static_cast<int>(rng() % 4));
    RationalMatrix j = oracle::jordan_matrix(blocks);
    const std::size_t n = j.rows();
    // Upper unitriangular P with a fixed inverse-free conjugation P J P^-1
    // replaced by a similarity through an elementary row/column pair.
    RationalMatrix m = j;
    for (int s = 0; s < 4; ++s) {
      std::size_t a = rng() % n, b = rng() % n;
      if (a == b) continue;
      Rational c = static_cast<int>(rng() % 5) - 2;
      // m <- E m E^{-1} with E = I + c e_a e_b^T.
      for (std::size_t col = 0; col < n; ++col) m(a, col) += c * m(b, col);
      for (std::size_t row = 0; row < n; ++row) m(row, b) -= c * m(row, a);
    }
    JordanProfile p = nilpotent_jordan_profile(m);
    CHECK(p.blocks() == oracle::jordan_blocks(m));
    CHECK(p.block_count() == n - rank(m));
    CHECK(p.total() == static_cast<int>(n));
  }
}

TEST_CASE("kronecker and power") {
  RationalMatrix a = from_ints({{1, 2}, {3, 4}});
  RationalMatrix k = kronecker(a, RationalMatrix::identity(2));
  CHECK(k(2, 0) == 3);
  CHECK(k(3, 1) == 3);
  CHECK(k(0, 1) == 0);
  CHECK(power(a, 0) == RationalMatrix::identity(2));
  CHECK(power(a, 3) == a * a * a);
}
