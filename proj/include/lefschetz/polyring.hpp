#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exactlinalg.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

/// Variable names and positive integer weights of a polynomial ring over Q.
struct RingSpec {
  std::vector<std::string> var_names;
  std::vector<int> var_weights;

  std::size_t nvars() const noexcept { return var_names.size(); }
  bool is_standard() const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

using Ring = std::shared_ptr<const RingSpec>;

/// Validates (weights >= 1, distinct identifiers) and freezes a ring.
Ring make_ring(std::vector<std::string> names, std::vector<int> weights);
Ring make_ring(std::vector<std::string> names);
/// x1..xn (or prefix1..prefixn) with the standard grading.
Ring standard_ring(std::size_t n, const std::string& prefix = "x");
/// E1..En with weights 1..n: the ring of the elementary symmetric generators.
Ring elementary_ring(std::size_t n);

struct Monomial {
  std::vector<int> exponents;

  int weighted_degree(const RingSpec& ring) const;
  int total_degree() const;
  bool divides(const Monomial& other) const;
  bool is_one() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Weighted degree first, ties broken reverse-lexicographically. Returns
/// <0, 0, >0 like strcmp.
int compare_monomials(const Monomial& a, const Monomial& b, const RingSpec& ring);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial; terms are stored strictly decreasing in the monomial
/// order with nonzero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, Monomial m, const Rational& c = 1);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coeff() const { return leading_term().coeff; }
  Rational coeff(const Monomial& m) const;

  bool is_homogeneous() const;
  /// Weighted degree of the leading term; throws for the zero polynomial.
  int degree() const;

  Polynomial monic() const;
  Polynomial pow(unsigned k) const;
  /// Substitutes images[i] for variable i; images share a common target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Renames variable i to variable perm[i] (same ring).
  Polynomial permute(const std::vector<std::size_t>& perm) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Term& t);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  void check_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Canonical text: terms in decreasing monomial order, e.g. `3/2*x1^2*x2 - x3 + 1`.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const RingSpec& ring);

class PolynomialParseError : public Error {
 public:
  PolynomialParseError(std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "column " + std::to_string(column) + ": " + message), column_(column), detail_(message) {}
  /// 1-based column within the parsed text.
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t column_;
  std::string detail_;
};

/// Parses the polynomial text syntax: sums of products of rational
/// coefficients, declared variables with `^` powers and parenthesized
/// subexpressions. `*` may be omitted between juxtaposed factors.
Polynomial parse_polynomial(const std::string& text, const Ring& ring);

inline constexpr const char* kMonomialOrderName = "weighted-degree-revlex";

struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> generators;  // reduced, monic, increasing leading monomials
  std::string order = kMonomialOrderName;
};

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of a homogeneous ideal (Buchberger, normal
/// selection strategy, coprime and chain criteria).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);
bool is_groebner_basis(const GroebnerBasis& gb);

inline constexpr std::size_t kDefaultMaxQuotientDim = 3000;

/// A finite-dimensional quotient R/I in the standard-monomial basis.
struct QuotientPresentation {
  GroebnerBasis gb;
  std::vector<Monomial> standard_monomials;  // increasing monomial order
  std::vector<int> degree_of;
  std::vector<RationalMatrix> mult_matrices;  // one per ring variable
  std::map<std::vector<int>, std::size_t> index;

  const Ring& ring() const { return gb.ring; }
  std::size_t dim() const { return standard_monomials.size(); }
  RationalVector coordinates_of(const Polynomial& f) const;
  Polynomial element(const RationalVector& coords) const;
  /// Matrix of multiplication by f on the quotient.
  RationalMatrix action_matrix(const Polynomial& f) const;
  /// Indices of ring variables that are degree-1 standard monomials (basis of A_1).
  std::vector<std::size_t> linear_variables() const;
};

QuotientPresentation quotient_presentation(const GroebnerBasis& gb, std::size_t max_dim = kDefaultMaxQuotientDim);
/// buchberger + quotient_presentation; an empty generator list yields the
/// (non-Artinian unless nvars == 0) zero ideal.
QuotientPresentation quotient_of(const Ring& ring, const std::vector<Polynomial>& gens,
                                 std::size_t max_dim = kDefaultMaxQuotientDim);

Polynomial elementary_symmetric(const Ring& ring, std::size_t i);
Polynomial power_sum(const Ring& ring, int d);
Polynomial elementary_symmetric(std::size_t n, std::size_t i);
Polynomial power_sum(std::size_t n, int d);

/// Checks p_m + sum_{j=1..n} (-1)^j e_j p_{m-j} == 0 in n variables; needs m > n.
bool newton_reduction_check(std::size_t n, int m);

bool is_symmetric(const Polynomial& f);
/// Unique g in Q[E1..En] (weights 1..n) with g(e_1,..,e_n) = f.
Polynomial rewrite_in_elementary_basis(const Polynomial& f);
/// e_1..e_n of f's ring, the images of E1..En.
std::vector<Polynomial> elementary_images(const Ring& ring);

}  // namespace lefschetz
