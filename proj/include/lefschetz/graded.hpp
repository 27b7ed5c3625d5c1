#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/exactlinalg.hpp"
#include "lefschetz/polyring.hpp"

namespace lefschetz {

/// Finitely supported series sum_d h_d q^d with positive coefficients.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  /// Zero coefficients are dropped; negative ones are rejected.
  explicit HilbertSeries(const std::map<int, std::int64_t>& coeffs);
  static HilbertSeries from_degrees(const std::vector<int>& degrees);
  /// Dense coefficients h_a, h_{a+1}, ... starting at degree a.
  static HilbertSeries from_dense(const std::vector<std::int64_t>& coeffs, int a = 0);

  const std::map<int, std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  /// Lowest and highest degree of the support; throw on the empty series.
  int min_degree() const;
  int max_degree() const;
  std::int64_t operator[](int d) const;
  std::int64_t total() const;
  /// h_a..h_b including interior zeros.
  std::vector<std::int64_t> dense() const;
  HilbertSeries shifted(int by) const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

/// Human form, e.g. `1 + 2q + q^2`.
std::string to_string(const HilbertSeries& h);
nlohmann::json to_json(const HilbertSeries& h);

struct SpernerData {
  std::int64_t sperner = 0;
  std::int64_t cosperner = 0;
  std::vector<std::int64_t> sperner_vector;  // SP_1..SP_{b-a}
  bool symmetric = false;
  bool unimodal = false;
  std::optional<Rational> reflecting_degree;  // (a+b)/2, present iff symmetric
};

SpernerData sperner_data(const HilbertSeries& h);

/// One algebra generator acting on a module: its name, degree and matrix.
struct ActionGenerator {
  std::string name;
  int degree = 1;
  RationalMatrix matrix;
};

/// Coefficients over the module's chosen basis of degree-one operators.
struct LinearForm {
  RationalVector coefficients;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// A finite graded vector space with degree labels and an algebra action.
/// `linear` picks the generators whose span is the degree-one component
/// of the acting algebra.
class GradedModule {
 public:
  GradedModule() = default;
  /// Validates square sizes, degree-one flags and the block structure of
  /// every action matrix (degree i maps into degree i + deg g).
  GradedModule(std::vector<int> degrees, std::vector<ActionGenerator> generators, std::vector<std::size_t> linear);

  std::size_t dim() const noexcept { return degrees_.size(); }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::vector<ActionGenerator>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& linear() const noexcept { return linear_; }
  std::size_t linear_count() const noexcept { return linear_.size(); }
  const ActionGenerator& linear_generator(std::size_t k) const { return generators_.at(linear_.at(k)); }

  std::vector<std::size_t> indices_in_degree(int d) const;
  /// Matrix of the linear form; errors if its length differs from linear_count().
  RationalMatrix operator_of(const LinearForm& form) const;
  /// Pairwise commutation of all generator matrices (quadratic in generators).
  bool actions_commute() const;
  /// `2*x + y` style rendering of a form in terms of generator names.
  std::string describe(const LinearForm& form) const;

 private:
  std::vector<int> degrees_;
  std::vector<ActionGenerator> generators_;
  std::vector<std::size_t> linear_;
};

/// An algebra acting on itself, optionally remembering the quotient it came from.
struct GradedAlgebra {
  GradedModule module;
  std::shared_ptr<const QuotientPresentation> presentation;

  static GradedAlgebra from_quotient(QuotientPresentation q);
  std::size_t dim() const { return module.dim(); }
  /// The form of a polynomial of degree one (after reduction). Needs a presentation.
  LinearForm form_of(const Polynomial& f) const;
  Polynomial polynomial_of(const LinearForm& form) const;
  /// Unit vector of the identity element; needs a presentation.
  std::size_t unit_index() const;
};

HilbertSeries hilbert_series(const GradedModule& v);
JordanProfile jordan_profile(const GradedModule& v, const LinearForm& z);

/// The block sizes u_1 >= ... of the unique symmetric strip decomposition of h.
JordanProfile dual_decomposition(const HilbertSeries& h);
/// Inverse of dual_decomposition for the support [a, b].
HilbertSeries rebuild_hilbert(const JordanProfile& u, int a, int b);

bool is_wlp_element(const GradedModule& v, const LinearForm& l);
bool is_slp_element(const GradedModule& v, const LinearForm& g);

enum class LefschetzMode { Weak, Strong };
enum class Verdict { CertifiedYes, CertifiedNo, ProbableNo };

std::string to_string(LefschetzMode mode);
std::string to_string(Verdict v);

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 5;
  std::int64_t bound = 1000000;
};

struct WitnessReport {
  Verdict status = Verdict::ProbableNo;
  std::optional<LinearForm> witness;
  std::string obstruction;
  JordanProfile profile;
  HilbertSeries hilbert;
  /// Number of candidate forms tested.
  std::size_t candidates_tested = 0;
};

nlohmann::json to_json(const WitnessReport& r);

/// Tries each degree-one basis operator, their sum, then `trials` seeded
/// random integer combinations.
WitnessReport find_lefschetz_witness(const GradedModule& v, LefschetzMode mode, const SearchConfig& search = {});

/// Candidate forms in search order (exposed for reproducibility tests).
std::vector<LinearForm> candidate_forms(std::size_t linear_count, const SearchConfig& search);

/// Dimension of the span of the degree-one operators as matrices.
std::size_t linear_operator_span_dim(const GradedModule& v);

}  // namespace lefschetz
