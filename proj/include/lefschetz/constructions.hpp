#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/graded.hpp"

namespace lefschetz {

// ---------------------------------------------------------------------------
// Tensor products and thickenings

/// Basis (v_i, w_j) at index i*dim(W)+j; generators g⊗1 then 1⊗h. Names
/// from W that clash with names from V get a trailing prime.
GradedModule tensor_product(const GradedModule& v, const GradedModule& w);
/// z⊗1 + 1⊗z' in the tensor product's degree-one coordinates.
LinearForm tensor_form(const LinearForm& z, const LinearForm& zp);

/// K[t]/(t^alpha) acting on itself, basis 1, t, ..., t^(alpha-1).
GradedModule truncated_polynomial_module(int alpha, const std::string& var = "t");
/// A one-dimensional module concentrated in `degree` with no action.
GradedModule point_module(int degree);
/// v ⊗ K[t]/(t^alpha).
GradedModule thicken(const GradedModule& v, int alpha);
/// z⊗1 + 1⊗t on a thickening.
LinearForm thickened_form(const LinearForm& z);

/// Block sizes of z⊗1 + 1⊗z' from those of z and z': each pair (d, f)
/// contributes d+f+1-2k for k = 1..min(d, f).
JordanProfile clebsch_gordan_profile(const JordanProfile& d, const JordanProfile& f);

// ---------------------------------------------------------------------------
// Associated graded ring, central simple modules, socles

/// Homogeneous vectors a_i with {N^k a_i : k < n_i} a basis adapted to the
/// Jordan blocks of the nilpotent operator N.
struct JordanChains {
  std::vector<RationalVector> tops;
  std::vector<int> lengths;
};
JordanChains homogeneous_jordan_chains(const RationalMatrix& n, const std::vector<int>& degrees);

struct AssociatedGraded {
  GradedAlgebra algebra;
  LinearForm z_star;
  /// Basis element k of the graded ring is the class of N^level[k] a_chain[k].
  std::vector<std::size_t> chain;
  std::vector<int> level;
};

/// Gr of A with respect to the filtration by powers of (z).
AssociatedGraded associated_graded(const GradedAlgebra& a, const LinearForm& z);

struct CentralSimpleDecomposition {
  std::vector<int> f_values;  // strictly decreasing block sizes
  std::vector<int> multiplicities;
  std::vector<GradedModule> modules;
  std::vector<GradedModule> tilde_modules;
};

/// U_i = ((0:z^{f_i}) + (z)) / ((0:z^{f_{i+1}}) + (z)), with the induced action.
CentralSimpleDecomposition central_simple_modules(const GradedModule& a, const LinearForm& z);

/// Common kernel of all generator actions.
Subspace socle(const GradedModule& a);
bool is_gorenstein(const GradedModule& a);
/// dim m/m^2 for m the span of the positive-degree basis vectors.
std::size_t embedding_dimension(const GradedModule& a);

// ---------------------------------------------------------------------------
// q-series helpers

/// Dense integer polynomial in q, lowest degree first.
using QPolynomial = std::vector<Integer>;

QPolynomial q_integer(int a);
QPolynomial q_multiply(const QPolynomial& a, const QPolynomial& b);
/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<QPolynomial> q_divide(const QPolynomial& a, const QPolynomial& b);
/// prod(1 - q^{d_i}) / prod(1 - q^{w_i}); throws NonRegularSequence if the
/// quotient is not a polynomial with non-negative coefficients.
HilbertSeries complete_intersection_series(const std::vector<int>& generator_degrees, const std::vector<int>& weights);

/// For each k = 2..n, whether [k]_q divides [d]_q.
std::vector<std::pair<int, bool>> q_integer_divisibility(int d, int n);

// ---------------------------------------------------------------------------
// Reports

/// Interface identifiers used in report JSON and by the CLI filter.
namespace check_id {
inline constexpr const char* kThickening = "3.9";
inline constexpr const char* kTensor = "3.10";
inline constexpr const char* kAssociatedGraded = "4.5";
inline constexpr const char* kCentralSimple = "5.2";
inline constexpr const char* kGorensteinCentralSimple = "5.4";
inline constexpr const char* kFreeExtension = "6.1";
inline constexpr const char* kPowerSum = "7.1";
inline constexpr const char* kEmbeddingDimension = "8.3";
inline constexpr const char* kMonomialXY = "9.1";
}  // namespace check_id

struct CheckReport {
  std::string theorem;
  std::string instance;
  bool consistent = true;
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const CheckReport& r);

/// Strong verdict on V against the weak verdicts on every thickening
/// V ⊗ K[t]/(t^alpha), alpha = 1..b-a. Needs a symmetric unimodal series.
CheckReport check_thickening_equivalence(const GradedModule& v, const std::string& name, const SearchConfig& search = {});

/// Witness searches on V, W and V⊗W (all strong) plus the Sperner count of
/// the product from the strip decompositions.
CheckReport check_tensor_equivalence(const GradedModule& v, const GradedModule& w, const std::string& name,
                                     const SearchConfig& search = {});

/// Weak and strong verdicts of A against Gr_(z)(A), equality of Hilbert
/// series and of the profiles of z and z*, and the quotient-dimension
/// inequality dim A/gA <= dim Gr/g*Gr at a random form.
CheckReport check_associated_graded_equivalence(const GradedAlgebra& a, const LinearForm& z, const std::string& name,
                                                const SearchConfig& search = {});

/// Evaluates "every U_i has the SLP and every Ũ_i reflects where A does"
/// for this z and compares it against the direct SLP search on A.
CheckReport check_central_simple_criterion(const GradedAlgebra& a, const LinearForm& z, const std::string& name,
                                           const SearchConfig& search = {});

/// Gorenstein version: symmetric U_i, matching reflecting degrees, and the
/// equivalence without the reflecting-degree hypothesis. Throws NotGorenstein.
CheckReport check_gorenstein_central_simple(const GradedAlgebra& a, const LinearForm& z, const std::string& name,
                                            const SearchConfig& search = {});

// ---------------------------------------------------------------------------
// Free extensions and families

struct FreeExtensionInstance {
  std::string name;
  GradedAlgebra total;
  GradedAlgebra base;
  GradedAlgebra fiber;
  /// Image in the total ring of each base ring variable.
  std::vector<Polynomial> base_images;
};

/// Validates the images (homogeneous of the matching degree) and the
/// factorization h_total = h_base * h_fiber (NotFree otherwise).
FreeExtensionInstance make_free_extension(std::string name, GradedAlgebra total, GradedAlgebra base,
                                          GradedAlgebra fiber, std::vector<Polynomial> base_images);

/// SLP of base and fiber must not coexist with a certified failure on the
/// total algebra; central simple modules of (total, image of z') must be
/// those of (base, z') tensored with the fiber.
CheckReport check_free_extension(const FreeExtensionInstance& inst, const SearchConfig& search = {});

struct FamilyLimits {
  int max_vars = 5;
  int max_degree = 8;
  std::size_t max_dim = kDefaultMaxQuotientDim;
};

/// R/(p_a..p_{a+n-1}) over S/(same, rewritten in E1..En), fiber R/(e_1..e_n).
FreeExtensionInstance power_sum_ci(int n, int a, const FamilyLimits& limits = {});
/// prod_{i<n}(1-q^{a+i}) / prod_{i<=n}(1-q^i).
HilbertSeries power_sum_base_series(int n, int a);
CheckReport check_power_sum_family(int n, int a, const SearchConfig& search = {}, const FamilyLimits& limits = {});

/// Base S/(f_2..f_n, f_d) with the f_i random small-integer combinations of
/// the E-monomials of degree i, redrawn until the series is [d]_q.
FreeExtensionInstance generic_embedding_one_instance(int n, int d, std::uint64_t seed = 0,
                                                     const FamilyLimits& limits = {});
/// Base S/(gens) over E1..En (weights 1..n), total R/(gens with E_i -> e_i),
/// fiber R/(e_1..e_n).
FreeExtensionInstance elementary_extension(std::string name, std::size_t n, const std::vector<std::string>& base_gens,
                                           std::size_t max_dim = kDefaultMaxQuotientDim);
/// S/(E1^2, E2^2) in two variables over K[x1,x2]/(e1^2, e2^2).
FreeExtensionInstance non_slp_base_instance();
/// S/(E1^2, E3, E2^3) in three variables: series [6]_q, E1 squares to zero.
FreeExtensionInstance square_of_e1_instance();
CheckReport check_embedding_dimension_criterion(const FreeExtensionInstance& inst, int d,
                                                const SearchConfig& search = {});

GradedAlgebra two_variable_monomial_ci(int r, int s, std::size_t max_dim = kDefaultMaxQuotientDim);
/// Certifies X+Y directly and compares its profile with the strip decomposition.
CheckReport check_monomial_xy(int r, int s);

/// Convenience: algebra from generator strings over a ring.
GradedAlgebra algebra_from_strings(const Ring& ring, const std::vector<std::string>& gens,
                                   std::size_t max_dim = kDefaultMaxQuotientDim);

}  // namespace lefschetz
