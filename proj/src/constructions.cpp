#include "lefschetz/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace lefschetz {

namespace {

std::vector<std::size_t> degree_order(const std::vector<int>& degrees) {
  std::vector<std::size_t> order(degrees.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return degrees[x] < degrees[y]; });
  return order;
}

RationalVector gather(const RationalVector& v, const std::vector<std::size_t>& order) {
  RationalVector out(v.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[k] = v[order[k]];
  return out;
}

RationalVector scatter(const RationalVector& v, const std::vector<std::size_t>& order) {
  RationalVector out(v.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = v[k];
  return out;
}

int homogeneous_degree(const RationalVector& v, const std::vector<int>& degrees) {
  std::optional<int> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    if (d && *d != degrees[i]) throw Error(ErrorKind::Internal, "representative is not homogeneous");
    d = degrees[i];
  }
  if (!d) throw Error(ErrorKind::Internal, "zero representative");
  return *d;
}

// Echelon rows of a graded subspace are homogeneous once coordinates are
// sorted by degree, so compute the quotient basis in sorted coordinates.
std::vector<RationalVector> homogeneous_quotient_basis(const Subspace& u, const Subspace& w,
                                                       const std::vector<int>& degrees) {
  auto order = degree_order(degrees);
  std::vector<RationalVector> us, ws;
  for (const auto& v : u.basis()) us.push_back(gather(v, order));
  for (const auto& v : w.basis()) ws.push_back(gather(v, order));
  auto reps = quotient_basis(Subspace::span(u.ambient_dim(), us), Subspace::span(w.ambient_dim(), ws));
  for (auto& r : reps) {
    r = scatter(r, order);
    homogeneous_degree(r, degrees);
  }
  return reps;
}

bool is_yes(const WitnessReport& r) { return r.status == Verdict::CertifiedYes; }
bool is_certified_no(const WitnessReport& r) { return r.status == Verdict::CertifiedNo; }

// Modules concentrated in one degree without operators have the SLP for
// trivial reasons; everything else goes through the witness search.
WitnessReport search(const GradedModule& v, LefschetzMode mode, const SearchConfig& cfg) {
  if (v.linear_count() == 0) {
    HilbertSeries h = hilbert_series(v);
    if (!h.empty() && h.min_degree() == h.max_degree()) {
      WitnessReport r;
      r.status = Verdict::CertifiedYes;
      r.witness = LinearForm{};
      r.hilbert = h;
      r.profile = JordanProfile(std::vector<int>(v.dim(), 1));
      return r;
    }
  }
  return find_lefschetz_witness(v, mode, cfg);
}

nlohmann::json summary(const WitnessReport& r, const GradedModule& v) {
  nlohmann::json j = to_json(r);
  if (r.witness) j["form"] = v.describe(*r.witness);
  return j;
}

nlohmann::json profile_json(const JordanProfile& p) { return p.blocks(); }

std::optional<Rational> reflecting_degree(const HilbertSeries& h) { return sperner_data(h).reflecting_degree; }

nlohmann::json rational_json(const std::optional<Rational>& q) {
  return q ? nlohmann::json(q->get_str()) : nlohmann::json(nullptr);
}

LinearForm unit_form(std::size_t n, std::size_t k) {
  LinearForm f{RationalVector(n)};
  f.coefficients[k] = 1;
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tensor products

GradedModule tensor_product(const GradedModule& v, const GradedModule& w) {
  std::vector<int> degrees;
  degrees.reserve(v.dim() * w.dim());
  for (int dv : v.degrees())
    for (int dw : w.degrees()) degrees.push_back(dv + dw);
  RationalMatrix iv = RationalMatrix::identity(v.dim());
  RationalMatrix iw = RationalMatrix::identity(w.dim());
  std::vector<ActionGenerator> gens;
  std::set<std::string> names;
  for (const auto& g : v.generators()) {
    gens.push_back(ActionGenerator{g.name, g.degree, kronecker(g.matrix, iw)});
    names.insert(g.name);
  }
  for (const auto& h : w.generators()) {
    std::string name = h.name;
    while (names.contains(name)) name += "'";
    names.insert(name);
    gens.push_back(ActionGenerator{name, h.degree, kronecker(iv, h.matrix)});
  }
  std::vector<std::size_t> linear = v.linear();
  for (std::size_t k : w.linear()) linear.push_back(k + v.generators().size());
  return GradedModule(std::move(degrees), std::move(gens), std::move(linear));
}

LinearForm tensor_form(const LinearForm& z, const LinearForm& zp) {
  LinearForm f = z;
  f.coefficients.insert(f.coefficients.end(), zp.coefficients.begin(), zp.coefficients.end());
  return f;
}

GradedModule truncated_polynomial_module(int alpha, const std::string& var) {
  if (alpha < 1) throw Error(ErrorKind::OutOfRange, "truncation exponent must be >= 1");
  const auto n = static_cast<std::size_t>(alpha);
  std::vector<int> degrees(n);
  std::iota(degrees.begin(), degrees.end(), 0);
  RationalMatrix t(n, n);
  for (std::size_t k = 0; k + 1 < n; ++k) t(k + 1, k) = 1;
  return GradedModule(std::move(degrees), {ActionGenerator{var, 1, std::move(t)}}, {0});
}

GradedModule point_module(int degree) { return GradedModule({degree}, {}, {}); }

GradedModule thicken(const GradedModule& v, int alpha) { return tensor_product(v, truncated_polynomial_module(alpha)); }

LinearForm thickened_form(const LinearForm& z) { return tensor_form(z, LinearForm{{Rational(1)}}); }

JordanProfile clebsch_gordan_profile(const JordanProfile& d, const JordanProfile& f) {
  std::vector<int> out;
  for (int di : d.blocks())
    for (int fj : f.blocks())
      for (int k = 1; k <= std::min(di, fj); ++k) out.push_back(di + fj + 1 - 2 * k);
  return JordanProfile(std::move(out));
}

// ---------------------------------------------------------------------------
// Associated graded ring

JordanChains homogeneous_jordan_chains(const RationalMatrix& n, const std::vector<int>& degrees) {
  if (!n.is_square()) throw Error(ErrorKind::NonSquare, "Jordan chains need a square operator");
  const std::size_t dim = n.rows();
  JordanChains chains;
  if (dim == 0) return chains;
  // kernels[j] = ker N^j until N^j = 0.
  std::vector<Subspace> kernels{Subspace(dim)};
  RationalMatrix p = RationalMatrix::identity(dim);
  while (kernels.back().dim() < dim) {
    if (kernels.size() > dim) throw Error(ErrorKind::NotNilpotent, "operator is not nilpotent");
    p = p * n;
    kernels.push_back(kernel_basis(p));
  }
  const std::size_t top = kernels.size() - 1;
  for (std::size_t k = top; k >= 1; --k) {
    const Subspace& above = kernels[std::min(k + 1, top)];
    Subspace covered = subspace_sum(kernels[k - 1], image(n, above));
    for (auto& v : homogeneous_quotient_basis(kernels[k], covered, degrees)) {
      chains.tops.push_back(std::move(v));
      chains.lengths.push_back(static_cast<int>(k));
    }
  }
  return chains;
}

AssociatedGraded associated_graded(const GradedAlgebra& a, const LinearForm& z) {
  const GradedModule& m = a.module;
  RationalMatrix n = m.operator_of(z);
  JordanChains chains = homogeneous_jordan_chains(n, m.degrees());

  AssociatedGraded gr;
  std::vector<RationalVector> basis;
  std::vector<int> degrees;
  for (std::size_t c = 0; c < chains.tops.size(); ++c) {
    RationalVector v = chains.tops[c];
    int d = homogeneous_degree(v, m.degrees());
    for (int k = 0; k < chains.lengths[c]; ++k) {
      basis.push_back(v);
      degrees.push_back(d + k);
      gr.chain.push_back(c);
      gr.level.push_back(k);
      v = n.apply(v);
    }
  }
  if (basis.size() != m.dim()) throw Error(ErrorKind::Internal, "Jordan chains do not span the algebra");

  const std::size_t dim = basis.size();
  std::vector<ActionGenerator> gens;
  for (const auto& g : m.generators()) {
    std::vector<RationalVector> targets;
    targets.reserve(dim);
    for (const auto& b : basis) targets.push_back(g.matrix.apply(b));
    auto coords = coordinates(basis, targets, m.dim());
    RationalMatrix act(dim, dim);
    // Keep only the part that stays in the same filtration level.
    for (std::size_t col = 0; col < dim; ++col)
      for (std::size_t row = 0; row < dim; ++row)
        if (gr.level[row] == gr.level[col]) act(row, col) = coords[col][row];
    gens.push_back(ActionGenerator{g.name, g.degree, std::move(act)});
  }
  RationalMatrix shift(dim, dim);
  for (std::size_t col = 0; col + 1 < dim; ++col)
    if (gr.chain[col + 1] == gr.chain[col]) shift(col + 1, col) = 1;
  std::string zname = "z*";
  gens.push_back(ActionGenerator{zname, 1, std::move(shift)});

  std::vector<std::size_t> linear = m.linear();
  linear.push_back(gens.size() - 1);
  gr.algebra.module = GradedModule(std::move(degrees), std::move(gens), std::move(linear));
  gr.z_star = unit_form(gr.algebra.module.linear_count(), gr.algebra.module.linear_count() - 1);
  return gr;
}

// ---------------------------------------------------------------------------
// Central simple modules

CentralSimpleDecomposition central_simple_modules(const GradedModule& a, const LinearForm& z) {
  RationalMatrix n = a.operator_of(z);
  JordanProfile profile = nilpotent_jordan_profile(n);
  CentralSimpleDecomposition out;
  for (auto [size, mult] : profile.grouped()) {
    out.f_values.push_back(size);
    out.multiplicities.push_back(mult);
  }
  const std::size_t dim = a.dim();
  Subspace image_n = column_space(n);
  std::vector<RationalMatrix> powers{RationalMatrix::identity(dim)};
  auto chain_ideal = [&](int m) {
    if (m == 0) return image_n;
    while (static_cast<int>(powers.size()) <= m) powers.push_back(powers.back() * n);
    return subspace_sum(kernel_basis(powers[static_cast<std::size_t>(m)]), image_n);
  };

  for (std::size_t i = 0; i < out.f_values.size(); ++i) {
    Subspace big = chain_ideal(out.f_values[i]);
    Subspace small = chain_ideal(i + 1 < out.f_values.size() ? out.f_values[i + 1] : 0);
    auto reps = homogeneous_quotient_basis(big, small, a.degrees());
    if (static_cast<int>(reps.size()) != out.multiplicities[i])
      throw Error(ErrorKind::Internal, "central simple module has dimension " + std::to_string(reps.size()) +
                                           ", expected " + std::to_string(out.multiplicities[i]));
    std::vector<RationalVector> frame = reps;
    frame.insert(frame.end(), small.basis().begin(), small.basis().end());
    std::vector<int> degrees;
    for (const auto& r : reps) degrees.push_back(homogeneous_degree(r, a.degrees()));
    std::vector<ActionGenerator> gens;
    for (const auto& g : a.generators()) {
      std::vector<RationalVector> targets;
      for (const auto& r : reps) targets.push_back(g.matrix.apply(r));
      auto coords = coordinates(frame, targets, dim);
      RationalMatrix act(reps.size(), reps.size());
      for (std::size_t col = 0; col < reps.size(); ++col)
        for (std::size_t row = 0; row < reps.size(); ++row) act(row, col) = coords[col][row];
      gens.push_back(ActionGenerator{g.name, g.degree, std::move(act)});
    }
    GradedModule u(std::move(degrees), std::move(gens), a.linear());
    out.tilde_modules.push_back(thicken(u, out.f_values[i]));
    out.modules.push_back(std::move(u));
  }
  return out;
}

Subspace socle(const GradedModule& a) {
  const std::size_t dim = a.dim();
  if (a.generators().empty()) return Subspace::full(dim);
  RationalMatrix stacked(dim * a.generators().size(), dim);
  for (std::size_t g = 0; g < a.generators().size(); ++g)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked(g * dim + i, j) = a.generators()[g].matrix(i, j);
  return kernel_basis(stacked);
}

bool is_gorenstein(const GradedModule& a) { return socle(a).dim() == 1; }

std::size_t embedding_dimension(const GradedModule& a) {
  const std::size_t dim = a.dim();
  std::vector<RationalVector> positive;
  for (std::size_t i = 0; i < dim; ++i)
    if (a.degrees()[i] > 0) {
      RationalVector e(dim);
      e[i] = 1;
      positive.push_back(std::move(e));
    }
  Subspace m = Subspace::span(dim, positive);
  Subspace square(dim);
  for (const auto& g : a.generators())
    if (g.degree > 0) square = subspace_sum(square, image(g.matrix, m));
  return m.dim() - square.dim();
}

// ---------------------------------------------------------------------------
// q-series

namespace {

void trim(QPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPolynomial one_minus_q_power(int d) {
  QPolynomial p(static_cast<std::size_t>(d) + 1);
  p[0] = 1;
  p[static_cast<std::size_t>(d)] -= 1;
  return p;
}

}  // namespace

QPolynomial q_integer(int a) {
  if (a < 1) throw Error(ErrorKind::OutOfRange, "q-integer needs a >= 1");
  return QPolynomial(static_cast<std::size_t>(a), Integer(1));
}

QPolynomial q_multiply(const QPolynomial& a, const QPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  QPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::optional<QPolynomial> q_divide(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial rem = a, div = b;
  trim(rem);
  trim(div);
  if (div.empty()) throw Error(ErrorKind::OutOfRange, "division by the zero polynomial");
  if (rem.empty()) return QPolynomial{};
  if (rem.size() < div.size()) return std::nullopt;
  QPolynomial quot(rem.size() - div.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& lead = rem[k + div.size() - 1];
    if (lead % div.back() != 0) return std::nullopt;
    Integer c = lead / div.back();
    quot[k] = c;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= c * div[j];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(quot);
  return quot;
}

HilbertSeries complete_intersection_series(const std::vector<int>& generator_degrees, const std::vector<int>& weights) {
  QPolynomial num{1}, den{1};
  for (int d : generator_degrees) num = q_multiply(num, one_minus_q_power(d));
  for (int w : weights) den = q_multiply(den, one_minus_q_power(w));
  auto q = q_divide(num, den);
  if (!q) throw Error(ErrorKind::NonRegularSequence, "generator degrees do not give a polynomial Hilbert series");
  std::map<int, std::int64_t> coeffs;
  for (std::size_t i = 0; i < q->size(); ++i) {
    if ((*q)[i] < 0) throw Error(ErrorKind::NonRegularSequence, "negative Hilbert series coefficient");
    coeffs[static_cast<int>(i)] = (*q)[i].get_si();
  }
  return HilbertSeries(coeffs);
}

std::vector<std::pair<int, bool>> q_integer_divisibility(int d, int n) {
  std::vector<std::pair<int, bool>> out;
  for (int k = 2; k <= n; ++k) out.emplace_back(k, q_divide(q_integer(d), q_integer(k)).has_value());
  return out;
}

// ---------------------------------------------------------------------------
// Checks

nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"theorem", r.theorem}, {"instance", r.instance}, {"consistent", r.consistent}, {"details", r.details}};
}

CheckReport check_thickening_equivalence(const GradedModule& v, const std::string& name, const SearchConfig& cfg) {
  CheckReport report{check_id::kThickening, name};
  HilbertSeries h = hilbert_series(v);
  SpernerData s = sperner_data(h);
  if (!s.symmetric || !s.unimodal)
    throw Error(ErrorKind::HypothesisViolation, "thickening check needs a symmetric unimodal Hilbert series");
  const int span = h.max_degree() - h.min_degree();
  WitnessReport strong = search(v, LefschetzMode::Strong, cfg);
  report.details["strong"] = summary(strong, v);
  bool all_yes = true, any_no = false;
  nlohmann::json weak = nlohmann::json::array();
  for (int alpha = 1; alpha <= span; ++alpha) {
    GradedModule t = thicken(v, alpha);
    WitnessReport r = search(t, LefschetzMode::Weak, cfg);
    all_yes = all_yes && is_yes(r);
    any_no = any_no || is_certified_no(r);
    nlohmann::json j = summary(r, t);
    j["alpha"] = alpha;
    weak.push_back(j);
  }
  report.details["weak_thickenings"] = weak;
  report.details["strong_yes"] = is_yes(strong);
  report.details["weak_conjunction_yes"] = all_yes;
  report.details["verdicts_match"] = is_yes(strong) == all_yes;
  report.consistent = !(is_yes(strong) && any_no) && !(all_yes && is_certified_no(strong));
  return report;
}

CheckReport check_tensor_equivalence(const GradedModule& v, const GradedModule& w, const std::string& name,
                                     const SearchConfig& cfg) {
  CheckReport report{check_id::kTensor, name};
  HilbertSeries hv = hilbert_series(v), hw = hilbert_series(w);
  for (const auto* h : {&hv, &hw}) {
    SpernerData s = sperner_data(*h);
    if (!s.symmetric || !s.unimodal)
      throw Error(ErrorKind::HypothesisViolation, "tensor check needs symmetric unimodal Hilbert series");
  }
  GradedModule vw = tensor_product(v, w);
  HilbertSeries hvw = hilbert_series(vw);
  WitnessReport rv = search(v, LefschetzMode::Strong, cfg);
  WitnessReport rw = search(w, LefschetzMode::Strong, cfg);
  WitnessReport rvw = search(vw, LefschetzMode::Strong, cfg);
  report.details["left"] = summary(rv, v);
  report.details["right"] = summary(rw, w);
  report.details["product"] = summary(rvw, vw);

  bool ok = true;
  if (is_yes(rvw) && (is_certified_no(rv) || is_certified_no(rw))) ok = false;
  if (is_yes(rv) && is_yes(rw) && is_certified_no(rvw)) ok = false;
  if (is_yes(rv) && is_yes(rw) && v.linear_count() > 0 && w.linear_count() > 0) {
    bool sum_works = is_slp_element(vw, tensor_form(*rv.witness, *rw.witness));
    report.details["sum_of_witnesses_is_witness"] = sum_works;
    ok = ok && sum_works;
  }
  JordanProfile u = dual_decomposition(hv), uw = dual_decomposition(hw);
  std::int64_t expected = 0;
  for (int a : u.blocks())
    for (int b : uw.blocks()) expected += std::min(a, b);
  std::int64_t sperner = sperner_data(hvw).sperner;
  report.details["sperner_product"] = sperner;
  report.details["sperner_from_strips"] = expected;
  report.details["series_multiply"] = hvw == hv * hw;
  report.consistent = ok && sperner == expected && hvw == hv * hw;
  return report;
}

CheckReport check_associated_graded_equivalence(const GradedAlgebra& a, const LinearForm& z, const std::string& name,
                                                const SearchConfig& cfg) {
  CheckReport report{check_id::kAssociatedGraded, name};
  report.details["z"] = a.module.describe(z);
  AssociatedGraded gr = associated_graded(a, z);
  const GradedModule& g = gr.algebra.module;
  HilbertSeries ha = hilbert_series(a.module), hg = hilbert_series(g);
  JordanProfile pa = jordan_profile(a.module, z), pg = jordan_profile(g, gr.z_star);
  report.details["hilbert"] = to_json(ha);
  report.details["hilbert_match"] = ha == hg;
  report.details["profile"] = profile_json(pa);
  report.details["profile_match"] = pa == pg;
  bool ok = ha == hg && pa == pg;

  for (LefschetzMode mode : {LefschetzMode::Weak, LefschetzMode::Strong}) {
    WitnessReport ra = search(a.module, mode, cfg);
    WitnessReport rg = search(g, mode, cfg);
    report.details[to_string(mode)] = {{"algebra", summary(ra, a.module)}, {"graded", summary(rg, g)}};
    if ((is_yes(ra) && is_certified_no(rg)) || (is_yes(rg) && is_certified_no(ra))) ok = false;
  }

  // dim A/(y + λz)A <= dim Gr/(y* + λz*)Gr at a random point.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> dist(-100, 100);
  LinearForm y{RationalVector(a.module.linear_count())};
  for (auto& c : y.coefficients) c = dist(rng);
  Rational lambda = dist(rng);
  LinearForm on_a = y;
  for (std::size_t k = 0; k < on_a.coefficients.size(); ++k) on_a.coefficients[k] += lambda * z.coefficients[k];
  LinearForm on_gr = y;
  on_gr.coefficients.push_back(lambda);
  std::size_t corank_a = a.dim() - rank(a.module.operator_of(on_a));
  std::size_t corank_g = g.dim() - rank(g.operator_of(on_gr));
  report.details["quotient_dim_algebra"] = corank_a;
  report.details["quotient_dim_graded"] = corank_g;
  ok = ok && corank_a <= corank_g;
  report.consistent = ok;
  return report;
}

namespace {

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown"; }

struct CentralSimpleSurvey {
  CentralSimpleDecomposition csm;
  nlohmann::json modules = nlohmann::json::array();
  bool all_yes = true;
  bool any_no = false;
  bool reflect_all_match = true;
  bool all_symmetric = true;
  bool sum_matches = false;
  bool concentrated = true;
};

CentralSimpleSurvey survey_central_simple(const GradedModule& a, const LinearForm& z, const SearchConfig& cfg) {
  CentralSimpleSurvey s{central_simple_modules(a, z)};
  HilbertSeries ha = hilbert_series(a);
  auto ra = reflecting_degree(ha);
  HilbertSeries total;
  for (std::size_t i = 0; i < s.csm.modules.size(); ++i) {
    const GradedModule& u = s.csm.modules[i];
    HilbertSeries hu = hilbert_series(u), ht = hilbert_series(s.csm.tilde_modules[i]);
    total = total + ht;
    WitnessReport r = search(u, LefschetzMode::Strong, cfg);
    auto rt = reflecting_degree(ht);
    bool match = rt && ra && *rt == *ra;
    s.all_yes = s.all_yes && is_yes(r);
    s.any_no = s.any_no || is_certified_no(r);
    s.reflect_all_match = s.reflect_all_match && match;
    s.all_symmetric = s.all_symmetric && sperner_data(hu).symmetric;
    s.concentrated = s.concentrated && hu.min_degree() == hu.max_degree();
    s.modules.push_back({{"f", s.csm.f_values[i]},
                         {"multiplicity", s.csm.multiplicities[i]},
                         {"hilbert", to_json(hu)},
                         {"tilde_hilbert", to_json(ht)},
                         {"tilde_reflecting_degree", rational_json(rt)},
                         {"slp", summary(r, u)}});
  }
  s.sum_matches = total == ha;
  return s;
}

}  // namespace

CheckReport check_central_simple_criterion(const GradedAlgebra& a, const LinearForm& z, const std::string& name,
                                           const SearchConfig& cfg) {
  CheckReport report{check_id::kCentralSimple, name};
  report.details["z"] = a.module.describe(z);
  CentralSimpleSurvey s = survey_central_simple(a.module, z, cfg);
  HilbertSeries ha = hilbert_series(a.module);
  Tri condition = s.all_yes && s.reflect_all_match ? Tri::Yes
                  : (s.any_no || !s.reflect_all_match) ? Tri::No
                                                       : Tri::Unknown;
  WitnessReport ra = search(a.module, LefschetzMode::Strong, cfg);
  bool z_witness = is_slp_element(a.module, z);
  report.details["modules"] = s.modules;
  report.details["reflecting_degree"] = rational_json(reflecting_degree(ha));
  report.details["sum_of_tilde_series_matches"] = s.sum_matches;
  report.details["condition"] = to_string(condition);
  report.details["algebra"] = summary(ra, a.module);
  report.details["z_is_witness"] = z_witness;
  bool ok = s.sum_matches;
  if (condition == Tri::Yes && is_certified_no(ra)) ok = false;
  if (z_witness && condition == Tri::No) ok = false;
  if (z_witness && !s.concentrated) ok = false;
  report.consistent = ok;
  return report;
}

CheckReport check_gorenstein_central_simple(const GradedAlgebra& a, const LinearForm& z, const std::string& name,
                                            const SearchConfig& cfg) {
  if (!is_gorenstein(a.module)) throw Error(ErrorKind::NotGorenstein, "socle of '" + name + "' is not one-dimensional");
  CheckReport report{check_id::kGorensteinCentralSimple, name};
  report.details["z"] = a.module.describe(z);
  CentralSimpleSurvey s = survey_central_simple(a.module, z, cfg);
  WitnessReport ra = search(a.module, LefschetzMode::Strong, cfg);
  bool z_witness = is_slp_element(a.module, z);
  report.details["modules"] = s.modules;
  report.details["all_modules_symmetric"] = s.all_symmetric;
  report.details["tilde_reflecting_degrees_match"] = s.reflect_all_match;
  report.details["sum_of_tilde_series_matches"] = s.sum_matches;
  report.details["all_modules_slp"] = s.all_yes;
  report.details["algebra"] = summary(ra, a.module);
  report.details["z_is_witness"] = z_witness;
  bool ok = s.all_symmetric && s.reflect_all_match && s.sum_matches;
  if (s.all_yes && is_certified_no(ra)) ok = false;
  if (z_witness && s.any_no) ok = false;
  report.consistent = ok;
  return report;
}

// ---------------------------------------------------------------------------
// Free extensions

FreeExtensionInstance make_free_extension(std::string name, GradedAlgebra total, GradedAlgebra base,
                                          GradedAlgebra fiber, std::vector<Polynomial> base_images) {
  if (!total.presentation || !base.presentation || !fiber.presentation)
    throw Error(ErrorKind::Internal, "free extension parts need quotient presentations");
  const RingSpec& br = *base.presentation->ring();
  if (base_images.size() != br.nvars())
    throw Error(ErrorKind::DimensionMismatch, "one image per base variable is required");
  for (std::size_t v = 0; v < base_images.size(); ++v) {
    const Polynomial& f = base_images[v];
    if (!(*f.ring() == *total.presentation->ring()))
      throw Error(ErrorKind::RingMismatch, "base images must live in the total ring");
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != br.var_weights[v]))
      throw Error(ErrorKind::Inhomogeneous, "image of '" + br.var_names[v] + "' does not have degree " +
                                                std::to_string(br.var_weights[v]));
  }
  HilbertSeries ht = hilbert_series(total.module), hb = hilbert_series(base.module), hf = hilbert_series(fiber.module);
  if (!(ht == hb * hf))
    throw Error(ErrorKind::NotFree, name + ": " + to_string(ht) + " is not (" + to_string(hb) + ")(" + to_string(hf) + ")");
  return FreeExtensionInstance{std::move(name), std::move(total), std::move(base), std::move(fiber),
                               std::move(base_images)};
}

CheckReport check_free_extension(const FreeExtensionInstance& inst, const SearchConfig& cfg) {
  CheckReport report{check_id::kFreeExtension, inst.name};
  WitnessReport rb = search(inst.base.module, LefschetzMode::Strong, cfg);
  WitnessReport rf = search(inst.fiber.module, LefschetzMode::Strong, cfg);
  WitnessReport rt = search(inst.total.module, LefschetzMode::Strong, cfg);
  report.details["base"] = summary(rb, inst.base.module);
  report.details["fiber"] = summary(rf, inst.fiber.module);
  report.details["total"] = summary(rt, inst.total.module);
  bool ok = !(is_yes(rb) && is_yes(rf) && is_certified_no(rt));

  // Central simple modules of (total, image of z') are those of (base, z')
  // tensored with the fiber.
  const auto fiber_dim = static_cast<int>(inst.fiber.dim());
  HilbertSeries hf = hilbert_series(inst.fiber.module);
  nlohmann::json lifts = nlohmann::json::array();
  for (std::size_t k = 0; k < inst.base.module.linear_count(); ++k) {
    LinearForm zb = unit_form(inst.base.module.linear_count(), k);
    std::size_t var = inst.base.module.linear()[k];
    LinearForm zt = inst.total.form_of(inst.base_images[var]);
    CentralSimpleDecomposition cb = central_simple_modules(inst.base.module, zb);
    CentralSimpleDecomposition ct = central_simple_modules(inst.total.module, zt);
    bool match = cb.f_values == ct.f_values;
    for (std::size_t i = 0; match && i < cb.f_values.size(); ++i) {
      match = ct.multiplicities[i] == cb.multiplicities[i] * fiber_dim &&
              hilbert_series(ct.modules[i]) == hilbert_series(cb.modules[i]) * hf;
    }
    lifts.push_back({{"base_form", inst.base.module.describe(zb)},
                     {"total_form", to_string(inst.base_images[var])},
                     {"base_profile", profile_json(jordan_profile(inst.base.module, zb))},
                     {"total_profile", profile_json(jordan_profile(inst.total.module, zt))},
                     {"modules_match", match}});
    ok = ok && match;
  }
  report.details["central_simple_lifts"] = lifts;
  report.details["hilbert_total"] = to_json(hilbert_series(inst.total.module));
  report.details["hilbert_base"] = to_json(hilbert_series(inst.base.module));
  report.details["hilbert_fiber"] = to_json(hf);
  report.consistent = ok;
  return report;
}

GradedAlgebra algebra_from_strings(const Ring& ring, const std::vector<std::string>& gens, std::size_t max_dim) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, ring));
  return GradedAlgebra::from_quotient(quotient_of(ring, polys, max_dim));
}

namespace {

GradedAlgebra algebra_of(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t max_dim) {
  return GradedAlgebra::from_quotient(quotient_of(ring, gens, max_dim));
}

void check_family_limits(int n, int degree, const FamilyLimits& limits) {
  if (n < 1 || degree < 1) throw Error(ErrorKind::OutOfRange, "family parameters must be positive");
  if (n > limits.max_vars || degree > limits.max_degree)
    throw Error(ErrorKind::ResourceGuard, "family parameters exceed the desk-scale limits (n <= " +
                                              std::to_string(limits.max_vars) +
                                              ", degree <= " + std::to_string(limits.max_degree) + ")");
}

// Fiber R/(e_1..e_n) and the images e_i of E_i.
std::pair<GradedAlgebra, std::vector<Polynomial>> coinvariant_fiber(const Ring& r, std::size_t max_dim) {
  auto e = elementary_images(r);
  return {algebra_of(r, e, max_dim), e};
}

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, int degree) {
  std::vector<Monomial> out;
  Monomial cur{std::vector<int>(ring.nvars(), 0)};
  std::function<void(std::size_t, int)> walk = [&](std::size_t v, int left) {
    if (v == ring.nvars()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e * ring.var_weights[v] <= left; ++e) {
      cur.exponents[v] = e;
      walk(v + 1, left - e * ring.var_weights[v]);
    }
    cur.exponents[v] = 0;
  };
  walk(0, degree);
  return out;
}

FreeExtensionInstance extension_over_elementary(std::string name, const Ring& e_ring,
                                                const std::vector<Polynomial>& base_gens, std::size_t max_dim) {
  const std::size_t n = e_ring->nvars();
  Ring r = standard_ring(n);
  auto [fiber, images] = coinvariant_fiber(r, max_dim);
  std::vector<Polynomial> total_gens;
  for (const auto& f : base_gens) total_gens.push_back(f.substitute(images));
  GradedAlgebra base = algebra_of(e_ring, base_gens, max_dim);
  GradedAlgebra total = algebra_of(r, total_gens, max_dim);
  return make_free_extension(std::move(name), std::move(total), std::move(base), std::move(fiber), std::move(images));
}

}  // namespace

FreeExtensionInstance power_sum_ci(int n, int a, const FamilyLimits& limits) {
  check_family_limits(n, a, limits);
  Ring r = standard_ring(static_cast<std::size_t>(n));
  std::vector<Polynomial> gens_a, gens_b;
  for (int d = a; d < a + n; ++d) {
    gens_a.push_back(power_sum(r, d));
    gens_b.push_back(rewrite_in_elementary_basis(gens_a.back()));
  }
  GradedAlgebra total = algebra_of(r, gens_a, limits.max_dim);
  GradedAlgebra base = algebra_of(gens_b.front().ring(), gens_b, limits.max_dim);
  auto [fiber, images] = coinvariant_fiber(r, limits.max_dim);
  std::string name = "power-sum n=" + std::to_string(n) + " a=" + std::to_string(a);
  return make_free_extension(std::move(name), std::move(total), std::move(base), std::move(fiber), std::move(images));
}

HilbertSeries power_sum_base_series(int n, int a) {
  std::vector<int> degs, weights;
  for (int i = 0; i < n; ++i) degs.push_back(a + i);
  for (int i = 1; i <= n; ++i) weights.push_back(i);
  return complete_intersection_series(degs, weights);
}

CheckReport check_power_sum_family(int n, int a, const SearchConfig& cfg, const FamilyLimits& limits) {
  FreeExtensionInstance inst = power_sum_ci(n, a, limits);
  CheckReport report{check_id::kPowerSum, inst.name};
  HilbertSeries hb = hilbert_series(inst.base.module);
  HilbertSeries expected = power_sum_base_series(n, a);
  int socle_degree = hb.max_degree();
  bool series_ok = hb == expected;
  bool socle_ok = socle_degree == a * n - n;

  const Ring& e_ring = inst.base.presentation->ring();
  LinearForm e1 = inst.base.form_of(Polynomial::variable(e_ring, 0));
  bool e1_witness = is_slp_element(inst.base.module, e1);
  WitnessReport rt = search(inst.total.module, LefschetzMode::Strong, cfg);

  bool reductions_ok = true;
  nlohmann::json reductions = nlohmann::json::array();
  const Ring& r = inst.total.presentation->ring();
  for (int m = a + n; m <= a * n; ++m) {
    Polynomial p = power_sum(r, m);
    bool in_total = normal_form(p, inst.total.presentation->gb).is_zero();
    bool in_base = normal_form(rewrite_in_elementary_basis(p), inst.base.presentation->gb).is_zero();
    bool newton = m <= n || newton_reduction_check(static_cast<std::size_t>(n), m);
    reductions_ok = reductions_ok && in_total && in_base && newton;
    reductions.push_back({{"m", m}, {"zero_in_total", in_total}, {"zero_in_base", in_base}, {"newton", newton}});
  }
  CheckReport fe = check_free_extension(inst, cfg);

  report.details["hilbert_base"] = to_json(hb);
  report.details["hilbert_base_expected"] = to_json(expected);
  report.details["socle_degree"] = socle_degree;
  report.details["e1_is_witness"] = e1_witness;
  report.details["total"] = summary(rt, inst.total.module);
  report.details["power_sum_reductions"] = reductions;
  report.details["free_extension"] = to_json(fe);
  report.consistent = series_ok && socle_ok && e1_witness && is_yes(rt) && reductions_ok && fe.consistent;
  return report;
}

FreeExtensionInstance generic_embedding_one_instance(int n, int d, std::uint64_t seed, const FamilyLimits& limits) {
  check_family_limits(n, d, limits);
  if (d <= n) throw Error(ErrorKind::OutOfRange, "the top degree must exceed the number of variables");
  Ring e_ring = elementary_ring(static_cast<std::size_t>(n));
  std::vector<int> degrees;
  for (int i = 2; i <= n; ++i) degrees.push_back(i);
  degrees.push_back(d);
  HilbertSeries target = HilbertSeries::from_dense(std::vector<std::int64_t>(static_cast<std::size_t>(d), 1));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Polynomial> gens;
    for (int deg : degrees) {
      std::vector<Term> terms;
      for (auto& m : monomials_of_degree(*e_ring, deg)) terms.push_back(Term{m, dist(rng)});
      gens.emplace_back(e_ring, std::move(terms));
    }
    if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); })) continue;
    try {
      QuotientPresentation q = quotient_of(e_ring, gens, limits.max_dim);
      if (!(HilbertSeries::from_degrees(q.degree_of) == target)) continue;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotArtinian) throw;
      continue;
    }
    std::string name = "generic embedding-one n=" + std::to_string(n) + " d=" + std::to_string(d);
    return extension_over_elementary(std::move(name), e_ring, gens, limits.max_dim);
  }
  throw Error(ErrorKind::NonRegularSequence, "no regular sequence found within the retry budget");
}

FreeExtensionInstance elementary_extension(std::string name, std::size_t n, const std::vector<std::string>& base_gens,
                                           std::size_t max_dim) {
  Ring e_ring = elementary_ring(n);
  std::vector<Polynomial> gens;
  for (const auto& g : base_gens) gens.push_back(parse_polynomial(g, e_ring));
  return extension_over_elementary(std::move(name), e_ring, gens, max_dim);
}

FreeExtensionInstance non_slp_base_instance() { return elementary_extension("E1^2, E2^2 over n=2", 2, {"E1^2", "E2^2"}); }

FreeExtensionInstance square_of_e1_instance() {
  return elementary_extension("E1^2, E3, E2^3 over n=3", 3, {"E1^2", "E3", "E2^3"});
}

CheckReport check_embedding_dimension_criterion(const FreeExtensionInstance& inst, int d, const SearchConfig& cfg) {
  CheckReport report{check_id::kEmbeddingDimension, inst.name};
  const GradedModule& b = inst.base.module;
  const int n = static_cast<int>(inst.base.presentation->ring()->nvars());
  HilbertSeries hb = hilbert_series(b);
  bool series_is_q_integer = hb == HilbertSeries::from_dense(std::vector<std::int64_t>(static_cast<std::size_t>(d), 1));
  std::size_t embdim = embedding_dimension(b);
  WitnessReport rb = search(b, LefschetzMode::Strong, cfg);
  auto divisibility = q_integer_divisibility(d, n);
  bool none_divides = std::none_of(divisibility.begin(), divisibility.end(), [](auto& p) { return p.second; });
  nlohmann::json div = nlohmann::json::object();
  for (auto [k, divides] : divisibility) div[std::to_string(k)] = divides;

  bool ok = series_is_q_integer;
  if (embdim == 1 && !is_yes(rb)) ok = false;
  if (is_yes(rb) && embdim != 1) ok = false;
  if (d > n && none_divides && embdim != 1) ok = false;
  CheckReport fe = check_free_extension(inst, cfg);
  report.details["hilbert_base"] = to_json(hb);
  report.details["embedding_dimension"] = embdim;
  report.details["base"] = summary(rb, b);
  report.details["q_integer_divides"] = div;
  report.details["free_extension"] = to_json(fe);
  report.consistent = ok && fe.consistent;
  return report;
}

GradedAlgebra two_variable_monomial_ci(int r, int s, std::size_t max_dim) {
  if (r < 1 || s < 1) throw Error(ErrorKind::OutOfRange, "exponents must be >= 1");
  if (static_cast<std::size_t>(r) * static_cast<std::size_t>(s) > max_dim)
    throw Error(ErrorKind::ResourceGuard, "r*s exceeds " + std::to_string(max_dim));
  Ring ring = make_ring({"X", "Y"});
  return algebra_from_strings(ring, {"X^" + std::to_string(r), "Y^" + std::to_string(s)}, max_dim);
}

CheckReport check_monomial_xy(int r, int s) {
  GradedAlgebra a = two_variable_monomial_ci(r, s);
  CheckReport report{check_id::kMonomialXY, "X^" + std::to_string(r) + ", Y^" + std::to_string(s)};
  LinearForm g = a.form_of(parse_polynomial("X + Y", a.presentation->ring()));
  bool slp = is_slp_element(a.module, g);
  HilbertSeries h = hilbert_series(a.module);
  JordanProfile p = jordan_profile(a.module, g);
  JordanProfile u = dual_decomposition(h);
  WitnessReport w;
  w.status = slp ? Verdict::CertifiedYes : Verdict::CertifiedNo;
  if (slp) w.witness = g;
  else w.obstruction = "X+Y fails the rank test";
  w.profile = p;
  w.hilbert = h;
  report.details["report"] = summary(w, a.module);
  report.details["strip_decomposition"] = profile_json(u);
  report.consistent = slp && p == u;
  return report;
}

}  // namespace lefschetz
