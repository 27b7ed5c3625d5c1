#include "lefschetz/graded.hpp"

#include <algorithm>
#include <random>

namespace lefschetz {

// ---------------------------------------------------------------------------
// Hilbert series

HilbertSeries::HilbertSeries(const std::map<int, std::int64_t>& coeffs) {
  for (const auto& [d, c] : coeffs) {
    if (c < 0) throw Error(ErrorKind::OutOfRange, "Hilbert series coefficient at degree " + std::to_string(d) + " is negative");
    if (c > 0) coeffs_.emplace(d, c);
  }
}

HilbertSeries HilbertSeries::from_degrees(const std::vector<int>& degrees) {
  std::map<int, std::int64_t> m;
  for (int d : degrees) ++m[d];
  return HilbertSeries(m);
}

HilbertSeries HilbertSeries::from_dense(const std::vector<std::int64_t>& coeffs, int a) {
  std::map<int, std::int64_t> m;
  for (std::size_t i = 0; i < coeffs.size(); ++i) m[a + static_cast<int>(i)] = coeffs[i];
  return HilbertSeries(m);
}

int HilbertSeries::min_degree() const {
  if (coeffs_.empty()) throw Error(ErrorKind::OutOfRange, "empty Hilbert series has no support");
  return coeffs_.begin()->first;
}

int HilbertSeries::max_degree() const {
  if (coeffs_.empty()) throw Error(ErrorKind::OutOfRange, "empty Hilbert series has no support");
  return coeffs_.rbegin()->first;
}

std::int64_t HilbertSeries::operator[](int d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t HilbertSeries::total() const {
  std::int64_t s = 0;
  for (const auto& [d, c] : coeffs_) s += c;
  return s;
}

std::vector<std::int64_t> HilbertSeries::dense() const {
  if (coeffs_.empty()) return {};
  std::vector<std::int64_t> v;
  for (int d = min_degree(); d <= max_degree(); ++d) v.push_back((*this)[d]);
  return v;
}

HilbertSeries HilbertSeries::shifted(int by) const {
  std::map<int, std::int64_t> m;
  for (const auto& [d, c] : coeffs_) m[d + by] = c;
  return HilbertSeries(m);
}

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
  std::map<int, std::int64_t> m = a.coeffs_;
  for (const auto& [d, c] : b.coeffs_) m[d] += c;
  return HilbertSeries(m);
}

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
  std::map<int, std::int64_t> m;
  for (const auto& [d, c] : a.coeffs_)
    for (const auto& [e, k] : b.coeffs_) m[d + e] += c * k;
  return HilbertSeries(m);
}

std::string to_string(const HilbertSeries& h) {
  if (h.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : h.coefficients()) {
    if (!s.empty()) s += " + ";
    if (d == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += "q";
    if (d != 1) s += "^" + std::to_string(d);
  }
  return s;
}

nlohmann::json to_json(const HilbertSeries& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, c] : h.coefficients()) j[std::to_string(d)] = c;
  return j;
}

SpernerData sperner_data(const HilbertSeries& h) {
  SpernerData s;
  if (h.empty()) {
    s.symmetric = s.unimodal = true;
    return s;
  }
  const int a = h.min_degree(), b = h.max_degree();
  auto at = [&](int d) { return d < a || d > b ? std::int64_t{0} : h[d]; };
  for (int d = a; d <= b; ++d) s.sperner = std::max(s.sperner, at(d));
  for (int d = a; d < b; ++d) s.cosperner += std::min(at(d), at(d + 1));
  for (int k = 1; k <= b - a; ++k) {
    std::int64_t sp = 0;
    for (int d = a; d <= b; ++d) sp += std::max<std::int64_t>(at(d) - at(d - k), 0);
    s.sperner_vector.push_back(sp);
  }
  s.symmetric = true;
  for (int i = 0; a + i < b - i; ++i)
    if (at(a + i) != at(b - i)) s.symmetric = false;
  // Non-decreasing run followed by a non-increasing run. The endpoints are
  // positive, so an interior zero always breaks this.
  int d = a;
  while (d < b && at(d) <= at(d + 1)) ++d;
  while (d < b && at(d) >= at(d + 1)) ++d;
  s.unimodal = d == b;
  if (s.symmetric) {
    Rational r(a + b, 2);
    r.canonicalize();
    s.reflecting_degree = r;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Modules

GradedModule::GradedModule(std::vector<int> degrees, std::vector<ActionGenerator> generators,
                           std::vector<std::size_t> linear)
    : degrees_(std::move(degrees)), generators_(std::move(generators)), linear_(std::move(linear)) {
  const std::size_t n = degrees_.size();
  for (const auto& g : generators_) {
    if (g.matrix.rows() != n || g.matrix.cols() != n)
      throw Error(ErrorKind::DimensionMismatch, "action of '" + g.name + "' is not " + std::to_string(n) + "x" +
                                                    std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(g.matrix(i, j)) != 0 && degrees_[i] != degrees_[j] + g.degree)
          throw Error(ErrorKind::Inhomogeneous, "action of '" + g.name + "' does not shift degrees by " +
                                                    std::to_string(g.degree));
  }
  for (std::size_t k : linear_) {
    if (k >= generators_.size()) throw Error(ErrorKind::OutOfRange, "linear generator index out of range");
    if (generators_[k].degree != 1)
      throw Error(ErrorKind::NotDegreeOne, "generator '" + generators_[k].name + "' has degree " +
                                               std::to_string(generators_[k].degree));
  }
}

std::vector<std::size_t> GradedModule::indices_in_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

RationalMatrix GradedModule::operator_of(const LinearForm& form) const {
  if (form.coefficients.size() != linear_.size())
    throw Error(ErrorKind::NotDegreeOne, "linear form has " + std::to_string(form.coefficients.size()) +
                                             " coefficients, the degree-one space has dimension " +
                                             std::to_string(linear_.size()));
  RationalMatrix m(dim(), dim());
  for (std::size_t k = 0; k < linear_.size(); ++k)
    if (sgn(form.coefficients[k]) != 0) m += generators_[linear_[k]].matrix * form.coefficients[k];
  return m;
}

bool GradedModule::actions_commute() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (!(generators_[i].matrix * generators_[j].matrix == generators_[j].matrix * generators_[i].matrix)) return false;
  return true;
}

std::string GradedModule::describe(const LinearForm& form) const {
  std::string s;
  for (std::size_t k = 0; k < form.coefficients.size() && k < linear_.size(); ++k) {
    Rational c = form.coefficients[k];
    if (sgn(c) == 0) continue;
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) s += c.get_str() + "*";
    s += generators_[linear_[k]].name;
  }
  return s.empty() ? "0" : s;
}

GradedAlgebra GradedAlgebra::from_quotient(QuotientPresentation q) {
  std::vector<ActionGenerator> gens;
  const auto& ring = *q.ring();
  for (std::size_t v = 0; v < ring.nvars(); ++v)
    gens.push_back(ActionGenerator{ring.var_names[v], ring.var_weights[v], q.mult_matrices[v]});
  auto linear = q.linear_variables();
  auto degrees = q.degree_of;
  GradedAlgebra a;
  a.module = GradedModule(std::move(degrees), std::move(gens), std::move(linear));
  a.presentation = std::make_shared<const QuotientPresentation>(std::move(q));
  return a;
}

LinearForm GradedAlgebra::form_of(const Polynomial& f) const {
  if (!presentation) throw Error(ErrorKind::Internal, "form_of needs a quotient presentation");
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != 1))
    throw Error(ErrorKind::NotDegreeOne, "'" + to_string(f) + "' is not of degree one");
  Polynomial r = normal_form(f, presentation->gb);
  LinearForm form{RationalVector(module.linear_count())};
  for (const auto& t : r.terms()) {
    bool placed = false;
    for (std::size_t k = 0; k < module.linear_count() && !placed; ++k) {
      std::size_t v = module.linear()[k];
      if (t.monomial.exponents[v] == 1 && t.monomial.total_degree() == 1) {
        form.coefficients[k] = t.coeff;
        placed = true;
      }
    }
    if (!placed) throw Error(ErrorKind::NotDegreeOne, "'" + to_string(f) + "' is not a linear form of the algebra");
  }
  return form;
}

Polynomial GradedAlgebra::polynomial_of(const LinearForm& form) const {
  if (!presentation) throw Error(ErrorKind::Internal, "polynomial_of needs a quotient presentation");
  Polynomial p(presentation->ring());
  for (std::size_t k = 0; k < form.coefficients.size(); ++k)
    if (sgn(form.coefficients[k]) != 0)
      p += Polynomial::variable(presentation->ring(), module.linear()[k]) * form.coefficients[k];
  return p;
}

std::size_t GradedAlgebra::unit_index() const {
  if (!presentation) throw Error(ErrorKind::Internal, "unit_index needs a quotient presentation");
  return presentation->index.at(std::vector<int>(presentation->ring()->nvars(), 0));
}

// ---------------------------------------------------------------------------
// Lefschetz tests

HilbertSeries hilbert_series(const GradedModule& v) { return HilbertSeries::from_degrees(v.degrees()); }

JordanProfile jordan_profile(const GradedModule& v, const LinearForm& z) {
  return nilpotent_jordan_profile(v.operator_of(z));
}

JordanProfile dual_decomposition(const HilbertSeries& h) {
  if (h.empty()) throw Error(ErrorKind::InvalidProfile, "dual_decomposition of the zero series");
  SpernerData s = sperner_data(h);
  if (!s.symmetric) throw Error(ErrorKind::NotSymmetric, "Hilbert series " + to_string(h) + " is not symmetric");
  if (!s.unimodal) throw Error(ErrorKind::NotUnimodal, "Hilbert series " + to_string(h) + " is not unimodal");
  const int a = h.min_degree(), b = h.max_degree();
  const int length = b - a + 1;
  std::vector<int> u;
  for (int k = 0; 2 * k < length; ++k) {
    std::int64_t count = h[a + k] - (k == 0 ? 0 : h[a + k - 1]);
    for (std::int64_t c = 0; c < count; ++c) u.push_back(length - 2 * k);
  }
  return JordanProfile(std::move(u));
}

HilbertSeries rebuild_hilbert(const JordanProfile& u, int a, int b) {
  const int length = b - a + 1;
  if (u.block_count() == 0 || length < 1) throw Error(ErrorKind::InvalidProfile, "empty profile or support");
  if (u.blocks().front() != length)
    throw Error(ErrorKind::InvalidProfile, "largest strip must have length b-a+1 = " + std::to_string(length));
  std::map<int, std::int64_t> m;
  for (int size : u.blocks()) {
    if ((length - size) % 2 != 0)
      throw Error(ErrorKind::InvalidProfile, "strip " + std::to_string(size) + " has the wrong parity");
    int start = a + (length - size) / 2;
    for (int d = start; d < start + size; ++d) ++m[d];
  }
  return HilbertSeries(m);
}

namespace {

bool wlp_by_slices(const GradedModule& v, const RationalMatrix& l) {
  const auto& degs = v.degrees();
  int a = *std::min_element(degs.begin(), degs.end());
  int b = *std::max_element(degs.begin(), degs.end());
  for (int d = a; d < b; ++d) {
    auto src = v.indices_in_degree(d);
    auto dst = v.indices_in_degree(d + 1);
    if (src.empty() || dst.empty()) continue;
    std::size_t r = rank(l.submatrix(dst, src));
    if (r != src.size() && r != dst.size()) return false;
  }
  return true;
}

}  // namespace

bool is_wlp_element(const GradedModule& v, const LinearForm& l) {
  RationalMatrix m = v.operator_of(l);
  if (v.dim() == 0) return true;
  HilbertSeries h = hilbert_series(v);
  SpernerData s = sperner_data(h);
  if (s.unimodal) return static_cast<std::int64_t>(v.dim() - rank(m)) == s.sperner;
  return wlp_by_slices(v, m);
}

bool is_slp_element(const GradedModule& v, const LinearForm& g) {
  RationalMatrix m = v.operator_of(g);
  if (v.dim() == 0) return true;
  HilbertSeries h = hilbert_series(v);
  SpernerData s = sperner_data(h);
  if (!s.symmetric || !s.unimodal) return false;
  const auto dim = static_cast<std::int64_t>(v.dim());
  bool by_rank = true;
  RationalMatrix p = m;
  for (std::size_t k = 1; k <= s.sperner_vector.size(); ++k) {
    if (k > 1) p = p * m;
    if (static_cast<std::int64_t>(rank(p)) != dim - s.sperner_vector[k - 1]) {
      by_rank = false;
      break;
    }
  }
  bool by_profile = nilpotent_jordan_profile(m) == dual_decomposition(h);
  if (by_rank != by_profile)
    throw Error(ErrorKind::Internal, "rank test and Jordan profile test disagree on an SLP query");
  return by_rank;
}

std::string to_string(LefschetzMode mode) { return mode == LefschetzMode::Weak ? "weak" : "strong"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedYes: return "certified_yes";
    case Verdict::CertifiedNo: return "certified_no";
    case Verdict::ProbableNo: return "probable_no";
  }
  return "unknown";
}

nlohmann::json to_json(const WitnessReport& r) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  if (r.witness) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& c : r.witness->coefficients) w.push_back(c.get_str());
    j["witness"] = w;
  }
  if (!r.obstruction.empty()) j["obstruction"] = r.obstruction;
  j["profile"] = r.profile.blocks();
  j["hilbert"] = to_json(r.hilbert);
  return j;
}

std::vector<LinearForm> candidate_forms(std::size_t linear_count, const SearchConfig& search) {
  std::vector<LinearForm> out;
  for (std::size_t k = 0; k < linear_count; ++k) {
    LinearForm f{RationalVector(linear_count)};
    f.coefficients[k] = 1;
    out.push_back(std::move(f));
  }
  if (linear_count > 1) out.push_back(LinearForm{RationalVector(linear_count, Rational(1))});
  std::mt19937_64 rng(search.seed);
  std::uniform_int_distribution<std::int64_t> dist(-search.bound, search.bound);
  for (std::size_t t = 0; t < search.trials && linear_count > 0; ++t) {
    LinearForm f{RationalVector(linear_count)};
    for (auto& c : f.coefficients) c = Rational(static_cast<long>(dist(rng)));
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t linear_operator_span_dim(const GradedModule& v) {
  // Restrict to positions where some operator is nonzero.
  std::vector<std::pair<std::size_t, std::size_t>> support;
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      for (std::size_t k = 0; k < v.linear_count(); ++k)
        if (sgn(v.linear_generator(k).matrix(i, j)) != 0) {
          support.emplace_back(i, j);
          break;
        }
  std::vector<RationalVector> rows;
  for (std::size_t k = 0; k < v.linear_count(); ++k) {
    RationalVector r;
    r.reserve(support.size());
    for (auto [i, j] : support) r.push_back(v.linear_generator(k).matrix(i, j));
    rows.push_back(std::move(r));
  }
  return reduced_row_echelon(rows, support.size()).rows.size();
}

WitnessReport find_lefschetz_witness(const GradedModule& v, LefschetzMode mode, const SearchConfig& search) {
  if (v.linear_count() == 0) throw Error(ErrorKind::NoLinearForms, "the degree-one component is zero");
  WitnessReport report;
  report.hilbert = hilbert_series(v);
  const std::size_t n = v.linear_count();
  auto test = [&](const LinearForm& f) {
    ++report.candidates_tested;
    return mode == LefschetzMode::Strong ? is_slp_element(v, f) : is_wlp_element(v, f);
  };

  if (mode == LefschetzMode::Strong) {
    SpernerData s = sperner_data(report.hilbert);
    if (!s.symmetric || !s.unimodal) {
      LinearForm first{RationalVector(n)};
      first.coefficients[0] = 1;
      report.status = Verdict::CertifiedNo;
      report.obstruction = !s.symmetric ? "non-symmetric" : "non-unimodal";
      report.profile = jordan_profile(v, first);
      return report;
    }
  }

  std::size_t span = linear_operator_span_dim(v);
  if (span <= 1) {
    // Every form is a scalar multiple of one operator: the search is exhaustive.
    LinearForm rep{RationalVector(n)};
    std::string name;
    for (std::size_t k = 0; k < n && name.empty(); ++k)
      if (!v.linear_generator(k).matrix.is_zero()) {
        rep.coefficients[k] = 1;
        name = v.linear_generator(k).name;
      }
    report.profile = jordan_profile(v, rep);
    if (test(rep)) {
      report.status = Verdict::CertifiedYes;
      report.witness = rep;
    } else {
      report.status = Verdict::CertifiedNo;
      report.obstruction = name.empty() ? "only the zero form is available and it fails"
                                        : "all forms scalar multiples of " + name + " fail";
    }
    return report;
  }

  auto candidates = candidate_forms(n, search);
  report.profile = jordan_profile(v, candidates.front());
  for (const auto& f : candidates) {
    if (test(f)) {
      report.status = Verdict::CertifiedYes;
      report.witness = f;
      report.profile = jordan_profile(v, f);
      return report;
    }
  }
  report.status = Verdict::ProbableNo;
  report.obstruction = "no witness among " + std::to_string(candidates.size()) + " candidate forms";
  return report;
}

}  // namespace lefschetz
