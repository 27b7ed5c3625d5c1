#include "lefschetz/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace lefschetz {

bool RingSpec::is_standard() const {
  return std::all_of(var_weights.begin(), var_weights.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < var_names.size(); ++i)
    if (var_names[i] == name) return i;
  return std::nullopt;
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Ring make_ring(std::vector<std::string> names, std::vector<int> weights) {
  if (names.size() != weights.size())
    throw Error(ErrorKind::DimensionMismatch, "ring: " + std::to_string(names.size()) + " names but " +
                                                  std::to_string(weights.size()) + " weights");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) throw Error(ErrorKind::Parse, "ring: '" + names[i] + "' is not an identifier");
    if (!seen.insert(names[i]).second) throw Error(ErrorKind::Parse, "ring: duplicate variable '" + names[i] + "'");
    if (weights[i] < 1) throw Error(ErrorKind::OutOfRange, "ring: weight of '" + names[i] + "' must be >= 1");
  }
  return std::make_shared<const RingSpec>(RingSpec{std::move(names), std::move(weights)});
}

Ring make_ring(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return make_ring(std::move(names), std::move(w));
}

Ring standard_ring(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names));
}

Ring elementary_ring(std::size_t n) {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("E" + std::to_string(i));
    weights.push_back(static_cast<int>(i));
  }
  return make_ring(std::move(names), std::move(weights));
}

// ---------------------------------------------------------------------------
// Monomials

int Monomial::weighted_degree(const RingSpec& ring) const {
  int d = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * ring.var_weights[i];
  return d;
}

int Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m{a.exponents};
  for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m{a.exponents};
  for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] -= b.exponents[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m{a.exponents};
  for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] = std::max(m.exponents[i], b.exponents[i]);
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
  return true;
}

int compare_monomials(const Monomial& a, const Monomial& b, const RingSpec& ring) {
  int da = a.weighted_degree(ring), db = b.weighted_degree(ring);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.exponents.size(); i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? 1 : -1;
  }
  return 0;
}

namespace {

struct Descending {
  const RingSpec* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(a, b, *ring) > 0; }
};

using WorkMap = std::map<Monomial, Rational, Descending>;

}  // namespace

// ---------------------------------------------------------------------------
// Polynomials

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::RingMismatch, "polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw Error(ErrorKind::RingMismatch, "polynomial without a ring");
  for (const auto& t : terms_)
    if (t.monomial.exponents.size() != ring_->nvars())
      throw Error(ErrorKind::RingMismatch, "monomial arity differs from ring");
  normalize();
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Monomial one{std::vector<int>(ring->nvars(), 0)};
  return Polynomial(ring, {Term{one, c}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::OutOfRange, "variable index");
  Monomial m{std::vector<int>(ring->nvars(), 0)};
  m.exponents[index] = 1;
  return Polynomial(ring, {Term{m, 1}});
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, const Rational& c) {
  return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return compare_monomials(a.monomial, b.monomial, *ring_) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms_ = std::move(out);
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::OutOfRange, "leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().monomial.weighted_degree(*ring_);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial.weighted_degree(*ring_) == d; });
}

int Polynomial::degree() const { return leading_monomial().weighted_degree(*ring_); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->nvars()) throw Error(ErrorKind::DimensionMismatch, "substitute: one image per variable");
  if (images.empty()) throw Error(ErrorKind::DimensionMismatch, "substitute: target ring unknown for a zero-variable ring");
  const Ring& target = images.front().ring();
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = t.monomial.exponents[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      term = term * cache[static_cast<std::size_t>(e)];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::permute(const std::vector<std::size_t>& perm) const {
  if (perm.size() != ring_->nvars()) throw Error(ErrorKind::DimensionMismatch, "permute: permutation size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m{std::vector<int>(perm.size(), 0)};
    for (std::size_t i = 0; i < perm.size(); ++i) m.exponents[perm[i]] = t.monomial.exponents[i];
    out.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int c = i == terms_.size()          ? -1
            : j == other.terms_.size() ? 1
                                       : compare_monomials(terms_[i].monomial, other.terms_[j].monomial, *ring_);
    if (c > 0) {
      merged.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      merged.push_back(other.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + other.terms_[j].coeff;
      if (sgn(s) != 0) merged.push_back(Term{std::move(terms_[i].monomial), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -Polynomial(other); }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Term& t) {
  // Multiplying by a term preserves the order, no re-sort needed.
  Polynomial p(a.ring_);
  if (sgn(t.coeff) == 0) return p;
  p.terms_.reserve(a.terms_.size());
  for (const auto& s : a.terms_) p.terms_.push_back(Term{s.monomial * t.monomial, s.coeff * t.coeff});
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string to_string(const Monomial& m, const RingSpec& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var_names[i];
    if (m.exponents[i] > 1) s += '^' + std::to_string(m.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) s += '-';
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (t.monomial.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += to_string(t.monomial, *f.ring());
    }
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw PolynomialParseError(pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_] == '-';
      ++pos_;
      Polynomial next = term();
      if (minus)
        acc -= next;
      else
        acc += next;
    }
    return acc;
  }

  Polynomial term() {
    if (!starts_factor()) fail("expected a coefficient, variable or '('");
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
        acc = acc * power();
      } else if (starts_factor()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent after '^'");
      std::string digits = text_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string lit = text_.substr(start, pos_ - start);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator after '/'");
        lit += "/" + text_.substr(dstart, pos_ - dstart);
        if (Integer(text_.substr(dstart, pos_ - dstart)) == 0) {
          pos_ = dstart;
          fail("zero denominator");
        }
      }
      return Polynomial::constant(ring_, parse_rational(lit));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    return Polynomial::variable(ring_, *idx);
  }

  const std::string& text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) { return PolyParser(text, ring).parse(); }

// ---------------------------------------------------------------------------
// Groebner bases

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const Ring& ring = f.ring();
  for (const auto& g : divisors)
    if (g.ring() != ring && !(*g.ring() == *ring)) throw Error(ErrorKind::RingMismatch, "normal_form: ring mismatch");
  WorkMap work(Descending{ring.get()});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(it->first)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(Term{it->first, it->second});
      work.erase(it);
      continue;
    }
    Rational c = it->second / divisor->leading_coeff();
    Monomial q = it->first / divisor->leading_monomial();
    work.erase(it);
    bool first = true;
    for (const auto& t : divisor->terms()) {
      if (first) {
        first = false;
        continue;
      }
      Monomial m = t.monomial * q;
      auto [pos, inserted] = work.emplace(m, 0);
      pos->second -= c * t.coeff;
      if (sgn(pos->second) == 0) work.erase(pos);
    }
  }
  return Polynomial(ring, std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.ring() != gb.ring && !(*f.ring() == *gb.ring)) throw Error(ErrorKind::RingMismatch, "normal_form: ring mismatch");
  return normal_form(f, gb.generators);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{l / f.leading_monomial(), 1 / f.leading_coeff()};
  Term tg{l / g.leading_monomial(), 1 / g.leading_coeff()};
  return f * tf - g * tg;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error(ErrorKind::OutOfRange, "buchberger: empty generator list");
  const Ring ring = gens.front().ring();
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    if (g.ring() != ring && !(*g.ring() == *ring)) throw Error(ErrorKind::RingMismatch, "buchberger: generators in different rings");
    if (!g.is_homogeneous())
      throw Error(ErrorKind::Inhomogeneous, "generator '" + to_string(g) + "' is not homogeneous in the weighted grading");
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  auto add = [&](Polynomial p) {
    basis.push_back(p.monic());
    std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i) pending.emplace(i, k);
  };
  for (const auto& g : gens) {
    Polynomial r = normal_form(g, basis);
    if (!r.is_zero()) add(r);
  }

  auto lcm_of = [&](const Pair& p) { return lcm(basis[p.first].leading_monomial(), basis[p.second].leading_monomial()); };
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_lcm = lcm_of(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm_of(*it);
      if (compare_monomials(l, best_lcm, *ring) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    Pair p = *best;
    pending.erase(best);
    const auto& fi = basis[p.first];
    const auto& fj = basis[p.second];
    if (coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
      if (l == p.first || l == p.second) continue;
      if (!basis[l].leading_monomial().divides(best_lcm)) continue;
      Pair a{std::min(l, p.first), std::max(l, p.first)};
      Pair b{std::min(l, p.second), std::max(l, p.second)};
      chain = !pending.contains(a) && !pending.contains(b);
    }
    if (chain) continue;
    Polynomial h = normal_form(s_polynomial(fi, fj), basis);
    if (!h.is_zero()) add(std::move(h));
  }

  // Minimalize, then interreduce tails.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), *ring) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Polynomial& h) { return h.leading_monomial().divides(g.leading_monomial()); });
    if (!redundant) minimal.push_back(g);
  }
  GroebnerBasis gb{ring, {}};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial tail = minimal[i] - Polynomial::monomial(ring, minimal[i].leading_monomial(), minimal[i].leading_coeff());
    Polynomial reduced = Polynomial::monomial(ring, minimal[i].leading_monomial(), 1) +
                         normal_form(tail, others) * (1 / minimal[i].leading_coeff());
    gb.generators.push_back(std::move(reduced));
  }
  return gb;
}

bool is_groebner_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i)
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
      if (!normal_form(s_polynomial(gb.generators[i], gb.generators[j]), gb).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientPresentation quotient_presentation(const GroebnerBasis& gb, std::size_t max_dim) {
  const Ring& ring = gb.ring;
  const std::size_t n = ring->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_monomial());

  // Artinian iff every variable has a pure power among the leading monomials.
  for (std::size_t i = 0; i < n; ++i) {
    bool found = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      for (std::size_t j = 0; j < n; ++j)
        if ((j == i) != (m.exponents[j] > 0)) return false;
      return true;
    });
    if (!found)
      throw Error(ErrorKind::NotArtinian, "no power of '" + ring->var_names[i] + "' lies in the initial ideal");
  }
  if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
    throw Error(ErrorKind::NotArtinian, "the ideal is the whole ring (quotient is zero)");

  auto is_standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };

  QuotientPresentation q;
  q.gb = gb;
  Monomial cur{std::vector<int>(n, 0)};
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      q.standard_monomials.push_back(cur);
      if (q.standard_monomials.size() > max_dim)
        throw Error(ErrorKind::ResourceGuard, "quotient dimension exceeds " + std::to_string(max_dim));
      return;
    }
    for (cur.exponents[var] = 0; is_standard(cur); ++cur.exponents[var]) walk(var + 1);
    cur.exponents[var] = 0;
  };
  walk(0);
  std::sort(q.standard_monomials.begin(), q.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return compare_monomials(a, b, *ring) < 0; });
  for (std::size_t k = 0; k < q.standard_monomials.size(); ++k) {
    q.index.emplace(q.standard_monomials[k].exponents, k);
    q.degree_of.push_back(q.standard_monomials[k].weighted_degree(*ring));
  }
  const std::size_t dim = q.standard_monomials.size();
  for (std::size_t v = 0; v < n; ++v) {
    RationalMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Monomial prod = q.standard_monomials[j];
      ++prod.exponents[v];
      if (auto it = q.index.find(prod.exponents); it != q.index.end()) {
        m(it->second, j) = 1;
        continue;
      }
      auto coords = q.coordinates_of(Polynomial::monomial(ring, prod));
      for (std::size_t i = 0; i < dim; ++i) m(i, j) = coords[i];
    }
    q.mult_matrices.push_back(std::move(m));
  }
  return q;
}

QuotientPresentation quotient_of(const Ring& ring, const std::vector<Polynomial>& gens, std::size_t max_dim) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  GroebnerBasis gb = nonzero.empty() ? GroebnerBasis{ring, {}} : buchberger(nonzero);
  return quotient_presentation(gb, max_dim);
}

RationalVector QuotientPresentation::coordinates_of(const Polynomial& f) const {
  Polynomial r = normal_form(f, gb);
  RationalVector v(dim());
  for (const auto& t : r.terms()) {
    auto it = index.find(t.monomial.exponents);
    if (it == index.end()) throw Error(ErrorKind::Internal, "normal form has a non-standard monomial");
    v[it->second] = t.coeff;
  }
  return v;
}

Polynomial QuotientPresentation::element(const RationalVector& coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "element: coordinate length");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) terms.push_back(Term{standard_monomials[k], coords[k]});
  return Polynomial(ring(), std::move(terms));
}

RationalMatrix QuotientPresentation::action_matrix(const Polynomial& f) const {
  RationalMatrix m(dim(), dim());
  Polynomial nf = normal_form(f, gb);
  for (std::size_t j = 0; j < dim(); ++j) {
    auto coords = coordinates_of(nf * Term{standard_monomials[j], 1});
    for (std::size_t i = 0; i < dim(); ++i) m(i, j) = coords[i];
  }
  return m;
}

std::vector<std::size_t> QuotientPresentation::linear_variables() const {
  std::vector<std::size_t> out;
  const std::size_t n = ring()->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    if (ring()->var_weights[v] != 1) continue;
    std::vector<int> e(n, 0);
    e[v] = 1;
    if (index.contains(e)) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric functions

Polynomial elementary_symmetric(const Ring& ring, std::size_t i) {
  const std::size_t n = ring->nvars();
  if (i < 1 || i > n) throw Error(ErrorKind::OutOfRange, "elementary_symmetric: need 1 <= i <= n");
  std::vector<Term> terms;
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(i), pick.end(), true);
  do {
    Monomial m{std::vector<int>(n, 0)};
    for (std::size_t k = 0; k < n; ++k) m.exponents[k] = pick[k] ? 1 : 0;
    terms.push_back(Term{std::move(m), 1});
  } while (std::next_permutation(pick.begin(), pick.end()));
  return Polynomial(ring, std::move(terms));
}

Polynomial power_sum(const Ring& ring, int d) {
  if (d < 1) throw Error(ErrorKind::OutOfRange, "power_sum: need d >= 1");
  std::vector<Term> terms;
  for (std::size_t k = 0; k < ring->nvars(); ++k) {
    Monomial m{std::vector<int>(ring->nvars(), 0)};
    m.exponents[k] = d;
    terms.push_back(Term{std::move(m), 1});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial elementary_symmetric(std::size_t n, std::size_t i) { return elementary_symmetric(standard_ring(n), i); }
Polynomial power_sum(std::size_t n, int d) { return power_sum(standard_ring(n), d); }

bool newton_reduction_check(std::size_t n, int m) {
  if (n < 1 || m <= static_cast<int>(n)) throw Error(ErrorKind::OutOfRange, "newton_reduction_check: need m > n >= 1");
  Ring ring = standard_ring(n);
  Polynomial acc = power_sum(ring, m);
  for (std::size_t j = 1; j <= n; ++j) {
    Polynomial t = elementary_symmetric(ring, j) * power_sum(ring, m - static_cast<int>(j));
    if (j % 2)
      acc -= t;
    else
      acc += t;
  }
  return acc.is_zero();
}

std::vector<Polynomial> elementary_images(const Ring& ring) {
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i <= ring->nvars(); ++i) out.push_back(elementary_symmetric(ring, i));
  return out;
}

bool is_symmetric(const Polynomial& f) {
  const std::size_t n = f.ring()->nvars();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= 8) {
    while (std::next_permutation(perm.begin(), perm.end()))
      if (!(f.permute(perm) == f)) return false;
    return true;
  }
  // Adjacent transpositions generate S_n.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::swap(perm[i], perm[i + 1]);
    bool same = f.permute(perm) == f;
    std::swap(perm[i], perm[i + 1]);
    if (!same) return false;
  }
  return true;
}

Polynomial rewrite_in_elementary_basis(const Polynomial& f) {
  if (!is_symmetric(f)) throw Error(ErrorKind::NotSymmetric, "'" + to_string(f) + "' is not symmetric");
  const std::size_t n = f.ring()->nvars();
  Ring target = elementary_ring(n);
  auto e = elementary_images(f.ring());
  Polynomial rest = f;
  Polynomial g(target);
  while (!rest.is_zero()) {
    // The lex-largest monomial of a symmetric polynomial has non-increasing exponents.
    const Term* lead = &rest.terms().front();
    for (const auto& t : rest.terms())
      if (std::lexicographical_compare(lead->monomial.exponents.begin(), lead->monomial.exponents.end(),
                                       t.monomial.exponents.begin(), t.monomial.exponents.end()))
        lead = &t;
    const auto& a = lead->monomial.exponents;
    Monomial em{std::vector<int>(n, 0)};
    for (std::size_t i = 0; i < n; ++i) em.exponents[i] = a[i] - (i + 1 < n ? a[i + 1] : 0);
    Rational c = lead->coeff;
    Polynomial prod = Polynomial::constant(f.ring(), c);
    for (std::size_t i = 0; i < n; ++i)
      if (em.exponents[i] > 0) prod = prod * e[i].pow(static_cast<unsigned>(em.exponents[i]));
    g += Polynomial::monomial(target, em, c);
    rest -= prod;
  }
  return g;
}

}  // namespace lefschetz
