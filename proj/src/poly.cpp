#include "fixdiv/poly.hpp"

#include <algorithm>
#include <numeric>

namespace fixdiv {

// ---------------------------------------------------------------------------
// Exponent

unsigned Exponent::weight() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

bool Exponent::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](unsigned v) { return v == 0; });
}

std::string Exponent::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e_[i]);
  }
  return out + ")";
}

bool componentwise_le(const Exponent& i, const Exponent& j) {
  for (std::size_t t = 0; t < i.size(); ++t)
    if (i[t] > j[t]) return false;
  return true;
}

Exponent componentwise_max(const Exponent& i, const Exponent& j) {
  Exponent out(i.size());
  for (std::size_t t = 0; t < i.size(); ++t) out[t] = std::max(i[t], j[t]);
  return out;
}

Exponent operator+(const Exponent& i, const Exponent& j) {
  Exponent out(i.size());
  for (std::size_t t = 0; t < i.size(); ++t) out[t] = i[t] + j[t];
  return out;
}

bool GradedOrder::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned wa = a.weight();
  const unsigned wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.components() > b.components();
}

PolyType normalize_type(const Exponent& m, unsigned k) {
  PolyType t{m, k};
  for (std::size_t j = 0; j < t.m.size(); ++j) t.m[j] = std::min(t.m[j], k);
  t.k = std::min(k, t.m.weight());
  return t;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const Point& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a[i].get_str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars), c);
  return p;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars);
  e[index] = 1;
  return monomial(e);
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DomainError("exponent arity does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Exponent Poly::degree() const {
  Exponent d(nvars_);
  for (const auto& [e, c] : terms_) d = componentwise_max(d, e);
  return d;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0u : terms_.rbegin()->first.weight();
}

bool Poly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

Integer Poly::denominator() const {
  Integer d = 1;
  for (const auto& [e, c] : terms_) d = lcm(d, c.get_den());
  return d;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.nvars_ != nvars_) throw DomainError("polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.nvars_ != nvars_) throw DomainError("polynomial arity mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomial arity mismatch");
  Poly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

template <typename Coord>
Rational evaluate_impl(const Poly& f, std::span<const Coord> point) {
  if (point.size() != f.nvars())
    throw DomainError("evaluate: point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                      std::to_string(f.nvars()) + " variables");
  const Exponent deg = f.degree();
  std::vector<std::vector<Rational>> powers(f.nvars());
  for (std::size_t j = 0; j < f.nvars(); ++j) {
    powers[j].resize(deg[j] + 1);
    powers[j][0] = 1;
    for (unsigned t = 1; t <= deg[j]; ++t) powers[j][t] = powers[j][t - 1] * point[j];
  }
  Rational sum = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) term *= powers[j][e[j]];
    sum += term;
  }
  return sum;
}

}  // namespace

Rational evaluate(const Poly& f, std::span<const Rational> point) { return evaluate_impl(f, point); }
Rational evaluate(const Poly& f, std::span<const Integer> point) { return evaluate_impl(f, point); }

Integer content(const Poly& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  if (!f.has_integer_coefficients()) throw DomainError("content: coefficients must be integers");
  Integer g = 0;
  for (const auto& [e, c] : f.terms()) g = gcd(g, c.get_num());
  return g;
}

std::pair<FactoredIdeal, Poly> content_primitive(const Poly& f) {
  const Integer c = content(f);
  Poly primitive = f * Rational(Integer(1), c);
  return {FactoredIdeal::of(c), primitive};
}

// ---------------------------------------------------------------------------
// MonomialSequence

MonomialSequence::MonomialSequence(const Exponent& m, std::optional<unsigned> k) : m_(m), k_(k) {
  const std::size_t n = m.size();
  Exponent e(n);
  // Odometer over the box 0 <= e <= m.
  while (true) {
    if (!k || e.weight() <= *k) monomials_.push_back(e);
    std::size_t j = 0;
    while (j < n && e[j] == m[j]) e[j++] = 0;
    if (j == n) break;
    ++e[j];
  }
  std::sort(monomials_.begin(), monomials_.end(), GradedOrder{});
  for (std::size_t j = 0; j < monomials_.size(); ++j) index_.emplace(monomials_[j], j);
}

std::optional<std::size_t> MonomialSequence::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntVector MonomialSequence::evaluate(std::span<const Integer> point, std::size_t len) const {
  const std::size_t n = nvars();
  if (point.size() != n) throw DomainError("monomial evaluation: dimension mismatch");
  std::vector<std::vector<Integer>> powers(n);
  for (std::size_t j = 0; j < n; ++j) {
    powers[j].resize(m_[j] + 1);
    powers[j][0] = 1;
    for (unsigned t = 1; t <= m_[j]; ++t) powers[j][t] = powers[j][t - 1] * point[j];
  }
  IntVector row(static_cast<Eigen::Index>(len));
  for (std::size_t s = 0; s < len; ++s) {
    const Exponent& e = monomials_[s];
    Integer v = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (e[j]) v *= powers[j][e[j]];
    row(static_cast<Eigen::Index>(s)) = v;
  }
  return row;
}

RatVector MonomialSequence::coefficients(const Poly& f) const {
  if (f.nvars() != nvars()) throw DomainError("coefficients: arity mismatch");
  RatVector c = RatVector::Constant(static_cast<Eigen::Index>(size()), Rational(0));
  for (const auto& [e, coeff] : f.terms()) {
    auto idx = index_of(e);
    if (!idx) throw DomainError("monomial " + e.to_string() + " lies outside the sequence");
    c(static_cast<Eigen::Index>(*idx)) = coeff;
  }
  return c;
}

Poly MonomialSequence::to_poly(const RatVector& coefficients) const {
  Poly f(nvars());
  for (Eigen::Index j = 0; j < coefficients.size(); ++j) f.add_term(monomials_[static_cast<std::size_t>(j)], coefficients(j));
  return f;
}

}  // namespace fixdiv
