#include "fixdiv/factorials.hpp"

#include <algorithm>

namespace fixdiv {

namespace {

void add_primes_up_to(std::set<Integer>& out, unsigned bound) {
  for (unsigned q = 2; q <= bound; ++q)
    if (is_prime(Integer(q))) out.insert(Integer(q));
}

void add_modulus_primes(std::set<Integer>& out, const CoordSet& c) {
  if (c.modulus() == 1) return;
  for (const auto& [p, e] : factorize(c.modulus())) out.insert(p);
}

}  // namespace

std::set<Integer> factorial_primes(const CoordSet& c, unsigned k) {
  std::set<Integer> out;
  add_primes_up_to(out, k);
  add_modulus_primes(out, c);
  return out;
}

FactoredIdeal bhargava_factorial(const CoordSet& c, unsigned k, const SearchLimits& limits) {
  Factorization f;
  for (const auto& p : factorial_primes(c, k)) {
    const POrdering o = p_ordering(c, p, k + 1, {}, {}, limits);
    if (o.vals[k] > 0) f[p] = o.vals[k];
  }
  return FactoredIdeal::from_factors(std::move(f));
}

CoordinateFactorials::CoordinateFactorials(const SetSpec& s, const Exponent& m, std::set<Integer> primes,
                                           const SearchLimits& limits)
    : primes_(std::move(primes)) {
  if (m.size() != s.dimension()) throw DomainError("exponent and set differ in dimension");
  for (const auto& p : primes_) {
    auto& per = vals_[p];
    for (std::size_t j = 0; j < s.dimension(); ++j) per.push_back(p_ordering(s[j], p, m[j] + 1, {}, {}, limits).vals);
  }
}

long CoordinateFactorials::valuation(const Integer& p, const Exponent& i) const {
  const auto& per = vals_.at(p);
  long v = 0;
  for (std::size_t j = 0; j < i.size(); ++j) v += per[j].at(i[j]);
  return v;
}

FactoredIdeal CoordinateFactorials::factorial(const Exponent& i) const {
  Factorization f;
  for (const auto& p : primes_)
    if (long v = valuation(p, i); v > 0) f[p] = v;
  return FactoredIdeal::from_factors(std::move(f));
}

FactoredIdeal product_factorial(const SetSpec& s, const Exponent& i, const SearchLimits& limits) {
  std::set<Integer> primes;
  unsigned top = 0;
  for (std::size_t j = 0; j < i.size(); ++j) top = std::max(top, i[j]);
  add_primes_up_to(primes, top);
  for (const auto& c : s.coords()) add_modulus_primes(primes, c);
  return CoordinateFactorials(s, i, std::move(primes), limits).factorial(i);
}

std::set<Integer> gamma_prime_support(const SetSpec& s, const Exponent& m, unsigned k) {
  std::set<Integer> out;
  unsigned top = k;
  for (std::size_t j = 0; j < m.size(); ++j) top = std::max(top, m[j]);
  add_primes_up_to(out, top);
  for (const auto& c : s.coords()) add_modulus_primes(out, c);
  return out;
}

std::vector<Exponent> admissible_exponents(const Exponent& m, unsigned k) {
  return MonomialSequence(m, k).monomials();
}

FactoredIdeal gamma_product(const SetSpec& s, const Exponent& m, unsigned k, const SearchLimits& limits) {
  if (m.size() != s.dimension()) throw DomainError("gamma: m has " + std::to_string(m.size()) + " entries, set has dimension " + std::to_string(s.dimension()));
  const PolyType t = normalize_type(m, k);
  const CoordinateFactorials facts(s, t.m, gamma_prime_support(s, t.m, t.k), limits);
  Factorization f;
  for (const auto& p : facts.primes()) {
    long best = 0;
    for (const auto& i : admissible_exponents(t.m, t.k)) best = std::max(best, facts.valuation(p, i));
    if (best > 0) f[p] = best;
  }
  return FactoredIdeal::from_factors(std::move(f));
}

// Delta_m(s; a_0..a_{r-1}) = +-Delta_m(a_0..a_{r-1}) * [p_s] h_r and
// Delta_m(a_0..a_r) = Delta_m(a_0..a_{r-1}) * h_r(a_r), so each ratio is
// h_r(a_r) / [p_s] h_r up to sign.
Valuation gamma_local(const SetSpec& s, const Integer& p, const Exponent& m, unsigned k,
                      const NuOrderingOptions& options) {
  if (m.size() != s.dimension()) throw DomainError("gamma: exponent and set differ in dimension");
  const PolyType t = normalize_type(m, k);
  const MonomialSequence ms(t.m, t.k);
  const NuMOrdering ord = nu_m_ordering(s, p, ms, ms.size(), options);
  BorderedBasis basis(ms, ms.size());
  for (const auto& a : ord.points) basis.push(a);

  long best = 0;
  for (std::size_t r = 0; r < ms.size(); ++r) {
    const long top = vp(p, basis.pivot(r)).value();
    for (std::size_t c = 0; c <= r; ++c) {
      const Rational& coeff = basis.h(r)(static_cast<Eigen::Index>(c));
      if (coeff == 0) continue;
      best = std::max(best, top - vp(p, coeff).value());
    }
  }
  return best;
}

FactoredIdeal gamma_from_local(const SetSpec& s, const Exponent& m, unsigned k, const SearchLimits& limits) {
  const PolyType t = normalize_type(m, k);
  NuOrderingOptions options;
  options.limits = limits;
  Factorization f;
  for (const auto& p : gamma_prime_support(s, t.m, t.k))
    if (long v = gamma_local(s, p, t.m, t.k, options).value(); v > 0) f[p] = v;
  return FactoredIdeal::from_factors(std::move(f));
}

FactoredIdeal evrard_factorial(const SetSpec& s, unsigned k, const SearchLimits& limits) {
  const Exponent box(std::vector<unsigned>(s.dimension(), k));
  const CoordinateFactorials facts(s, box, gamma_prime_support(s, box, k), limits);
  Factorization f;
  for (const auto& p : facts.primes()) {
    long best = 0;
    for (const auto& i : admissible_exponents(box, k))
      if (i.weight() == k) best = std::max(best, facts.valuation(p, i));
    if (best > 0) f[p] = best;
  }
  return FactoredIdeal::from_factors(std::move(f));
}

FactoredIdeal m_factorial(const SetSpec& s, const Exponent& m, const SearchLimits& limits) {
  if (m.size() != s.dimension()) throw DomainError("m! : exponent and set differ in dimension");
  return product_factorial(s, m, limits);
}

}  // namespace fixdiv
