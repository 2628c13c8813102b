#include "fixdiv/arith.hpp"

#include <algorithm>

namespace fixdiv {

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

long vp_nonzero(const Integer& p, const Integer& x) {
  if (x == 0) throw DomainError("vp_nonzero: zero argument");
  Integer rest = x;
  long e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

Valuation vp(const Integer& p, const Integer& x) {
  if (!is_prime(p)) throw DomainError("vp: " + p.get_str() + " is not prime");
  if (x == 0) return Valuation::infinity();
  return vp_nonzero(p, x);
}

Valuation vp(const Integer& p, const Rational& x) {
  if (!is_prime(p)) throw DomainError("vp: " + p.get_str() + " is not prime");
  if (x == 0) return Valuation::infinity();
  return vp_nonzero(p, x.get_num()) - vp_nonzero(p, x.get_den());
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

// ---------------------------------------------------------------------------
// FactoredIdeal

FactoredIdeal FactoredIdeal::zero() {
  FactoredIdeal z;
  z.zero_ = true;
  return z;
}

FactoredIdeal FactoredIdeal::of(const Integer& generator, const FactorConfig& config) {
  if (generator == 0) return zero();
  return from_factors(factorize(generator, config));
}

FactoredIdeal FactoredIdeal::of(const Rational& generator, const FactorConfig& config) {
  if (generator == 0) return zero();
  Factorization f = factorize(generator.get_num(), config);
  for (const auto& [p, e] : factorize(generator.get_den(), config)) f[p] -= e;
  return from_factors(std::move(f), true);
}

FactoredIdeal FactoredIdeal::from_factors(Factorization factors, bool fractional) {
  FactoredIdeal ideal;
  ideal.fractional_ = fractional;
  for (auto& [p, e] : factors) {
    if (e == 0) continue;
    if (e < 0 && !fractional) throw DomainError("negative exponent in an integral ideal");
    if (p < 2) throw DomainError("ideal factor " + p.get_str() + " is not a prime");
    ideal.factors_.emplace(p, e);
  }
  return ideal;
}

FactoredIdeal FactoredIdeal::prime_power(const Integer& p, long e) {
  return from_factors({{p, e}}, e < 0);
}

bool FactoredIdeal::is_integral() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::set<Integer> FactoredIdeal::primes() const {
  std::set<Integer> out;
  for (const auto& kv : factors_) out.insert(kv.first);
  return out;
}

Valuation FactoredIdeal::exponent(const Integer& p) const {
  if (zero_) return Valuation::infinity();
  auto it = factors_.find(p);
  return it == factors_.end() ? 0L : it->second;
}

Rational FactoredIdeal::generator() const {
  if (zero_) return 0;
  Integer num = 1;
  Integer den = 1;
  for (const auto& [p, e] : factors_) {
    if (e > 0) {
      num *= pow(p, static_cast<unsigned long>(e));
    } else {
      den *= pow(p, static_cast<unsigned long>(-e));
    }
  }
  return Rational(num, den);
}

Integer FactoredIdeal::integer_generator() const {
  if (!is_integral()) throw DomainError("ideal " + to_string() + " is not integral");
  Rational g = generator();
  return g.get_num();
}

FactoredIdeal FactoredIdeal::restricted_to(const std::set<Integer>& primes) const {
  if (zero_) return *this;
  FactoredIdeal out;
  out.fractional_ = fractional_;
  for (const auto& [p, e] : factors_)
    if (primes.contains(p)) out.factors_.emplace(p, e);
  return out;
}

bool FactoredIdeal::divides(const FactoredIdeal& other) const {
  if (other.zero_) return true;
  if (zero_) return false;
  for (const auto& [p, e] : factors_)
    if (other.exponent(p).value() < e) return false;
  for (const auto& [p, e] : other.factors_)
    if (e < 0 && exponent(p).value() > e) return false;
  return true;
}

FactoredIdeal& FactoredIdeal::operator*=(const FactoredIdeal& other) {
  if (zero_ || other.zero_) return *this = zero();
  fractional_ = fractional_ || other.fractional_;
  for (const auto& [p, e] : other.factors_) {
    long& slot = factors_[p];
    slot += e;
    if (slot == 0) factors_.erase(p);
  }
  return *this;
}

std::string FactoredIdeal::to_string() const {
  if (zero_) return "0";
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty()) out += "*";
    out += p.get_str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

template <typename Pick>
FactoredIdeal merge(const FactoredIdeal& a, const FactoredIdeal& b, Pick pick) {
  Factorization out;
  for (const auto& [p, e] : a.factors()) out[p] = pick(e, b.exponent(p).value());
  for (const auto& [p, e] : b.factors())
    if (!out.contains(p)) out[p] = pick(a.exponent(p).value(), e);
  return FactoredIdeal::from_factors(std::move(out), a.is_fractional() || b.is_fractional());
}

}  // namespace

FactoredIdeal gcd(const FactoredIdeal& a, const FactoredIdeal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, [](long x, long y) { return std::min(x, y); });
}

FactoredIdeal lcm(const FactoredIdeal& a, const FactoredIdeal& b) {
  if (a.is_zero() || b.is_zero()) return FactoredIdeal::zero();
  return merge(a, b, [](long x, long y) { return std::max(x, y); });
}

std::pair<FactoredIdeal, FactoredIdeal> ideal_gcd_lcm(const FactoredIdeal& a, const FactoredIdeal& b) {
  return {gcd(a, b), lcm(a, b)};
}

// ---------------------------------------------------------------------------
// CRT

std::vector<Integer> crt(std::span<const Congruence> residues) {
  if (residues.empty()) throw DomainError("crt: no congruences");
  const std::size_t dim = residues.front().value.size();
  std::set<Integer> seen;
  for (const auto& c : residues) {
    if (c.value.size() != dim) throw DomainError("crt: residue tuples differ in length");
    if (c.exponent == 0) throw DomainError("crt: modulus exponent must be positive");
    if (!seen.insert(c.prime).second) throw DomainError("crt: duplicate prime " + c.prime.get_str());
  }

  std::vector<Integer> x(dim, 0);
  Integer modulus = 1;
  for (const auto& c : residues) {
    const Integer q = pow(c.prime, c.exponent);
    // x + modulus*t = value (mod q)  =>  t = (value - x) * modulus^{-1} (mod q)
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), q.get_mpz_t());
    for (std::size_t i = 0; i < dim; ++i) {
      Integer t = mod_floor(Integer(c.value[i] - x[i]) * inv, q);
      x[i] += modulus * t;
    }
    modulus *= q;
  }
  return x;
}

}  // namespace fixdiv
