#pragma once

// Exact integers and rationals, p-adic valuations, factored ideals of Z and
// Chinese remaindering.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fixdiv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an invariant the theory guarantees is observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A p-adic valuation: an integer, or +infinity for the value 0.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(long value) : value_(value) {}  // NOLINT(implicit)

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw DomainError("valuation is infinite");
    return value_;
  }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend constexpr Valuation operator-(const Valuation& a, long b) {
    if (a.infinite_) return a;
    return Valuation(a.value_ - b);
  }

  std::string to_string() const;

 private:
  long value_ = 0;
  bool infinite_ = false;
};

/// Probabilistic primality (25 Miller-Rabin rounds via GMP).
bool is_prime(const Integer& n);

/// Largest e with p^e | x; infinity for x = 0.  Throws DomainError if p is not prime.
Valuation vp(const Integer& p, const Integer& x);
Valuation vp(const Integer& p, const Rational& x);

/// Finite valuation of a nonzero integer, without the primality check.
long vp_nonzero(const Integer& p, const Integer& x);

using Factorization = std::map<Integer, long>;

struct FactorConfig {
  unsigned long trial_bound = 1'000'000;
};

/// Prime factorization of |n| (n != 0): trial division, then Pollard rho.
Factorization factorize(const Integer& n, const FactorConfig& config = {});

/// An ideal of Z (or a fractional ideal of Q) kept in factored form.
///
/// The unit ideal <1> has no factors.  The zero ideal is a distinguished value.
/// Negative exponents are only legal when the fractional flag is set.
class FactoredIdeal {
 public:
  FactoredIdeal() = default;  // <1>

  static FactoredIdeal zero();
  static FactoredIdeal unit() { return {}; }
  static FactoredIdeal of(const Integer& generator, const FactorConfig& config = {});
  static FactoredIdeal of(const Rational& generator, const FactorConfig& config = {});
  static FactoredIdeal from_factors(Factorization factors, bool fractional = false);
  static FactoredIdeal prime_power(const Integer& p, long e);

  bool is_zero() const { return zero_; }
  bool is_unit() const { return !zero_ && factors_.empty(); }
  bool is_fractional() const { return fractional_; }
  bool is_integral() const;

  const Factorization& factors() const { return factors_; }
  std::set<Integer> primes() const;

  /// Exponent of p; infinity for the zero ideal.
  Valuation exponent(const Integer& p) const;

  /// Positive generator prod p^e (a rational when some exponent is negative).
  Rational generator() const;
  /// Positive integer generator; throws if the ideal is not integral.
  Integer integer_generator() const;

  /// I_T: keep only the primes in T.
  FactoredIdeal restricted_to(const std::set<Integer>& primes) const;

  /// this | other, i.e. other is contained in this.
  bool divides(const FactoredIdeal& other) const;

  FactoredIdeal& operator*=(const FactoredIdeal& other);
  friend FactoredIdeal operator*(FactoredIdeal a, const FactoredIdeal& b) { return a *= b; }
  friend bool operator==(const FactoredIdeal& a, const FactoredIdeal& b) {
    return a.zero_ == b.zero_ && a.factors_ == b.factors_;
  }

  /// "1", "0", or "2^3*3".
  std::string to_string() const;

 private:
  Factorization factors_;
  bool fractional_ = false;
  bool zero_ = false;
};

/// Ideal sum: componentwise min of exponents.  gcd(x, 0) = x.
FactoredIdeal gcd(const FactoredIdeal& a, const FactoredIdeal& b);
/// Ideal intersection: componentwise max of exponents.  lcm(x, 0) = 0.
FactoredIdeal lcm(const FactoredIdeal& a, const FactoredIdeal& b);
std::pair<FactoredIdeal, FactoredIdeal> ideal_gcd_lcm(const FactoredIdeal& a, const FactoredIdeal& b);

/// Componentwise congruence x = value (mod prime^exponent).
struct Congruence {
  std::vector<Integer> value;
  Integer prime;
  unsigned exponent = 1;
};

/// Least nonnegative x (componentwise) satisfying every congruence.
/// Primes must be pairwise distinct; an empty input is rejected.
std::vector<Integer> crt(std::span<const Congruence> residues);

/// Nonnegative residue of x modulo m > 0.
Integer mod_floor(const Integer& x, const Integer& m);

Integer pow(const Integer& base, unsigned long exponent);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace fixdiv
