#include "fixdiv/arith.hpp"

namespace fixdiv {

namespace {

// Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor of
// an odd composite n.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2;
    Integer x;
    Integer g = 1;
    Integer q = 1;
    Integer ys;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    const unsigned long m = 128;
    unsigned long r = 1;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);

    if (g == n) {
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const Integer& n, Factorization& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  split(d, out);
  split(Integer(n / d), out);
}

}  // namespace

Factorization factorize(const Integer& n, const FactorConfig& config) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  Factorization out;
  Integer rest = abs(n);

  auto strip = [&](unsigned long d) {
    long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out[Integer(d)] += e;
  };

  strip(2);
  for (unsigned long d = 3; d <= config.trial_bound; d += 2) {
    if (Integer(d) * d > rest) break;
    strip(d);
  }
  if (rest == 1) return out;
  if (Integer(config.trial_bound) * config.trial_bound >= rest || is_prime(rest)) {
    ++out[rest];
    return out;
  }
  split(rest, out);
  return out;
}

}  // namespace fixdiv
