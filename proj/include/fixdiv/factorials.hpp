#pragma once

// Bhargava factorials of coordinate sets, the product factorial i!_S,
// Evrard's k!_S, m!_S and Gamma_{m,k}(S).

#include "fixdiv/arith.hpp"
#include "fixdiv/orderings.hpp"
#include "fixdiv/poly.hpp"
#include "fixdiv/setspec.hpp"

#include <set>

namespace fixdiv {

/// Primes that can divide k!_c: those up to k and those dividing the modulus.
std::set<Integer> factorial_primes(const CoordSet& c, unsigned k);

/// k!_c, one p-ordering per prime of the support.
FactoredIdeal bhargava_factorial(const CoordSet& c, unsigned k, const SearchLimits& limits = {});

/// i!_S = prod_j i_j!_{S_j}.
FactoredIdeal product_factorial(const SetSpec& s, const Exponent& i, const SearchLimits& limits = {});

/// Primes up to max(k, max_j m_j) together with the primes of every modulus.
std::set<Integer> gamma_prime_support(const SetSpec& s, const Exponent& m, unsigned k);

/// Gamma_{m,k}(S) = lcm of i!_S over 0 <= i <= m, |i| <= k.  (m, k) is
/// normalized first.
FactoredIdeal gamma_product(const SetSpec& s, const Exponent& m, unsigned k, const SearchLimits& limits = {});

/// v_p(Gamma_{m,k}(S)) from a nu_m-ordering at p: the largest
/// v_p(Delta_m(a_0..a_r) / Delta_m(s; a_0..a_{r-1})) over nonzero minors.
Valuation gamma_local(const SetSpec& s, const Integer& p, const Exponent& m, unsigned k,
                      const NuOrderingOptions& options = {});

/// Gamma assembled prime by prime from gamma_local over the support.
FactoredIdeal gamma_from_local(const SetSpec& s, const Exponent& m, unsigned k, const SearchLimits& limits = {});

/// k!_S = lcm of i!_S over |i| = k.
FactoredIdeal evrard_factorial(const SetSpec& s, unsigned k, const SearchLimits& limits = {});

/// m!_S = prod_j m_j!_{S_j}.
FactoredIdeal m_factorial(const SetSpec& s, const Exponent& m, const SearchLimits& limits = {});

/// Every i with i <= m and |i| <= k, in GradedOrder.
std::vector<Exponent> admissible_exponents(const Exponent& m, unsigned k);

/// Per prime and coordinate, v_p(t!_{S_j}) for t = 0..m_j.  Shared by the
/// product formulas.
class CoordinateFactorials {
 public:
  CoordinateFactorials(const SetSpec& s, const Exponent& m, std::set<Integer> primes, const SearchLimits& limits = {});

  const std::set<Integer>& primes() const { return primes_; }
  long valuation(const Integer& p, const Exponent& i) const;
  FactoredIdeal factorial(const Exponent& i) const;

 private:
  std::set<Integer> primes_;
  std::map<Integer, std::vector<std::vector<long>>> vals_;
};

}  // namespace fixdiv
