#pragma once

// The fixed divisor d(S,f): the ideal generated by f(S).

#include "fixdiv/arith.hpp"
#include "fixdiv/orderings.hpp"
#include "fixdiv/poly.hpp"
#include "fixdiv/setspec.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fixdiv {

enum class Method { grid, grid_improved, points, two_point, coeff_product, coeff_general, sampler, automatic };

/// CLI spelling: grid, grid-improved, points, two-point, coeff, general, sampler, auto.
std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

struct FixedDivisorResult {
  FactoredIdeal ideal;
  Method method = Method::grid;
  std::vector<Point> witnesses;
  bool certified = true;
};

struct FixedDivisorOptions {
  /// Start point a with f(a) != 0; chosen automatically when absent.
  std::optional<Point> start;
  /// The automatic start scans at most this many times l_{m,k} points.
  std::size_t start_scan_factor = 10;
  SearchLimits limits;
};

/// gcd of f over the grid r <= m of each progression in S.
FixedDivisorResult fixdiv_grid(const Poly& f, const SetSpec& s);
/// Same grid cut down to |r| <= k.
FixedDivisorResult fixdiv_grid_improved(const Poly& f, const SetSpec& s);
/// gcd of f at a and at l_{m,k} - 1 points congruent to nu_m-orderings
/// modulo p^{v_p(f(a)) + 1} for each p | f(a).
FixedDivisorResult fixdiv_points(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options = {});
/// gcd(f(a), f(b)); the witnesses are {a, b}.
FixedDivisorResult fixdiv_two_point(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options = {});
/// gcd of b(i) i!_S from the expansion of f in the product basis on
/// I'-ordering nodes, I' = lcm(f(a), Gamma_{m,k}(S)).
FixedDivisorResult fixdiv_coeff_product(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options = {});
/// gcd of b_j Delta_m(a_0..a_j) restricted to the primes of Gamma and f(a).
FixedDivisorResult fixdiv_coeff_general(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options = {});
/// Uncertified: gcd over growing batches of points until it is stable.
FixedDivisorResult fixdiv_sampler(const Poly& f, const SetSpec& s, std::size_t batch = 100, std::size_t stable_batches = 3,
                                  std::size_t max_batches = 1000);

FixedDivisorResult fixed_divisor(const Poly& f, const SetSpec& s, Method method = Method::automatic,
                                 const FixedDivisorOptions& options = {});

/// First point of S (shell order) where f does not vanish.
Point choose_start(const Poly& f, const SetSpec& s, std::size_t scan_limit);

/// A primitive f of type (m,k) with d(S,f) = I, for I dividing Gamma_{m,k}(S).
Poly construct_sharp(const SetSpec& s, const Exponent& m, unsigned k, const FactoredIdeal& ideal,
                     const SearchLimits& limits = {});

struct GlobalMembership {
  bool member = true;
  std::optional<Integer> prime;
  std::optional<Point> witness;
  std::optional<Rational> value;
};

/// f(S) in Z, checked locally at each prime of f's denominator.
GlobalMembership int_member_global(const Poly& f, const SetSpec& s, const SearchLimits& limits = {});

}  // namespace fixdiv
