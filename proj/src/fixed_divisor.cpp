#include "fixdiv/fixed_divisor.hpp"

#include "fixdiv/factorials.hpp"

#include <algorithm>

namespace fixdiv {

std::string to_string(Method m) {
  switch (m) {
    case Method::grid: return "grid";
    case Method::grid_improved: return "grid-improved";
    case Method::points: return "points";
    case Method::two_point: return "two-point";
    case Method::coeff_product: return "coeff";
    case Method::coeff_general: return "general";
    case Method::sampler: return "sampler";
    case Method::automatic: return "auto";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::grid, Method::grid_improved, Method::points, Method::two_point, Method::coeff_product,
                   Method::coeff_general, Method::sampler, Method::automatic})
    if (name == to_string(m)) return m;
  return std::nullopt;
}

namespace {

void check_input(const Poly& f, const SetSpec& s) {
  if (f.is_zero()) throw DomainError("the fixed divisor of the zero polynomial is not defined here");
  if (!f.has_integer_coefficients()) throw DomainError("fixed divisor: coefficients must be integers");
  if (f.nvars() != s.dimension())
    throw DomainError("polynomial has " + std::to_string(f.nvars()) + " variables, set has dimension " +
                      std::to_string(s.dimension()));
}

Integer value_at(const Poly& f, const Point& a) { return evaluate(f, a).get_num(); }

FactoredIdeal ideal_of(const Integer& g) { return g == 0 ? FactoredIdeal::zero() : FactoredIdeal::of(g); }

// Hensel: on a progression product the values at c + M r, r <= m, generate
// d(S,f).  A union coordinate is split into its progressions.
FixedDivisorResult grid_impl(const Poly& f, const SetSpec& s, bool improved) {
  check_input(f, s);
  const PolyType t = f.type();
  const std::size_t n = s.dimension();
  const std::vector<Exponent> offsets = improved ? MonomialSequence(t.m, t.k).monomials() : MonomialSequence(t.m, {}).monomials();

  FixedDivisorResult out;
  out.method = improved ? Method::grid_improved : Method::grid;
  Integer g = 0;
  std::vector<std::size_t> cls(n, 0);
  while (true) {
    for (const auto& r : offsets) {
      Point a(n);
      for (std::size_t j = 0; j < n; ++j) a[j] = s[j].classes()[cls[j]] + s[j].modulus() * static_cast<unsigned long>(r[j]);
      g = gcd(g, value_at(f, a));
      out.witnesses.push_back(std::move(a));
    }
    std::size_t j = 0;
    while (j < n && cls[j] + 1 == s[j].classes().size()) cls[j++] = 0;
    if (j == n) break;
    ++cls[j];
  }
  out.ideal = ideal_of(g);
  return out;
}

struct Setup {
  PolyType type;
  MonomialSequence ms;
  Point start;
  Integer fa;
};

Setup setup(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options) {
  const PolyType t = normalize_type(f.degree(), f.total_degree());
  MonomialSequence ms(t.m, t.k);
  Point a = options.start ? *options.start : choose_start(f, s, options.start_scan_factor * ms.size());
  if (!member(s, a)) throw DomainError("start point " + to_string(a) + " is not in " + s.to_string());
  Integer fa = value_at(f, a);
  if (fa == 0) throw DomainError("f vanishes at the start point " + to_string(a));
  return {t, std::move(ms), std::move(a), std::move(fa)};
}

// Lift congruences on flattened point lists back into S, coordinate by coordinate.
std::vector<Point> lift_points(const SetSpec& s, const std::vector<Congruence>& congruences, std::size_t count) {
  const std::size_t n = s.dimension();
  const std::vector<Integer> flat = crt(congruences);
  Integer q = 1;
  for (const auto& c : congruences) q *= pow(c.prime, c.exponent);
  std::vector<Point> out(count, Point(n));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto y = lift_into(s[j], flat[i * n + j], q);
      if (!y)
        throw DomainError("no point of " + s.to_string() + " meets the congruences modulo " + q.get_str() +
                          " (union classes do not split over the primes of the modulus)");
      out[i][j] = *y;
    }
  return out;
}

std::vector<Integer> flatten(const std::vector<Point>& pts, std::size_t from) {
  std::vector<Integer> out;
  for (std::size_t i = from; i < pts.size(); ++i) out.insert(out.end(), pts[i].begin(), pts[i].end());
  return out;
}

NuMOrdering ordering_from(const SetSpec& s, const Integer& p, const Setup& st, const SearchLimits& limits) {
  NuOrderingOptions o;
  o.start = st.start;
  o.limits = limits;
  return nu_m_ordering(s, p, st.ms, st.ms.size(), o);
}

}  // namespace

Point choose_start(const Poly& f, const SetSpec& s, std::size_t scan_limit) {
  ShellEnumerator shells(s.dimension());
  for (std::size_t i = 0; i < std::max<std::size_t>(scan_limit, 1); ++i, shells.advance()) {
    Point a = s.point_at(shells.current());
    if (evaluate(f, a) != 0) return a;
  }
  throw DomainError("f vanishes at the first " + std::to_string(scan_limit) + " points of " + s.to_string());
}

FixedDivisorResult fixdiv_grid(const Poly& f, const SetSpec& s) { return grid_impl(f, s, false); }
FixedDivisorResult fixdiv_grid_improved(const Poly& f, const SetSpec& s) { return grid_impl(f, s, true); }

FixedDivisorResult fixdiv_points(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options) {
  check_input(f, s);
  const Setup st = setup(f, s, options);
  FixedDivisorResult out;
  out.method = Method::points;
  out.witnesses.push_back(st.start);
  if (abs(st.fa) == 1) {
    out.ideal = FactoredIdeal::unit();
    return out;
  }
  const std::size_t l = st.ms.size();
  std::vector<Congruence> congruences;
  for (const auto& [p, e] : factorize(st.fa)) {
    const NuMOrdering ord = ordering_from(s, p, st, options.limits);
    congruences.push_back({flatten(ord.points, 1), p, static_cast<unsigned>(e + 1)});
  }
  Integer g = st.fa;
  if (l > 1)
    for (auto& a : lift_points(s, congruences, l - 1)) {
      g = gcd(g, value_at(f, a));
      out.witnesses.push_back(std::move(a));
    }
  out.ideal = ideal_of(g);
  return out;
}

FixedDivisorResult fixdiv_two_point(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options) {
  check_input(f, s);
  const Setup st = setup(f, s, options);
  FixedDivisorResult out;
  out.method = Method::two_point;
  out.witnesses.push_back(st.start);
  if (abs(st.fa) == 1) {
    out.witnesses.push_back(st.start);
    out.ideal = FactoredIdeal::unit();
    return out;
  }
  std::vector<Congruence> congruences;
  for (const auto& [p, e] : factorize(st.fa)) {
    const NuMOrdering ord = ordering_from(s, p, st, options.limits);
    std::size_t best = 0;
    Valuation best_val = Valuation::infinity();
    for (std::size_t i = 0; i < ord.points.size(); ++i) {
      const Valuation v = vp(p, value_at(f, ord.points[i]));
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    congruences.push_back({ord.points[best], p, static_cast<unsigned>(e + 1)});
  }
  Point b = lift_points(s, congruences, 1).front();
  out.ideal = ideal_of(gcd(st.fa, value_at(f, b)));
  out.witnesses.push_back(std::move(b));
  return out;
}

FixedDivisorResult fixdiv_coeff_product(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options) {
  check_input(f, s);
  const Integer c = content(f);
  const Poly g = f * Rational(Integer(1), c);
  const Setup st = setup(g, s, options);
  const std::size_t n = s.dimension();

  const FactoredIdeal gamma = gamma_product(s, st.type.m, st.type.k, options.limits);
  const FactoredIdeal ideal = lcm(FactoredIdeal::of(st.fa), gamma);
  std::vector<std::vector<Integer>> nodes;
  for (std::size_t j = 0; j < n; ++j) nodes.push_back(i_ordering(s[j], ideal, st.type.m[j] + 1, {}, options.limits));
  const ProductBasis basis(nodes);
  const std::vector<Exponent> exps = admissible_exponents(st.type.m, st.type.k);
  const std::vector<Rational> b = basis.expand(g, exps);
  const CoordinateFactorials facts(s, st.type.m, gamma.primes(), options.limits);

  FixedDivisorResult out;
  out.method = Method::coeff_product;
  Integer d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (b[i].get_den() != 1) throw InvariantViolation("product-basis coefficient " + b[i].get_str() + " is not an integer");
    d = gcd(d, b[i].get_num() * facts.factorial(exps[i]).integer_generator());
    out.witnesses.push_back(basis.node(exps[i]));
  }
  out.ideal = FactoredIdeal::of(c) * ideal_of(d);
  return out;
}

FixedDivisorResult fixdiv_coeff_general(const Poly& f, const SetSpec& s, const FixedDivisorOptions& options) {
  check_input(f, s);
  const Integer c = content(f);
  const Poly g = f * Rational(Integer(1), c);
  const Setup st = setup(g, s, options);

  FixedDivisorResult out;
  out.method = Method::coeff_general;
  std::set<Integer> primes = gamma_product(s, st.type.m, st.type.k, options.limits).primes();
  for (const auto& [p, e] : factorize(st.fa)) primes.insert(p);
  if (primes.empty()) {
    out.witnesses.push_back(st.start);
    out.ideal = FactoredIdeal::of(c);
    return out;
  }

  const std::size_t l = st.ms.size();
  std::vector<Point> points{st.start};
  if (l > 1) {
    // Congruent modulo a power above every Delta_m valuation of the orderings.
    std::vector<Congruence> congruences;
    for (const auto& p : primes) {
      const NuMOrdering ord = ordering_from(s, p, st, options.limits);
      const long top = *std::max_element(ord.delta_vals.begin(), ord.delta_vals.end());
      congruences.push_back({flatten(ord.points, 1), p, static_cast<unsigned>(top + 1)});
    }
    for (auto& a : lift_points(s, congruences, l - 1)) points.push_back(std::move(a));
  }

  BorderedBasis basis(st.ms, l);
  for (const auto& a : points) basis.push(a);
  // g = sum_j c_j h_j / h_j(a_j) with c_j = b_j Delta_m(a_0..a_j).
  std::vector<Rational> coeff(l);
  for (std::size_t j = 0; j < l; ++j) {
    Rational acc = evaluate(g, points[j]);
    for (std::size_t i = 0; i < j; ++i)
      if (coeff[i] != 0) acc -= coeff[i] * basis.value(j, i) / basis.pivot(i);
    coeff[j] = acc;
  }

  Factorization factors;
  for (const auto& p : primes) {
    Valuation low = Valuation::infinity();
    for (const auto& x : coeff) low = std::min(low, vp(p, x));
    if (low.is_infinite()) throw InvariantViolation("all coefficients vanish");
    if (low.value() < 0) throw InvariantViolation("negative valuation in the restricted coefficient gcd");
    if (low.value() > 0) factors[p] = low.value();
  }
  out.witnesses = std::move(points);
  out.ideal = FactoredIdeal::of(c) * FactoredIdeal::from_factors(std::move(factors));
  return out;
}

FixedDivisorResult fixdiv_sampler(const Poly& f, const SetSpec& s, std::size_t batch, std::size_t stable_batches,
                                  std::size_t max_batches) {
  check_input(f, s);
  FixedDivisorResult out;
  out.method = Method::sampler;
  out.certified = false;
  ShellEnumerator shells(s.dimension());
  Integer g = 0;
  std::size_t unchanged = 0;
  for (std::size_t k = 0; k < max_batches && unchanged < stable_batches; ++k) {
    const Integer before = g;
    for (std::size_t i = 0; i < batch; ++i, shells.advance()) {
      Point a = s.point_at(shells.current());
      g = gcd(g, value_at(f, a));
      out.witnesses.push_back(std::move(a));
    }
    unchanged = (g != 0 && g == before) ? unchanged + 1 : 0;
  }
  out.ideal = ideal_of(g);
  return out;
}

FixedDivisorResult fixed_divisor(const Poly& f, const SetSpec& s, Method method, const FixedDivisorOptions& options) {
  switch (method) {
    case Method::grid: return fixdiv_grid(f, s);
    case Method::grid_improved: return fixdiv_grid_improved(f, s);
    case Method::points: return fixdiv_points(f, s, options);
    case Method::two_point: return fixdiv_two_point(f, s, options);
    case Method::coeff_product: return fixdiv_coeff_product(f, s, options);
    case Method::coeff_general: return fixdiv_coeff_general(f, s, options);
    case Method::sampler: return fixdiv_sampler(f, s);
    case Method::automatic: break;
  }
  check_input(f, s);
  const Exponent m = f.degree();
  std::size_t box = s.dimension();
  for (std::size_t j = 0; j < m.size(); ++j) box *= m[j] + 1;
  try {
    return box <= 200 ? fixdiv_coeff_product(f, s, options) : fixdiv_points(f, s, options);
  } catch (const DomainError&) {
    // Union coordinates whose classes do not split over the primes of the
    // modulus admit no congruence lift; the grid needs none.
    return fixdiv_grid(f, s);
  }
}

Poly construct_sharp(const SetSpec& s, const Exponent& m, unsigned k, const FactoredIdeal& ideal,
                     const SearchLimits& limits) {
  if (m.size() != s.dimension()) throw DomainError("construct: m and the set differ in dimension");
  const PolyType t = normalize_type(m, k);
  const FactoredIdeal gamma = gamma_product(s, t.m, t.k, limits);
  if (ideal.is_zero() || !ideal.is_integral() || !ideal.divides(gamma))
    throw DomainError("I = " + ideal.to_string() + " does not divide Gamma = " + gamma.to_string());

  const std::size_t n = s.dimension();
  std::vector<std::vector<Integer>> nodes;
  for (std::size_t j = 0; j < n; ++j) nodes.push_back(i_ordering(s[j], gamma, t.m[j] + 1, {}, limits));
  const ProductBasis basis(nodes);
  const CoordinateFactorials facts(s, t.m, gamma.primes(), limits);
  const Integer gi = ideal.integer_generator();

  Poly f(n);
  for (const auto& i : admissible_exponents(t.m, t.k)) {
    const Integer gg = facts.factorial(i).integer_generator();
    f += basis.polynomial(i) * Rational(Integer(gi / gcd(gi, gg)));
  }
  if (content(f) != 1) throw InvariantViolation("constructed polynomial is not primitive");
  if (!(normalize_type(f.degree(), f.total_degree()) == t)) throw InvariantViolation("constructed polynomial has the wrong type");
  if (!(fixdiv_grid(f, s).ideal == ideal)) throw InvariantViolation("constructed polynomial misses the requested fixed divisor");
  return f;
}

GlobalMembership int_member_global(const Poly& f, const SetSpec& s, const SearchLimits& limits) {
  if (f.is_zero()) throw DomainError("membership of the zero polynomial");
  GlobalMembership out;
  const Integer den = f.denominator();
  if (den == 1) return out;
  for (const auto& [p, e] : factorize(den)) {
    LocalMembership local = int_member_local(f, s, p, limits);
    if (!local.member) {
      out.member = false;
      out.prime = p;
      out.witness = std::move(local.witness);
      out.value = std::move(local.value);
      return out;
    }
  }
  return out;
}

}  // namespace fixdiv
