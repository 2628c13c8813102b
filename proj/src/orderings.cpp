#include "fixdiv/orderings.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace fixdiv {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* env = std::getenv("FIXDIV_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 4096) throw DomainError(std::string("FIXDIV_CAP must be a positive integer, got '") + env + "'");
    limits.max_refinement = static_cast<unsigned>(v);
  }
  return limits;
}

namespace {

void require_prime(const Integer& p) {
  if (p < 2 || !is_prime(p)) throw DomainError(p.get_str() + " is not prime");
}


// Exact minimization of x -> sum_i v_p(x - a_i) over x in c.  Since
// v_p(x - a) counts the levels e >= 1 with x = a (mod p^e), descend the tree
// of residue balls: a ball holding no chosen element ends the sum.  Each leaf
// records its accumulated cost and the smallest nonnegative member of c in it.
struct BallSearch {
  struct Leaf {
    long cost;
    Integer smallest;
  };

  const CoordSet& c;
  const Integer& p;
  unsigned max_depth;
  std::vector<Leaf> leaves;

  bool run(const std::vector<Integer>& chosen) { return descend(Integer(0), 0, Integer(1), chosen, 0); }

  // Ball {x = r (mod pe)}, pe = p^e, containing the given chosen elements.
  bool descend(const Integer& r, unsigned e, const Integer& pe, const std::vector<Integer>& inside, long acc) {
    if (e >= max_depth) return false;
    const Integer next = pe * p;
    std::map<Integer, std::vector<Integer>> by_child;
    for (const auto& a : inside) by_child[mod_floor(a, next)].push_back(a);

    const std::size_t before = leaves.size();
    const Integer& m = c.modulus();
    if (mod_floor(m, next) != 0) {
      // v_p(M) <= e: every child meets c.  Per class of c, the members in the
      // ball run through all children with period lcm(M, pe).
      if (by_child.size() < p) {
        std::optional<Integer> smallest;
        const Integer period = m / gcd(m, pe) * pe;
        for (const auto& cl : c.classes()) {
          const auto y0 = lift_into(CoordSet::progression(m, cl), r, pe);
          if (!y0) continue;
          for (Integer y = *y0;; y += period)
            if (!by_child.count(mod_floor(y, next))) {
              if (!smallest || y < *smallest) smallest = y;
              break;
            }
        }
        if (smallest) leaves.push_back({acc, *smallest});
      }
    } else {
      // p^{e+1} | M: only residues of the classes themselves occur.
      std::set<Integer> children;
      for (const auto& cl : c.classes())
        if (mod_floor(cl - r, pe) == 0) children.insert(mod_floor(cl, next));
      for (const auto& child : children)
        if (!by_child.count(child)) leaves.push_back({acc, *lift_into(c, child, next)});
    }
    // A leaf here costs acc; anything deeper costs more.
    if (leaves.size() > before) return true;
    for (const auto& [child, members] : by_child)
      if (!descend(child, e + 1, next, members, acc + static_cast<long>(members.size()))) return false;
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// p-orderings

POrdering p_ordering(const CoordSet& c, const Integer& p, std::size_t length, std::optional<unsigned> cap,
                     std::optional<Integer> start, const SearchLimits& limits) {
  require_prime(p);
  if (length == 0) throw DomainError("p_ordering: length must be at least 1");
  if (start && !c.contains(*start)) throw DomainError("p_ordering: start " + start->get_str() + " is not in " + c.to_string());

  POrdering out{p, c, {}, {}, cap};
  out.elements.push_back(start ? *start : c.nonnegative_member(0));
  out.vals.push_back(0);

  auto best_found = [&] {
    std::vector<Point> pts;
    for (const auto& a : out.elements) pts.push_back({a});
    return pts;
  };

  for (std::size_t r = 1; r < length; ++r) {
    BallSearch search{c, p, limits.max_refinement, {}};
    if (!search.run(out.elements))
      throw CapExceeded("p-ordering of " + c.to_string() + " at " + p.get_str() + " needs residues mod p^" +
                            std::to_string(limits.max_refinement + 1) + ", above the cap " +
                            std::to_string(limits.max_refinement),
                        best_found());
    long best = search.leaves.front().cost;
    for (const auto& leaf : search.leaves) best = std::min(best, leaf.cost);
    Integer chosen;
    if (cap && best >= static_cast<long>(*cap)) {
      // Every unchosen member ties once truncated.
      best = *cap;
      for (std::size_t i = 0;; ++i) {
        chosen = c.nonnegative_member(i);
        if (std::find(out.elements.begin(), out.elements.end(), chosen) == out.elements.end()) break;
      }
    } else {
      bool first = true;
      for (const auto& leaf : search.leaves)
        if (leaf.cost == best && (first || leaf.smallest < chosen)) {
          chosen = leaf.smallest;
          first = false;
        }
    }
    out.elements.push_back(chosen);
    out.vals.push_back(best);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

IntMatrix evaluation_matrix(const MonomialSequence& ms, const std::vector<Point>& points, std::size_t cols) {
  IntMatrix m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = ms.evaluate(points[i], cols).transpose();
  return m;
}

}  // namespace

Integer delta(const MonomialSequence& ms, const std::vector<Point>& points) {
  if (points.empty()) throw DomainError("delta: needs at least one point");
  if (points.size() > ms.size())
    throw DomainError("delta: " + std::to_string(points.size()) + " points exceed the " + std::to_string(ms.size()) +
                      " monomials");
  return determinant(evaluation_matrix(ms, points, points.size()));
}

Integer delta_minor(const MonomialSequence& ms, std::size_t s, const std::vector<Point>& points) {
  const std::size_t r = points.size();
  if (r + 1 > ms.size()) throw DomainError("delta_minor: r = " + std::to_string(r) + " exceeds the sequence");
  if (s > r) throw DomainError("delta_minor: column " + std::to_string(s) + " out of range 0.." + std::to_string(r));
  const IntMatrix full = evaluation_matrix(ms, points, r + 1);
  IntMatrix minor(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (Eigen::Index j = 0, col = 0; j <= static_cast<Eigen::Index>(r); ++j) {
    if (j == static_cast<Eigen::Index>(s)) continue;
    minor.col(col++) = full.col(j);
  }
  return determinant(minor);
}

// ---------------------------------------------------------------------------
// BorderedBasis

BorderedBasis::BorderedBasis(const MonomialSequence& ms, std::size_t length) : ms_(&ms), length_(length) {
  if (length == 0 || length > ms.size())
    throw DomainError("bordered basis length " + std::to_string(length) + " outside 1.." + std::to_string(ms.size()));
  prepare_next();
}

Integer BorderedBasis::next_numerator_at(const IntVector& monomial_values) const {
  Integer sum = 0;
  for (Eigen::Index j = 0; j < next_num_.size(); ++j)
    if (next_num_(j) != 0) sum += next_num_(j) * monomial_values(j);
  return sum;
}

void BorderedBasis::prepare_next() {
  const std::size_t r = size();
  std::vector<Rational> mu(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational acc = rows_[i](static_cast<Eigen::Index>(r));
    for (std::size_t j = 0; j < i; ++j)
      if (mu[j] != 0) acc -= mu[j] * values_[i][j];
    mu[i] = acc / pivots_[i];
  }
  RatVector coeff = RatVector::Constant(static_cast<Eigen::Index>(r + 1), Rational(0));
  coeff(static_cast<Eigen::Index>(r)) = 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (mu[j] == 0) continue;
    for (std::size_t t = 0; t <= j; ++t) coeff(static_cast<Eigen::Index>(t)) -= mu[j] * h_[j](static_cast<Eigen::Index>(t));
  }
  next_den_ = 1;
  for (Eigen::Index t = 0; t < coeff.size(); ++t) next_den_ = lcm(next_den_, coeff(t).get_den());
  next_num_.resize(coeff.size());
  for (Eigen::Index t = 0; t < coeff.size(); ++t) next_num_(t) = coeff(t).get_num() * (next_den_ / coeff(t).get_den());
}

void BorderedBasis::push(const Point& a) {
  const std::size_t r = size();
  if (r == length_) throw DomainError("bordered basis is full");
  IntVector row = ms_->evaluate(a, length_);

  std::vector<Rational> vals(r + 1);
  for (std::size_t j = 0; j < r; ++j) {
    Integer sum = 0;
    for (std::size_t t = 0; t <= j; ++t) sum += h_num_[j](static_cast<Eigen::Index>(t)) * row(static_cast<Eigen::Index>(t));
    vals[j] = Rational(sum, h_den_[j]);
    vals[j].canonicalize();
  }
  vals[r] = Rational(next_numerator_at(row), next_den_);
  vals[r].canonicalize();
  if (vals[r] == 0) throw InvariantViolation("point " + to_string(a) + " makes Delta_m vanish");

  RatVector h = RatVector::Constant(static_cast<Eigen::Index>(length_), Rational(0));
  for (Eigen::Index t = 0; t < next_num_.size(); ++t) {
    h(t) = Rational(next_num_(t), next_den_);
    h(t).canonicalize();
  }
  h_.push_back(std::move(h));
  h_num_.push_back(next_num_);
  h_den_.push_back(next_den_);
  pivots_.push_back(vals[r]);
  values_.push_back(std::move(vals));
  points_.push_back(a);
  rows_.push_back(std::move(row));
  if (size() < length_) prepare_next();
}

// ---------------------------------------------------------------------------
// nu_m-orderings

NuMOrdering nu_m_ordering(const SetSpec& s, const Integer& p, const MonomialSequence& ms, std::size_t length,
                          const NuOrderingOptions& options) {
  require_prime(p);
  const std::size_t n = s.dimension();
  if (ms.nvars() != n) throw DomainError("nu_m_ordering: monomials in " + std::to_string(ms.nvars()) + " variables, set in " + std::to_string(n));
  if (length == 0 || length > ms.size())
    throw DomainError("nu_m_ordering: length " + std::to_string(length) + " outside 1.." + std::to_string(ms.size()));
  const auto cap = options.cap;
  const Exponent& m = ms.bound();

  // Grid of coordinate p-orderings: g_i is the node for the i-th monomial.
  std::vector<POrdering> coord;
  for (std::size_t j = 0; j < n; ++j) coord.push_back(p_ordering(s[j], p, m[j] + 1, {}, {}, options.limits));
  std::vector<Point> grid(length);
  std::vector<IntVector> grid_rows(length);
  for (std::size_t i = 0; i < length; ++i) {
    grid[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = coord[j].elements[ms[i][j]];
    grid_rows[i] = ms.evaluate(grid[i], length);
  }

  NuMOrdering out{p, m, ms.cap(), {}, {}, cap};
  BorderedBasis basis(ms, length);

  Point a0 = options.start ? *options.start : s.point_at(std::vector<std::size_t>(n, 0));
  if (!member(s, a0)) throw DomainError("nu_m_ordering: start " + to_string(a0) + " is not in " + s.to_string());
  basis.push(a0);
  out.points.push_back(a0);
  out.delta_vals.push_back(0);
  long total = 0;  // untruncated v_p(Delta_m(a_0..a_r))

  for (std::size_t r = 1; r < length; ++r) {
    const long den_val = vp_nonzero(p, basis.next_denominator());
    const auto cols = static_cast<Eigen::Index>(r + 1);

    long w = 0;
    std::optional<std::size_t> grid_best;
    for (std::size_t i = 0; i <= r; ++i) {
      const Integer v = basis.next_numerator_at(grid_rows[i].head(cols));
      if (v == 0) continue;
      const long val = vp_nonzero(p, v) - den_val;
      if (!grid_best || val < w) {
        w = val;
        grid_best = i;
      }
    }
    if (!grid_best) throw InvariantViolation("nu_m_ordering: bordered polynomial vanishes on the grid");
    auto capped = [&](long v) { return cap ? std::min<long>(v, *cap) : v; };
    const long target = capped(total + w);

    std::optional<Point> chosen;
    long chosen_val = 0;
    bool skipped = false;
    ShellEnumerator shells(n);
    for (std::size_t seen = 0; seen < options.limits.max_candidates; ++seen, shells.advance()) {
      Point x = s.point_at(shells.current());
      const Integer v = basis.next_numerator_at(ms.evaluate(x, r + 1));
      if (v == 0) continue;
      const long val = vp_nonzero(p, v) - den_val;
      if (val < w) throw InvariantViolation("nu_m_ordering: value below the certified minimum at " + to_string(x));
      if (capped(total + val) != target) continue;
      if (options.alternate_ties && !skipped) {
        skipped = true;
        continue;
      }
      chosen = std::move(x);
      chosen_val = val;
      break;
    }
    if (!chosen) {
      // Budget spent: the grid minimizer is a valid choice.
      chosen = grid[*grid_best];
      chosen_val = w;
    }
    basis.push(*chosen);
    total += chosen_val;
    out.points.push_back(*chosen);
    out.delta_vals.push_back(capped(total));
  }
  return out;
}

std::vector<Poly> f_basis(const NuMOrdering& ord, const MonomialSequence& ms) {
  if (!(ord.m == ms.bound()) || ord.k != ms.cap()) throw DomainError("f_basis: ordering built for another monomial sequence");
  if (ord.points.size() != ms.size())
    throw DomainError("f_basis: ordering has " + std::to_string(ord.points.size()) + " points, need " + std::to_string(ms.size()));
  BorderedBasis basis(ms, ms.size());
  for (const auto& a : ord.points) basis.push(a);
  std::vector<Poly> out;
  for (std::size_t r = 0; r < ms.size(); ++r) {
    RatVector c = basis.h(r);
    const Rational inv = 1 / basis.pivot(r);
    for (Eigen::Index t = 0; t < c.size(); ++t) c(t) *= inv;
    out.push_back(ms.to_poly(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// I-orderings

std::vector<Integer> i_ordering(const CoordSet& c, const FactoredIdeal& ideal, std::size_t length,
                                std::optional<Integer> start, const SearchLimits& limits) {
  if (ideal.is_zero()) throw DomainError("i_ordering: the ideal must be nonzero");
  if (!ideal.is_integral()) throw DomainError("i_ordering: the ideal must be integral");
  if (length == 0) return {};
  if (ideal.is_unit()) {
    std::vector<Integer> out = nonnegative_members(c, length);
    if (start) {
      if (!c.contains(*start)) throw DomainError("i_ordering: start is not in " + c.to_string());
      auto it = std::find(out.begin(), out.end(), *start);
      if (it != out.end()) out.erase(it);
      else out.pop_back();
      out.insert(out.begin(), *start);
    }
    return out;
  }

  std::vector<Congruence> congruences;
  Integer q = 1;
  for (const auto& [p, e] : ideal.factors()) {
    POrdering o = p_ordering(c, p, length, {}, start, limits);
    congruences.push_back({o.elements, p, static_cast<unsigned>(e + 1)});
    q *= pow(p, static_cast<unsigned long>(e + 1));
  }
  const std::vector<Integer> lifted = crt(congruences);
  const Integer step = lcm(q, c.modulus());

  std::vector<Integer> out;
  for (std::size_t t = 0; t < length; ++t) {
    if (t == 0 && start) {
      out.push_back(*start);
      continue;
    }
    auto y = lift_into(c, lifted[t], q);
    if (!y)
      throw DomainError("i_ordering: no member of " + c.to_string() + " is congruent to " + lifted[t].get_str() +
                        " mod " + q.get_str());
    // Keep the nodes distinct; shifting by lcm(q, M) preserves every congruence.
    while (std::find(out.begin(), out.end(), *y) != out.end()) *y += step;
    out.push_back(*y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local membership

LocalMembership int_member_local(const Poly& f, const SetSpec& s, const Integer& p, const SearchLimits& limits) {
  require_prime(p);
  if (f.is_zero()) throw DomainError("int_member_local: zero polynomial");
  if (f.nvars() != s.dimension()) throw DomainError("int_member_local: polynomial and set differ in dimension");
  const PolyType t = normalize_type(f.degree(), f.total_degree());
  const MonomialSequence ms(t.m, t.k);
  NuOrderingOptions options;
  options.limits = limits;
  const NuMOrdering ord = nu_m_ordering(s, p, ms, ms.size(), options);

  LocalMembership out;
  out.prime = p;
  for (const auto& a : ord.points) {
    const Rational v = evaluate(f, a);
    out.points.push_back(a);
    out.values.push_back(v);
    if (out.member && vp(p, v) < Valuation(0)) {
      out.member = false;
      out.witness = a;
      out.value = v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ProductBasis

ProductBasis::ProductBasis(std::vector<std::vector<Integer>> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw DomainError("product basis needs at least one coordinate");
}

Point ProductBasis::node(const Exponent& i) const {
  Point a(nodes_.size());
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (i[j] >= nodes_[j].size()) throw DomainError("product basis: exponent " + i.to_string() + " beyond the nodes");
    a[j] = nodes_[j][i[j]];
  }
  return a;
}

Integer ProductBasis::evaluate(const Exponent& i, std::span<const Integer> x) const {
  Integer v = 1;
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    for (unsigned t = 0; t < i[j]; ++t) v *= x[j] - nodes_[j][t];
  return v;
}

Poly ProductBasis::polynomial(const Exponent& i) const {
  const std::size_t n = nodes_.size();
  Poly out = Poly::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j)
    for (unsigned t = 0; t < i[j]; ++t) out = out * (Poly::variable(n, j) - Poly::constant(n, Rational(nodes_[j][t])));
  return out;
}

std::vector<Rational> ProductBasis::expand(const Poly& f, const std::vector<Exponent>& exponents) const {
  for (const auto& [e, c] : f.terms())
    if (std::find(exponents.begin(), exponents.end(), e) == exponents.end())
      throw DomainError("product basis: monomial " + e.to_string() + " of f is outside the given exponents");
  std::vector<Point> pts;
  for (const auto& e : exponents) pts.push_back(node(e));
  std::vector<Rational> b(exponents.size());
  for (std::size_t a = 0; a < exponents.size(); ++a) {
    Rational acc = fixdiv::evaluate(f, pts[a]);
    for (std::size_t c = 0; c < a; ++c)
      if (b[c] != 0 && componentwise_le(exponents[c], exponents[a])) acc -= b[c] * evaluate(exponents[c], pts[a]);
    const Integer d = evaluate(exponents[a], pts[a]);
    if (d == 0) throw InvariantViolation("product basis: repeated node");
    b[a] = acc / d;
  }
  return b;
}

}  // namespace fixdiv
