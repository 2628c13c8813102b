#pragma once

// p-orderings of coordinate sets, nu_m-orderings of product sets, the
// determinants Delta_m and the bases built from them.

#include "fixdiv/arith.hpp"
#include "fixdiv/linalg.hpp"
#include "fixdiv/poly.hpp"
#include "fixdiv/setspec.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixdiv {

struct SearchLimits {
  /// Largest exponent C for which residues mod p^C are scanned.
  unsigned max_refinement = 24;
  /// Candidates examined per greedy step before giving up on the
  /// canonical minimizer.
  std::size_t max_candidates = std::size_t{1} << 20;

  /// Defaults, with max_refinement taken from FIXDIV_CAP when set.
  static SearchLimits from_environment();
};

/// The greedy search could not be certified within SearchLimits.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::vector<Point> best_found)
      : std::runtime_error(what), best_found_(std::move(best_found)) {}
  const std::vector<Point>& best_found() const { return best_found_; }

 private:
  std::vector<Point> best_found_;
};

struct POrdering {
  Integer prime;
  CoordSet set;
  std::vector<Integer> elements;
  /// vals[r] = v_p(prod_{i<r} (a_r - a_i)), truncated at cap when one is set.
  std::vector<long> vals;
  std::optional<unsigned> cap;
};

/// Bhargava's greedy p-ordering.  Ties go to the smallest nonnegative member.
POrdering p_ordering(const CoordSet& c, const Integer& p, std::size_t length, std::optional<unsigned> cap = {},
                     std::optional<Integer> start = {}, const SearchLimits& limits = {});

/// det(p_j(a_i))_{0 <= i,j <= r} for r + 1 = points.size().
Integer delta(const MonomialSequence& ms, const std::vector<Point>& points);
/// Same matrix for r = points.size() rows, columns 0..r with column s removed.
Integer delta_minor(const MonomialSequence& ms, std::size_t s, const std::vector<Point>& points);

/// The polynomials h_r(x) = Delta_m(a_0..a_{r-1}, x) / Delta_m(a_0..a_{r-1}),
/// maintained while points are appended.  h_r is monic in p_r and vanishes at
/// a_0..a_{r-1}, so Delta_m(a_0..a_r) = prod_{j <= r} h_j(a_j).
class BorderedBasis {
 public:
  /// Works with the first `length` monomials of ms.
  BorderedBasis(const MonomialSequence& ms, std::size_t length);

  std::size_t size() const { return points_.size(); }
  std::size_t length() const { return length_; }
  const std::vector<Point>& points() const { return points_; }

  /// Coefficients of h_r for r = size(), written as numerator / denominator
  /// with an integer numerator vector of length r + 1.
  const IntVector& next_numerator() const { return next_num_; }
  const Integer& next_denominator() const { return next_den_; }
  /// Numerator of h_r(x) given the monomial values of x.
  Integer next_numerator_at(const IntVector& monomial_values) const;

  void push(const Point& a);

  /// h_j over the monomial sequence (length `length()`).
  const RatVector& h(std::size_t j) const { return h_[j]; }
  /// h_j(a_j).
  const Rational& pivot(std::size_t j) const { return pivots_[j]; }
  /// h_j(a_i) for j <= i.
  const Rational& value(std::size_t i, std::size_t j) const { return values_[i][j]; }
  const IntVector& monomial_values(std::size_t i) const { return rows_[i]; }

 private:
  void prepare_next();

  const MonomialSequence* ms_;
  std::size_t length_;
  std::vector<Point> points_;
  std::vector<IntVector> rows_;
  std::vector<RatVector> h_;
  std::vector<IntVector> h_num_;
  std::vector<Integer> h_den_;
  std::vector<Rational> pivots_;
  std::vector<std::vector<Rational>> values_;
  IntVector next_num_;
  Integer next_den_;
};

struct NuMOrdering {
  Integer prime;
  Exponent m;
  std::optional<unsigned> k;
  std::vector<Point> points;
  /// deltaVals[r] = v_p(Delta_m(a_0..a_r)), truncated at cap when one is set.
  std::vector<long> delta_vals;
  std::optional<unsigned> cap;
};

struct NuOrderingOptions {
  std::optional<unsigned> cap;
  std::optional<Point> start;
  /// Take the second minimizer met instead of the first (for independence tests).
  bool alternate_ties = false;
  SearchLimits limits;
};

/// Greedy nu_m-ordering of the product set s at p.
///
/// The minimum at step r is known exactly before searching: it is attained on
/// the grid of coordinate p-orderings, because the products of coordinate
/// binomial polynomials over that grid form a unitriangular basis.  The search
/// then walks candidates shell by shell and stops at the first minimizer.
NuMOrdering nu_m_ordering(const SetSpec& s, const Integer& p, const MonomialSequence& ms, std::size_t length,
                          const NuOrderingOptions& options = {});

/// F_r = Delta_m(a_0..a_{r-1}, x) / Delta_m(a_0..a_r), r = 0 .. l-1.
std::vector<Poly> f_basis(const NuMOrdering& ord, const MonomialSequence& ms);

/// Integers congruent termwise, modulo p^{e+1} for every p^e || I, to a
/// p-ordering of c, and lying in c.
std::vector<Integer> i_ordering(const CoordSet& c, const FactoredIdeal& ideal, std::size_t length,
                                std::optional<Integer> start = {}, const SearchLimits& limits = {});

struct LocalMembership {
  bool member = true;
  Integer prime;
  std::optional<Point> witness;
  std::optional<Rational> value;
  /// The ordering points examined, with f's values there.
  std::vector<Point> points;
  std::vector<Rational> values;
};

/// f maps s into Z_(p) iff it does so at the first l_{m,k} points of a
/// nu_m-ordering at p, (m,k) being the normalized type of f.
LocalMembership int_member_local(const Poly& f, const SetSpec& s, const Integer& p, const SearchLimits& limits = {});

/// B_i(x) = prod_j prod_{t < i_j} (x_j - nodes[j][t]).
class ProductBasis {
 public:
  explicit ProductBasis(std::vector<std::vector<Integer>> nodes);

  std::size_t nvars() const { return nodes_.size(); }
  const std::vector<Integer>& nodes(std::size_t j) const { return nodes_[j]; }
  /// (nodes[0][i_1], ..., nodes[n-1][i_n]).
  Point node(const Exponent& i) const;
  Integer evaluate(const Exponent& i, std::span<const Integer> x) const;
  Poly polynomial(const Exponent& i) const;

  /// Coefficients b(i) with f = sum b(i) B_i, for exponents a downward
  /// closed list in GradedOrder containing every monomial of f.
  std::vector<Rational> expand(const Poly& f, const std::vector<Exponent>& exponents) const;

 private:
  std::vector<std::vector<Integer>> nodes_;
};

}  // namespace fixdiv
