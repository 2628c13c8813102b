#pragma once

// Sparse multivariate polynomials over Q and the graded monomial sequence.

#include "fixdiv/arith.hpp"
#include "fixdiv/linalg.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixdiv {

using Point = std::vector<Integer>;

/// Multi-index i = (i_1, ..., i_n).
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  Exponent(std::initializer_list<unsigned> e) : e_(e) {}
  explicit Exponent(std::vector<unsigned> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& components() const { return e_; }

  /// |i|
  unsigned weight() const;
  bool is_zero() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

  std::string to_string() const;  // "(2,1)"

 private:
  std::vector<unsigned> e_;
};

/// i <= j componentwise.
bool componentwise_le(const Exponent& i, const Exponent& j);
Exponent componentwise_max(const Exponent& i, const Exponent& j);
Exponent operator+(const Exponent& i, const Exponent& j);

/// Position order of the monomial sequence: total degree first, then the
/// larger power of x_1 (then x_2, ...) first.  So 1, x, y, x^2, xy, y^2, ...
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// (m, k): partial-degree vector and total degree.
struct PolyType {
  Exponent m;
  unsigned k = 0;
  friend bool operator==(const PolyType&, const PolyType&) = default;
};

/// m_j <- min(m_j, k), then k <- min(k, |m|).
PolyType normalize_type(const Exponent& m, unsigned k);

class Poly {
 public:
  using Terms = std::map<Exponent, Rational, GradedOrder>;

  explicit Poly(std::size_t nvars = 1) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly monomial(const Exponent& e, const Rational& c = 1);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Componentwise maximum of the exponents (partial degrees).
  Exponent degree() const;
  unsigned total_degree() const;
  PolyType type() const { return {degree(), total_degree()}; }

  bool has_integer_coefficients() const;
  /// lcm of the coefficient denominators.
  Integer denominator() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

Rational evaluate(const Poly& f, std::span<const Rational> point);
Rational evaluate(const Poly& f, std::span<const Integer> point);

/// (content, primitive part) of an integer-coefficient polynomial.
std::pair<FactoredIdeal, Poly> content_primitive(const Poly& f);
/// Positive integer gcd of the coefficients.
Integer content(const Poly& f);

/// Variable names: x, y, z for n <= 3, otherwise x1..xN.
std::string variable_name(std::size_t index, std::size_t nvars);

/// Parse with the grammar documented in the README.  Throws ParseError.
Poly parse_poly(std::string_view text, std::size_t nvars);
/// Canonical text: terms in decreasing graded order.
std::string format(const Poly& f);

class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// All monomials x^i with i <= m (and |i| <= k when a cap is given), listed in
/// GradedOrder.  Coefficient vectors for this sequence are indexed by position.
class MonomialSequence {
 public:
  MonomialSequence(const Exponent& m, std::optional<unsigned> k);

  const Exponent& bound() const { return m_; }
  std::optional<unsigned> cap() const { return k_; }
  std::size_t nvars() const { return m_.size(); }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t j) const { return monomials_[j]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const Exponent& e) const;

  /// Row (p_0(a), ..., p_{len-1}(a)) for the first len monomials.
  IntVector evaluate(std::span<const Integer> point, std::size_t len) const;
  IntVector evaluate(std::span<const Integer> point) const { return evaluate(point, size()); }

  /// Coefficients of f in this sequence; throws if f has a monomial outside it.
  RatVector coefficients(const Poly& f) const;
  Poly to_poly(const RatVector& coefficients) const;

 private:
  Exponent m_;
  std::optional<unsigned> k_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t, GradedOrder> index_;
};

inline MonomialSequence monomial_sequence(const Exponent& m, std::optional<unsigned> k) {
  return MonomialSequence(m, k);
}

/// C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

std::string to_string(const Point& a);

}  // namespace fixdiv
