#pragma once

// Subsets S = S_1 x ... x S_n of Z^n built from arithmetic progressions.
//
// Every coordinate set is infinite, so S is Zariski-dense (I(S) = {0}).

#include "fixdiv/arith.hpp"
#include "fixdiv/poly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixdiv {

/// Z, aZ+b, or a union of classes modulo a common modulus.
class CoordSet {
 public:
  enum class Kind { full, progression, classes };

  CoordSet() = default;  // Z
  static CoordSet full() { return {}; }
  /// aZ + b with a != 0.
  static CoordSet progression(const Integer& a, const Integer& b);
  /// Union of the progressions M Z + c for the given classes.
  static CoordSet union_of(const Integer& modulus, std::vector<Integer> classes);

  Kind kind() const { return kind_; }
  /// Common modulus M > 0 (1 for Z).
  const Integer& modulus() const { return modulus_; }
  /// Distinct residues in [0, M), ascending.
  const std::vector<Integer>& classes() const { return classes_; }

  bool contains(const Integer& x) const;

  /// The index-th nonnegative member in ascending order (index 0 is the smallest).
  Integer nonnegative_member(std::size_t index) const;

  /// Number of leading nonnegative members that meet every residue class of
  /// the set modulo q (the period of the member sequence mod q).
  Integer residue_period(const Integer& q) const;

  std::string to_string() const;
  friend bool operator==(const CoordSet&, const CoordSet&) = default;

 private:
  Kind kind_ = Kind::full;
  Integer modulus_ = 1;
  std::vector<Integer> classes_{Integer(0)};
};

/// First count members by increasing absolute value, positive first on ties.
std::vector<Integer> enumerate(const CoordSet& c, std::size_t count);

/// First count nonnegative members, ascending.  This is the search and
/// tie-breaking order used by every ordering construction.
std::vector<Integer> nonnegative_members(const CoordSet& c, std::size_t count);

/// { s mod q : s in c }, ascending.
std::vector<Integer> residues(const CoordSet& c, const Integer& q);

/// Smallest nonnegative y in c with y = x (mod q), if one exists.  For a
/// single progression it exists whenever x agrees with some member of c
/// modulo gcd(q, M); a union may fail when its classes do not split over
/// the primes of M.
std::optional<Integer> lift_into(const CoordSet& c, const Integer& x, const Integer& q);

class SetSpec {
 public:
  SetSpec() = default;
  explicit SetSpec(std::vector<CoordSet> coords);

  std::size_t dimension() const { return coords_.size(); }
  const CoordSet& operator[](std::size_t j) const { return coords_[j]; }
  const std::vector<CoordSet>& coords() const { return coords_; }

  /// Point whose j-th coordinate is the index[j]-th nonnegative member of S_j.
  Point point_at(std::span<const std::size_t> index) const;

  std::string to_string() const;
  friend bool operator==(const SetSpec&, const SetSpec&) = default;

 private:
  std::vector<CoordSet> coords_;
};

bool member(const SetSpec& s, std::span<const Integer> a);

/// Set grammar: `Z`, `aZ+b`, `{3Z+1 u 3Z+2}`, products joined by `x`.
SetSpec parse_set(std::string_view text);
CoordSet parse_coord_set(std::string_view text);

/// Visits index tuples in shells of equal sum; within a shell the first
/// coordinate's index decreases fastest to slowest (lexicographically
/// descending).  This is the order candidates are examined in.
class ShellEnumerator {
 public:
  explicit ShellEnumerator(std::size_t dimension);
  const std::vector<std::size_t>& current() const { return index_; }
  std::size_t shell() const { return shell_; }
  void advance();

 private:
  std::vector<std::size_t> index_;
  std::size_t shell_ = 0;
};

}  // namespace fixdiv
