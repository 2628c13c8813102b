#pragma once

// Command-line front end.

#include "fixdiv/arith.hpp"
#include "fixdiv/orderings.hpp"
#include "fixdiv/poly.hpp"
#include "fixdiv/setspec.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fixdiv {

struct BoundsRow {
  Exponent m;
  FactoredIdeal gamma;
};

/// One row (m, Gamma_{m,k}(S)) per m with max m_j <= k <= |m|; m_1
/// descending, the remaining coordinates ascending.
std::vector<BoundsRow> bounds_table(const SetSpec& s, unsigned k, const SearchLimits& limits = {});

/// "2,2" -> (2,2).
Exponent parse_exponent(std::string_view text);
/// "8", "2^3", "2^3*3".
FactoredIdeal parse_ideal(std::string_view text);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain = 1;
inline constexpr int usage = 2;
inline constexpr int cap_exceeded = 3;
}  // namespace exit_code

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixdiv
