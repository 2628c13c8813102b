#include "fixdiv/setspec.hpp"

#include <algorithm>
#include <cctype>

namespace fixdiv {

CoordSet CoordSet::progression(const Integer& a, const Integer& b) {
  if (a == 0) throw DomainError("arithmetic progression with modulus 0 is a finite set");
  CoordSet c;
  c.modulus_ = abs(a);
  c.classes_ = {mod_floor(b, c.modulus_)};
  c.kind_ = c.modulus_ == 1 ? Kind::full : Kind::progression;
  return c;
}

CoordSet CoordSet::union_of(const Integer& modulus, std::vector<Integer> classes) {
  if (modulus == 0) throw DomainError("union of progressions needs a nonzero modulus");
  if (classes.empty()) throw DomainError("union of no progressions is empty");
  CoordSet c;
  c.modulus_ = abs(modulus);
  for (auto& r : classes) r = mod_floor(r, c.modulus_);
  std::sort(classes.begin(), classes.end());
  if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
    throw DomainError("union classes must be distinct modulo " + c.modulus_.get_str());
  c.classes_ = std::move(classes);
  if (c.classes_.size() == 1) {
    c.kind_ = c.modulus_ == 1 ? Kind::full : Kind::progression;
  } else {
    c.kind_ = Kind::classes;
  }
  return c;
}

bool CoordSet::contains(const Integer& x) const {
  return std::binary_search(classes_.begin(), classes_.end(), mod_floor(x, modulus_));
}

Integer CoordSet::nonnegative_member(std::size_t index) const {
  const std::size_t r = classes_.size();
  return modulus_ * static_cast<unsigned long>(index / r) + classes_[index % r];
}

Integer CoordSet::residue_period(const Integer& q) const {
  return Integer(static_cast<unsigned long>(classes_.size())) * (q / gcd(modulus_, q));
}

std::string CoordSet::to_string() const {
  auto ap = [&](const Integer& c) {
    std::string s = modulus_ == 1 ? "Z" : modulus_.get_str() + "Z";
    if (c != 0) s += "+" + c.get_str();
    return s;
  };
  if (kind_ != Kind::classes) return ap(classes_.front());
  std::string out = "{";
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += " u ";
    out += ap(classes_[i]);
  }
  return out + "}";
}

// Members are listed by the progression parameter t = 0, 1, -1, 2, -2, ...
// (classes ascending within one t), which is increasing |x| for Z and for
// progressions through 0.
std::vector<Integer> enumerate(const CoordSet& c, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (long step = 0; out.size() < count; ++step) {
    const long t = step % 2 ? (step + 1) / 2 : -(step / 2);
    for (const auto& r : c.classes()) {
      if (out.size() == count) break;
      out.push_back(c.modulus() * t + r);
    }
  }
  return out;
}

std::vector<Integer> nonnegative_members(const CoordSet& c, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(c.nonnegative_member(i));
  return out;
}

std::vector<Integer> residues(const CoordSet& c, const Integer& q) {
  if (q <= 0) throw DomainError("residues: modulus must be positive");
  const Integer g = gcd(c.modulus(), q);
  const Integer steps = q / g;
  if (!steps.fits_ulong_p() || steps > 100'000'000) throw DomainError("residues: modulus too large");
  std::vector<Integer> out;
  for (const auto& r : c.classes())
    for (unsigned long t = 0; t < steps.get_ui(); ++t) out.push_back(mod_floor(c.modulus() * t + r, q));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Integer> lift_into(const CoordSet& c, const Integer& x, const Integer& q) {
  const Integer& m = c.modulus();
  const Integer g = gcd(q, m);
  const Integer qg = q / g;
  const Integer mg = m / g;
  Integer inverse = 0;
  if (mg != 1) mpz_invert(inverse.get_mpz_t(), Integer(mod_floor(qg, mg)).get_mpz_t(), mg.get_mpz_t());
  const Integer base = mod_floor(x, q);
  std::optional<Integer> best;
  for (const auto& r : c.classes()) {
    const Integer diff = r - base;
    if (mod_floor(diff, g) != 0) continue;
    // base + q u = r (mod m)  <=>  (q/g) u = (r - base)/g (mod m/g)
    const Integer u = mg == 1 ? Integer(0) : mod_floor(Integer(diff / g) * inverse, mg);
    Integer y = base + q * u;
    if (!best || y < *best) best = y;
  }
  return best;
}

SetSpec::SetSpec(std::vector<CoordSet> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("a set needs at least one coordinate");
}

Point SetSpec::point_at(std::span<const std::size_t> index) const {
  Point a(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) a[j] = coords_[j].nonnegative_member(index[j]);
  return a;
}

std::string SetSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) out += " x ";
    out += coords_[j].to_string();
  }
  return out;
}

bool member(const SetSpec& s, std::span<const Integer> a) {
  if (a.size() != s.dimension())
    throw DomainError("member: point has " + std::to_string(a.size()) + " coordinates, set has " +
                      std::to_string(s.dimension()));
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!s[j].contains(a[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Integer parse_signed(const std::string& s, std::string_view whole) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
    throw DomainError("bad integer '" + s + "' in set '" + std::string(whole) + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

struct Progression {
  Integer a;
  Integer b;
};

// [a]Z[(+|-)b]
Progression parse_progression(const std::string& s, std::string_view whole) {
  const auto z = s.find('Z');
  if (z == std::string::npos) throw DomainError("expected 'Z' in set '" + std::string(whole) + "'");
  Progression p{1, 0};
  const std::string head = s.substr(0, z);
  if (head == "-") {
    p.a = -1;
  } else if (!head.empty()) {
    p.a = parse_signed(head, whole);
  }
  const std::string tail = s.substr(z + 1);
  if (!tail.empty()) {
    if (tail[0] != '+' && tail[0] != '-') throw DomainError("unexpected '" + tail + "' in set '" + std::string(whole) + "'");
    p.b = parse_signed(tail, whole);
  }
  if (p.a == 0) throw DomainError("0Z is a finite set");
  return p;
}

}  // namespace

CoordSet parse_coord_set(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty set expression");
  if (s.front() != '{') {
    const Progression p = parse_progression(s, text);
    return CoordSet::progression(p.a, p.b);
  }
  if (s.back() != '}') throw DomainError("unterminated '{' in set '" + std::string(text) + "'");
  const std::string body = s.substr(1, s.size() - 2);
  std::vector<Progression> parts;
  std::size_t start = 0;
  while (true) {
    const auto u = body.find('u', start);
    parts.push_back(parse_progression(body.substr(start, u - start), text));
    if (u == std::string::npos) break;
    start = u + 1;
  }
  const Integer modulus = abs(parts.front().a);
  std::vector<Integer> classes;
  for (const auto& p : parts) {
    if (abs(p.a) != modulus) throw DomainError("union members must share one modulus in '" + std::string(text) + "'");
    classes.push_back(p.b);
  }
  return CoordSet::union_of(modulus, std::move(classes));
}

SetSpec parse_set(std::string_view text) {
  const std::string s = strip_spaces(text);
  std::vector<CoordSet> coords;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '{') ++depth;
    if (i < s.size() && s[i] == '}') --depth;
    if (i == s.size() || (s[i] == 'x' && depth == 0)) {
      coords.push_back(parse_coord_set(std::string_view(s).substr(start, i - start)));
      start = i + 1;
    }
  }
  return SetSpec(std::move(coords));
}

// ---------------------------------------------------------------------------

ShellEnumerator::ShellEnumerator(std::size_t dimension) : index_(dimension, 0) {
  if (dimension == 0) throw DomainError("shell enumeration needs a positive dimension");
}

// Lexicographically descending within a shell: the next tuple after t is found
// by moving one unit from the rightmost movable position.
void ShellEnumerator::advance() {
  const std::size_t n = index_.size();
  if (n == 1) {
    index_[0] = ++shell_;
    return;
  }
  // Find the rightmost j < n-1 with index_[j] > 0.
  std::size_t j = n - 1;
  while (j > 0 && index_[j - 1] == 0) --j;
  if (j == 0) {
    // Last tuple of this shell, (0,...,0,s): start the next shell at (s+1,0,...,0).
    ++shell_;
    std::fill(index_.begin(), index_.end(), 0);
    index_[0] = shell_;
    return;
  }
  --j;
  // index_[j] > 0; decrement it and put the remaining mass right after it.
  std::size_t rest = 0;
  for (std::size_t t = j + 1; t < n; ++t) {
    rest += index_[t];
    index_[t] = 0;
  }
  --index_[j];
  index_[j + 1] = rest + 1;
}

}  // namespace fixdiv
