#include "fixdiv/cli.hpp"

#include "fixdiv/factorials.hpp"
#include "fixdiv/fixed_divisor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>

namespace fixdiv {

using Json = nlohmann::ordered_json;

std::vector<BoundsRow> bounds_table(const SetSpec& s, unsigned k, const SearchLimits& limits) {
  const std::size_t n = s.dimension();
  std::vector<Exponent> ms;
  Exponent m(n);
  while (true) {
    if (m.weight() >= k) ms.push_back(m);
    std::size_t j = 0;
    while (j < n && m[j] == k) m[j++] = 0;
    if (j == n) break;
    ++m[j];
  }
  std::sort(ms.begin(), ms.end(), [](const Exponent& a, const Exponent& b) {
    if (a[0] != b[0]) return a[0] > b[0];
    return a.components() < b.components();
  });
  std::vector<BoundsRow> rows;
  for (const auto& e : ms) rows.push_back({e, gamma_product(s, e, k, limits)});
  return rows;
}

Exponent parse_exponent(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    piece.erase(std::remove_if(piece.begin(), piece.end(), [](unsigned char c) { return std::isspace(c); }), piece.end());
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos || piece.size() > 6)
      throw DomainError("bad exponent entry '" + piece + "' in '" + std::string(text) + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(piece)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Exponent(std::move(parts));
}

FactoredIdeal parse_ideal(std::string_view text) {
  FactoredIdeal out;
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    const std::string piece(text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start));
    const auto caret = piece.find('^');
    const std::string base = piece.substr(0, caret);
    if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("bad ideal factor '" + piece + "'");
    Integer b(base);
    if (b == 0) return FactoredIdeal::zero();
    unsigned long e = 1;
    if (caret != std::string::npos) {
      const std::string ex = piece.substr(caret + 1);
      if (ex.empty() || ex.find_first_not_of("0123456789") != std::string::npos || ex.size() > 6)
        throw DomainError("bad exponent in ideal factor '" + piece + "'");
      e = std::stoul(ex);
    }
    out *= FactoredIdeal::of(pow(b, e));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string set;
  std::string poly;
  std::string m;
  std::string ideal;
  std::string method = "auto";
  std::string point;
  std::optional<unsigned> k;
  std::optional<std::string> prime;
  std::optional<unsigned> length;
  std::optional<unsigned> truncate;
  std::optional<unsigned> cap;
  std::optional<std::uint64_t> seed;
  bool json = false;
};

struct Report {
  Json input = Json::object();
  std::optional<FactoredIdeal> ideal;
  Json result = Json::object();
  bool certified = true;
  std::vector<Point> witnesses;
  std::vector<std::string> lines;
};

Json factors_json(const FactoredIdeal& ideal) {
  Json f = Json::object();
  for (const auto& [p, e] : ideal.factors()) f[p.get_str()] = std::to_string(e);
  return f;
}

Json point_json(const Point& a) {
  Json out = Json::array();
  for (const auto& x : a) out.push_back(x.get_str());
  return out;
}

std::string generator_text(const FactoredIdeal& ideal) {
  return ideal.is_zero() ? "0" : to_string(ideal.generator());
}

class Runner {
 public:
  Runner(const std::string& verb, const Args& a) : verb_(verb), a_(a) {
    limits_ = SearchLimits::from_environment();
    if (a.cap) limits_.max_refinement = *a.cap;
  }

  Report run() {
    if (a_.set.empty()) throw UsageError(verb_ + " needs --set");
    s_ = parse_set(a_.set);
    r_.input["set"] = s_.to_string();
    if (verb_ == "factorial") return factorial();
    if (verb_ == "gamma") return gamma();
    if (verb_ == "evrard") return evrard();
    if (verb_ == "fixdiv") return fixdiv();
    if (verb_ == "member") return member_verb();
    if (verb_ == "ordering") return ordering();
    if (verb_ == "basis") return basis();
    if (verb_ == "construct") return construct();
    if (verb_ == "compare") return compare();
    throw UsageError("unknown verb " + verb_);
  }

 private:
  Exponent need_m() {
    if (a_.m.empty()) throw UsageError(verb_ + " needs --m");
    Exponent m = parse_exponent(a_.m);
    if (m.size() != s_.dimension())
      throw UsageError("--m has " + std::to_string(m.size()) + " entries but the set has dimension " +
                       std::to_string(s_.dimension()));
    r_.input["m"] = m.to_string();
    return m;
  }
  unsigned need_k() {
    if (!a_.k) throw UsageError(verb_ + " needs --k");
    r_.input["k"] = std::to_string(*a_.k);
    return *a_.k;
  }
  Integer need_prime() {
    if (!a_.prime) throw UsageError(verb_ + " needs --prime");
    Integer p;
    if (a_.prime->empty() || a_.prime->find_first_not_of("0123456789") != std::string::npos || p.set_str(*a_.prime, 10) != 0)
      throw UsageError("--prime expects a positive integer");
    r_.input["prime"] = p.get_str();
    return p;
  }
  Poly need_poly() {
    if (a_.poly.empty()) throw UsageError(verb_ + " needs --poly");
    Poly f = parse_poly(a_.poly, s_.dimension());
    r_.input["poly"] = format(f);
    return f;
  }

  void set_ideal(const FactoredIdeal& ideal) {
    r_.ideal = ideal;
    r_.lines.push_back(generator_text(ideal));
  }

  Report factorial() {
    if (!a_.m.empty()) {
      set_ideal(m_factorial(s_, need_m(), limits_));
    } else if (a_.k && s_.dimension() == 1) {
      set_ideal(bhargava_factorial(s_[0], need_k(), limits_));
    } else {
      throw UsageError("factorial needs --m, or --k for a one-dimensional set (see evrard for k!_S)");
    }
    return r_;
  }

  Report gamma() {
    const Exponent m = need_m();
    const unsigned k = need_k();
    if (a_.prime) {
      const Integer p = need_prime();
      NuOrderingOptions o;
      o.limits = limits_;
      const Valuation v = gamma_local(s_, p, m, k, o);
      r_.ideal = FactoredIdeal::prime_power(p, v.value());
      r_.result["valuation"] = std::to_string(v.value());
      r_.lines.push_back(std::to_string(v.value()));
    } else {
      set_ideal(gamma_product(s_, m, k, limits_));
    }
    return r_;
  }

  Report evrard() {
    set_ideal(evrard_factorial(s_, need_k(), limits_));
    return r_;
  }

  FixedDivisorOptions fixdiv_options(const Poly& f) {
    FixedDivisorOptions o;
    o.limits = limits_;
    if (!a_.point.empty()) {
      Point a;
      std::size_t start = 0;
      while (true) {
        const auto comma = a_.point.find(',', start);
        std::string piece = a_.point.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        piece.erase(std::remove_if(piece.begin(), piece.end(), [](unsigned char c) { return std::isspace(c); }), piece.end());
        Integer x;
        if (piece.empty() || x.set_str(piece, 10) != 0) throw DomainError("bad coordinate '" + piece + "' in --point");
        a.push_back(x);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      o.start = a;
      r_.input["point"] = point_json(a);
    } else if (a_.seed) {
      // A pseudo-random start among the first nonvanishing points.
      const PolyType t = normalize_type(f.degree(), f.total_degree());
      const std::size_t scan = 10 * MonomialSequence(t.m, t.k).size();
      std::vector<Point> candidates;
      ShellEnumerator shells(s_.dimension());
      for (std::size_t i = 0; i < scan; ++i, shells.advance()) {
        Point a = s_.point_at(shells.current());
        if (evaluate(f, a) != 0) candidates.push_back(std::move(a));
      }
      if (!candidates.empty()) {
        std::mt19937_64 rng(*a_.seed);
        o.start = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      }
      r_.input["seed"] = std::to_string(*a_.seed);
    }
    return o;
  }

  Report fixdiv() {
    const Poly f = need_poly();
    const FixedDivisorOptions o = fixdiv_options(f);
    r_.input["method"] = a_.method;
    if (a_.method == "all") {
      const Method all[] = {Method::grid,   Method::grid_improved, Method::points, Method::two_point,
                            Method::coeff_product, Method::coeff_general};
      std::optional<FactoredIdeal> agreed;
      bool same = true;
      Json per = Json::object();
      for (Method m : all) {
        const FixedDivisorResult res = fixed_divisor(f, s_, m, o);
        per[to_string(m)] = generator_text(res.ideal);
        r_.lines.push_back(to_string(m) + " " + generator_text(res.ideal));
        if (!agreed) {
          agreed = res.ideal;
          r_.witnesses = res.witnesses;
        } else if (!(res.ideal == *agreed)) {
          same = false;
        }
      }
      r_.result["methods"] = per;
      if (!same) throw DomainError("methods disagree on d(S,f): " + per.dump());
      r_.ideal = *agreed;
      return r_;
    }
    const auto method = parse_method(a_.method);
    if (!method || *method == Method::sampler) throw UsageError("unknown --method '" + a_.method + "'");
    const FixedDivisorResult res = fixed_divisor(f, s_, *method, o);
    r_.result["method"] = to_string(res.method);
    r_.certified = res.certified;
    r_.witnesses = res.witnesses;
    set_ideal(res.ideal);
    return r_;
  }

  Report member_verb() {
    const Poly f = need_poly();
    bool is_member = true;
    std::optional<Integer> prime;
    std::optional<Point> witness;
    std::optional<Rational> value;
    if (a_.prime) {
      const Integer p = need_prime();
      LocalMembership local = int_member_local(f, s_, p, limits_);
      is_member = local.member;
      prime = p;
      witness = local.witness;
      value = local.value;
      r_.witnesses = local.points;
      Json vals = Json::array();
      for (const auto& v : local.values) vals.push_back(v.get_str());
      r_.result["values"] = vals;
    } else {
      GlobalMembership global = int_member_global(f, s_, limits_);
      is_member = global.member;
      prime = global.prime;
      witness = global.witness;
      value = global.value;
    }
    r_.result["member"] = is_member;
    r_.lines.push_back(is_member ? "true" : "false");
    if (!is_member) {
      r_.result["prime"] = prime->get_str();
      r_.result["witness"] = point_json(*witness);
      r_.result["value"] = value->get_str();
      r_.lines.push_back("witness " + to_string(*witness) + " value " + value->get_str() + " at p=" + prime->get_str());
    }
    return r_;
  }

  Report ordering() {
    const Integer p = need_prime();
    if (a_.truncate) r_.input["truncate"] = std::to_string(*a_.truncate);
    if (a_.m.empty()) {
      if (s_.dimension() != 1) throw UsageError("ordering needs --m for a multi-dimensional set");
      if (!a_.length) throw UsageError("a p-ordering needs --length");
      r_.input["length"] = std::to_string(*a_.length);
      const POrdering o = p_ordering(s_[0], p, *a_.length, a_.truncate, {}, limits_);
      Json vals = Json::array();
      for (std::size_t i = 0; i < o.elements.size(); ++i) {
        r_.witnesses.push_back({o.elements[i]});
        vals.push_back(std::to_string(o.vals[i]));
        r_.lines.push_back(o.elements[i].get_str() + " " + std::to_string(o.vals[i]));
      }
      r_.result["vals"] = vals;
      return r_;
    }
    const Exponent m = need_m();
    std::optional<unsigned> k;
    if (a_.k) k = need_k();
    const MonomialSequence ms(m, k);
    std::size_t length = ms.size();
    if (a_.length) {
      length = *a_.length;
      r_.input["length"] = std::to_string(length);
    }
    NuOrderingOptions o;
    o.cap = a_.truncate;
    o.limits = limits_;
    const NuMOrdering ord = nu_m_ordering(s_, p, ms, length, o);
    Json vals = Json::array();
    for (std::size_t i = 0; i < ord.points.size(); ++i) {
      vals.push_back(std::to_string(ord.delta_vals[i]));
      r_.lines.push_back(to_string(ord.points[i]) + " " + std::to_string(ord.delta_vals[i]));
    }
    r_.witnesses = ord.points;
    r_.result["delta_vals"] = vals;
    return r_;
  }

  Report basis() {
    const Integer p = need_prime();
    const Exponent m = need_m();
    std::optional<unsigned> k;
    if (a_.k) k = need_k();
    const MonomialSequence ms(m, k);
    NuOrderingOptions o;
    o.limits = limits_;
    const NuMOrdering ord = nu_m_ordering(s_, p, ms, ms.size(), o);
    Json polys = Json::array();
    const auto fs = f_basis(ord, ms);
    for (std::size_t r = 0; r < fs.size(); ++r) {
      polys.push_back(format(fs[r]));
      r_.lines.push_back("F_" + std::to_string(r) + " = " + format(fs[r]));
    }
    r_.witnesses = ord.points;
    r_.result["basis"] = polys;
    return r_;
  }

  Report construct() {
    const Exponent m = need_m();
    const unsigned k = need_k();
    if (a_.ideal.empty()) throw UsageError("construct needs --ideal");
    const FactoredIdeal ideal = parse_ideal(a_.ideal);
    r_.input["ideal"] = ideal.to_string();
    const Poly f = construct_sharp(s_, m, k, ideal, limits_);
    r_.ideal = ideal;
    r_.result["poly"] = format(f);
    r_.lines.push_back(format(f));
    return r_;
  }

  Report compare() {
    const unsigned k = need_k();
    if (a_.m.empty()) {
      Json rows = Json::array();
      for (const auto& row : bounds_table(s_, k, limits_)) {
        rows.push_back({{"m", row.m.to_string()}, {"gamma", generator_text(row.gamma)}});
        r_.lines.push_back(row.m.to_string() + " " + generator_text(row.gamma));
      }
      r_.result["table"] = rows;
      return r_;
    }
    const Exponent m = need_m();
    const FactoredIdeal ev = evrard_factorial(s_, k, limits_);
    const FactoredIdeal mf = m_factorial(s_, m, limits_);
    const FactoredIdeal g = gamma_product(s_, m, k, limits_);
    r_.result["evrard"] = generator_text(ev);
    r_.result["bhargava"] = generator_text(mf);
    r_.result["gamma"] = generator_text(g);
    r_.result["gcd"] = generator_text(fixdiv::gcd(ev, mf));
    r_.lines.push_back("evrard=" + generator_text(ev));
    r_.lines.push_back("bhargava=" + generator_text(mf));
    r_.lines.push_back("gamma=" + generator_text(g));
    r_.ideal = g;
    return r_;
  }

  std::string verb_;
  Args a_;
  SearchLimits limits_;
  SetSpec s_;
  Report r_;
};

void emit(const std::string& verb, const Args& a, const Report& r, std::ostream& out) {
  if (!a.json) {
    for (const auto& line : r.lines) out << line << '\n';
    return;
  }
  Json j;
  j["verb"] = verb;
  j["input"] = r.input;
  Json result = Json::object();
  if (r.ideal) {
    result["generator"] = generator_text(*r.ideal);
    result["factors"] = factors_json(*r.ideal);
  }
  for (const auto& [key, value] : r.result.items()) result[key] = value;
  j["result"] = result;
  j["certified"] = r.certified;
  Json w = Json::array();
  for (const auto& p : r.witnesses) w.push_back(point_json(p));
  j["witnesses"] = w;
  out << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed divisors and generalized factorials of integer-valued polynomials", "fixdiv"};
  app.require_subcommand(1);
  Args a;

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"factorial", "Bhargava factorial k!_S (one dimension) or m!_S"},
      {"gamma", "Gamma_{m,k}(S), or its valuation at --prime"},
      {"evrard", "k!_S = lcm of i!_S over |i| = k"},
      {"fixdiv", "fixed divisor d(S,f)"},
      {"member", "is f integer-valued on S (at --prime, or globally)"},
      {"ordering", "p-ordering (one dimension, --length) or nu_m-ordering (--m)"},
      {"basis", "regular basis F_{m,r} at --prime"},
      {"construct", "primitive f of type (m,k) with d(S,f) = --ideal"},
      {"compare", "evrard / m! / Gamma bounds, or the bounds table without --m"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--set", a.set, "set, e.g. \"Z x 2Z\"");
    sub->add_option("--poly", a.poly, "polynomial");
    sub->add_option("--m", a.m, "partial degrees, comma separated");
    sub->add_option("--k", a.k, "total degree");
    sub->add_option("--prime", a.prime, "prime");
    sub->add_option("--ideal", a.ideal, "ideal generator, e.g. 8 or 2^3");
    sub->add_option("--method", a.method, "grid|grid-improved|points|two-point|coeff|general|all|auto");
    sub->add_option("--point", a.point, "start point, comma separated");
    sub->add_option("--length", a.length, "ordering length");
    sub->add_option("--truncate", a.truncate, "truncate ordering valuations at this exponent");
    sub->add_option("--cap", a.cap, "largest residue refinement exponent (default 24, or FIXDIV_CAP)");
    sub->add_option("--seed", a.seed, "seed for a pseudo-random start point");
    sub->add_flag("--json", a.json, "JSON output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    const Report r = Runner(verb, a).run();
    emit(verb, a, r, out);
    return exit_code::ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return exit_code::cap_exceeded;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::domain;
  }
}

}  // namespace fixdiv
