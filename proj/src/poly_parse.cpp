#include "fixdiv/poly.hpp"

#include <cctype>

namespace fixdiv {

ParseError::ParseError(const std::string& message, std::size_t position)
    : DomainError(message + " at position " + std::to_string(position)), position_(position) {}

std::string variable_name(std::size_t index, std::size_t nvars) {
  if (nvars <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary | '/' INT)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' INT)?
// primary := INT ('/' INT)? | VAR | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Poly f = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Poly expr() {
    Poly f = term();
    while (true) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  Poly term() {
    Poly f = unary();
    while (true) {
      if (accept('*')) {
        f = f * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Integer den = integer_literal();
        if (den == 0) throw ParseError("zero denominator", at);
        f *= Rational(Integer(1), den);
      } else {
        return f;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    Integer e = integer_literal();
    if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Poly primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly f = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational value(num, den);
      value.canonicalize();
      return Poly::constant(nvars_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Poly variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    std::size_t index = 0;
    if (name == "x" || name == "y" || name == "z") {
      index = static_cast<std::size_t>(name[0] == 'x' ? 0 : name[0] == 'y' ? 1 : 2);
      if (nvars_ > 3 && name != "x") throw ParseError("variable '" + name + "' needs the x1..xN form", start);
      if (nvars_ > 3) throw ParseError("variable 'x' is ambiguous for more than 3 variables", start);
    } else if (name.size() > 1 && name[0] == 'x' &&
               name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const unsigned long k = std::stoul(name.substr(1));
      if (k == 0) throw ParseError("variables are numbered from x1", start);
      index = k - 1;
    } else {
      throw ParseError("unknown symbol '" + name + "'", start);
    }
    if (index >= nvars_)
      throw ParseError("variable '" + name + "' out of range for " + std::to_string(nvars_) + " variables", start);
    return Poly::variable(nvars_, index);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw DomainError("a polynomial needs at least one variable");
  return Parser(text, nvars).parse();
}

std::string format(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Exponent& e = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(j, f.nvars());
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace fixdiv
