#include "dpstab/wpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dpstab {

ParseError::ParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& names)
      : s_(text), names_(names) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == "t") throw ParseError("variable name 't' is reserved", 0);
      for (size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw ParseError("duplicate variable '" + names[i] + "'", 0);
    }
  }

  WPoly parse() {
    WPoly p = parse_poly();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WPoly one() const {
    return WPoly::monomial(nvars(), Monomial(names_.size(), 0), TPoly(1));
  }

  int nvars() const { return static_cast<int>(names_.size()); }

  WPoly parse_poly() {
    WPoly acc(nvars());
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    acc += parse_term(neg);
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        acc += parse_term(c == '-');
      } else {
        break;
      }
    }
    return acc;
  }

  WPoly parse_term(bool negate) {
    WPoly value = one();
    bool any = false;
    skip_ws();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Rational c = parse_coeff();
      value *= TPoly(c);
      any = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
    }
    for (;;) {
      char c = peek();
      if (c == '(' || c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
        value = value * parse_factor();
        any = true;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("expected a term", pos_);
    return negate ? -value : value;
  }

  Rational parse_coeff() {
    std::string num = parse_digits();
    if (eat('/')) {
      skip_ws();
      std::string den = parse_digits();
      return Rational(num) / Rational(den);
    }
    return Rational(num);
  }

  std::string parse_digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return s_.substr(start, pos_ - start);
  }

  int parse_exponent() {
    if (eat('^')) {
      std::string d = parse_digits();
      long e = std::stol(d);
      return static_cast<int>(e);
    }
    return 1;
  }

  WPoly parse_factor() {
    if (eat('(')) {
      WPoly inner = parse_poly();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    size_t start = pos_;
    std::string id = parse_identifier();
    if (id == "t") {
      int e = parse_exponent();
      return WPoly::monomial(nvars(), Monomial(names_.size(), 0), TPoly::term(Rational(1), e));
    }
    for (size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == id) {
        int e = parse_exponent();
        Monomial m(names_.size(), 0);
        m[i] = e;
        return WPoly::monomial(nvars(), m, TPoly(1));
      }
    }
    throw ParseError("undeclared variable '" + id + "'", start);
  }

  std::string parse_identifier() {
    skip_ws();
    size_t start = pos_;
    if (pos_ >= s_.size() ||
        !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      throw ParseError("expected an identifier", pos_);
    ++pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  size_t pos_ = 0;
};

void print_one(std::ostream& os, const Rational& c, int te, const Monomial& m,
               const std::vector<std::string>& names, bool first) {
  Rational a = abs(c);
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  bool have_factor = te > 0 || total_degree(m) > 0;
  bool printed = false;
  if (a != Rational(1) || !have_factor) {
    os << a.str();
    printed = true;
  }
  if (te > 0) {
    if (printed) os << "*";
    os << "t";
    if (te > 1) os << "^" << te;
    printed = true;
  }
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (printed) os << "*";
    os << names[i];
    if (m[i] > 1) os << "^" << m[i];
    printed = true;
  }
}

}  // namespace

std::string print_wpoly(const WPoly& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    for (int e = 0; e <= c.degree(); ++e) {
      if (c.coeff(e).is_zero()) continue;
      print_one(os, c.coeff(e), e, m, names, first);
      first = false;
    }
  }
  return os.str();
}

WPoly parse_wpoly(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

WPoly parse_wpoly(const std::string& text, const WeightSystem& ws,
                  const std::vector<std::string>& names, long degree) {
  if (static_cast<int>(names.size()) != ws.n())
    throw std::invalid_argument("parse_wpoly: variable count does not match weights");
  WPoly p = Parser(text, names).parse();
  p.check_homogeneous(ws, degree, &names);
  return p;
}

}  // namespace dpstab
