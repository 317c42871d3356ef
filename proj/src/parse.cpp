// Expression parser and canonical formatter for polynomials, forms and points.

#include <algorithm>
#include <cctype>
#include <sstream>

#include "onepoint/polyforms.hpp"

namespace onepoint {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, const std::vector<std::string>& vars)
      : s_(text), field_(field), vars_(vars) {}

  MPoly run() {
    MPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly constant(const AlgNum& c) const { return MPoly::constant(field_, vars_, c); }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        MPoly d = unary();
        if (d.degree() > 0) fail("division by a non-constant");
        if (d.is_zero()) throw Error(Errc::DivZero, "division by zero in '" + std::string(s_) + "'");
        acc *= d.terms().begin()->second.inverse();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(AlgNum(field_, Rat(Int(std::string(s_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end())
        return MPoly::variable(field_, vars_, static_cast<std::size_t>(it - vars_.begin()));
      if (name == "w") return constant(AlgNum::generator(field_));
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const FieldPtr& field_;
  const std::vector<std::string>& vars_;
};

std::string format_monomial(const Exp& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

MPoly parse_poly(std::string_view text, const FieldPtr& field, const std::vector<std::string>& vars) {
  return Parser(text, field, vars).run();
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = format_monomial(e, vars_);
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      const Rat& r = c.rational();
      negative = r < 0;
      Rat mag = abs(r);
      if (mono.empty())
        body = format_rat(mag);
      else if (mag == 1)
        body = mono;
      else
        body = format_rat(mag) + "*" + mono;
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Form3 parse_form(std::string_view text, const FieldPtr& field) {
  return Form3(parse_poly(text, field, xyz_vars()));
}

std::string format_form(const Form3& f) { return f.to_string(); }

Point2 parse_point(std::string_view text, const FieldPtr& field) {
  std::string s(text);
  auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error(Errc::ParseError, "point must look like (a : b : c): '" + s + "'");
  std::string inner = s.substr(open + 1, close - open - 1);
  std::vector<std::string> parts;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw Error(Errc::ParseError, "point needs three coordinates: '" + s + "'");
  std::array<AlgNum, 3> v;
  for (std::size_t i = 0; i < 3; ++i) {
    MPoly c = parse_poly(parts[i], field, {});
    v[i] = c.is_zero() ? AlgNum(field) : c.terms().begin()->second;
  }
  return Point2(v);
}

}  // namespace onepoint
