#pragma once

// Rational-function expressions in q.
//
//   expr   := term { ("+" | "-") term }
//   term   := factor { ("*" | "/") factor }
//   factor := "-" factor | atom [ "^" exponent ]
//   atom   := "(" expr ")" | "q" | "m" | integer
//
// An exponent is an atom that folds to a nonnegative integer constant, so
// "q^3", "q^m" and "q^(m-1)" are all accepted. Whitespace is insignificant.
// Division is exact rational-function division; only the final value has to
// be a power series (so "q/q" is fine and "1/q" is not).
//
// render_ratfun prints ascending powers, e.g. "(1 + 2*q)/(1 - q - q^2)", in
// a form parse_ratfun reads back to the same value.

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "mcong/modular.hpp"
#include "mcong/ratfun.hpp"

namespace mcong {

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view src, std::optional<std::uint64_t> m) : src_(src), m_(m) {}

  Fraction parse_all() {
    skip_ws();
    if (eof()) fail("empty expression");
    Fraction v = expr();
    skip_ws();
    if (!eof()) fail(peek() == ')' ? "unbalanced ')'" : "unexpected character");
    return v;
  }

 private:
  static constexpr std::uint64_t kMaxExponent = 100000;

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return eof() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw SyntaxError(what, pos); }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Fraction expr() {
    Fraction v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Fraction term() {
    Fraction v = factor();
    for (;;) {
      skip_ws();
      const std::size_t op_pos = pos_;
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        Fraction d = factor();
        if (d.is_zero()) fail_at("division by zero", op_pos);
        v = v / d;
      } else {
        return v;
      }
    }
  }

  Fraction factor() {
    if (accept('-')) return -factor();
    Fraction base = atom();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t exp_pos = pos_;
    const Fraction e = atom();
    if (!e.is_polynomial() || e.num().degree() > 0) fail_at("exponent must be a constant", exp_pos);
    const Rational ev = e.num().at_zero();
    if (ev.get_den() != 1 || ev < 0) fail_at("exponent must be a nonnegative integer", exp_pos);
    if (ev > kMaxExponent) fail_at("exponent too large", exp_pos);
    return power(base, ev.get_num().get_ui());
  }

  static Fraction power(Fraction base, std::uint64_t e) {
    Fraction r(Rational(1));
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return r;
  }

  Fraction atom() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Fraction v = expr();
      skip_ws();
      if (!accept(')')) fail(eof() ? "missing ')'" : "expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Fraction(poly_q());
    }
    if (c == 'm') {
      ++pos_;
      if (!m_) throw UnboundM(start);
      return Fraction(Rational(static_cast<unsigned long>(*m_)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      Integer v(std::string(src_.substr(start, pos_ - start)));
      return Fraction(Rational(v));
    }
    fail("unexpected character");
  }

  std::string_view src_;
  std::optional<std::uint64_t> m_;
  std::size_t pos_ = 0;
};

inline void append_term(std::ostringstream& os, bool first, const Rational& c, std::size_t e) {
  const bool negative = c < 0;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  const Rational a = abs(c);
  if (e == 0) {
    os << a.get_str();
    return;
  }
  if (a != 1) os << a.get_str() << '*';
  os << 'q';
  if (e > 1) os << '^' << e;
}

inline std::size_t nonzero_terms(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += c != 0;
  return n;
}

}  // namespace detail

/// Parses without requiring a power series; the parser's working type.
inline Fraction parse_fraction(std::string_view source, std::optional<std::uint64_t> m = std::nullopt) {
  return detail::ExprParser(source, m).parse_all();
}

inline RatFun parse_ratfun(std::string_view source, std::optional<std::uint64_t> m = std::nullopt) {
  Fraction f = parse_fraction(source, m);
  if (f.den().at_zero() == 0)
    throw NonSeriesResult("expression '" + std::string(source) + "' is not a power series (denominator vanishes at q = 0)");
  return RatFun(std::move(f));
}

/// A constant expression such as "3", "-1/2" or "m-1".
inline Rational parse_constant(std::string_view source, std::optional<std::uint64_t> m = std::nullopt) {
  const Fraction f = parse_fraction(source, m);
  if (!f.is_polynomial() || f.num().degree() > 0) throw SyntaxError("expected a constant", 0);
  return f.num().at_zero() / f.den().at_zero();
}

inline std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < p.size(); ++e) {
    if (p[e] == 0) continue;
    detail::append_term(os, first, p[e], e);
    first = false;
  }
  return os.str();
}

inline std::string render_ratfun(const RatFun& f) {
  if (f.is_polynomial()) return render_poly(f.num() * Rational(1 / f.den().at_zero()));
  std::string num = render_poly(f.num());
  if (detail::nonzero_terms(f.num()) > 1) num = "(" + num + ")";
  return num + "/(" + render_poly(f.den()) + ")";
}

inline Poly lift(const ModPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (Residue c : p) v.emplace_back(static_cast<unsigned long>(c));
  return Poly(std::move(v));
}

inline std::string render_mod_poly(const ModPoly& p) { return render_poly(lift(p)); }

inline std::string render_mod_ratfun(const ModRatFun& f) {
  if (f.num.empty()) return "0";
  if (f.den.size() <= 1) return render_mod_poly(f.num);
  std::string num = render_mod_poly(f.num);
  if (detail::nonzero_terms(lift(f.num)) > 1) num = "(" + num + ")";
  return num + "/(" + render_mod_poly(f.den) + ")";
}

}  // namespace mcong
