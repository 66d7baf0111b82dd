#pragma once

// Expression grammar shared by the CLI and the round-trip tests:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*' | '/' | juxtaposition) factor)*
//   factor := '-' factor | atom ['^' exponent]
//   atom   := integer | q | s | z[i,j] | zs[i,j] | f0 | E[i] | F[i] | K[i] | Kinv[i] | '(' expr ')'
// Exponents are integers, optionally "(a/2)" on q.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "qsd/algebra.hpp"
#include "qsd/coefficient.hpp"
#include "qsd/element.hpp"
#include "qsd/errors.hpp"
#include "qsd/integral.hpp"
#include "qsd/uq.hpp"

namespace qsd {

using Parsed = std::variant<Coefficient, Element, DElement, UqExpr>;

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const DomainAlgebra& A) : t_(text), A_(A), D_(A) {}

  Parsed parse() {
    skip();
    if (p_ == t_.size()) fail("empty expression");
    Value v = expr();
    skip();
    if (p_ != t_.size()) fail("unexpected character '" + std::string(1, t_[p_]) + "'");
    switch (v.kind) {
      case Kind::scalar:
        return v.s;
      case Kind::pol:
        return v.pol;
      case Kind::d:
        return v.d;
      case Kind::uq:
        return v.uq;
    }
    return v.s;
  }

 private:
  enum class Kind { scalar, pol, d, uq };
  struct Value {
    Kind kind = Kind::scalar;
    Coefficient s;
    Element pol;
    DElement d;
    UqExpr uq;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, p_); }

  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool peek(char c) {
    skip();
    return p_ < t_.size() && t_[p_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(std::string_view w) {
    skip();
    if (t_.substr(p_, w.size()) != w) return false;
    p_ += w.size();
    return true;
  }
  long integer() {
    skip();
    const std::size_t start = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
    if (start == p_) fail("expected integer");
    if (p_ - start > 9) fail("integer too large");
    return std::stol(std::string(t_.substr(start, p_ - start)));
  }

  // ----- value algebra -----

  Value scalar(const Coefficient& c) {
    Value v;
    v.s = c;
    return v;
  }
  static Element as_pol(const Value& v) { return v.kind == Kind::scalar ? Element(v.s) : v.pol; }
  static UqExpr as_uq(const Value& v) { return v.kind == Kind::scalar ? UqExpr(v.s) : v.uq; }

  [[noreturn]] void type_error(const char* op, const Value& a, const Value& b) const {
    static const char* names[] = {"scalar", "polynomial", "f0-sandwich", "U_q"};
    throw TypeError(std::string("cannot ") + op + " " + names[static_cast<int>(a.kind)] + " and " +
                    names[static_cast<int>(b.kind)] + " (at " + std::to_string(p_) + ")");
  }

  Value add(Value a, const Value& b, bool subtract) {
    const Coefficient sign(subtract ? -1 : 1);
    if (a.kind == Kind::scalar && b.kind == Kind::scalar) return scalar(a.s + sign * b.s);
    const bool pa = a.kind == Kind::scalar || a.kind == Kind::pol;
    const bool pb = b.kind == Kind::scalar || b.kind == Kind::pol;
    if (pa && pb) {
      Value v;
      v.kind = Kind::pol;
      v.pol = as_pol(a);
      v.pol.add(as_pol(b), sign);
      return v;
    }
    const bool ua = a.kind == Kind::scalar || a.kind == Kind::uq;
    const bool ub = b.kind == Kind::scalar || b.kind == Kind::uq;
    if (ua && ub) {
      Value v;
      v.kind = Kind::uq;
      v.uq = as_uq(a) + sign * as_uq(b);
      return v;
    }
    if (a.kind == Kind::d && b.kind == Kind::d) {
      a.d.add(b.d, sign);
      return a;
    }
    type_error(subtract ? "subtract" : "add", a, b);
  }

  Value mul(Value a, Value b) {
    if (a.kind == Kind::scalar && b.kind == Kind::scalar) return scalar(a.s * b.s);
    if (a.kind == Kind::scalar) return scale(std::move(b), a.s);
    if (b.kind == Kind::scalar) return scale(std::move(a), b.s);
    Value v;
    v.kind = a.kind;
    if (a.kind == Kind::pol && b.kind == Kind::pol) {
      v.pol = A_.multiply(a.pol, b.pol);
    } else if (a.kind == Kind::uq && b.kind == Kind::uq) {
      v.uq = a.uq * b.uq;
    } else if (a.kind == Kind::pol && b.kind == Kind::d) {
      v.kind = Kind::d;
      v.d = D_.absorb_left(a.pol, b.d);
    } else if (a.kind == Kind::d && b.kind == Kind::pol) {
      v.d = D_.absorb_right(a.d, b.pol);
    } else if (a.kind == Kind::d && b.kind == Kind::d) {
      v.d = D_.dmul(a.d, b.d);
    } else {
      type_error("multiply", a, b);
    }
    return v;
  }

  static Value scale(Value v, const Coefficient& c) {
    switch (v.kind) {
      case Kind::scalar:
        v.s *= c;
        break;
      case Kind::pol:
        v.pol *= c;
        break;
      case Kind::d:
        v.d = c * v.d;
        break;
      case Kind::uq:
        v.uq = c * v.uq;
        break;
    }
    return v;
  }

  Value power(const Value& base, long e) {
    if (base.kind == Kind::scalar) {
      if (e < 0 && base.s.is_zero()) fail("division by zero");
      return scalar(base.s.pow(static_cast<int>(e)));
    }
    if (e < 0) fail("negative power of a non-scalar");
    if (e > 64) fail("exponent too large");
    Value r = scalar(Coefficient::one());
    for (long k = 0; k < e; ++k) r = mul(std::move(r), base);
    return r;
  }

  // ----- grammar -----

  Value expr() {
    Value acc;
    if (eat('-')) acc = scale(term(), Coefficient(-1));
    else {
      eat('+');
      acc = term();
    }
    for (;;) {
      if (eat('+')) acc = add(std::move(acc), term(), false);
      else if (eat('-')) acc = add(std::move(acc), term(), true);
      else return acc;
    }
  }

  bool starts_atom() {
    skip();
    if (p_ >= t_.size()) return false;
    const char c = t_[p_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'q' || c == 's' ||
           c == 'z' || c == 'f' || c == 'E' || c == 'F' || c == 'K';
  }

  Value term() {
    Value acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = mul(std::move(acc), factor());
      } else if (eat('/')) {
        const std::size_t at = p_;
        Value d = factor();
        if (d.kind != Kind::scalar) {
          p_ = at;
          fail("division by a non-scalar");
        }
        if (d.s.is_zero()) {
          p_ = at;
          fail("division by zero");
        }
        acc = scale(std::move(acc), d.s.inverse());
      } else if (starts_atom()) {
        acc = mul(std::move(acc), factor());
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    if (eat('-')) return scale(factor(), Coefficient(-1));
    skip();
    const bool q_atom = p_ < t_.size() && (t_[p_] == 'q' || t_[p_] == 's');
    const char unit = q_atom ? t_[p_] : 0;
    Value base = atom();
    if (!eat('^')) return base;
    // Exponent: integer, -integer, or (a) / (a/2) / (-a/2).
    long num = 0, den = 1;
    if (eat('(')) {
      const bool neg = eat('-');
      num = integer();
      if (eat('/')) den = integer();
      expect(')');
      if (neg) num = -num;
    } else {
      const bool neg = eat('-');
      num = integer();
      if (neg) num = -num;
    }
    if (den != 1) {
      if (den != 2 || unit != 'q') fail("fractional exponent is only allowed on q, with denominator 2");
      return scalar(Coefficient::s_power(static_cast<int>(num)));
    }
    return power(base, num);
  }

  std::pair<int, int> index_pair() {
    expect('[');
    const long i = integer();
    expect(',');
    const long j = integer();
    expect(']');
    return {static_cast<int>(i), static_cast<int>(j)};
  }
  int index_single() {
    expect('[');
    const long i = integer();
    expect(']');
    return static_cast<int>(i);
  }

  Value atom() {
    skip();
    if (p_ >= t_.size()) fail("unexpected end of input");
    const std::size_t start = p_;
    if (eat('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(t_[p_]))) return scalar(Coefficient(integer()));
    if (eat_word("zs[") || eat_word("z[")) {
      const bool starred = t_[start + 1] == 's';
      --p_;  // back onto '['
      auto [i, j] = index_pair();
      if (i < 1 || j < 1 || j > i || i > A_.n())
        throw IndexError("index [" + std::to_string(i) + "," + std::to_string(j) +
                         "] violates 1 <= j <= i <= " + std::to_string(A_.n()) + " (at " +
                         std::to_string(start) + ")");
      Value v;
      v.kind = Kind::pol;
      v.pol = Element(Word{starred ? Generator::zs(i, j) : Generator::z(i, j)});
      return v;
    }
    if (eat_word("f0")) {
      Value v;
      v.kind = Kind::d;
      v.d = DElement::f0();
      return v;
    }
    UqSym sym{};
    bool is_uq = true;
    if (eat_word("Kinv")) sym = UqSym::Kinv;
    else if (eat_word("K")) sym = UqSym::K;
    else if (eat_word("E")) sym = UqSym::E;
    else if (eat_word("F")) sym = UqSym::F;
    else is_uq = false;
    if (is_uq) {
      const int i = index_single();
      if (i < 1 || i > A_.n())
        throw IndexError("U_q index " + std::to_string(i) + " outside 1.." +
                         std::to_string(A_.n()) + " (at " + std::to_string(start) + ")");
      Value v;
      v.kind = Kind::uq;
      v.uq = UqExpr(UqLetter{sym, i});
      return v;
    }
    if (eat('q')) return scalar(Coefficient::q_power(1));
    if (eat('s')) return scalar(Coefficient::s_power(1));
    fail("unexpected character '" + std::string(1, t_[p_]) + "'");
  }

  std::string_view t_;
  std::size_t p_ = 0;
  const DomainAlgebra& A_;
  DSpace D_;
};

}  // namespace detail

inline Parsed parse_expression(std::string_view text, const DomainAlgebra& A) {
  return detail::ExpressionParser(text, A).parse();
}

/// A plain Pol(p^-)_q expression, normalized. f0 or U_q symbols raise TypeError.
inline Element parse_element(std::string_view text, const DomainAlgebra& A) {
  Parsed v = parse_expression(text, A);
  if (auto* c = std::get_if<Coefficient>(&v)) return Element(*c);
  if (auto* e = std::get_if<Element>(&v)) return A.normal_form(*e);
  if (std::holds_alternative<DElement>(v)) throw TypeError("f0 is not allowed in a polynomial expression");
  throw TypeError("expected a polynomial expression, got a U_q expression");
}

inline DElement parse_delement(std::string_view text, const DomainAlgebra& A) {
  Parsed v = parse_expression(text, A);
  if (auto* d = std::get_if<DElement>(&v)) return *d;
  throw TypeError("expected an expression containing f0");
}

inline UqExpr parse_uq(std::string_view text, const DomainAlgebra& A) {
  Parsed v = parse_expression(text, A);
  if (auto* u = std::get_if<UqExpr>(&v)) return *u;
  if (auto* c = std::get_if<Coefficient>(&v)) return UqExpr(*c);
  throw TypeError("expected a U_q expression");
}

}  // namespace qsd
