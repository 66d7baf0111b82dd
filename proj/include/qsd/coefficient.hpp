#pragma once

// The scalar field Q(s), with q = s^2. Every coefficient in the engine lives here.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsd/errors.hpp"
#include "qsd/poly.hpp"

namespace qsd {

/// A point q in (0, 1) at which coefficients are specialized.
class RationalPoint {
 public:
  explicit RationalPoint(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
    if (!(q_ > 0 && q_ < 1)) throw DomainError("q-point must lie in (0,1): " + q_.get_str());
  }
  static RationalPoint parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'", 0);
    return RationalPoint(v);
  }
  const mpq_class& q() const { return q_; }

 private:
  mpq_class q_;
};

/// Exact rational function num(s)/den(s). Canonical: den monic, gcd(num, den) = 1, zero is 0/1.
class Coefficient {
 public:
  Coefficient() : den_(1) {}
  Coefficient(long c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  Coefficient(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("coefficient with zero denominator");
    normalize();
  }

  static Coefficient s_power(int k) {
    return k >= 0 ? Coefficient(Poly::monomial(1, k), Poly(1))
                  : Coefficient(Poly(1), Poly::monomial(1, -k));
  }
  static Coefficient q_power(int k) { return s_power(2 * k); }
  static const Coefficient& zero() {
    static const Coefficient z;
    return z;
  }
  static const Coefficient& one() {
    static const Coefficient o(1);
    return o;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  /// True iff only integer powers of q occur.
  bool is_even() const { return num_.is_even() && den_.is_even(); }

  Coefficient& operator+=(const Coefficient& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
      if (!den_.is_one()) normalize();
      return *this;
    }
    if (den_.is_monomial() && o.den_.is_monomial()) {
      const int a = den_.degree(), b = o.den_.degree();
      const int m = a > b ? a : b;
      num_ = num_.shifted(m - a) + o.num_.shifted(m - b);
      den_ = Poly::monomial(1, m);
      normalize();
      return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) { return *this += -o; }
  Coefficient& operator*=(const Coefficient& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = Coefficient();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  Coefficient& operator/=(const Coefficient& o) {
    if (o.is_zero()) throw DomainError("division by zero coefficient");
    return *this *= o.inverse();
  }
  Coefficient inverse() const {
    if (is_zero()) throw DomainError("division by zero coefficient");
    return Coefficient(den_, num_);
  }
  Coefficient pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Coefficient r = one(), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend Coefficient operator-(Coefficient a) {
    a.num_ = -a.num_;
    return a;
  }
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  /// Exact value at the point. Odd powers of s need q to be a rational square.
  mpq_class evaluate(const RationalPoint& p) const {
    mpq_class x;
    Poly num = num_, den = den_;
    if (is_even()) {
      x = p.q();
      num = halve(num);
      den = halve(den);
    } else {
      mpz_class a = p.q().get_num(), b = p.q().get_den();
      if (!mpz_perfect_square_p(a.get_mpz_t()) || !mpz_perfect_square_p(b.get_mpz_t()))
        throw DomainError("q^(1/2) is irrational at q = " + p.q().get_str());
      x = mpq_class(sqrt(a), sqrt(b));
    }
    const mpq_class d = den.evaluate(x);
    if (sgn(d) == 0) throw PoleError("coefficient has a pole at q = " + p.q().get_str());
    return num.evaluate(x) / d;
  }

  /// Canonical text, e.g. "-q/(1-q^4)", "q^(1/2)", "(1-q^4)^3".
  std::string str() const;
  static Coefficient parse(std::string_view text);

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (den_.is_monomial()) {
      const int t = std::min(den_.degree(), num_.valuation());
      if (t > 0) {
        num_ = num_.shifted(-t);
        den_ = den_.shifted(-t);
      }
    } else {
      Poly g = Poly::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
      }
    }
    if (den_.lead() != 1) {
      const mpq_class inv = 1 / den_.lead();
      num_ *= inv;
      den_ *= inv;
    }
  }
  static Poly halve(const Poly& p) {
    std::vector<mpq_class> c;
    for (int k = 0; k <= p.degree(); k += 2) c.push_back(p.coeff(k));
    return Poly(std::move(c));
  }

  Poly num_, den_;
};

namespace detail {

inline std::string q_power_str(int s_exp) {
  if (s_exp % 2 != 0) {
    return "q^(" + std::to_string(s_exp) + "/2)";
  }
  const int e = s_exp / 2;
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

inline std::string poly_str(const Poly& p) {
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    mpq_class c = p.coeff(k);
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      out += "-";
      c = -c;
    } else if (!out.empty()) {
      out += "+";
    }
    if (k == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += q_power_str(k);
    }
  }
  return out;
}

// Splits p (constant term 1) into (1 -/+ q^k)^m factors, largest k first, and a remainder.
inline void factor_into(Poly p, std::vector<std::string>& parts) {
  for (int k = p.degree() / 2; k >= 1 && p.degree() > 0; --k) {
    for (int sign : {-1, +1}) {
      Poly f = Poly(1) + Poly::monomial(sign, 2 * k);
      int mult = 0;
      while (p.degree() >= f.degree()) {
        auto [quo, rem] = Poly::divmod(p, f);
        if (!rem.is_zero()) break;
        p = std::move(quo);
        ++mult;
      }
      if (mult == 0) continue;
      std::string s = std::string("(1") + (sign < 0 ? "-" : "+") + q_power_str(2 * k) + ")";
      if (mult > 1) s += "^" + std::to_string(mult);
      parts.push_back(std::move(s));
    }
  }
  if (!p.is_one()) parts.push_back("(" + poly_str(p) + ")");
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace detail

inline std::string Coefficient::str() const {
  if (is_zero()) return "0";
  const int vn = num_.valuation(), vd = den_.valuation();
  Poly n = num_.shifted(-vn), d = den_.shifted(-vd);
  mpq_class r = n.coeff(0) / d.coeff(0);
  n *= mpq_class(1 / n.coeff(0));
  d *= mpq_class(1 / d.coeff(0));

  std::vector<std::string> top, bottom;
  if (abs(r) != 1) top.push_back(mpq_class(abs(r)).get_str());
  if (vn - vd != 0) top.push_back(detail::q_power_str(vn - vd));
  detail::factor_into(n, top);
  detail::factor_into(d, bottom);

  std::string out = sgn(r) < 0 ? "-" : "";
  out += top.empty() ? "1" : detail::join(top, "*");
  if (!bottom.empty()) {
    out += "/";
    out += bottom.size() == 1 ? bottom[0] : "(" + detail::join(bottom, "*") + ")";
  }
  return out;
}

namespace detail {

// Recursive-descent parser for the scalar grammar: integers, q, s, + - * / ^ and parentheses.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view t) : t_(t) {}

  Coefficient parse_all() {
    Coefficient c = expr();
    skip();
    if (p_ != t_.size()) fail("unexpected character");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in coefficient '" + std::string(t_) + "'", p_);
  }
  void skip() {
    while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < t_.size() && t_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  Coefficient expr() {
    Coefficient acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  Coefficient term() {
    Coefficient acc = unary();
    for (;;) {
      if (eat('*')) acc *= unary();
      else if (eat('/')) {
        Coefficient d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else return acc;
    }
  }
  Coefficient unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  long integer() {
    skip();
    const std::size_t start = p_;
    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) ++p_;
    if (start == p_) fail("expected integer");
    return std::stol(std::string(t_.substr(start, p_ - start)));
  }
  // Exponent as a fraction num/den with den in {1, 2}.
  std::pair<long, long> exponent() {
    if (eat('(')) {
      const bool neg = eat('-');
      long a = integer(), b = 1;
      if (eat('/')) b = integer();
      if (!eat(')')) fail("expected ')'");
      if (b != 1 && b != 2) fail("exponent denominator must be 1 or 2");
      return {neg ? -a : a, b};
    }
    const bool neg = eat('-');
    const long a = integer();
    return {neg ? -a : a, 1};
  }
  Coefficient power() {
    skip();
    if (p_ < t_.size() && (t_[p_] == 'q' || t_[p_] == 's')) {
      const int unit = t_[p_] == 'q' ? 2 : 1;
      ++p_;
      if (!eat('^')) return Coefficient::s_power(unit);
      auto [a, b] = exponent();
      if (unit == 1 && b != 1) fail("fractional power of s");
      return Coefficient::s_power(static_cast<int>(a * unit / b));
    }
    Coefficient base;
    if (eat('(')) {
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else {
      base = Coefficient(integer());
    }
    if (eat('^')) {
      auto [a, b] = exponent();
      if (b != 1) fail("fractional power of a non-q base");
      if (a < 0 && base.is_zero()) fail("division by zero");
      base = base.pow(static_cast<int>(a));
    }
    return base;
  }

  std::string_view t_;
  std::size_t p_ = 0;
};

}  // namespace detail

inline Coefficient Coefficient::parse(std::string_view text) {
  return detail::ScalarParser(text).parse_all();
}

}  // namespace qsd
