#pragma once

// Dense univariate polynomials over Q in the symbol s.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qsd {

class Poly {
 public:
  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.emplace_back(c);
  }
  Poly(const mpq_class& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) c_.push_back(c);
  }
  explicit Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// c * s^k
  static Poly monomial(const mpq_class& c, int k) {
    Poly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, mpq_class(0));
    p.c_.back() = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : mpq_class(0);
  }
  const mpq_class& lead() const { return c_.back(); }

  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (sgn(c_[k]) != 0) return static_cast<int>(k);
    return 0;
  }
  bool is_monomial() const {
    return !c_.empty() && valuation() == degree();
  }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// True iff only even powers of s occur.
  bool is_even() const {
    for (std::size_t k = 1; k < c_.size(); k += 2)
      if (sgn(c_[k]) != 0) return false;
    return true;
  }

  /// Multiply by s^k (k may be negative if the low terms vanish).
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    if (k > 0) {
      r.c_.assign(static_cast<std::size_t>(k), mpq_class(0));
      r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    } else {
      if (-k > valuation()) throw std::logic_error("Poly::shifted: negative power");
      r.c_.assign(c_.begin() - k, c_.end());
    }
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const mpq_class& a) {
    if (sgn(a) == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= a;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const mpq_class& b) { return a *= b; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<mpq_class> rem = a.c_;
    std::vector<mpq_class> quo(a.c_.size() - b.c_.size() + 1, mpq_class(0));
    const mpq_class inv_lead = 1 / b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const mpq_class f = rem[k + b.degree()] * inv_lead;
      if (sgn(f) == 0) continue;
      quo[k] = f;
      for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero()) return {};
    return *this * mpq_class(1 / lead());
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  mpq_class evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

}  // namespace qsd
