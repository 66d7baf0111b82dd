#pragma once

// U_q sp_2n as formal words in E_i, F_i, K_i, K_i^{-1}.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsd/coefficient.hpp"
#include "qsd/errors.hpp"

namespace qsd {

/// Cartan matrix of type C_n (long root last) and its symmetrizers.
class CartanData {
 public:
  explicit CartanData(int n) : n_(n) {
    if (n < 1) throw DomainError("rank must be >= 1");
  }
  int n() const { return n_; }
  int a(int i, int j) const {
    if (i == j) return 2;
    if (i + 1 == j) return (i == n_ - 1) ? -2 : -1;
    if (j + 1 == i) return -1;
    return 0;
  }
  int d(int i) const { return i == n_ ? 2 : 1; }

 private:
  int n_;
};

enum class UqSym : std::uint8_t { E, F, K, Kinv };

struct UqLetter {
  UqSym sym = UqSym::K;
  int index = 1;

  static UqLetter E(int i) { return {UqSym::E, i}; }
  static UqLetter F(int i) { return {UqSym::F, i}; }
  static UqLetter K(int i) { return {UqSym::K, i}; }
  static UqLetter Kinv(int i) { return {UqSym::Kinv, i}; }

  bool is_k() const { return sym == UqSym::K || sym == UqSym::Kinv; }
  int k_exponent() const { return sym == UqSym::K ? 1 : sym == UqSym::Kinv ? -1 : 0; }

  void check(int n) const {
    if (index < 1 || index > n)
      throw IndexError("U_q generator index " + std::to_string(index) + " outside 1.." +
                       std::to_string(n));
  }

  std::string str() const {
    static const char* names[] = {"E", "F", "K", "Kinv"};
    return std::string(names[static_cast<int>(sym)]) + "[" + std::to_string(index) + "]";
  }
  friend auto operator<=>(const UqLetter&, const UqLetter&) = default;
};

using UqWord = std::vector<UqLetter>;

inline std::string uq_word_str(const UqWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) s += l.str();
  return s;
}

/// Linear combination of U_q words. Words are kept as written; no PBW normal form.
class UqExpr {
 public:
  using Map = std::map<UqWord, Coefficient>;

  UqExpr() = default;
  UqExpr(const Coefficient& c) { add({}, c); }  // NOLINT(google-explicit-constructor)
  UqExpr(UqLetter l) { add({l}, Coefficient::one()); }  // NOLINT(google-explicit-constructor)
  UqExpr(UqWord w, const Coefficient& c) { add(std::move(w), c); }

  void add(const UqWord& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UqExpr& operator+=(const UqExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  UqExpr& operator-=(const UqExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend UqExpr operator+(UqExpr a, const UqExpr& b) { return a += b; }
  friend UqExpr operator-(UqExpr a, const UqExpr& b) { return a -= b; }
  friend UqExpr operator*(const UqExpr& a, const UqExpr& b) {
    UqExpr r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        UqWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add(w, ca * cb);
      }
    return r;
  }
  friend UqExpr operator*(const Coefficient& c, UqExpr a) {
    if (c.is_zero()) return {};
    for (auto& [w, v] : a.terms_) v *= c;
    return a;
  }
  friend bool operator==(const UqExpr& a, const UqExpr& b) { return a.terms_ == b.terms_; }

  void check(int n) const {
    for (const auto& [w, c] : terms_)
      for (const auto& l : w) l.check(n);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (w.empty()) out += c.str();
      else if (c.is_one()) out += uq_word_str(w);
      else out += c.str() + " * " + uq_word_str(w);
    }
    return out;
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
      auto word = nlohmann::json::array();
      for (const auto& l : w) word.push_back(l.str());
      arr.push_back({{"word", word}, {"coeff", c.str()}});
    }
    return arr;
  }

 private:
  Map terms_;
};

inline UqExpr uq_power(UqLetter l, int e) {
  return UqExpr(UqWord(static_cast<std::size_t>(e), l), Coefficient::one());
}

/// eps(E) = eps(F) = 0, eps(K^{+-1}) = 1, multiplicative on words.
inline Coefficient counit(const UqExpr& x) {
  Coefficient r;
  for (const auto& [w, c] : x.terms()) {
    bool k_only = true;
    for (const auto& l : w) k_only = k_only && l.is_k();
    if (k_only) r += c;
  }
  return r;
}

namespace detail {

template <class F>
UqExpr anti_map(const UqExpr& x, F&& image) {
  UqExpr r;
  for (const auto& [w, c] : x.terms()) {
    UqExpr acc(Coefficient::one());
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * image(*it);
    r += c * acc;
  }
  return r;
}

}  // namespace detail

/// S(E_i) = -K_i^{-1}E_i, S(F_i) = -F_i K_i, S(K_i^{+-1}) = K_i^{-+1}; anti-multiplicative.
inline UqExpr antipode(const UqExpr& x) {
  return detail::anti_map(x, [](const UqLetter& l) -> UqExpr {
    switch (l.sym) {
      case UqSym::E:
        return UqExpr(UqWord{UqLetter::Kinv(l.index), l}, Coefficient(-1));
      case UqSym::F:
        return UqExpr(UqWord{l, UqLetter::K(l.index)}, Coefficient(-1));
      case UqSym::K:
        return UqLetter::Kinv(l.index);
      case UqSym::Kinv:
        return UqLetter::K(l.index);
    }
    return {};
  });
}

/// The involution: K* = K, E_j* = +-K_j F_j, F_j* = +-E_j K_j^{-1} (minus for j = n).
/// Coefficients are real rational functions, so they are left alone.
inline UqExpr star(const UqExpr& x, const CartanData& cd) {
  return detail::anti_map(x, [&](const UqLetter& l) -> UqExpr {
    const Coefficient sign(l.index == cd.n() ? -1 : 1);
    switch (l.sym) {
      case UqSym::E:
        return UqExpr(UqWord{UqLetter::K(l.index), UqLetter::F(l.index)}, sign);
      case UqSym::F:
        return UqExpr(UqWord{UqLetter::E(l.index), UqLetter::Kinv(l.index)}, sign);
      case UqSym::K:
      case UqSym::Kinv:
        return l;
    }
    return {};
  });
}

/// Moves every K^{+-1} to the front using K_i E_j = q^{d_i a_ij} E_j K_i (and the F analogue),
/// cancels K_i K_i^{-1}, and writes the K part in index order. E/F order is untouched.
inline UqExpr collect_k(const UqExpr& x, const CartanData& cd) {
  UqExpr r;
  for (const auto& [w, c] : x.terms()) {
    std::vector<int> k(static_cast<std::size_t>(cd.n()) + 1, 0);
    UqWord rest;
    int qexp = 0;
    for (const auto& l : w) {
      if (l.is_k()) {
        // Move K_i^e left past every E/F letter already in `rest`.
        for (const auto& m : rest) {
          const int t = cd.d(l.index) * cd.a(l.index, m.index) * l.k_exponent();
          qexp += m.sym == UqSym::E ? -t : t;
        }
        k[l.index] += l.k_exponent();
      } else {
        rest.push_back(l);
      }
    }
    UqWord out;
    for (int i = 1; i <= cd.n(); ++i)
      for (int e = 0; e < std::abs(k[i]); ++e)
        out.push_back(k[i] > 0 ? UqLetter::K(i) : UqLetter::Kinv(i));
    out.insert(out.end(), rest.begin(), rest.end());
    r.add(out, c * Coefficient::q_power(qexp));
  }
  return r;
}

/// S(x)^*, with K letters collected in front.
inline UqExpr antipode_star(const UqExpr& x, const CartanData& cd) {
  return collect_k(star(antipode(x), cd), cd);
}

/// Symmetric q-integer [m]_t for t = q^d.
inline Coefficient q_integer(int m, int d) {
  return (Coefficient::q_power(d * m) - Coefficient::q_power(-d * m)) /
         (Coefficient::q_power(d) - Coefficient::q_power(-d));
}
inline Coefficient q_factorial(int m, int d) {
  Coefficient r = Coefficient::one();
  for (int k = 1; k <= m; ++k) r *= q_integer(k, d);
  return r;
}
inline Coefficient q_binomial(int m, int r, int d) {
  return q_factorial(m, d) / (q_factorial(r, d) * q_factorial(m - r, d));
}

struct UqRelation {
  std::string name;
  UqExpr lhs, rhs;
};

/// All defining relations of U_q sp_2n, with the quantized Serre relations in Gaussian-binomial form.
inline std::vector<UqRelation> uq_relations(const CartanData& cd) {
  std::vector<UqRelation> out;
  const int n = cd.n();
  const UqExpr one(Coefficient::one());
  auto E = UqLetter::E, F = UqLetter::F, K = UqLetter::K, Ki = UqLetter::Kinv;
  auto idx = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  for (int i = 1; i <= n; ++i) {
    out.push_back({"K[" + std::to_string(i) + "]Kinv", UqExpr(K(i)) * Ki(i), one});
    out.push_back({"Kinv[" + std::to_string(i) + "]K", UqExpr(Ki(i)) * K(i), one});
    for (int j = i + 1; j <= n; ++j)
      out.push_back({"KK " + idx(i, j), UqExpr(K(i)) * K(j), UqExpr(K(j)) * K(i)});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int e = cd.d(i) * cd.a(i, j);
      out.push_back({"KE " + idx(i, j), UqExpr(K(i)) * E(j),
                     Coefficient::q_power(e) * (UqExpr(E(j)) * K(i))});
      out.push_back({"KF " + idx(i, j), UqExpr(K(i)) * F(j),
                     Coefficient::q_power(-e) * (UqExpr(F(j)) * K(i))});
      UqExpr rhs;
      if (i == j) {
        const Coefficient c = (Coefficient::q_power(cd.d(i)) - Coefficient::q_power(-cd.d(i))).inverse();
        rhs = c * (UqExpr(K(i)) - UqExpr(Ki(i)));
      }
      out.push_back({"EF " + idx(i, j), UqExpr(E(i)) * F(j) - UqExpr(F(j)) * E(i), rhs});
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int m = 1 - cd.a(i, j);
      for (auto X : {E, F}) {
        UqExpr lhs;
        for (int r = 0; r <= m; ++r) {
          const Coefficient c = (r % 2 ? Coefficient(-1) : Coefficient(1)) * q_binomial(m, r, cd.d(i));
          lhs += c * (uq_power(X(i), m - r) * X(j) * uq_power(X(i), r));
        }
        out.push_back({std::string("Serre ") + (X(1).sym == UqSym::E ? "E " : "F ") + idx(i, j),
                       lhs, UqExpr()});
      }
    }
  return out;
}

/// E_i, F_i, K_i, K_i^{-1} for i = 1..n.
inline std::vector<UqLetter> uq_generators(int n) {
  std::vector<UqLetter> out;
  for (int i = 1; i <= n; ++i) out.push_back(UqLetter::E(i));
  for (int i = 1; i <= n; ++i) out.push_back(UqLetter::F(i));
  for (int i = 1; i <= n; ++i) out.push_back(UqLetter::K(i));
  for (int i = 1; i <= n; ++i) out.push_back(UqLetter::Kinv(i));
  return out;
}

}  // namespace qsd
