#pragma once

// Generators z[i,j] / zs[i,j], words in them, and finite linear combinations of words.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsd/coefficient.hpp"
#include "qsd/errors.hpp"

namespace qsd {

enum class Kind : std::uint8_t { Z = 0, ZStar = 1 };

/// z_{ij} or z*_{ij} with 1 <= j <= i <= n.
struct Generator {
  Kind kind = Kind::Z;
  std::uint8_t row = 1;
  std::uint8_t col = 1;

  static Generator z(int i, int j) { return {Kind::Z, narrow(i), narrow(j)}; }
  static Generator zs(int i, int j) { return {Kind::ZStar, narrow(i), narrow(j)}; }

  bool is_star() const { return kind == Kind::ZStar; }
  Generator conjugate() const { return {is_star() ? Kind::Z : Kind::ZStar, row, col}; }
  /// Position of (row, col) in row-major order, 0-based.
  int flat() const { return row * (row - 1) / 2 + (col - 1); }

  void check(int n) const {
    if (!(1 <= col && col <= row && row <= n))
      throw IndexError("generator index [" + std::to_string(row) + "," + std::to_string(col) +
                       "] outside 1 <= j <= i <= " + std::to_string(n));
  }

  std::string str() const {
    return std::string(is_star() ? "zs[" : "z[") + std::to_string(row) + "," +
           std::to_string(col) + "]";
  }

  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  static std::uint8_t narrow(int v) {
    if (v < 1 || v > 127) throw IndexError("generator index out of range: " + std::to_string(v));
    return static_cast<std::uint8_t>(v);
  }
};

/// Row-major lexicographic order on the index pair, ignoring kind.
inline bool index_less(const Generator& a, const Generator& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

using Word = std::vector<Generator>;

inline Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// Graded order: shorter words first, then lexicographic on letters.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& g : w) {
      h ^= (static_cast<std::size_t>(g.kind) << 16) | (static_cast<std::size_t>(g.row) << 8) |
           g.col;
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline std::size_t z_degree(const Word& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](auto g) { return !g.is_star(); }));
}
inline std::size_t zs_degree(const Word& w) { return w.size() - z_degree(w); }
inline bool is_holomorphic(const Word& w) { return z_degree(w) == w.size(); }

/// Reverse and conjugate every letter.
inline Word star(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->conjugate());
  return r;
}

inline std::string word_str(const Word& w) {
  std::string s;
  for (const auto& g : w) s += g.str();
  return s;
}

/// Finite linear combination of words; zero coefficients are never stored.
/// Words need not be normal: normal forms are produced by DomainAlgebra.
class Element {
 public:
  using Map = std::map<Word, Coefficient, WordOrder>;

  Element() = default;
  Element(const Coefficient& c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  Element(Word w, const Coefficient& c = Coefficient::one()) { add(std::move(w), c); }

  static Element generator(Generator g) { return Element(Word{g}); }

  void add(const Word& w, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const Element& e, const Coefficient& c = Coefficient::one()) {
    if (c.is_zero()) return;
    for (const auto& [w, v] : e.terms_) add(w, c.is_one() ? v : v * c);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  Element& operator+=(const Element& o) {
    add(o);
    return *this;
  }
  Element& operator-=(const Element& o) {
    add(o, Coefficient(-1));
    return *this;
  }
  Element& operator*=(const Coefficient& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Coefficient& c) { return a *= c; }
  friend Element operator*(const Coefficient& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  /// "coeff * z[i,j]...zs[k,l]..." terms joined by " + ", graded order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      if (w.empty()) out += c.str();
      else if (c.is_one()) out += word_str(w);
      else if (c == Coefficient(-1)) out += "-" + word_str(w);
      else out += c.str() + " * " + word_str(w);
    }
    return out;
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [w, c] : terms_) arr.push_back({{"word", word_json(w)}, {"coeff", c.str()}});
    return arr;
  }

  static nlohmann::json word_json(const Word& w) {
    auto arr = nlohmann::json::array();
    for (const auto& g : w) arr.push_back({g.is_star() ? "zs" : "z", g.row, g.col});
    return arr;
  }

 private:
  Map terms_;
};

}  // namespace qsd
