#pragma once

// Normal forms in Pol(p^-)_q and the holomorphic subalgebra C[p^-]_q.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsd/coefficient.hpp"
#include "qsd/element.hpp"
#include "qsd/relations.hpp"
#include "qsd/report.hpp"

namespace qsd {

enum class Strategy { leftmost, rightmost };

class DomainAlgebra {
 public:
  explicit DomainAlgebra(int n, CrossRelations table = CrossRelations::covariant)
      : rules_(n, table) {}

  int n() const { return rules_.n(); }
  const RuleTable& rules() const { return rules_; }

  void check(const Word& w) const {
    for (const auto& g : w) g.check(n());
  }
  void check(const Element& e) const {
    for (const auto& [w, c] : e.terms()) check(w);
  }

  static bool is_normal(const Word& w) {
    for (std::size_t t = 1; t < w.size(); ++t)
      if (!is_normal_pair(w[t - 1], w[t])) return false;
    return true;
  }

  Element normal_form(const Word& w) const {
    check(w);
    Element cur{Word{}};
    for (const auto& g : w) cur = append(cur, g);
    return cur;
  }

  Element normal_form(const Element& e) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
      if (is_normal(w)) {
        check(w);
        out.add(w, c);
      } else {
        out.add(normal_form(w), c);
      }
    }
    return out;
  }

  /// Product of two elements whose words are already normal.
  Element multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) {
        Element cur{wa};
        for (const auto& g : wb) cur = append(cur, g);
        out.add(cur, ca * cb);
      }
    return out;
  }

  Element multiply(const Element& a, const Generator& g) const { return append(a, g); }

  /// Coefficients are real, so * only reverses words and conjugates letters.
  Element involution(const Element& e) const {
    Element raw;
    for (const auto& [w, c] : e.terms()) raw.add(star(w), c);
    return normal_form(raw);
  }

  /// Scalar part of a normal-form element.
  static Coefficient vacuum_coefficient(const Element& e) { return e.coeff(Word{}); }

  /// Drop every word that contains a starred letter (they annihilate the vacuum).
  static Element holomorphic_part(const Element& e) {
    Element out;
    for (const auto& [w, c] : e.terms())
      if (is_holomorphic(w)) out.add(w, c);
    return out;
  }

  /// Reference rewriting: repeatedly reduce the leftmost (or rightmost) violating adjacent pair.
  /// Independent of the insertion cache used by normal_form.
  Element rewrite(const Word& w, Strategy s) const {
    auto& memo = s == Strategy::leftmost ? left_memo_ : right_memo_;
    {
      std::shared_lock lk(memo_mutex_);
      auto it = memo.find(w);
      if (it != memo.end()) return it->second;
    }
    std::ptrdiff_t pos = -1;
    const auto len = static_cast<std::ptrdiff_t>(w.size());
    if (s == Strategy::leftmost) {
      for (std::ptrdiff_t p = 0; p + 1 < len; ++p)
        if (!is_normal_pair(w[p], w[p + 1])) {
          pos = p;
          break;
        }
    } else {
      for (std::ptrdiff_t p = len - 2; p >= 0; --p)
        if (!is_normal_pair(w[p], w[p + 1])) {
          pos = p;
          break;
        }
    }
    Element out;
    if (pos < 0) {
      out.add(w, Coefficient::one());
    } else {
      for (const auto& t : rules_.rhs(w[pos], w[pos + 1])) {
        Word next(w.begin(), w.begin() + pos);
        next.insert(next.end(), t.word.begin(), t.word.end());
        next.insert(next.end(), w.begin() + pos + 2, w.end());
        out.add(rewrite(next, s), t.coeff);
      }
    }
    std::unique_lock lk(memo_mutex_);
    memo.emplace(w, out);
    return out;
  }

  /// Strategy agreement on every word of length <= max_len over all 2N letters, plus the
  /// overlap check x*y*z for every pair of overlapping rules.
  Report verify_confluence(int max_len) const {
    Report r("confluence");
    const auto alphabet = rules_.letters();
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      next.reserve(layer.size() * alphabet.size());
      for (const auto& w : layer)
        for (const auto& g : alphabet) {
          Word x = w;
          x.push_back(g);
          const Element a = rewrite(x, Strategy::leftmost);
          const Element b = rewrite(x, Strategy::rightmost);
          const Element c = normal_form(x);
          r.check(a == b && b == c, word_str(x), a, b == a ? c : b);
          next.push_back(std::move(x));
        }
      layer = std::move(next);
    }
    for (const auto& x : alphabet)
      for (const auto& y : alphabet) {
        if (is_normal_pair(x, y)) continue;
        for (const auto& z : alphabet) {
          if (is_normal_pair(y, z)) continue;
          Element lhs, rhs;
          for (const auto& t : rules_.rhs(x, y)) lhs.add(concat(t.word, {z}), t.coeff);
          for (const auto& t : rules_.rhs(y, z)) rhs.add(concat({x}, t.word), t.coeff);
          const Element a = normal_form(lhs), b = normal_form(rhs);
          r.check(a == b, "overlap " + x.str() + y.str() + z.str(), a, b);
        }
      }
    return r;
  }

  /// Number of normal holomorphic words of degree d.
  std::uint64_t graded_dimension(int d) const {
    const auto gens = rules_.holomorphic_letters();
    if (d == 0) return 1;
    std::vector<std::uint64_t> count(gens.size(), 1);
    for (int len = 2; len <= d; ++len) {
      std::vector<std::uint64_t> next(gens.size(), 0);
      for (std::size_t b = 0; b < gens.size(); ++b)
        for (std::size_t a = 0; a < gens.size(); ++a)
          if (is_normal_pair(gens[a], gens[b])) next[b] += count[a];
      count = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : count) total += c;
    return total;
  }

  /// Normal holomorphic words of degree d in graded-lexicographic order.
  std::vector<Word> holomorphic_basis(int d) const { return normal_words(d, 0); }

  /// Normal words with d_z holomorphic and d_zs starred letters, sorted by WordOrder.
  std::vector<Word> normal_words(int d_z, int d_zs) const {
    std::vector<Word> hol = chains(d_z, false), st = chains(d_zs, true);
    std::vector<Word> out;
    out.reserve(hol.size() * st.size());
    for (const auto& h : hol)
      for (const auto& s : st) out.push_back(concat(h, s));
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
  }

  /// All normal words of total degree <= max_degree.
  std::vector<Word> normal_words_up_to(int max_degree) const {
    std::vector<Word> out;
    for (int d = 0; d <= max_degree; ++d)
      for (int a = d; a >= 0; --a) {
        auto part = normal_words(a, d - a);
        out.insert(out.end(), part.begin(), part.end());
      }
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
  }

  std::size_t cache_size() const {
    std::shared_lock lk(cache_mutex_);
    return cache_.size();
  }

 private:
  std::vector<Word> chains(int d, bool starred) const {
    std::vector<Word> out{Word{}};
    std::vector<Generator> gens;
    for (auto g : rules_.holomorphic_letters()) gens.push_back(starred ? g.conjugate() : g);
    for (int len = 0; len < d; ++len) {
      std::vector<Word> next;
      for (const auto& w : out)
        for (const auto& g : gens)
          if (w.empty() || is_normal_pair(w.back(), g)) next.push_back(concat(w, {g}));
      out = std::move(next);
    }
    return out;
  }

  Element append(const Element& e, const Generator& g) const {
    Element out;
    for (const auto& [w, c] : e.terms()) out.add(insert(w, g), c);
    return out;
  }

  /// normal_form(u * g) for a normal word u.
  const Element& insert(const Word& u, const Generator& g) const {
    Word key = u;
    key.push_back(g);
    {
      std::shared_lock lk(cache_mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return *it->second;
    }
    auto out = std::make_unique<Element>();
    if (u.empty() || is_normal_pair(u.back(), g)) {
      out->add(key, Coefficient::one());
    } else {
      const Word prefix(u.begin(), u.end() - 1);
      for (const auto& t : rules_.rhs(u.back(), g)) {
        Element cur{prefix};
        for (const auto& h : t.word) cur = append(cur, h);
        out->add(cur, t.coeff);
      }
    }
    std::unique_lock lk(cache_mutex_);
    auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(out));
    return *it->second;
  }

  RuleTable rules_;
  // Node-stable storage so returned references survive rehashing.
  mutable std::unordered_map<Word, std::unique_ptr<Element>, WordHash> cache_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<Word, Element, WordHash> left_memo_, right_memo_;
  mutable std::shared_mutex memo_mutex_;
};

}  // namespace qsd
