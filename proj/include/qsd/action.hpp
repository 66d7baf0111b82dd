#pragma once

// U_q sp_2n acting on Pol(p^-)_q as a module algebra.

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "qsd/algebra.hpp"
#include "qsd/element.hpp"
#include "qsd/report.hpp"
#include "qsd/uq.hpp"

namespace qsd {

using WeightVector = std::vector<int>;  // entry i-1 is the q-exponent of K_i

class HopfAction {
 public:
  explicit HopfAction(const DomainAlgebra& algebra) : A_(algebra), cd_(algebra.n()) {}

  const DomainAlgebra& algebra() const { return A_; }
  const CartanData& cartan() const { return cd_; }
  int n() const { return cd_.n(); }

  /// Exponent e with K_k z[i,j] = q^e z[i,j]; negated for zs[i,j].
  int k_exponent(int k, const Generator& g) const {
    const int i = g.row, j = g.col, nn = n();
    int e = 0;
    if (k < nn) {
      if (i == j && j == k) e = 2;
      else if (i == j && j == k + 1) e = -2;
      else if ((i == k && k > j) || (i - 1 > k && k == j)) e = 1;
      else if ((i - 1 == k && k > j) || (i > k + 1 && k + 1 == j)) e = -1;
    } else {
      if (i == nn && j == nn) e = 4;
      else if (i == nn && nn > j) e = 2;
    }
    return g.is_star() ? -e : e;
  }

  WeightVector weight(const Word& w) const {
    WeightVector v(static_cast<std::size_t>(n()), 0);
    for (const auto& g : w)
      for (int k = 1; k <= n(); ++k) v[k - 1] += k_exponent(k, g);
    return v;
  }
  int weight(int k, const Word& w) const {
    int e = 0;
    for (const auto& g : w) e += k_exponent(k, g);
    return e;
  }

  /// Action of a single E_k, F_k, K_k^{+-1} on a generator. Starred generators go through
  /// xi(f*) = (S(xi)* f)*.
  Element act_generator(const UqLetter& l, const Generator& g) const {
    l.check(n());
    g.check(n());
    {
      std::shared_lock lk(mutex_);
      auto it = gen_cache_.find({l, g});
      if (it != gen_cache_.end()) return it->second;
    }
    Element out = g.is_star() ? act_starred(l, g) : act_holomorphic(l, g);
    std::unique_lock lk(mutex_);
    gen_cache_.emplace(std::make_pair(l, g), out);
    return out;
  }

  /// Action of one letter on an arbitrary (not necessarily normal) word via the coproduct:
  /// E(x1..xm) = sum_t K(x1..x_{t-1}) (E x_t) x_{t+1}..xm,
  /// F(x1..xm) = sum_t x1..x_{t-1} (F x_t) K^{-1}(x_{t+1}..xm).
  Element act_word(const UqLetter& l, const Word& w) const {
    l.check(n());
    const int k = l.index;
    if (l.is_k())
      return A_.normal_form(Element(w, Coefficient::q_power(l.k_exponent() * weight(k, w))));
    Element raw;
    for (std::size_t t = 0; t < w.size(); ++t) {
      const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
      const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(t) + 1, w.end());
      const int shift = l.sym == UqSym::E ? weight(k, prefix) : -weight(k, suffix);
      const Coefficient scale = Coefficient::q_power(shift);
      const Element image = act_generator(l, w[t]);
      for (const auto& [mid, c] : image.terms())
        raw.add(concat(concat(prefix, mid), suffix), c * scale);
    }
    return A_.normal_form(raw);
  }

  Element act(const UqLetter& l, const Element& e) const {
    Element out;
    for (const auto& [w, c] : e.terms()) {
      if (DomainAlgebra::is_normal(w)) out.add(act_normal(l, w), c);
      else out.add(act_word(l, w), c);
    }
    return out;
  }

  /// Words act by composition: (xi eta) f = xi (eta f).
  Element act(const UqExpr& x, const Element& e) const {
    x.check(n());
    Element out;
    for (const auto& [w, c] : x.terms()) {
      Element cur = e;
      for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act(*it, cur);
      out.add(cur, c);
    }
    return out;
  }

  UqExpr antipode_star(const UqExpr& x) const { return qsd::antipode_star(x, cd_); }

  /// Every U_q relation applied to every normal word (mixed) of total degree <= max_degree.
  Report verify_uqg_relations(int max_degree) const {
    Report r("hopf");
    const auto words = A_.normal_words_up_to(max_degree);
    for (const auto& rel : uq_relations(cd_))
      for (const auto& w : words) {
        const Element f(w);
        const Element lhs = act(rel.lhs, f), rhs = act(rel.rhs, f);
        r.check(lhs == rhs, rel.name + " on " + word_str(w), lhs, rhs);
      }
    return r;
  }

  /// xi(L) = xi(R) for every generator xi and every defining relation instance L = R
  /// (holomorphic, cross and starred), computed on the unreduced words; plus xi(1) = eps(xi).
  Report verify_module_algebra() const {
    Report r("module-algebra");
    const auto& rules = A_.rules();
    const auto letters = rules.letters();
    for (const auto& l : uq_generators(n())) {
      const Element unit = act_word(l, Word{});
      const Element expect(counit(UqExpr(l)));
      r.check(unit == expect, l.str() + " on 1", unit, expect);
      for (const auto& a : letters)
        for (const auto& b : letters) {
          if (!rules.classify(a, b)) continue;
          const Element lhs = act_word(l, Word{a, b});
          Element rhs;
          for (const auto& t : rules.rhs(a, b)) rhs.add(act_word(l, t.word), t.coeff);
          r.check(lhs == rhs, l.str() + " on " + rules.classify(a, b)->name() + " " + a.str() + b.str(),
                  lhs, rhs);
        }
    }
    return r;
  }

  /// (xi f)* = S(xi)* f* for every generator xi and every f in the battery.
  Report verify_star_compatibility(const std::vector<Element>& battery) const {
    Report r("involution");
    for (const auto& l : uq_generators(n())) {
      const UqExpr sx = antipode_star(UqExpr(l));
      for (const auto& f : battery) {
        const Element lhs = A_.involution(act(l, f));
        const Element rhs = act(sx, A_.involution(f));
        r.check(lhs == rhs, l.str() + " on " + f.str(), lhs, rhs);
      }
    }
    return r;
  }

 private:
  Element act_normal(const UqLetter& l, const Word& w) const {
    if (l.is_k()) return act_word(l, w);
    {
      std::shared_lock lk(mutex_);
      auto it = word_cache_.find({l, w});
      if (it != word_cache_.end()) return it->second;
    }
    Element out = act_word(l, w);
    std::unique_lock lk(mutex_);
    word_cache_.emplace(std::make_pair(l, w), out);
    return out;
  }

  Element act_holomorphic(const UqLetter& l, const Generator& g) const {
    const int k = l.index, i = g.row, j = g.col, nn = n();
    const auto z = Generator::z;
    const Coefficient q = Coefficient::q_power(1), qi = Coefficient::q_power(-1);
    switch (l.sym) {
      case UqSym::K:
      case UqSym::Kinv:
        return Element(Word{g}, Coefficient::q_power(l.k_exponent() * k_exponent(k, g)));
      case UqSym::E:
        if (k < nn) {
          const Coefficient pre = Coefficient::s_power(-1);
          if (i == j && j == k + 1) return Element(Word{z(i, j - 1)}, pre * (q + qi));
          if (i == k + 1 && k + 1 > j) return Element(Word{z(i - 1, j)}, pre);
          if (i > k + 1 && k + 1 == j) return Element(Word{z(i, j - 1)}, pre);
          return {};
        }
        if (i == nn) return A_.normal_form(Element(Word{z(nn, nn), g}, -q));
        // Taken as written: z[n,i] z[n,j], then normalized.
        return A_.normal_form(Element(Word{z(nn, i), z(nn, j)}, Coefficient(-1)));
      case UqSym::F:
        if (k < nn) {
          const Coefficient pre = Coefficient::s_power(1);
          if (i == j && j == k) return Element(Word{z(i + 1, j)}, pre * (q + qi));
          if (i == k && k > j) return Element(Word{z(i + 1, j)}, pre);
          if (i > k && k == j) return Element(Word{z(i, j + 1)}, pre);
          return {};
        }
        if (i == nn && j == nn) return Element(q);
        return {};
    }
    return {};
  }

  Element act_starred(const UqLetter& l, const Generator& g) const {
    const UqExpr sx = antipode_star(UqExpr(l));
    return A_.involution(act(sx, Element(Word{g.conjugate()})));
  }

  const DomainAlgebra& A_;
  CartanData cd_;
  mutable std::map<std::pair<UqLetter, Generator>, Element> gen_cache_;
  mutable std::map<std::pair<UqLetter, Word>, Element> word_cache_;
  mutable std::shared_mutex mutex_;
};

}  // namespace qsd
