#pragma once

// D(D)_q = Pol * f0 * Pol and the invariant integral.

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsd/action.hpp"
#include "qsd/algebra.hpp"
#include "qsd/element.hpp"
#include "qsd/report.hpp"
#include "qsd/uq.hpp"

namespace qsd {

/// sum c * a f0 b*, stored as the pair of holomorphic normal words (a, b).
class DElement {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyOrder {
    bool operator()(const Key& x, const Key& y) const {
      WordOrder o;
      if (o(x.first, y.first)) return true;
      if (o(y.first, x.first)) return false;
      return o(x.second, y.second);
    }
  };
  using Map = std::map<Key, Coefficient, KeyOrder>;

  DElement() = default;
  DElement(Word a, Word b, const Coefficient& c = Coefficient::one()) {
    add(std::move(a), std::move(b), c);
  }
  static DElement f0() { return DElement(Word{}, Word{}); }

  void add(const Word& a, const Word& b, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const DElement& o, const Coefficient& c = Coefficient::one()) {
    for (const auto& [k, v] : o.terms_) add(k.first, k.second, v * c);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coeff(const Word& a, const Word& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Coefficient() : it->second;
  }

  DElement& operator+=(const DElement& o) {
    add(o);
    return *this;
  }
  DElement& operator-=(const DElement& o) {
    add(o, Coefficient(-1));
    return *this;
  }
  friend DElement operator+(DElement a, const DElement& b) { return a += b; }
  friend DElement operator-(DElement a, const DElement& b) { return a -= b; }
  friend DElement operator*(const Coefficient& c, const DElement& x) {
    DElement r;
    r.add(x, c);
    return r;
  }
  friend bool operator==(const DElement& a, const DElement& b) { return a.terms_ == b.terms_; }

  /// Terms "coeff * a*f0*b~" joined by " + ", b~ the starred word of b.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string body = word_str(k.first);
      if (!k.first.empty()) body += "*";
      body += "f0";
      if (!k.second.empty()) body += "*" + word_str(star(k.second));
      if (c.is_one()) out += body;
      else if (c == Coefficient(-1)) out += "-" + body;
      else out += c.str() + " * " + body;
    }
    return out;
  }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
      arr.push_back({{"left", Element::word_json(k.first)},
                     {"right", Element::word_json(star(k.second))},
                     {"coeff", c.str()}});
    return arr;
  }

 private:
  Map terms_;
};

/// Products in D(D)_q: everything collapses through <b* c>_0, the vacuum coefficient of b* c.
class DSpace {
 public:
  explicit DSpace(const DomainAlgebra& algebra) : A_(algebra) {}

  const DomainAlgebra& algebra() const { return A_; }

  /// <b* c>_0 for holomorphic normal words b, c.
  Coefficient bracket(const Word& b, const Word& c) const {
    if (b.size() != c.size()) return {};
    const Word key = concat(star(b), c);
    {
      std::shared_lock lk(mutex_);
      auto it = vac_.find(key);
      if (it != vac_.end()) return it->second;
    }
    const Coefficient v = DomainAlgebra::vacuum_coefficient(A_.normal_form(key));
    std::unique_lock lk(mutex_);
    vac_.emplace(key, v);
    return v;
  }

  /// (a f0 b*)(c f0 d*) = <b* c>_0 a f0 d*.
  DElement dmul(const DElement& x, const DElement& y) const {
    DElement out;
    for (const auto& [kx, cx] : x.terms())
      for (const auto& [ky, cy] : y.terms()) {
        const Coefficient v = bracket(kx.second, ky.first);
        if (!v.is_zero()) out.add(kx.first, ky.second, cx * cy * v);
      }
    return out;
  }

  /// (a f0 b*)* = b f0 a*.
  static DElement dstar(const DElement& x) {
    DElement out;
    for (const auto& [k, c] : x.terms()) out.add(k.second, k.first, c);
    return out;
  }

  /// p * x: z* letters reaching f0 from the left vanish, so only holomorphic words of p*a survive.
  DElement absorb_left(const Element& p, const DElement& x) const {
    DElement out;
    for (const auto& [k, c] : x.terms()) {
      const Element pa = A_.multiply(A_.normal_form(p), Element(k.first));
      for (const auto& [w, v] : pa.terms())
        if (is_holomorphic(w)) out.add(w, k.second, c * v);
    }
    return out;
  }

  /// x * p: z letters reaching f0 from the right vanish, so only starred words of b* p survive.
  DElement absorb_right(const DElement& x, const Element& p) const {
    DElement out;
    for (const auto& [k, c] : x.terms()) {
      const Element bp = A_.multiply(Element(star(k.second)), A_.normal_form(p));
      for (const auto& [w, v] : bp.terms())
        if (z_degree(w) == 0) out.add(k.first, star(w), c * v);
    }
    return out;
  }

  /// left * f0 * right* for a holomorphic `left` and a starred `right_starred`.
  DElement sandwich(const Element& left, const Element& right_starred) const {
    DElement out;
    for (const auto& [a, ca] : left.terms()) {
      if (!is_holomorphic(a)) throw std::logic_error("sandwich: left factor not holomorphic");
      for (const auto& [r, cr] : right_starred.terms()) {
        if (z_degree(r) != 0) throw std::logic_error("sandwich: right factor not starred");
        out.add(a, star(r), ca * cr);
      }
    }
    return out;
  }

 private:
  const DomainAlgebra& A_;
  mutable std::map<Word, Coefficient, WordOrder> vac_;
  mutable std::shared_mutex mutex_;
};

/// Exponents of K = K_1^{c_1}...K_n^{c_n}: c_i = i(2n-i+1) for i < n, c_n = n(n+1)/2,
/// and the resulting weights W(z[i,j]) with K z[i,j] = q^{W} z[i,j].
class KWeightTable {
 public:
  explicit KWeightTable(const HopfAction& H) : n_(H.n()) {
    for (int i = 1; i <= n_; ++i) c_.push_back(i < n_ ? i * (2 * n_ - i + 1) : n_ * (n_ + 1) / 2);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= i; ++j) {
        const Generator g = Generator::z(i, j);
        int w = 0;
        for (int k = 1; k <= n_; ++k) w += c_[k - 1] * H.k_exponent(k, g);
        if (w <= 0) throw std::logic_error("non-positive K-weight for " + g.str());
        w_.push_back(w);
      }
  }
  const std::vector<int>& exponents() const { return c_; }
  int weight(const Generator& g) const { return g.is_star() ? -w_[g.flat()] : w_[g.flat()]; }
  int weight(const Word& w) const {
    int s = 0;
    for (const auto& g : w) s += weight(g);
    return s;
  }

 private:
  int n_;
  std::vector<int> c_;
  std::vector<int> w_;
};

class InvariantIntegral {
 public:
  explicit InvariantIntegral(const HopfAction& H)
      : H_(H), A_(H.algebra()), D_(H.algebra()), K_(H) {}

  const DSpace& space() const { return D_; }
  const KWeightTable& weights() const { return K_; }
  int n() const { return A_.n(); }

  /// (1-q^4)^{n(n+1)/2} * sum over sandwiches with deg a = deg b of q^{-W(a)} <b* a>_0.
  /// T_F(a f0 b*) sends m v0 to <b* m>_0 a v0, so the only diagonal entry sits at m = a.
  Coefficient integrate(const DElement& x) const {
    Coefficient sum;
    for (const auto& [k, c] : x.terms()) {
      if (k.first.size() != k.second.size()) continue;
      const Coefficient v = D_.bracket(k.second, k.first);
      if (!v.is_zero()) sum += c * v * Coefficient::q_power(-K_.weight(k.first));
    }
    return sum * prefactor();
  }

  Coefficient prefactor() const {
    return (1 - Coefficient::q_power(4)).pow(n() * (n() + 1) / 2);
  }

  /// E_n f0 = -q/(1-q^4) z[n,n] f0; other E_j f0 = 0.
  Coefficient e_f0() const { return -Coefficient::q_power(1) / (1 - Coefficient::q_power(4)); }
  /// F_n f0 = -q^5/(1-q^4) f0 zs[n,n]; other F_j f0 = 0.
  Coefficient f_f0() const { return -Coefficient::q_power(5) / (1 - Coefficient::q_power(4)); }

  /// Coproduct expansion over the three factors of a f0 b*, with K_i f0 = f0.
  DElement act(const UqLetter& l, const DElement& x) const {
    l.check(n());
    const int k = l.index;
    const Generator znn = Generator::z(n(), n());
    DElement out;
    for (const auto& [key, c] : x.terms()) {
      const auto& [a, b] = key;
      const int wa = H_.weight(k, a), wb = H_.weight(k, b);
      const Element bstar(star(b));
      switch (l.sym) {
        case UqSym::K:
        case UqSym::Kinv:
          out.add(a, b, c * Coefficient::q_power(l.k_exponent() * (wa - wb)));
          break;
        case UqSym::E: {
          // E(a) f0 b* + K(a) E(f0) b* + K(a) f0 E(b*)
          out.add(D_.sandwich(H_.act(l, Element(a)), bstar), c);
          const Coefficient ka = c * Coefficient::q_power(wa);
          if (k == n()) {
            const Element az = A_.multiply(Element(a), Element(Word{znn}));
            out.add(D_.sandwich(az, bstar), ka * e_f0());
          }
          out.add(D_.sandwich(Element(a), H_.act(l, bstar)), ka);
          break;
        }
        case UqSym::F: {
          // F(a) K^-1(f0 b*) + a F(f0) K^-1(b*) + a f0 F(b*); K^-1 b* = q^{w(b)} b*
          const Coefficient kb = c * Coefficient::q_power(wb);
          out.add(D_.sandwich(H_.act(l, Element(a)), bstar), kb);
          if (k == n()) {
            // f0 zs[n,n] b* = f0 (b z[n,n])*
            const Element bz = A_.multiply(Element(b), Element(Word{znn}));
            for (const auto& [w, v] : bz.terms()) out.add(a, w, kb * f_f0() * v);
          }
          out.add(D_.sandwich(Element(a), H_.act(l, bstar)), c);
          break;
        }
      }
    }
    return out;
  }

  /// Words act by composition, rightmost letter first.
  DElement act(const UqExpr& xi, const DElement& x) const {
    xi.check(n());
    DElement out;
    for (const auto& [w, c] : xi.terms()) {
      DElement cur = x;
      for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act(*it, cur);
      out.add(cur, c);
    }
    return out;
  }

  Report verify_invariance(const std::vector<DElement>& battery) const {
    Report r("invariance");
    for (const auto& f : battery) {
      const Coefficient base = integrate(f);
      for (const auto& l : uq_generators(n())) {
        const Coefficient lhs = integrate(act(l, f));
        const Coefficient rhs = counit(UqExpr(l)) * base;
        r.check(lhs == rhs, l.str() + " on " + f.str(), lhs, rhs);
      }
    }
    return r;
  }

  /// integrate(f* f) > 0 at q = p for every nonzero battery element.
  Report verify_positivity(const std::vector<DElement>& battery, const RationalPoint& p) const {
    Report r("positivity");
    for (const auto& f : battery) {
      if (f.is_zero()) continue;
      const Coefficient v = integrate(D_.dmul(DSpace::dstar(f), f));
      const mpq_class x = v.evaluate(p);
      if (sgn(x) > 0) r.pass();
      else r.fail(f.str() + " at q=" + p.q().get_str(), x.get_str(), "> 0");
    }
    return r;
  }

  /// The U_q relations as operators on the sandwiches a f0 b* with deg a, deg b <= max_degree.
  Report verify_uqg_relations(int max_degree) const {
    Report r("hopf-on-D");
    std::vector<Word> words;
    for (int d = 0; d <= max_degree; ++d) {
      auto b = A_.holomorphic_basis(d);
      words.insert(words.end(), b.begin(), b.end());
    }
    for (const auto& rel : uq_relations(H_.cartan()))
      for (const auto& a : words)
        for (const auto& b : words) {
          if (a.size() + b.size() > static_cast<std::size_t>(max_degree)) continue;
          const DElement x(a, b);
          const DElement lhs = act(rel.lhs, x), rhs = act(rel.rhs, x);
          r.check(lhs == rhs, rel.name + " on " + x.str(), lhs, rhs);
        }
    return r;
  }

 private:
  const HopfAction& H_;
  const DomainAlgebra& A_;
  DSpace D_;
  KWeightTable K_;
};

}  // namespace qsd
