#pragma once

// Straightening rules for Pol(p^-)_q of type C_n.
//
// Every ordered pair of generators (a, b) is either already in normal order or is rewritten by
// exactly one rule a*b -> sum c * (word of length <= 2). Normal order: all z left of all zs,
// z part weakly decreasing and zs part weakly increasing in the row-major index order.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsd/coefficient.hpp"
#include "qsd/element.hpp"

namespace qsd {

/// Which coefficients to use for the zs*z rows.
///
/// `covariant` is the table for which E_k, F_k (k < n) preserve the relation ideal; it differs
/// from `literal` in two places: the i>k=j>l row carries -(q^-1 - q) instead of
/// -q(q^-1 - q), and in the i=k>j=l row the terms z[k',l']zs[k',l'] with l' > i carry an
/// extra factor (1+q^2). The two tables agree for n <= 2; `literal` is not confluent for n >= 3.
enum class CrossRelations { covariant, literal };

enum class RuleFamily { holomorphic, cross, star };

struct RuleId {
  RuleFamily family = RuleFamily::holomorphic;
  int row = 0;              // 1..11 for holomorphic/star, 0..7 for cross
  bool conjugated = false;  // cross rule obtained by applying * to a listed row

  std::string name() const;
  friend bool operator==(const RuleId&, const RuleId&) = default;
};

struct Term {
  Coefficient coeff;
  Word word;
};
using Rhs = std::vector<Term>;

namespace rules {

inline Coefficient qp(int k) { return Coefficient::q_power(k); }

struct Row {
  int id;
  const char* pattern;
  bool (*applies)(int i, int j, int k, int l);
};

// Left factor z[i,j], right factor z[k,l], (i,j) < (k,l).
inline constexpr std::array<Row, 11> kHolomorphicRows{{
    {1, "i=j=l<k", [](int i, int j, int k, int l) { return i == j && j == l && l < k; }},
    {2, "j<i=k=l", [](int i, int j, int k, int l) { return j < i && i == k && k == l; }},
    {3, "j<l<i=k", [](int i, int j, int k, int l) { return j < l && l < i && i == k; }},
    {4, "j=l<i<k", [](int i, int j, int k, int l) { return j == l && l < i && i < k; }},
    // Listed as z[k,l]z[i,j] = z[i,j]z[k,l] for j<l<=k<i; with the factors renamed so the left
    // one is the smaller generator this reads l<j<=i<k.
    {5, "l<j<=i<k", [](int i, int j, int k, int l) { return l < j && j <= i && i < k; }},
    {6, "i=j<k=l", [](int i, int j, int k, int l) { return i == j && j < k && k == l; }},
    {7, "i=j<l<k", [](int i, int j, int k, int l) { return i == j && j < l && l < k; }},
    {8, "j<i<k=l", [](int i, int j, int k, int l) { return j < i && i < k && k == l; }},
    {9, "j<i<l<k", [](int i, int j, int k, int l) { return j < i && i < l && l < k; }},
    {10, "j<l<i<k", [](int i, int j, int k, int l) { return j < l && l < i && i < k; }},
    {11, "j<i=l<k", [](int i, int j, int k, int l) { return j < i && i == l && l < k; }},
}};

// zs[i,j] z[k,l].
inline constexpr std::array<Row, 8> kCrossRows{{
    {0, "j!=k,l & i!=k,l",
     [](int i, int j, int k, int l) { return j != k && j != l && i != k && i != l; }},
    {1, "i=k>j>l", [](int i, int j, int k, int l) { return i == k && k > j && j > l; }},
    {2, "i>k=j>l", [](int i, int j, int k, int l) { return i > k && k == j && j > l; }},
    {3, "i>k>j=l", [](int i, int j, int k, int l) { return i > k && k > j && j == l; }},
    {4, "i>j=k=l", [](int i, int j, int k, int l) { return i > j && j == k && k == l; }},
    {5, "i=j=k>l", [](int i, int j, int k, int l) { return i == j && j == k && k > l; }},
    {6, "i=k>j=l", [](int i, int j, int k, int l) { return i == k && k > j && j == l; }},
    {7, "i=j=k=l", [](int i, int j, int k, int l) { return i == j && j == k && k == l; }},
}};

inline Word zz(int a, int b, int c, int d) { return {Generator::z(a, b), Generator::z(c, d)}; }
inline Word zzs(int a, int b, int c, int d) { return {Generator::z(a, b), Generator::zs(c, d)}; }

inline Rhs holomorphic_rhs(int row, int i, int j, int k, int l) {
  const Coefficient q = qp(1), qi = qp(-1);
  const Coefficient q2m = qp(2) - qp(-2);
  switch (row) {
    case 1:
    case 2:
      return {{qp(2), zz(k, l, i, j)}};
    case 3:
    case 4:
      return {{q, zz(k, l, i, j)}};
    case 5:
      return {{1, zz(k, l, i, j)}};
    case 6:
      return {{1, zz(k, l, i, j)}, {q * q2m, zz(l, j, k, i)}};
    case 7:
    case 8:
      return {{1, zz(k, l, i, j)}, {q2m, zz(l, j, k, i)}};
    case 9:
      return {{1, zz(k, l, i, j)}, {(q - qi) * q, zz(l, i, k, j)}, {q - qi, zz(k, i, l, j)}};
    case 10:
      return {{1, zz(k, l, i, j)}, {q - qi, zz(i, l, k, j)}};
    case 11:
      return {{q, zz(k, l, i, j)}, {q - qi, zz(i, l, k, j)}};
    default:
      throw std::logic_error("unknown holomorphic row");
  }
}

inline Rhs cross_rhs(int row, int i, int j, int k, int l, int n, CrossRelations table) {
  const Coefficient q = qp(1);
  const Coefficient a = qp(-1) - q;  // q^-1 - q
  const Coefficient one_q2 = 1 + qp(2);
  const bool literal = table == CrossRelations::literal;
  Rhs r;
  switch (row) {
    case 0:
      r.push_back({1, zzs(k, l, i, j)});
      break;
    case 1:
      r.push_back({q, zzs(k, l, i, j)});
      for (int m = k + 1; m <= n; ++m) r.push_back({-a, zzs(m, l, m, j)});
      break;
    case 2: {
      const Coefficient pre = literal ? q * a : a;
      r.push_back({q, zzs(k, l, i, j)});
      for (int m = k + 1; m <= i; ++m) r.push_back({-pre, zzs(m, l, i, m)});
      for (int m = i + 1; m <= n; ++m) r.push_back({-pre * q, zzs(m, l, m, i)});
      break;
    }
    case 3:
      r.push_back({q, zzs(k, l, i, j)});
      for (int m = l + 1; m <= k; ++m) r.push_back({-a, zzs(k, m, i, m)});
      for (int m = k + 1; m <= i; ++m) r.push_back({-a * q, zzs(m, k, i, m)});
      for (int m = i + 1; m <= n; ++m) r.push_back({-a * qp(2), zzs(m, k, m, i)});
      break;
    case 4:
      r.push_back({qp(2), zzs(k, l, i, j)});
      for (int m = l + 1; m <= i; ++m) r.push_back({-one_q2 * a, zzs(m, k, i, m)});
      for (int m = i + 1; m <= n; ++m) r.push_back({-one_q2 * a * q, zzs(m, k, m, i)});
      break;
    case 5:
      r.push_back({qp(2), zzs(k, l, i, j)});
      for (int m = k + 1; m <= n; ++m) r.push_back({-one_q2 * a, zzs(m, l, m, i)});
      break;
    case 6: {
      const Coefficient a2 = a * a;
      r.push_back({qp(2), zzs(k, l, i, j)});
      for (int kp = j + 1; kp <= i; ++kp) r.push_back({-q * a, zzs(k, kp, i, kp)});
      for (int kp = i + 1; kp <= n; ++kp) r.push_back({-q * a, zzs(kp, l, kp, j)});
      for (int kp = i + 1; kp <= n; ++kp) r.push_back({-q * a * qp(2), zzs(kp, k, kp, i)});
      for (int kp = i + 1; kp <= n; ++kp)
        for (int lp = j + 1; lp < kp; ++lp)
          r.push_back({(!literal && lp > i) ? a2 * one_q2 : a2, zzs(kp, lp, kp, lp)});
      for (int kp = i + 1; kp <= n; ++kp) r.push_back({a2, zzs(kp, kp, kp, kp)});
      r.push_back({1 - qp(2), {}});
      break;
    }
    case 7: {
      const Coefficient a2 = a * a;
      r.push_back({qp(4), zzs(k, l, i, j)});
      for (int kp = i + 1; kp <= n; ++kp)
        r.push_back({-q * a * one_q2 * one_q2, zzs(kp, l, kp, j)});
      for (int kp = i + 1; kp <= n; ++kp) r.push_back({a2 * one_q2, zzs(kp, kp, kp, kp)});
      for (int kp = i + 1; kp <= n; ++kp)
        for (int jp = i + 1; jp < kp; ++jp)
          r.push_back({a2 * one_q2 * one_q2, zzs(kp, jp, kp, jp)});
      r.push_back({1 - qp(4), {}});
      break;
    }
    default:
      throw std::logic_error("unknown cross row");
  }
  return r;
}

inline Rhs star_rhs(const Rhs& r) {
  Rhs out;
  out.reserve(r.size());
  for (const auto& t : r) out.push_back({t.coeff, star(t.word)});
  return out;
}

}  // namespace rules

inline std::string RuleId::name() const {
  switch (family) {
    case RuleFamily::holomorphic:
      return "(" + std::to_string(row) + ") " + rules::kHolomorphicRows[row - 1].pattern;
    case RuleFamily::star:
      return "*(" + std::to_string(row) + ") " + rules::kHolomorphicRows[row - 1].pattern;
    case RuleFamily::cross:
      return std::string(conjugated ? "cross* " : "cross ") + rules::kCrossRows[row].pattern;
  }
  return "?";
}

/// The zs-zs relation obtained by conjugating a holomorphic relation.
struct StarRule {
  Generator left, right;  // left > right in index order
  int source_row;
  Rhs rhs;
};

inline bool is_normal_pair(const Generator& a, const Generator& b) {
  if (!a.is_star() && !b.is_star()) return !index_less(a, b);
  if (a.is_star() && b.is_star()) return !index_less(b, a);
  return !a.is_star();
}

/// Rule lookup for a fixed rank; immutable after construction.
class RuleTable {
 public:
  explicit RuleTable(int n, CrossRelations table = CrossRelations::covariant)
      : n_(n), table_(table), count_(n * (n + 1) / 2) {
    if (n < 1) throw DomainError("rank must be >= 1");
    if (n > 40) throw DomainError("rank too large");
    entries_.resize(static_cast<std::size_t>(4 * count_ * count_));
    for (const auto& a : letters())
      for (const auto& b : letters()) {
        auto& e = entries_[slot(a, b)];
        e.id = compute_id(a, b);
        if (e.id) e.rhs = compute_rhs(*e.id, a, b);
      }
  }

  int n() const { return n_; }
  CrossRelations table() const { return table_; }
  int generator_count() const { return count_; }

  /// All 2 * n(n+1)/2 letters: z's in index order, then zs's.
  std::vector<Generator> letters() const {
    std::vector<Generator> out;
    for (int star = 0; star < 2; ++star)
      for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= i; ++j) out.push_back(star ? Generator::zs(i, j) : Generator::z(i, j));
    return out;
  }
  std::vector<Generator> holomorphic_letters() const {
    std::vector<Generator> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= i; ++j) out.push_back(Generator::z(i, j));
    return out;
  }

  /// nullopt when a*b is already normal.
  const std::optional<RuleId>& classify(const Generator& a, const Generator& b) const {
    return entries_[slot(a, b)].id;
  }
  const Rhs& rhs(const Generator& a, const Generator& b) const {
    const auto& e = entries_[slot(a, b)];
    if (!e.id) throw std::logic_error("rhs requested for a normal pair " + a.str() + b.str());
    return e.rhs;
  }

  /// Every listed branch whose side condition holds for (a, b); for completeness checks.
  std::vector<RuleId> all_matches(const Generator& a, const Generator& b) const {
    std::vector<RuleId> out;
    const int i = a.row, j = a.col, k = b.row, l = b.col;
    if (!a.is_star() && !b.is_star()) {
      if (index_less(a, b))
        for (const auto& r : rules::kHolomorphicRows)
          if (r.applies(i, j, k, l)) out.push_back({RuleFamily::holomorphic, r.id, false});
    } else if (a.is_star() && b.is_star()) {
      if (index_less(b, a))
        for (const auto& r : rules::kHolomorphicRows)
          if (r.applies(k, l, i, j)) out.push_back({RuleFamily::star, r.id, false});
    } else if (a.is_star()) {
      for (const auto& r : rules::kCrossRows) {
        const bool direct = r.applies(i, j, k, l);
        const bool conj = r.applies(k, l, i, j);
        // A branch matching in both orientations describes the same (self-conjugate) relation.
        if (direct) out.push_back({RuleFamily::cross, r.id, false});
        else if (conj) out.push_back({RuleFamily::cross, r.id, true});
      }
    }
    return out;
  }

  /// Conjugates of all holomorphic relation instances, oriented into increasing zs order.
  std::vector<StarRule> derive_star_rules() const {
    std::vector<StarRule> out;
    for (const auto& x : holomorphic_letters())
      for (const auto& y : holomorphic_letters()) {
        if (!index_less(x, y)) continue;
        const auto& id = classify(x, y);
        out.push_back({y.conjugate(), x.conjugate(), id->row, rules::star_rhs(rhs(x, y))});
      }
    return out;
  }

 private:
  struct Entry {
    std::optional<RuleId> id;
    Rhs rhs;
  };

  std::size_t slot(const Generator& a, const Generator& b) const {
    const int ia = a.flat() + (a.is_star() ? count_ : 0);
    const int ib = b.flat() + (b.is_star() ? count_ : 0);
    return static_cast<std::size_t>(ia * 2 * count_ + ib);
  }

  std::optional<RuleId> compute_id(const Generator& a, const Generator& b) const {
    if (is_normal_pair(a, b)) return std::nullopt;
    auto m = all_matches(a, b);
    if (m.size() != 1)
      throw std::logic_error("rule table incomplete at " + a.str() + b.str() + ": " +
                             std::to_string(m.size()) + " matching branches");
    return m.front();
  }

  Rhs compute_rhs(const RuleId& id, const Generator& a, const Generator& b) const {
    const int i = a.row, j = a.col, k = b.row, l = b.col;
    switch (id.family) {
      case RuleFamily::holomorphic:
        return rules::holomorphic_rhs(id.row, i, j, k, l);
      case RuleFamily::star:
        // zs[i,j] zs[k,l] with (k,l) < (i,j): conjugate of z[k,l] z[i,j] = ...
        return rules::star_rhs(rules::holomorphic_rhs(id.row, k, l, i, j));
      case RuleFamily::cross:
        return id.conjugated ? rules::star_rhs(rules::cross_rhs(id.row, k, l, i, j, n_, table_))
                             : rules::cross_rhs(id.row, i, j, k, l, n_, table_);
    }
    throw std::logic_error("unreachable");
  }

  int n_;
  CrossRelations table_;
  int count_;
  std::vector<Entry> entries_;
};

}  // namespace qsd
