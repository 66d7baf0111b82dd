#pragma once

// The Fock module H = C[p^-]_q v0 and its sesquilinear form.

#include <gmpxx.h>

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsd/algebra.hpp"
#include "qsd/coefficient.hpp"
#include "qsd/element.hpp"
#include "qsd/errors.hpp"

namespace qsd {

/// f * v0 for a holomorphic element f.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(Element e) : e_(std::move(e)) {
    for (const auto& [w, c] : e_.terms())
      if (!is_holomorphic(w)) throw TypeError("Fock vector must be holomorphic: " + word_str(w));
  }
  static FockVector vacuum() { return FockVector(Element(Word{})); }

  const Element& element() const { return e_; }
  bool is_zero() const { return e_.is_zero(); }
  std::string str() const { return e_.is_zero() ? "0" : "(" + e_.str() + ") v0"; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.e_ == b.e_; }

 private:
  Element e_;
};

struct GramMatrix {
  int n = 0;
  int d = 0;
  std::vector<Word> basis;
  std::vector<std::vector<Coefficient>> entries;

  std::size_t size() const { return basis.size(); }
  /// Basis label; the empty word is the vacuum "1".
  static std::string label(const Word& w) { return w.empty() ? "1" : word_str(w); }

  nlohmann::json to_json() const {
    auto b = nlohmann::json::array();
    for (const auto& w : basis) b.push_back(label(w));
    auto rows = nlohmann::json::array();
    for (const auto& row : entries) {
      auto r = nlohmann::json::array();
      for (const auto& c : row) r.push_back(c.str());
      rows.push_back(r);
    }
    return {{"n", n}, {"degree", d}, {"basis", b}, {"entries", rows}};
  }

  std::vector<std::vector<mpq_class>> evaluate(const RationalPoint& p) const {
    std::vector<std::vector<mpq_class>> m(size(), std::vector<mpq_class>(size()));
    for (std::size_t r = 0; r < size(); ++r)
      for (std::size_t c = 0; c < size(); ++c) m[r][c] = entries[r][c].evaluate(p);
    return m;
  }

  /// Header row of basis words, then one row per basis word with exact rationals at q = p.
  std::string to_csv(const RationalPoint& p) const {
    std::ostringstream os;
    os << "basis";
    for (const auto& w : basis) os << "," << label(w);
    os << "\n";
    const auto m = evaluate(p);
    for (std::size_t r = 0; r < size(); ++r) {
      os << label(basis[r]);
      for (const auto& v : m[r]) os << "," << v.get_str();
      os << "\n";
    }
    return os.str();
  }
};

/// Leading principal minors of a rational matrix by fraction-free (Bareiss) elimination without
/// pivoting. Rows are first scaled by positive integers to clear denominators; the returned minors
/// are those of the original matrix. Stops after the first vanishing minor.
inline std::vector<mpq_class> leading_minors(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t size = m.size();
  std::vector<std::vector<mpz_class>> a(size, std::vector<mpz_class>(size));
  std::vector<mpz_class> row_scale(size, 1);
  for (std::size_t r = 0; r < size; ++r) {
    for (const auto& v : m[r])
      mpz_lcm(row_scale[r].get_mpz_t(), row_scale[r].get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < size; ++c) a[r][c] = mpq_class(m[r][c] * row_scale[r]).get_num();
  }
  std::vector<mpq_class> minors;
  mpz_class prev = 1, scale = 1;
  for (std::size_t k = 0; k < size; ++k) {
    scale *= row_scale[k];
    const mpz_class pivot = a[k][k];
    mpq_class minor(pivot, scale);
    minor.canonicalize();
    minors.push_back(minor);
    if (pivot == 0) break;
    for (std::size_t i = k + 1; i < size; ++i)
      for (std::size_t j = k + 1; j < size; ++j) {
        const mpz_class t = a[i][j] * pivot - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = pivot;
  }
  return minors;
}

/// Rank of a rational matrix (rows x cols) by Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

class Fock {
 public:
  explicit Fock(const DomainAlgebra& algebra) : A_(algebra) {}

  const DomainAlgebra& algebra() const { return A_; }

  /// T_F(f) v: multiply, normalize, and drop every word that still contains a starred letter.
  FockVector apply(const Element& f, const FockVector& v) const {
    return FockVector(DomainAlgebra::holomorphic_part(A_.multiply(A_.normal_form(f), v.element())));
  }

  /// (f v0, g v0) = vacuum coefficient of f* g.
  Coefficient pairing(const FockVector& v, const FockVector& w) const {
    return DomainAlgebra::vacuum_coefficient(A_.multiply(A_.involution(v.element()), w.element()));
  }

  GramMatrix gram(int d) const {
    if (d < 0) throw DomainError("degree must be >= 0");
    GramMatrix g;
    g.n = A_.n();
    g.d = d;
    g.basis = A_.holomorphic_basis(d);
    const std::size_t size = g.basis.size();
    g.entries.assign(size, std::vector<Coefficient>(size));
    for (std::size_t r = 0; r < size; ++r) {
      const Element left = A_.involution(Element(g.basis[r]));
      for (std::size_t c = 0; c < size; ++c)
        g.entries[r][c] =
            DomainAlgebra::vacuum_coefficient(A_.multiply(left, Element(g.basis[c])));
    }
    return g;
  }

  /// Sylvester's criterion on the exact specialization at q = p.
  static bool check_positive_definite(const GramMatrix& g, const RationalPoint& p) {
    const auto minors = leading_minors(g.evaluate(p));
    if (minors.size() != g.size()) return false;
    for (const auto& m : minors)
      if (sgn(m) <= 0) return false;
    return true;
  }

  /// Joint kernel of all annihilators zs[i,j] on the degree-d piece is trivial (d >= 1),
  /// checked as a rank computation at q = p.
  bool annihilators_jointly_injective(int d, const RationalPoint& p) const {
    const auto basis = A_.holomorphic_basis(d);
    const auto lower = A_.holomorphic_basis(d - 1);
    std::vector<std::vector<mpq_class>> cols;
    for (const auto& w : basis) {
      std::vector<mpq_class> col;
      for (const auto& g : A_.rules().holomorphic_letters()) {
        const FockVector img = apply(Element(Word{g.conjugate()}), FockVector(Element(w)));
        for (const auto& u : lower) col.push_back(img.element().coeff(u).evaluate(p));
      }
      cols.push_back(std::move(col));
    }
    return rational_rank(cols) == basis.size();
  }

  /// The operators of all normal words of total degree <= word_degree, restricted to the pieces
  /// of degree <= space_degree, are linearly independent (evaluated at q = p).
  bool operators_independent(int word_degree, int space_degree, const RationalPoint& p) const {
    std::vector<Word> space;
    for (int d = 0; d <= space_degree; ++d) {
      auto b = A_.holomorphic_basis(d);
      space.insert(space.end(), b.begin(), b.end());
    }
    std::vector<Word> target;
    for (int d = 0; d <= space_degree + word_degree; ++d) {
      auto b = A_.holomorphic_basis(d);
      target.insert(target.end(), b.begin(), b.end());
    }
    std::vector<std::vector<mpq_class>> rows;
    const auto words = A_.normal_words_up_to(word_degree);
    for (const auto& m : words) {
      std::vector<mpq_class> row;
      for (const auto& v : space) {
        const FockVector img = apply(Element(m), FockVector(Element(v)));
        for (const auto& u : target) row.push_back(img.element().coeff(u).evaluate(p));
      }
      rows.push_back(std::move(row));
    }
    return rational_rank(rows) == words.size();
  }

 private:
  const DomainAlgebra& A_;
};

}  // namespace qsd
