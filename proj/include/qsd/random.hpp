#pragma once

// Seeded random elements for property batteries. Draws use plain modular reduction of
// mt19937_64 output so sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "qsd/algebra.hpp"
#include "qsd/element.hpp"
#include "qsd/integral.hpp"

namespace qsd {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  int range(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(eng_() % span);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(eng_() % v.size())];
  }
  /// Small nonzero coefficient c * q^e with |c| <= 3 and |e| <= 1.
  Coefficient coefficient() {
    int c = range(-3, 2);
    if (c >= 0) ++c;
    return Coefficient(c) * Coefficient::q_power(range(-1, 1));
  }

 private:
  std::mt19937_64 eng_;
};

/// Sum of `terms` random normal words of total degree <= max_degree (mixed z/zs).
inline Element random_element(const DomainAlgebra& A, Rng& rng, int max_degree, int terms = 3) {
  const auto words = A.normal_words_up_to(max_degree);
  Element e;
  for (int t = 0; t < terms; ++t) e.add(rng.pick(words), rng.coefficient());
  return e;
}

/// Holomorphic-only variant.
inline Element random_holomorphic(const DomainAlgebra& A, Rng& rng, int max_degree, int terms = 3) {
  std::vector<Word> words;
  for (int d = 0; d <= max_degree; ++d) {
    auto b = A.holomorphic_basis(d);
    words.insert(words.end(), b.begin(), b.end());
  }
  Element e;
  for (int t = 0; t < terms; ++t) e.add(rng.pick(words), rng.coefficient());
  return e;
}

/// Sum of `terms` sandwiches a f0 b* with deg a, deg b <= max_degree and integer coefficients in
/// [-3, 3].
inline DElement random_delement(const DomainAlgebra& A, Rng& rng, int max_degree, int terms = 3) {
  std::vector<Word> words;
  for (int d = 0; d <= max_degree; ++d) {
    auto b = A.holomorphic_basis(d);
    words.insert(words.end(), b.begin(), b.end());
  }
  DElement x;
  for (int t = 0; t < terms; ++t) {
    const Word& a = rng.pick(words);
    const Word& b = rng.pick(words);
    x.add(a, b, Coefficient(rng.range(-3, 3)));
  }
  return x;
}

/// f0, every rank-one sandwich a f0 b* with deg a, deg b <= max_degree, and `random_count`
/// seeded random combinations.
inline std::vector<DElement> standard_battery(const DomainAlgebra& A, std::uint64_t seed,
                                              int max_degree = 2, int random_count = 20) {
  std::vector<Word> words;
  for (int d = 0; d <= max_degree; ++d) {
    auto b = A.holomorphic_basis(d);
    words.insert(words.end(), b.begin(), b.end());
  }
  std::vector<DElement> out;
  out.push_back(DElement::f0());
  for (const auto& a : words)
    for (const auto& b : words)
      if (!(a.empty() && b.empty())) out.emplace_back(a, b);
  Rng rng(seed);
  for (int t = 0; t < random_count; ++t) out.push_back(random_delement(A, rng, max_degree));
  return out;
}

}  // namespace qsd
