#include <map>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace qsd;
using namespace qsd::test;

namespace {

// K = K_1^{2n} K_2^{2(2n-1)} ... K_{n-1}^{(n-1)(n+2)} K_n^{n(n+1)/2}, exponents written out.
const std::map<int, std::vector<int>> kExponents{{2, {4, 3}}, {3, {6, 10, 6}}};

// K eigenvalue exponent read off the action itself.
int k_eigen_exponent(const HopfAction& H, const Word& m) {
  int total = 0;
  const auto& c = kExponents.at(H.n());
  for (int i = 1; i <= H.n(); ++i) {
    const Coefficient v = H.act(UqLetter::K(i), Element(m)).coeff(m);
    int e = -64;
    while (e <= 64 && !(v == Q(e))) ++e;
    REQUIRE(e <= 64);
    total += c[static_cast<std::size_t>(i - 1)] * e;
  }
  return total;
}

// (1-q^4)^{n(n+1)/2} tr(T_F(x) Gamma(K^-1)), enumerating the Fock basis up to the largest degree in x.
Coefficient trace_oracle(const HopfAction& H, const DElement& x) {
  const DomainAlgebra& A = H.algebra();
  const Fock F(A);
  std::size_t top = 0;
  for (const auto& [k, c] : x.terms()) top = std::max({top, k.first.size(), k.second.size()});
  Coefficient tr;
  for (int d = 0; d <= static_cast<int>(top); ++d)
    for (const auto& m : A.holomorphic_basis(d)) {
      Element image;
      for (const auto& [k, c] : x.terms()) {
        const FockVector bm = F.apply(Element(star(k.second)), FockVector(Element(m)));
        const Coefficient vac = bm.element().coeff(Word{});
        image.add(Element(k.first), c * vac);
      }
      const Coefficient diag = A.normal_form(image).coeff(m);
      if (!diag.is_zero()) tr += diag * Q(-k_eigen_exponent(H, m));
    }
  const int n = A.n();
  return tr * (1 - Q(4)).pow(n * (n + 1) / 2);
}

}  // namespace

TEST_CASE("dmul_examples") {
  const DomainAlgebra A(2);
  const DSpace D(A);
  const DElement f0 = DElement::f0();
  CHECK(D.dmul(f0, f0) == f0);
  CHECK(D.dmul(f0, DElement({z(1, 1)}, {})).is_zero());
  const DElement x({z(2, 2)}, {z(2, 2)});
  CHECK(D.dmul(x, x) == (1 - Q(4)) * x);
}

TEST_CASE("dstar_examples") {
  const DomainAlgebra A(2);
  const DSpace D(A);
  CHECK(DSpace::dstar(DElement::f0()) == DElement::f0());
  CHECK(DSpace::dstar(DElement({z(2, 2)}, {})) == DElement({}, {z(2, 2)}));
  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    const DElement x = random_delement(A, rng, 2), y = random_delement(A, rng, 2);
    CHECK(DSpace::dstar(DSpace::dstar(x)) == x);
    CHECK(DSpace::dstar(D.dmul(x, y)) == D.dmul(DSpace::dstar(y), DSpace::dstar(x)));
  }
}

TEST_CASE("dmul_is_associative") {
  const DomainAlgebra A(3);
  const DSpace D(A);
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    const DElement x = random_delement(A, rng, 2), y = random_delement(A, rng, 2),
                   w = random_delement(A, rng, 2);
    CHECK(D.dmul(x, D.dmul(y, w)) == D.dmul(D.dmul(x, y), w));
  }
}

TEST_CASE("sandwich_collapses_mixed_factors") {
  const DomainAlgebra A(2);
  const DSpace D(A);
  // f0 zs21 z21 f0 = (1-q^2) f0.
  const DElement left({}, {z(2, 1)}), right({z(2, 1)}, {});
  CHECK(D.dmul(left, right) == (1 - Q(2)) * DElement::f0());
  // (zs22) * f0 = 0 and f0 * z22 = 0.
  CHECK(D.absorb_left(Element({zs(2, 2)}), DElement::f0()).is_zero());
  CHECK(D.absorb_right(DElement::f0(), Element({z(2, 2)})).is_zero());
}

TEST_CASE("k_weight_table") {
  const DomainAlgebra A2(2), A3(3);
  const HopfAction H2(A2), H3(A3);
  const KWeightTable K2(H2), K3(H3);
  CHECK(K2.exponents() == std::vector<int>{4, 3});
  CHECK(K3.exponents() == kExponents.at(3));
  CHECK(K2.weight(z(2, 2)) == 4);
  CHECK(K2.weight(Word{}) == 0);
  for (const auto* H : {&H2, &H3})
    for (int d = 1; d <= 2; ++d)
      for (const auto& m : H->algebra().holomorphic_basis(d)) {
        const KWeightTable K(*H);
        CHECK(K.weight(m) == k_eigen_exponent(*H, m));
        CHECK(K.weight(m) > 0);
      }
}

TEST_CASE("act_on_f0_examples") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const InvariantIntegral I(H);
  const DElement f0 = DElement::f0();
  CHECK(I.act(UqLetter::E(2), f0) == DElement({z(2, 2)}, {}, -Q(1) / (1 - Q(4))));
  CHECK(I.act(UqLetter::F(2), f0) == DElement({}, {z(2, 2)}, -Q(5) / (1 - Q(4))));
  CHECK(I.act(UqLetter::K(1), f0) == f0);
  CHECK(I.act(UqLetter::E(1), f0).is_zero());
  CHECK(I.act(UqLetter::F(1), f0).is_zero());

  DElement expect({z(2, 2)}, {z(2, 2)}, -Q(1) / (1 - Q(4)));
  expect.add(Word{}, Word{}, Q(-3));
  CHECK(I.act(UqLetter::E(2), DElement({}, {z(2, 2)})) == expect);
}

TEST_CASE("integrate_examples") {
  for (int n = 2; n <= 3; ++n) {
    const DomainAlgebra A(n);
    const HopfAction H(A);
    CHECK(InvariantIntegral(H).integrate(DElement::f0()) == (1 - Q(4)).pow(n * (n + 1) / 2));
  }
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const InvariantIntegral I(H);
  CHECK(I.integrate(DElement({z(2, 2)}, {z(2, 2)})) == Q(-4) * (1 - Q(4)).pow(4));
  CHECK(I.integrate(DElement({z(1, 1)}, {z(2, 1)})).is_zero());
  CHECK(I.integrate(DElement({z(1, 1)}, {})).is_zero());
}

TEST_CASE("integrate_matches_trace_enumeration") {
  for (int n = 2; n <= 3; ++n) {
    const DomainAlgebra A(n);
    const HopfAction H(A);
    const InvariantIntegral I(H);
    const auto battery = standard_battery(A, 20240601, n == 2 ? 2 : 1, 10);
    for (const auto& x : battery) {
      INFO(x.str());
      CHECK(I.integrate(x) == trace_oracle(H, x));
    }
  }
}

TEST_CASE("invariance_hand_case") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const InvariantIntegral I(H);
  const DElement f({}, {z(2, 2)});
  const Coefficient by_hand = -Q(1) / (1 - Q(4)) * Q(-4) * (1 - Q(4)).pow(4) + Q(-3) * (1 - Q(4)).pow(3);
  CHECK(by_hand.is_zero());
  CHECK(I.integrate(I.act(UqLetter::E(2), f)).is_zero());
  const DElement g({z(2, 2)}, {z(2, 2)});
  CHECK(I.integrate(I.act(UqLetter::K(1), g)) == I.integrate(g));
  CHECK(I.integrate(I.act(UqLetter::F(1), DElement::f0()))
            .is_zero());
}

TEST_CASE("invariance_rank_two_battery") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const Report r = InvariantIntegral(H).verify_invariance(standard_battery(A, 20240601));
  CHECK(r.passed());
  CHECK(r.cases == (1 + 10 * 10 - 1 + 20) * uq_generators(2).size());
}

TEST_CASE("positivity_examples") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const InvariantIntegral I(H);
  const DSpace& D = I.space();
  const RationalPoint half = at("1/2");
  CHECK(I.integrate(DElement::f0()).evaluate(half) == mpq_class(3375, 4096));
  const DElement f({}, {z(2, 2)});
  CHECK(D.dmul(DSpace::dstar(f), f) == DElement({z(2, 2)}, {z(2, 2)}));
  DElement g({}, {z(1, 1)});
  g.add(Word{}, Word{z(2, 1)}, Coefficient::one());
  CHECK(sgn(I.integrate(D.dmul(DSpace::dstar(g), g)).evaluate(half)) > 0);
  for (const char* q : {"1/4", "1/2", "3/4"})
    CHECK(I.verify_positivity(standard_battery(A, 20240601), at(q)).passed());
}

TEST_CASE("uqg_relations_on_sandwiches") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const Report r = InvariantIntegral(H).verify_uqg_relations(2);
  CHECK(r.passed());
  CHECK(r.cases > 0);
}

TEST_CASE("delement_rendering") {
  DElement x({z(2, 2)}, {z(2, 1)}, -Q(1) / (1 - Q(4)));
  x.add(Word{}, Word{}, Q(-3));
  CHECK(x.str() == "q^-3 * f0 + -q/(1-q^4) * z[2,2]*f0*zs[2,1]");
  const auto j = x.to_json();
  CHECK(j.size() == 2);
  CHECK(j[1]["coeff"] == "-q/(1-q^4)");
}
