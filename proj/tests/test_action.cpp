#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace qsd;
using namespace qsd::test;

namespace {

const Coefficient kHalf = Coefficient::s_power(1);

// The generator tables, typed out case by case.
Element table(const DomainAlgebra& A, const UqLetter& l, int i, int j) {
  const int n = A.n(), k = l.index;
  const Element zij({z(i, j)});
  if (k < n) {
    switch (l.sym) {
      case UqSym::K:
        if (i == j && j == k) return zij * Q(2);
        if (i == j && j == k + 1) return zij * Q(-2);
        if ((i == k && k > j) || (i - 1 > k && k == j)) return zij * Q(1);
        if ((i - 1 == k && k > j) || (i > k + 1 && k + 1 == j)) return zij * Q(-1);
        return zij;
      case UqSym::E:
        if (i == j && j == k + 1) return Element({z(i, j - 1)}, kHalf.inverse() * (Q(1) + Q(-1)));
        if (i == k + 1 && k + 1 > j) return Element({z(i - 1, j)}, kHalf.inverse());
        if (i > k + 1 && k + 1 == j) return Element({z(i, j - 1)}, kHalf.inverse());
        return {};
      case UqSym::F:
        if (i == j && j == k) return Element({z(i + 1, j)}, kHalf * (Q(1) + Q(-1)));
        if (i == k && k > j) return Element({z(i + 1, j)}, kHalf);
        if (i > k && k == j) return Element({z(i, j + 1)}, kHalf);
        return {};
      case UqSym::Kinv:
        break;
    }
    return {};
  }
  switch (l.sym) {
    case UqSym::K:
      if (i == n && j == n) return zij * Q(4);
      if (i == n && n > j) return zij * Q(2);
      return zij;
    case UqSym::F:
      if (i == n && j == n) return Element(Q(1));
      return {};
    case UqSym::E:
      if (i == n && n >= j) return A.normal_form(Element({z(n, n), z(i, j)}, -Q(1)));
      return A.normal_form(Element({z(n, i), z(n, j)}, Coefficient(-1)));
    case UqSym::Kinv:
      break;
  }
  return {};
}

}  // namespace

TEST_CASE("cartan_data") {
  const CartanData c(3);
  CHECK(c.a(1, 1) == 2);
  CHECK(c.a(1, 2) == -1);
  CHECK(c.a(2, 3) == -2);
  CHECK(c.a(3, 2) == -1);
  CHECK(c.a(1, 3) == 0);
  CHECK(c.d(1) == 1);
  CHECK(c.d(3) == 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(c.d(i) * c.a(i, j) == c.d(j) * c.a(j, i));
}

TEST_CASE("act_generator_examples") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  CHECK(H.act_generator(UqLetter::F(2), z(2, 2)) == Element(Q(1)));
  CHECK(H.act_generator(UqLetter::E(2), z(1, 1)) == Element({z(2, 1), z(2, 1)}, Coefficient(-1)));
  CHECK(H.act_generator(UqLetter::E(1), z(2, 2)) ==
        Element({z(2, 1)}, kHalf.inverse() * (Q(1) + Q(-1))));
  CHECK(H.act_generator(UqLetter::K(1), z(1, 1)) == Element({z(1, 1)}, Q(2)));
}

TEST_CASE("act_generator_matches_typed_tables") {
  for (int n = 2; n <= 4; ++n) {
    const DomainAlgebra A(n);
    const HopfAction H(A);
    for (const auto& l : uq_generators(n)) {
      if (l.sym == UqSym::Kinv) continue;
      for (const auto& g : A.rules().holomorphic_letters()) {
        INFO(l.str() << " " << g.str());
        CHECK(H.act_generator(l, g) == table(A, l, g.row, g.col));
      }
    }
  }
}

TEST_CASE("act_examples") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  CHECK(H.act(UqLetter::E(2), Element({z(2, 2), z(2, 2)})) ==
        Element({z(2, 2), z(2, 2), z(2, 2)}, -Q(1) * (1 + Q(4))));
  CHECK(H.act(UqLetter::K(1), Element({zs(1, 1)})) == Element({zs(1, 1)}, Q(-2)));
  CHECK(H.act(UqLetter::E(2), Element({zs(2, 2)})) == Element(Q(-3)));
  for (const auto& l : uq_generators(2)) {
    const Element one(Coefficient::one());
    CHECK(H.act(l, one) == Element(counit(UqExpr(l))));
  }
}

TEST_CASE("antipode_star_examples") {
  const CartanData cd(2);
  CHECK(antipode_star(UqExpr(UqLetter::K(1)), cd) == UqExpr(UqLetter::Kinv(1)));
  CHECK(antipode_star(UqExpr(UqLetter::Kinv(2)), cd) == UqExpr(UqLetter::K(2)));
  CHECK(antipode_star(UqExpr(UqLetter::E(2)), cd) == Q(-4) * UqExpr(UqLetter::F(2)));
  CHECK(antipode_star(UqExpr(UqLetter::E(1)), cd) == -Q(-2) * UqExpr(UqLetter::F(1)));
  CHECK(antipode_star(UqExpr(UqLetter::F(1)), cd) == -Q(2) * UqExpr(UqLetter::E(1)));
  CHECK(antipode_star(UqExpr(UqLetter::F(2)), cd) == Q(4) * UqExpr(UqLetter::E(2)));
  // (S*)(S*) is the identity on generators.
  for (const auto& l : uq_generators(3))
    CHECK(collect_k(antipode_star(antipode_star(UqExpr(l), CartanData(3)), CartanData(3)), CartanData(3)) ==
          UqExpr(l));
}

TEST_CASE("weight_examples") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  CHECK(H.weight(Word{z(2, 2)}) == WeightVector{-2, 4});
  CHECK(H.weight(Word{}) == WeightVector{0, 0});
  CHECK(H.weight(Word{z(2, 1)}) == WeightVector{0, 2});
  CHECK(H.weight(Word{zs(2, 1), z(2, 2)}) == WeightVector{-2, 2});
}

TEST_CASE("k_action_is_diagonal") {
  for (int n = 2; n <= 3; ++n) {
    const DomainAlgebra A(n);
    const HopfAction H(A);
    for (const auto& w : A.normal_words_up_to(n == 2 ? 4 : 3)) {
      const auto wt = H.weight(w);
      for (int k = 1; k <= n; ++k) {
        CHECK(H.act(UqLetter::K(k), Element(w)) == Element(w, Q(wt[k - 1])));
        CHECK(H.act(UqLetter::Kinv(k), Element(w)) == Element(w, Q(-wt[k - 1])));
      }
    }
  }
}

TEST_CASE("coproduct_coherence") {
  for (int n = 2; n <= 3; ++n) {
    const DomainAlgebra A(n);
    const HopfAction H(A);
    Rng rng(77);
    for (int t = 0; t < 12; ++t) {
      const Element a = A.normal_form(random_element(A, rng, 2, 2));
      const Element b = A.normal_form(random_element(A, rng, 2, 2));
      const Element ab = A.multiply(a, b);
      for (int k = 1; k <= n; ++k) {
        const auto E = UqLetter::E(k), F = UqLetter::F(k), K = UqLetter::K(k), Ki = UqLetter::Kinv(k);
        const Element e_expect =
            A.multiply(H.act(E, a), b) + A.multiply(H.act(K, a), H.act(E, b));
        CHECK(H.act(E, ab) == e_expect);
        const Element f_expect =
            A.multiply(H.act(F, a), H.act(Ki, b)) + A.multiply(a, H.act(F, b));
        CHECK(H.act(F, ab) == f_expect);
        CHECK(H.act(K, ab) == A.multiply(H.act(K, a), H.act(K, b)));
      }
    }
  }
}

TEST_CASE("commutator_on_z22") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  const UqExpr E2(UqLetter::E(2)), F2(UqLetter::F(2));
  const UqExpr lhs = E2 * F2 - F2 * E2;
  const UqExpr rhs = (Q(2) - Q(-2)).inverse() * (UqExpr(UqLetter::K(2)) - UqExpr(UqLetter::Kinv(2)));
  const Element f({z(2, 2)});
  const Element expect(Word{z(2, 2)}, (Q(4) - Q(-4)) / (Q(2) - Q(-2)));
  CHECK(H.act(lhs, f) == expect);
  CHECK(H.act(rhs, f) == expect);
}

TEST_CASE("uqg_relations_hold") {
  {
    const DomainAlgebra A(2);
    const Report r = HopfAction(A).verify_uqg_relations(2);
    CHECK(r.passed());
    CHECK(r.cases > 0);
  }
  {
    const DomainAlgebra A(3);
    CHECK(HopfAction(A).verify_uqg_relations(1).passed());
  }
}

TEST_CASE("serre_relation_list") {
  const CartanData cd(2);
  int serre = 0;
  for (const auto& rel : uq_relations(cd))
    if (rel.name.find("Serre") != std::string::npos) {
      ++serre;
      CHECK(rel.rhs.is_zero());
    }
  CHECK(serre == 4);
  CHECK(q_binomial(3, 1, 1) == 1 + Q(2) + Q(-2));
  CHECK(q_binomial(2, 1, 2) == Q(2) + Q(-2));
}

TEST_CASE("module_algebra_rank_two") {
  const DomainAlgebra A(2);
  const Report r = HopfAction(A).verify_module_algebra();
  CHECK(r.passed());
  CHECK(r.cases > 0);
}

TEST_CASE("star_compatibility_battery") {
  const DomainAlgebra A(2);
  const HopfAction H(A);
  Rng rng(20240601);
  std::vector<Element> battery;
  for (int t = 0; t < 50; ++t) battery.push_back(A.normal_form(random_element(A, rng, 2)));
  const Report r = H.verify_star_compatibility(battery);
  CHECK(r.passed());
  CHECK(r.cases == 50 * uq_generators(2).size());
  // One case by hand: (E2 z22)* = -q zs22 zs22, and S(E2)* zs22 = q^-4 F2 zs22.
  const Element lhs = A.involution(H.act(UqLetter::E(2), Element({z(2, 2)})));
  CHECK(lhs == Element({zs(2, 2), zs(2, 2)}, -Q(1)));
  CHECK(H.act(H.antipode_star(UqExpr(UqLetter::E(2))), Element({zs(2, 2)})) == lhs);
}
