#include <functional>
#include <vector>

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace qsd;
using namespace qsd::test;

namespace {

Element rhs_element(const Rhs& r) {
  Element e;
  for (const auto& t : r) e.add(t.word, t.coeff);
  return e;
}

// The eleven holomorphic conditions in their original form, each applied to the left-hand side
// z[i,j]z[k,l] (row 5 is written z[k,l]z[i,j]).
struct ListedRow {
  int id;
  bool swapped;
  std::function<bool(int, int, int, int)> cond;
};

const std::vector<ListedRow>& listed_rows() {
  static const std::vector<ListedRow> rows{
      {1, false, [](int i, int j, int k, int l) { return i == j && j == l && l < k; }},
      {2, false, [](int i, int j, int k, int l) { return j < i && i == k && k == l; }},
      {3, false, [](int i, int j, int k, int l) { return j < l && l < i && i == k; }},
      {4, false, [](int i, int j, int k, int l) { return j == l && l < i && i < k; }},
      {5, true, [](int i, int j, int k, int l) { return j < l && l <= k && k < i; }},
      {6, false, [](int i, int j, int k, int l) { return i == j && j < k && k == l; }},
      {7, false, [](int i, int j, int k, int l) { return i == j && j < l && l < k; }},
      {8, false, [](int i, int j, int k, int l) { return j < i && i < k && k == l; }},
      {9, false, [](int i, int j, int k, int l) { return j < i && i < l && l < k; }},
      {10, false, [](int i, int j, int k, int l) { return j < l && l < i && i < k; }},
      {11, false, [](int i, int j, int k, int l) { return j < i && i == l && l < k; }},
  };
  return rows;
}

std::vector<int> listed_matches(const Generator& a, const Generator& b) {
  std::vector<int> out;
  for (const auto& r : listed_rows()) {
    const bool hit = r.swapped ? r.cond(b.row, b.col, a.row, a.col) : r.cond(a.row, a.col, b.row, b.col);
    if (hit) out.push_back(r.id);
  }
  return out;
}

}  // namespace

TEST_CASE("classify_examples") {
  const RuleTable t(2);
  const auto& r1 = t.classify(z(1, 1), z(2, 1));
  REQUIRE(r1.has_value());
  CHECK(r1->family == RuleFamily::holomorphic);
  CHECK(r1->row == 1);
  CHECK_FALSE(t.classify(z(2, 2), z(1, 1)).has_value());
  const auto& c = t.classify(zs(2, 1), z(2, 1));
  REQUIRE(c.has_value());
  CHECK(c->family == RuleFamily::cross);
  CHECK(std::string(rules::kCrossRows[static_cast<std::size_t>(c->row)].pattern).find("i=k>j=l") == 0);
  CHECK_FALSE(t.classify(z(1, 1), zs(2, 2)).has_value());
  CHECK_FALSE(t.classify(zs(1, 1), zs(2, 2)).has_value());
  REQUIRE(t.classify(zs(2, 2), zs(1, 1)).has_value());
  CHECK(t.classify(zs(2, 2), zs(1, 1))->family == RuleFamily::star);
}

TEST_CASE("completeness_exhaustive") {
  for (int n = 2; n <= 4; ++n) {
    const RuleTable t(n);
    std::size_t pairs = 0, normal = 0;
    for (const auto& a : t.letters())
      for (const auto& b : t.letters()) {
        ++pairs;
        const auto matches = t.all_matches(a, b);
        if (is_normal_pair(a, b)) {
          ++normal;
          CHECK(matches.empty());
          CHECK_FALSE(t.classify(a, b).has_value());
        } else {
          CHECK(matches.size() == 1);
          CHECK(t.classify(a, b).has_value());
        }
      }
    const std::size_t N = static_cast<std::size_t>(n * (n + 1));
    CHECK(pairs == N * N);
    CHECK(normal > 0);
  }
}

TEST_CASE("holomorphic_rows_match_listed_conditions") {
  for (int n = 2; n <= 4; ++n) {
    const RuleTable t(n);
    for (const auto& a : t.holomorphic_letters())
      for (const auto& b : t.holomorphic_letters()) {
        if (!index_less(a, b)) continue;
        const auto listed = listed_matches(a, b);
        INFO(a.str() << b.str());
        REQUIRE(listed.size() == 1);
        const auto& id = t.classify(a, b);
        REQUIRE(id.has_value());
        CHECK(id->row == listed.front());
      }
  }
}

TEST_CASE("holomorphic_rhs_instances") {
  const RuleTable t2(2);
  CHECK(rhs_element(t2.rhs(z(1, 1), z(2, 1))) == Element({z(2, 1), z(1, 1)}, Q(2)));
  Element six({z(2, 2), z(1, 1)});
  six.add({z(2, 1), z(2, 1)}, Q(1) * (Q(2) - Q(-2)));
  CHECK(rhs_element(t2.rhs(z(1, 1), z(2, 2))) == six);

  const RuleTable t3(3);
  // Row 11 at (2,1),(3,2): q z32 z21 + (q - q^-1) z22 z31, the last word not yet normal.
  Element eleven({z(3, 2), z(2, 1)}, Q(1));
  eleven.add({z(2, 2), z(3, 1)}, Q(1) - Q(-1));
  CHECK(rhs_element(t3.rhs(z(2, 1), z(3, 2))) == eleven);
  // Row 9 at (2,1),(3,3): j<i<l<k fails (l=k), row 8 applies instead.
  CHECK(t3.classify(z(2, 1), z(3, 3))->row == 8);
}

TEST_CASE("cross_rhs_i_eq_k_gt_j_eq_l") {
  const RuleTable t(2);
  Element expect({z(2, 1), zs(2, 1)}, Q(2));
  expect.add({z(2, 2), zs(2, 2)}, -Q(1) * (Q(-1) - Q(1)));
  expect.add(Word{}, 1 - Q(2));
  CHECK(rhs_element(t.rhs(zs(2, 1), z(2, 1))) == expect);
}

TEST_CASE("derive_star_rules_examples") {
  const RuleTable t(2);
  const auto star_rules = t.derive_star_rules();
  CHECK(star_rules.size() == 3);
  auto find = [&](Generator l, Generator r) -> const StarRule* {
    for (const auto& s : star_rules)
      if (s.left == l && s.right == r) return &s;
    return nullptr;
  };
  const StarRule* one = find(zs(2, 1), zs(1, 1));
  REQUIRE(one != nullptr);
  CHECK(one->source_row == 1);
  CHECK(rhs_element(one->rhs) == Element({zs(1, 1), zs(2, 1)}, Q(2)));

  const StarRule* six = find(zs(2, 2), zs(1, 1));
  REQUIRE(six != nullptr);
  CHECK(six->source_row == 6);
  Element expect({zs(1, 1), zs(2, 2)});
  expect.add({zs(2, 1), zs(2, 1)}, Q(1) * (Q(2) - Q(-2)));
  CHECK(rhs_element(six->rhs) == expect);

  // Row 5 at n = 3: starred letters with l<j<=i<k commute.
  const RuleTable t3(3);
  for (const auto& s : t3.derive_star_rules()) {
    if (s.source_row != 5) continue;
    CHECK(rhs_element(s.rhs) == Element({s.right, s.left}));
  }
}

TEST_CASE("star_rules_are_conjugates_of_holomorphic_rules") {
  for (int n = 2; n <= 3; ++n) {
    const RuleTable t(n);
    for (const auto& s : t.derive_star_rules()) {
      // Conjugating back: s.left s.right = R*  <=>  s.right* s.left* = R.
      Element conj;
      for (const auto& term : s.rhs) conj.add(star(term.word), term.coeff);
      CHECK(conj == rhs_element(t.rhs(s.right.conjugate(), s.left.conjugate())));
      CHECK(rhs_element(t.rhs(s.left, s.right)) == rhs_element(s.rhs));
    }
  }
}

TEST_CASE("cross_tables_agree_at_rank_two") {
  const RuleTable a(2, CrossRelations::covariant), b(2, CrossRelations::literal);
  for (const auto& x : a.letters())
    for (const auto& y : a.letters()) {
      if (is_normal_pair(x, y)) continue;
      CHECK(rhs_element(a.rhs(x, y)) == rhs_element(b.rhs(x, y)));
    }
}

TEST_CASE("rule_names") {
  const RuleTable t(2);
  CHECK(t.classify(z(1, 1), z(2, 1))->name() == "(1) i=j=l<k");
  CHECK(t.classify(zs(2, 2), zs(1, 1))->name().rfind("*(6)", 0) == 0);
}
