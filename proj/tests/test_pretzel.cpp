#include <algorithm>
#include <map>

#include "braidlift/errors.hpp"
#include "braidlift/pretzel.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace braidlift;

namespace {

std::vector<int> rotate_left(std::vector<int> q, int k) {
  std::rotate(q.begin(), q.begin() + k, q.end());
  return q;
}

std::vector<int> negated(std::vector<int> q) {
  for (int& x : q) x = -x;
  return q;
}

// Verdict kinds of the nonconstant classes, as a sorted multiset.
std::vector<PretzelKind> kinds(const std::vector<int>& q, int n = 3) {
  std::vector<PretzelKind> out;
  for (auto& c : classify_pretzel(q, n))
    if (!c.coloring.is_constant()) out.push_back(c.verdict.kind);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("classify_3odd") {
  CHECK(classify_3odd(1, 1, 1).kind == PretzelKind::Liftable);
  CHECK(classify_3odd(-3, 1, -3).kind == PretzelKind::Liftable);
  CHECK(classify_3odd(3, 3, 3).kind == PretzelKind::NotLiftable);
  CHECK(classify_3odd(1, 3, 3).kind == PretzelKind::NotLiftable);
  CHECK(classify_3odd(1, 1, 3).kind == PretzelKind::OutOfTheoremScope);
  CHECK_THROWS_AS(classify_3odd(2, 1, 1), Error);

  // Exhaustive table against the determinant rule and the four exceptional triples.
  const std::vector<std::array<int, 3>> lifts{{1, 1, 1}, {3, 3, -1}, {3, -1, 3}, {-1, 3, 3}};
  for (int p = -9; p <= 9; p += 2)
    for (int q = -9; q <= 9; q += 2)
      for (int r = -9; r <= 9; r += 2) {
        auto v = classify_3odd(p, q, r);
        bool tri = (p * q + q * r + r * p) % 3 == 0;
        bool special = false;
        for (auto& l : lifts)
          special = special || (l == std::array<int, 3>{p, q, r}) || (l == std::array<int, 3>{-p, -q, -r});
        PretzelKind want = !tri ? PretzelKind::OutOfTheoremScope
                                : special ? PretzelKind::Liftable : PretzelKind::NotLiftable;
        CHECK(v.kind == want);
        // Tricolorable exactly when the diagram has nonconstant tricolorings.
        if (std::abs(p) <= 5 && std::abs(q) <= 5 && std::abs(r) <= 5)
          CHECK((fox3_count(pretzel_diagram({p, q, r})) > 3) == tri);
      }
}

TEST_CASE("classify_3one_even") {
  CHECK(classify_3one_even({2, -1, -1}, {false, false, false}).kind == PretzelKind::Liftable);
  CHECK(classify_3one_even({2, 5, -1}, {false, false, false}).rule == "one-even-family");
  CHECK(classify_3one_even({-2, 1, 7}, {false, false, false}).kind == PretzelKind::Liftable);
  CHECK(classify_3one_even({6, 3, 3}, {false, false, false}).kind == PretzelKind::NotLiftable);
  CHECK(classify_3one_even({6, 3, 3}, {true, false, false}).kind == PretzelKind::Liftable);
  CHECK(classify_3one_even({3, 0, 3}, {false, false, false}).kind == PretzelKind::Liftable);
  CHECK_THROWS_AS(classify_3one_even({3, 3, 3}, {false, false, false}), Error);

  auto classes = classify_pretzel({3, 3, 6});
  int nonconst = 0, lifts = 0;
  for (auto& c : classes) {
    if (c.coloring.is_constant()) continue;
    ++nonconst;
    lifts += c.verdict.kind == PretzelKind::Liftable;
    if (c.verdict.kind == PretzelKind::Liftable) CHECK(c.region_constant[2]);
  }
  CHECK(nonconst == 4);
  CHECK(lifts == 1);
}

TEST_CASE("classify_modd") {
  CHECK(classify_modd({3, 3, 5, 7, 9}).rule == "odd-adjacent-equal");
  CHECK(classify_modd({3, 5, 7, 9, 11}).rule == "odd-same-sign");
  CHECK(classify_modd({3, -5, 7, -9, 11}).kind == PretzelKind::OutOfTheoremScope);
  CHECK(classify_modd({3, 3, 3, 3, 3}).kind == PretzelKind::NotLiftable);
  CHECK(classify_modd({1, 1, 1}).kind == PretzelKind::OutOfTheoremScope);
  CHECK(classify_modd({3, -3, 1, 1, 5}).rule == "odd-adjacent-equal");
  CHECK_THROWS_AS(classify_modd({3, 3, 3, 3}), Error);
  CHECK_THROWS_AS(classify_modd({3, 2, 3}), Error);
}

TEST_CASE("classify_m_even_first") {
  CHECK(classify_m_even_first({4, 3, 3, 5}, {false, false, false, false}).kind == PretzelKind::Liftable);
  CHECK(classify_m_even_first({6, 3, 3}, {false, false, false}).kind == PretzelKind::NotLiftable);
  CHECK(classify_m_even_first({0, 3, 5}, {false, false, false}).kind == PretzelKind::Liftable);
  CHECK(classify_m_even_first({6, 3, 9, 3, 3}, {false, false, false, false, false}).rule ==
        "even-first-all-multiples-of-3");
  CHECK(classify_m_even_first({2, 3, 3, 5, 7}, {false, true, true, false, false}).rule ==
        "even-first-adjacent-threes");
  CHECK(classify_m_even_first({2, 3, 5, 7, 9}, {true, false, false, false, false}).rule == "even-first-constant");
  CHECK(classify_m_even_first({2, 3, 5, 7, 9}, {false, false, false, false, false}).kind ==
        PretzelKind::OutOfTheoremScope);
  CHECK_THROWS_AS(classify_m_even_first({3, 2, 3}, {false, false, false}), Error);
}

TEST_CASE("s4_colorable") {
  CHECK(s4_colorable({3, 3, 2}));
  CHECK_FALSE(s4_colorable({1, 1, 1}));
  CHECK(s4_colorable({3, 6, 5}) == false);
  CHECK(s4_colorable({3, 6, 4}));
  // Against transitive S_4-colorings of the diagram.
  for (int p = -5; p <= 6; ++p)
    for (int q = p; q <= 6; ++q)
      for (int r = q; r <= 6; ++r) {
        std::vector<int> v{p, q, r};
        if (!is_pretzel_knot(v)) continue;
        bool transitive = false;
        for (auto& c : enumerate_colorings(pretzel_diagram(v), 4))
          transitive = transitive || orbits(4, c.perms).size() == 1;
        CHECK_MESSAGE(s4_colorable(v) == transitive, p << "," << q << "," << r);
      }
}

TEST_CASE("rho_s4_to_s3") {
  auto t = [](int n, int a, int b) { return Permutation::transposition(n, a, b); };
  CHECK(rho_s4_to_s3(t(4, 1, 2)) == t(3, 1, 2));
  CHECK(rho_s4_to_s3(t(4, 1, 3)) == t(3, 1, 3));
  CHECK(rho_s4_to_s3(t(4, 2, 3)) == t(3, 2, 3));
  CHECK(rho_s4_to_s3(t(4, 1, 4)) == t(3, 2, 3));
  CHECK(rho_s4_to_s3(t(4, 2, 4)) == t(3, 1, 3));
  CHECK(rho_s4_to_s3(t(4, 3, 4)) == t(3, 1, 2));
  // Homomorphism with the Klein four group as kernel.
  std::vector<Permutation> s4;
  for (auto& c : enumerate_colorings(LinkDiagram::unknot(), 4, false)) s4.push_back(c.perms[0]);
  REQUIRE(s4.size() == 24);
  int kernel = 0;
  for (auto& a : s4) {
    kernel += rho_s4_to_s3(a).is_identity();
    for (auto& b : s4) CHECK(rho_s4_to_s3(a * b) == rho_s4_to_s3(a) * rho_s4_to_s3(b));
  }
  CHECK(kernel == 4);
}

TEST_CASE("classify_b4") {
  auto first_transitive = [](const std::vector<int>& q, bool want_disjoint, size_t region) {
    auto d = pretzel_diagram(q);
    auto lay = pretzel_layout(q);
    for (auto& c : enumerate_colorings(d, 4)) {
      if (orbits(4, c.perms).size() != 1) continue;
      auto& a = c.perms[d.strand_of_arc(lay.bottom[region][0])];
      auto& b = c.perms[d.strand_of_arc(lay.bottom[region][1])];
      bool disjoint = a != b && a * b == b * a;
      if (disjoint == want_disjoint) return c;
    }
    throw std::runtime_error("none");
  };
  auto c = first_transitive({3, 3, 2}, true, 2);
  CHECK(classify_b4({3, 3, 2}, c).kind == PretzelKind::Liftable);
  auto c2 = first_transitive({3, 3, 6}, false, 2);
  CHECK(classify_b4({3, 3, 6}, c2).kind == PretzelKind::NotLiftable);
  auto c3 = first_transitive({3, 0, 3}, true, 1);
  CHECK(classify_b4({3, 0, 3}, c3).kind == PretzelKind::Liftable);
  // The induced tricoloring of a lifting S_4-coloring must itself lift.
  for (auto& k : classify_pretzel({3, 3, 2}, 4)) {
    if (k.verdict.kind != PretzelKind::Liftable || k.coloring.is_constant()) continue;
    GColoring tri = k.coloring;
    for (auto& p : tri.perms) p = rho_s4_to_s3(p);
    CHECK(tri.is_valid(pretzel_diagram({3, 3, 2})));
    CHECK(b3_lift_search(pretzel_diagram({3, 3, 2}), tri, 6).verdict.kind == VerdictKind::Liftable);
  }
  GColoring bad = c;
  bad.perms[0] = bad.perms[0] == bad.perms[1] ? Permutation::transposition(4, 1, 4) : bad.perms[1];
  CHECK_THROWS_AS(classify_b4({3, 3, 2}, bad), Error);
}

TEST_CASE("property: pretzel verdicts are rotation and mirror invariant") {
  for (auto q : std::vector<std::vector<int>>{{3, 3, 6}, {2, 5, -1}, {3, 3, -1}, {1, 3, 3}, {6, 3, -3},
                                              {4, 3, 3, 5}, {3, 3, 3, 3, 3}, {2, 3, 3, 3, 3}, {0, 3, 3}}) {
    auto base = kinds(q);
    for (int k = 1; k < static_cast<int>(q.size()); ++k) CHECK(kinds(rotate_left(q, k)) == base);
    CHECK(kinds(negated(q)) == base);
  }
  for (auto q : std::vector<std::vector<int>>{{3, 3, 2}, {3, 6, 4}, {3, -3, 2}}) {
    auto base = kinds(q, 4);
    for (int k = 1; k < 3; ++k) CHECK(kinds(rotate_left(q, k), 4) == base);
    CHECK(kinds(negated(q), 4) == base);
  }
  // The even region is rotated to the front together with its flag.
  for (auto& c : classify_pretzel({3, 3, 2, 3, 3})) {
    if (c.coloring.is_constant()) continue;
    auto flags = c.region_constant;
    std::rotate(flags.begin(), flags.begin() + 2, flags.end());
    CHECK(classify_m_even_first({2, 3, 3, 3, 3}, flags) == c.verdict);
  }
}

TEST_CASE("PretzelVerdict json") {
  auto j = classify_3odd(1, 1, 1).to_json();
  CHECK(j["verdict"] == "liftable");
  CHECK(j["rule"] == "three-odd");
}
