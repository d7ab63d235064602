#include <fstream>
#include <random>
#include <sstream>

#include "braidlift/errors.hpp"
#include "braidlift/link.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace braidlift;

TEST_CASE("parse_pd trefoil") {
  auto d = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 6);
  CHECK(d.strand_count() == 3);
  CHECK(d.component_count() == 1);
  CHECK(d.writhe() == 3);
  CHECK(fox3_count(d) == 9);
  // Same knot with the opposite handedness.
  auto m = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  CHECK(m.writhe() == -3);
  CHECK(d.mirror().writhe() == -3);
  // Round trip through the canonical string.
  CHECK(parse_pd(d.pd_string()).pd_string() == d.pd_string());
  // KnotInfo bracket form.
  CHECK(parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").writhe() == 3);
}

TEST_CASE("parse_pd unknot and errors") {
  auto u = parse_pd("U");
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(u.pd_string() == "U");
  CHECK(parse_pd("PD[U,U]").component_count() == 2);

  auto kind = [](const std::string& s) {
    try {
      parse_pd(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalInconsistency;
  };
  CHECK(kind("PD[]") == ErrorKind::MalformedPD);
  CHECK(kind("PD[X[1,2,3]]") == ErrorKind::MalformedPD);
  CHECK(kind("garbage") == ErrorKind::MalformedPD);
  CHECK(kind("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]") == ErrorKind::MalformedPD);
  CHECK(kind("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,5]]") == ErrorKind::InconsistentArcs);
  CHECK(kind("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2],X[7,7,8]]") == ErrorKind::MalformedPD);
  // A kink is a valid one-crossing unknot diagram.
  auto kink = parse_pd("PD[X[1,1,2,2]]");
  CHECK(kink.component_count() == 1);
  CHECK(abelianization(wirtinger(kink)).rank == 1);
}

TEST_CASE("wirtinger presentation") {
  auto d = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  auto w = wirtinger(d);
  CHECK(w.generators == 3);
  CHECK(w.relators.size() == 3);
  auto ab = abelianization(w);
  CHECK(ab.rank == 1);
  CHECK(ab.torsion.empty());
  CHECK(s3_transposition_homs(w) == fox3_count(d));

  auto u = wirtinger(LinkDiagram::unknot());
  CHECK(u.generators == 1);
  CHECK(u.relators.empty());
  CHECK(abelianization(u).rank == 1);

  CHECK_THROWS_AS(wirtinger(parse_pd("PD[U,U]")), Error);
}

TEST_CASE("twist region meridians") {
  FreeWord a = FreeWord::gen(0), b = FreeWord::gen(1);
  auto ba2 = (b * a).pow(2);
  auto [l, r] = twist_region_meridians(a, b, 4);
  CHECK(l == a.conjugated_by(ba2));
  CHECK(r == b.conjugated_by(ba2));
  auto [l0, r0] = twist_region_meridians(l, r, -4);
  CHECK(l0 == a);
  CHECK(r0 == b);
  auto [l1, r1] = twist_region_meridians(a, b, 1);
  CHECK(l1 == b.conjugated_by(a));
  CHECK(r1 == a);
}

TEST_CASE("braid closure") {
  auto t = braid_closure(BraidWord(2, {1, 1, 1}));
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(t.writhe() == 3);
  CHECK(fox3_count(t) == 9);
  auto hopf = braid_closure(BraidWord(2, {1, 1}));
  CHECK(hopf.component_count() == 2);
  CHECK(abelianization(wirtinger(hopf)).rank == 2);
  auto split = braid_closure(BraidWord(3, {1, 1, 1}));
  CHECK(split.free_loops() == 1);
  CHECK_FALSE(split.is_connected());
}

TEST_CASE("property: closures abelianize to Z^components") {
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int> l;
    int len = 2 + static_cast<int>(rng() % 10);
    for (int k = 0; k < len; ++k) l.push_back((1 + static_cast<int>(rng() % (n - 1))) * (rng() % 2 ? 1 : -1));
    BraidWord b(n, l);
    auto d = braid_closure(b);
    // Components are the cycles of the permutation, fixed points included.
    int cycles = n;
    for (auto& c : forget(b).cycles()) cycles -= static_cast<int>(c.size()) - 1;
    CHECK(d.component_count() == cycles);
    CHECK(d.writhe() == exponent_sum(b));
    bool all_gens = true;
    for (int i = 1; i < n; ++i)
      all_gens = all_gens && std::any_of(l.begin(), l.end(), [&](int x) { return std::abs(x) == i; });
    CHECK(d.is_connected() == all_gens);
    if (!all_gens) continue;
    auto ab = abelianization(wirtinger(d));
    CHECK(ab.rank == cycles);
    CHECK(ab.torsion.empty());
    // Meridians pushed through the braid match the closure's crossings.
    std::vector<FreeWord> bottom;
    for (int i = 0; i < n; ++i) bottom.push_back(FreeWord::gen(i));
    auto top = braid_meridians(b, bottom);
    CHECK(top.size() == static_cast<size_t>(n));
    if (d.strand_count() <= 7) CHECK(s3_transposition_homs(wirtinger(d)) == fox3_count(d));
  }
}

TEST_CASE("two-bridge presentations") {
  CHECK(schubert_word({3, 1}).str() == "ba");
  CHECK(schubert_word({5, 2}).str() == "BabA");
  CHECK(schubert_word({5, 3}).str() == "bABa");
  CHECK_THROWS_AS(schubert_word({4, 2}), Error);
  CHECK(parse_fraction("15/4").p == 15);
  CHECK_THROWS_AS(parse_fraction("15"), Error);
  CHECK_THROWS_AS(parse_fraction("15/4x"), Error);
  for (long long p = 1; p <= 31; ++p)
    for (long long q = 1; q < p || q == 1; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto pres = two_bridge_presentation({p, q});
      auto ab = abelianization(pres);
      CHECK(ab.rank == (p % 2 ? 1 : 2));
      // Transposition colorings: 3 constant ones plus 6 more exactly when 3 | p.
      if (p % 2) CHECK(s3_transposition_homs(pres) == (p % 3 ? 3 : 9));
    }
}

TEST_CASE("pretzel diagrams") {
  auto t = pretzel_diagram({1, 1, 1});
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);
  CHECK(fox3_count(t) == 9);
  CHECK(pretzel_diagram({2, -1, -1}).component_count() == 1);
  CHECK(pretzel_diagram({2, 2, 2}).component_count() == 3);
  CHECK(pretzel_diagram({1, 1}).component_count() == 2);
  CHECK(pretzel_diagram({3, 0, 3}).free_loops() == 0);
  CHECK(is_pretzel_knot({1, 1, 1}));
  CHECK(is_pretzel_knot({2, 3, 5}));
  CHECK_FALSE(is_pretzel_knot({1, 1}));
  CHECK_FALSE(is_pretzel_knot({2, 2, 1}));
  auto lay = pretzel_layout({3, -2, 5});
  CHECK(lay.crossings[1].size() == 2);
  CHECK(lay.crossings[2].front() == 5);
}

TEST_CASE("property: pretzel knots") {
  // A knot has H1 = Z. The Goeritz matrix [[p+q,-q],[-q,q+r]] has determinant pq+qr+rp and
  // vanishes mod 3 iff p, q, r all do.
  for (int p = -5; p <= 5; ++p)
    for (int q = -5; q <= 5; ++q)
      for (int r = -5; r <= 5; ++r) {
        std::vector<int> v{p, q, r};
        if (!is_pretzel_knot(v) || !p || !q || !r) continue;
        auto d = pretzel_diagram(v);
        CHECK(d.component_count() == 1);
        CHECK(d.crossing_count() == std::abs(p) + std::abs(q) + std::abs(r));
        auto ab = abelianization(wirtinger(d));
        CHECK(ab.rank == 1);
        CHECK(ab.torsion.empty());
        long long det = std::llabs(1LL * p * q + q * r + r * p);
        bool all3 = p % 3 == 0 && q % 3 == 0 && r % 3 == 0;
        CHECK(fox3_count(d) == (det % 3 ? 3 : all3 ? 27 : 9));
        CHECK(d.mirror().writhe() == -d.writhe());
      }
}

TEST_CASE("connected sum and sub diagram") {
  auto t = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]");
  auto f = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
  auto s = connect_sum(t, 1, t, 3);
  CHECK(s.crossing_count() == 6);
  CHECK(s.component_count() == 1);
  CHECK(fox3_count(s) == 27);
  CHECK(abelianization(wirtinger(s)).rank == 1);
  auto back = sub_diagram(s, {0, 1, 2});
  CHECK(back.crossing_count() == 3);
  CHECK(back.component_count() == 1);
  CHECK(fox3_count(back) == 9);
  auto tf = connect_sum(t, 2, f, 5);
  CHECK(fox3_count(tf) == 9);
  CHECK(fox3_count(sub_diagram(tf, {3, 4, 5, 6})) == 3);
  CHECK_THROWS_AS(sub_diagram(t, {0}), Error);
}

TEST_CASE("fixture table") {
  std::ifstream in(std::string(BRAIDLIFT_FIXTURES) + "/knots.tsv");
  REQUIRE(in);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    std::string name = line.substr(0, tab);
    auto d = parse_pd(line.substr(tab + 1));
    ++count;
    CHECK_MESSAGE(d.component_count() == 1, name);
    auto ab = abelianization(wirtinger(d));
    CHECK_MESSAGE(ab.rank == 1, name);
    CHECK_MESSAGE(ab.torsion.empty(), name);
    CHECK_MESSAGE(parse_pd(d.pd_string()).pd_string() == d.pd_string(), name);
    CHECK_MESSAGE(fox3_count(d.mirror()) == fox3_count(d), name);
  }
  CHECK(count == 250);
}
