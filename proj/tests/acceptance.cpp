// One PASS/FAIL line per acceptance criterion. Time limits are pinned below next to each check.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "braidlift/coloring.hpp"
#include "braidlift/garside.hpp"
#include "braidlift/hurwitz.hpp"
#include "braidlift/pretzel.hpp"

using namespace braidlift;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> g(1, n - 1), s(0, 1);
  std::vector<int> l;
  for (int i = 0; i < len; ++i) l.push_back(s(rng) ? g(rng) : -g(rng));
  return BraidWord(n, l);
}

std::map<std::string, std::string> fixture(const std::string& file) {
  std::ifstream in(std::string(BRAIDLIFT_FIXTURES) + "/" + file);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

LaurentPoly poly(std::vector<std::int64_t> c) { return LaurentPoly::from_coeffs(std::move(c)); }

bool entrywise_equal(const BraidSystem& a, const BraidSystem& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i)
    if (!equal(a.entries[i], b.entries[i])) return false;
  return true;
}

PermutationSystem random_system(int n, int m, std::mt19937& rng) {
  std::vector<Permutation> e;
  Permutation acc(n);
  for (int j = 0; j + 1 < m; ++j) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::shuffle(im.begin(), im.end(), rng);
    e.push_back(Permutation::from_images(im));
    acc = acc * e.back();
  }
  e.push_back(acc.inverse());
  return PermutationSystem(n, e);
}

Outcome word_problem() {
  Outcome o;
  BraidWord s121(3, {1, 2, 1}), s212(3, {2, 1, 2}), s12(3, {1, 2});
  o.require(equal(s121, s212), "braid relation");
  auto d2 = s121.pow(2);
  o.require(equal(d2, s12.pow(3)), "(s1 s2 s1)^2 = (s1 s2)^3");
  o.require(equal(d2, BraidWord::delta(3).pow(2)), "Delta^2");
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> len(0, 20);
  for (int i = 0; i < 100; ++i) {
    auto w = random_word(rng, 3, len(rng));
    o.require(equal(d2 * w, w * d2), "Delta^2 fails to commute with " + w.str());
  }
  auto beta = BraidWord(3, {-2}) * s121 * BraidWord(3, {2});
  o.require(equal(s121.pow(2), beta.pow(2)), "alpha^2 = beta^2");
  return o;
}

Outcome hurwitz() {
  Outcome o;
  const std::array<std::pair<const char*, const char*>, 3> worked{{
      {"perm-system 4: (1 2),(3 4),(1 3),(2 4),(1 4),(2 3)",
       "braid-system 4: [1],[3],[2 1 -2],[-2 -3 2],[3 2 -1 -2 -3],[-2]"},
      {"perm-system 4: (1 4 3),(2 4),(3 4),(2 3),(1 3)", "braid-system 4: [1 2 -1 3],[2 3 -2],[-3],[-2],[1 -2 -1]"},
      {"perm-system 4: (1 2 3),(2 4),(2 3),(1 4),(3 4)", "braid-system 4: [2 1],[-2 3 2],[-2],[-1 2 -3 -2 1],[-3]"},
  }};
  for (auto& [perm, braid] : worked) {
    auto ps = parse_permutation_system(perm);
    auto r = lift_permutation_system(ps);
    o.require(entrywise_equal(r.system, parse_braid_system(braid)), std::string("worked example ") + perm);
    o.require(verify_braid_system(r.system, ps).pass(), std::string("verification of ") + perm);
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 8);
    auto ps = random_system(n, m, rng);
    o.require(verify_braid_system(lift_permutation_system(ps).system, ps).pass(), "random " + ps.str());
  }
  return o;
}

Outcome cyclic() {
  Outcome o;
  for (int n = 2; n <= 12; n += 2) {
    auto c = lift_cyclic_cover(n);
    if (!c.system) {
      o.require(false, "no lift for n = " + std::to_string(n));
      continue;
    }
    o.require(is_identity(c.system->product()), "product for n = " + std::to_string(n));
    PermutationSystem ps(n, std::vector<Permutation>(n, forget(c.system->entries.front())));
    o.require(verify_braid_system(*c.system, ps).pass(), "verification for n = " + std::to_string(n));
  }
  for (int n : {3, 5, 7, 9}) o.require(!lift_cyclic_cover(n).system, "odd n = " + std::to_string(n) + " lifted");
  auto refined = parse_permutation_system("perm-system 6: (1 2 3)(4 5 6),(1 2 3)(4 5 6),(1 2 3)(4 5 6)");
  o.require(!smooth_obstruction(refined), "((123)(456))^3 accepted");
  return o;
}

Outcome two_bridge_lists() {
  Outcome o;
  auto a = Permutation::transposition(3, 1, 2), b = Permutation::transposition(3, 2, 3);
  int rows = 0;
  for (auto& [name, rest] : fixture("two_bridge_lists.tsv")) {
    auto tab = rest.find('\t');
    auto want = rest.substr(tab + 1) == "liftable" ? VerdictKind::Liftable : VerdictKind::NotLiftable;
    auto got = two_bridge_lift_decision(two_bridge_presentation(parse_fraction(rest.substr(0, tab))), a, b);
    o.require(got.kind == want, name);
    ++rows;
  }
  o.require(rows == 26, "expected 26 rows, read " + std::to_string(rows));
  o.detail = o.ok ? std::to_string(rows) + " knots" : o.detail;
  return o;
}

Outcome alexander() {
  Outcome o;
  auto knots = fixture("knots.tsv");
  o.require(fox_alexander(wirtinger(parse_pd(knots["3_1"]))) == poly({1, -1, 1}), "trefoil");
  for (auto [p, q, r] : {std::array<long long, 3>{1, 1, 1}, {3, 3, -1}, {3, 5, 7}}) {
    long long s = p * q + q * r + r * p;
    auto want = poly({(s + 1) / 4, (2 - 2 * s) / 4, (s + 1) / 4}).normalized();
    auto got = fox_alexander(wirtinger(pretzel_diagram({int(p), int(q), int(r)})));
    o.require(got == want, "pretzel formula for (" + std::to_string(p) + "," + std::to_string(q) + "," +
                               std::to_string(r) + "): " + got.str());
  }
  for (auto name : {"6_1", "7_4"}) {
    auto delta = fox_alexander(wirtinger(parse_pd(knots[name])));
    o.require(trefoil_divisibility_obstruction(delta) == Obstruction::Obstructed, name);
  }
  for (auto f : {TwoBridgeForm{9, 2}, TwoBridgeForm{15, 4}})
    o.require(trefoil_divisibility_obstruction(fox_alexander(two_bridge_presentation(f))) == Obstruction::Obstructed,
              "Schubert presentation " + std::to_string(f.p) + "/" + std::to_string(f.q));
  return o;
}

Outcome twist() {
  Outcome o;
  auto rec = [](int n, int k) { return n == 0 ? TwistRecurrence{0, k, 0, 0, 0, 0} : twist_recurrences(n, k); };
  auto apply = [](const Mat2& m, const Vec2& v) {
    return Vec2{m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  };
  for (int k = -5; k <= 5; ++k) {
    Vec2 x{1, 0}, y{1, k};
    Mat2 Tx = transvection(x), Ty = transvection(y), Txi = Tx.inverse(), Tyi = Ty.inverse();
    auto lin = [&](Int128 cx, Int128 cy) {
      return Vec2{static_cast<std::int64_t>(cx * x.x + cy * y.x), static_cast<std::int64_t>(cx * x.y + cy * y.y)};
    };
    Mat2 p1, p2, p3, p4;
    for (int n = 1; n <= 8; ++n) {
      p1 = p1 * (Tx * Ty);
      p2 = p2 * (Ty * Tx);
      p3 = p3 * (Txi * Tyi);
      p4 = p4 * (Tx * Tyi);
      auto r = rec(n, k), r1 = rec(n + 1, k);
      Int128 kk = k, one = 1, a = one - kk * kk * r.A, c = one + kk * kk * r.C;
      std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(apply(p1, x) == lin(a, -kk * r.B), "A/B family" + at);
      o.require(apply(Ty * p1, x) == lin(a, -kk * r1.B), "A/B_{n+1} family" + at);
      o.require(apply(p2, y) == lin(kk * r.B, a), "swapped A/B family" + at);
      o.require(apply(p3, x) == lin(a, kk * r.B), "inverse A/B family" + at);
      o.require(apply(Tyi * p3, x) == lin(a, kk * r1.B), "inverse A/B_{n+1} family" + at);
      o.require(apply(p4, x) == lin(c, kk * r.D), "C/D family" + at);
      o.require(apply(Tyi * p4, x) == lin(c, kk * r1.D), "C/D_{n+1} family" + at);
    }
    if (k == 0) continue;
    for (int n = 2; n <= 20; ++n) {
      auto p = twist_recurrences(n, k), q = twist_recurrences(n - 1, k);
      o.require(p.C > q.C && p.D > q.D, "C, D monotone at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome pretzel() {
  Outcome o;
  const std::vector<std::array<int, 3>> lifts{{1, 1, 1}, {3, 3, -1}, {3, -1, 3}, {-1, 3, 3}};
  for (int p = -9; p <= 9; p += 2)
    for (int q = -9; q <= 9; q += 2)
      for (int r = -9; r <= 9; r += 2) {
        bool tri = (p * q + q * r + r * p) % 3 == 0;
        bool special = false;
        for (auto& l : lifts)
          special = special || l == std::array<int, 3>{p, q, r} || l == std::array<int, 3>{-p, -q, -r};
        auto want = !tri ? PretzelKind::OutOfTheoremScope : special ? PretzelKind::Liftable : PretzelKind::NotLiftable;
        o.require(classify_3odd(p, q, r).kind == want,
                  "three odd (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")");
      }

  int classes = 0, lifted = 0;
  for (auto& c : classify_pretzel({3, 3, 6})) {
    if (c.coloring.is_constant()) continue;
    ++classes;
    lifted += c.verdict.kind == PretzelKind::Liftable;
  }
  o.require(classes == 4 && lifted == 1, "P(3,3,6): " + std::to_string(lifted) + " of " + std::to_string(classes));

  // Every triple, no symmetry reduction.
  int checked = 0, out_of_scope = 0, disagreements = 0;
  std::string first;
  for (int a = -7; a <= 7; ++a)
    for (int b = -7; b <= 7; ++b)
      for (int c = -7; c <= 7; ++c) {
        std::vector<int> q{a, b, c};
        if (!is_pretzel_knot(q)) continue;
        auto d = pretzel_diagram(q);
        for (auto& cls : classify_pretzel(q)) {
          if (cls.coloring.is_constant()) continue;
          if (cls.verdict.kind == PretzelKind::OutOfTheoremScope) {
            ++out_of_scope;
            continue;
          }
          ++checked;
          bool found = b3_lift_search(d, cls.coloring, 8).verdict.kind == VerdictKind::Liftable;
          if (found != (cls.verdict.kind == PretzelKind::Liftable) && disagreements++ == 0)
            first = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
  o.require(checked > 0, "cross-check checked nothing");
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements, first " + first);
  if (o.ok)
    o.detail = "cross-check " + std::to_string(checked) + " classes, 0 disagreements, " + std::to_string(out_of_scope) +
               " out of scope";
  return o;
}

Outcome torus_knot() {
  Outcome o;
  auto d = braid_closure(BraidWord(2, std::vector<int>(9, 1)));
  std::optional<GColoring> tri;
  for (auto& c : enumerate_colorings(d, 3))
    if (!c.is_constant()) tri = c;
  o.require(tri.has_value(), "T(9,2) has no nonconstant tricoloring");
  if (!tri) return o;
  auto r = b3_lift_search(d, *tri, 4);
  o.require(r.verdict.kind == VerdictKind::Liftable, "no lift within bound 4");
  if (r.verdict.kind != VerdictKind::Liftable) return o;
  o.require(r.psl.is_valid(d), "PSL(2,Z) coloring fails a crossing");
  o.require(r.b3.is_valid(d), "B_3 coloring fails a crossing");
  for (int s = 0; s < d.strand_count(); ++s) {
    o.require(forget(r.b3.braids[s]) == tri->perms[s], "witness does not forget to the tricoloring");
    o.require(find_conjugator(r.b3.braids[s], BraidWord(3, {1})).has_value() ||
                  find_conjugator(r.b3.braids[s], BraidWord(3, {-1})).has_value(),
              "witness entry is not a conjugate of s1^{+-1}");
  }
  return o;
}

Outcome reducible() {
  Outcome o;
  BraidWord id(3), delta(3, {1, 2});
  // Periodic interiors chosen so every block of alpha^2 carries the same interior (s1 s2)^2.
  auto alpha = cable(BraidWord(3, {1, 2, 1}), {id, delta, delta.pow(2)});
  auto gamma = cable(BraidWord(3, {1}), {id, id, id});
  o.require(forget(alpha) == Permutation::parse("(1 7 2 8 3 9)(4 6 5)", 9), "forget(alpha) = " + forget(alpha).str());
  o.require(forget(gamma) == Permutation::parse("(1 4)(2 5)(3 6)", 9), "forget(gamma) = " + forget(gamma).str());
  auto a2 = alpha * alpha;
  o.require(equal(a2 * gamma, gamma * a2), "alpha^2 gamma != gamma alpha^2");
  auto beta = gamma.inverse() * alpha * gamma;
  o.require(equal(beta * beta, a2), "beta^2 != alpha^2");
  o.require(forget(beta) == Permutation::parse("(1 3 2)(4 7 5 8 6 9)", 9), "forget(beta) = " + forget(beta).str());
  return o;
}

// One legal rewrite of a word: cancelling pair insertion, far commutation, or a braid relation.
BraidWord rewrite(std::mt19937& rng, const BraidWord& w) {
  auto l = w.letters();
  int n = w.strands();
  for (int attempt = 0; attempt < 20; ++attempt) {
    switch (rng() % 3) {
      case 0: {
        int g = 1 + static_cast<int>(rng() % (n - 1));
        if (rng() % 2) g = -g;
        auto at = l.begin() + static_cast<long>(rng() % (l.size() + 1));
        at = l.insert(at, -g);
        l.insert(at, g);
        return BraidWord(n, l);
      }
      case 1:
        for (size_t i = 0; i + 1 < l.size(); ++i)
          if (std::abs(std::abs(l[i]) - std::abs(l[i + 1])) >= 2 && rng() % 2) {
            std::swap(l[i], l[i + 1]);
            return BraidWord(n, l);
          }
        break;
      default:
        for (size_t i = 0; i + 2 < l.size(); ++i)
          if (l[i] == l[i + 2] && std::abs(l[i] - l[i + 1]) == 1 && (l[i] > 0) == (l[i + 1] > 0)) {
            std::swap(l[i], l[i + 1]);
            l[i + 2] = l[i];
            return BraidWord(n, l);
          }
    }
  }
  return w;
}

std::vector<PretzelKind> kinds(const std::vector<int>& q, int n = 3) {
  std::vector<PretzelKind> out;
  for (auto& c : classify_pretzel(q, n))
    if (!c.coloring.is_constant()) out.push_back(c.verdict.kind);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto w = random_word(rng, n, static_cast<int>(rng() % 31));
    auto v = w;
    for (int s = 1 + static_cast<int>(rng() % 6); s > 0; --s) v = rewrite(rng, v);
    o.require(normal_form(w) == normal_form(v), "normal form changed under rewriting " + w.str());
  }

  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 4), m = 2 + static_cast<int>(rng() % 6);
    auto ps = random_system(n, m, rng);
    BraidSystem bs(n);
    for (int j = 0; j < m; ++j) {
      bs.entries.push_back(random_word(rng, n, 5));
      bs.certificates.emplace_back();
    }
    auto before = bs.product();
    auto pbefore = ps.product();
    MoveTrace t;
    for (int s = 0; s < 12; ++s) {
      int k = 1 + static_cast<int>(rng() % (m - 1)), d = rng() % 2 ? 1 : -1;
      ps = apply_slide(ps, k, d, &t);
      bs = apply_slide(bs, k, d);
    }
    o.require(ps.product() == pbefore && equal(bs.product(), before), "slide changed a product");
  }

  for (int it = 0; it < 60; ++it) {
    int n = 2 + static_cast<int>(rng() % 4), m = 2 + static_cast<int>(rng() % 7);
    auto ps = random_system(n, m, rng);
    auto r = lift_permutation_system(ps);
    o.require(replay(ps, r.trace).entries.empty(), "trace does not empty " + ps.str());
    o.require(replay(BraidSystem(n), r.trace.inverse()).entries == r.system.entries,
              "inverse trace does not rebuild the lift of " + ps.str());
  }

  for (auto q : std::vector<std::vector<int>>{{3, 3, 6}, {2, 5, -1}, {3, 3, -1}, {1, 3, 3}, {4, 3, 3, 5},
                                              {3, 3, 3, 3, 3}, {2, 3, 3, 3, 3}}) {
    auto base = kinds(q);
    for (size_t k = 1; k < q.size(); ++k) {
      auto r = q;
      std::rotate(r.begin(), r.begin() + static_cast<long>(k), r.end());
      o.require(kinds(r) == base, "rotation changed pretzel verdicts");
    }
    auto neg = q;
    for (int& x : neg) x = -x;
    o.require(kinds(neg) == base, "mirror changed pretzel verdicts");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"word problem core", 1, word_problem},
      {"Hurwitz lifting", 10, hurwitz},
      {"cyclic covers", 2, cyclic},
      {"two-bridge lists", 30, two_bridge_lists},
      {"Alexander obstruction", 5, alexander},
      {"twist recurrences", 1, twist},
      {"pretzel classification", 300, pretzel},
      {"torus knot coloring", 10, torus_knot},
      {"reducible 9-braid", 2, reducible},
      {"property suites", 600, properties},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > criteria[i].limit_s) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    failed += !o.ok;
    std::printf("%s %2zu %-24s %8.3fs (limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                criteria[i].limit_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
