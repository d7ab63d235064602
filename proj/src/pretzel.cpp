#include "braidlift/pretzel.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "braidlift/errors.hpp"
#include "braidlift/garside.hpp"

namespace braidlift {

namespace {

bool odd(long long x) { return x % 2 != 0; }
bool mult3(long long x) { return x % 3 == 0; }
long long mod(long long x, long long m) { return ((x % m) + m) % m; }

PretzelVerdict verdict(PretzelKind k, std::string rule) { return {k, std::move(rule)}; }

void require_odd(const std::vector<int>& q, size_t from) {
  for (size_t i = from; i < q.size(); ++i)
    if (!odd(q[i])) throw Error(ErrorKind::ParityViolation, "expected odd entry " + std::to_string(q[i]));
}

template <class T>
std::vector<T> rotated(const std::vector<T>& v, size_t k) {
  std::vector<T> out(v.begin() + static_cast<long>(k), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<long>(k));
  return out;
}

// q_j = +-q_{j+1} cyclically with |q_j| >= 3, and some |q_p| > 3.
bool adjacent_equal_hypothesis(const std::vector<int>& q) {
  size_t m = q.size();
  bool big = std::any_of(q.begin(), q.end(), [](int x) { return std::abs(x) > 3; });
  for (size_t j = 0; j < m; ++j)
    if (std::abs(q[j]) >= 3 && std::abs(q[j]) == std::abs(q[(j + 1) % m])) return big;
  return false;
}

// Same sign throughout. Entries +-1 are excluded: P(1,1,1) is the trefoil, whose coloring lifts.
bool same_sign_hypothesis(const std::vector<int>& q) {
  bool pos = std::all_of(q.begin(), q.end(), [](int x) { return x >= 3; });
  bool neg = std::all_of(q.begin(), q.end(), [](int x) { return x <= -3; });
  return pos || neg;
}

int even_count(const std::vector<int>& q) {
  return static_cast<int>(std::count_if(q.begin(), q.end(), [](int x) { return !odd(x); }));
}

size_t even_index(const std::vector<int>& q) {
  return static_cast<size_t>(std::find_if(q.begin(), q.end(), [](int x) { return !odd(x); }) - q.begin());
}

// Index of the pairing {12|34}, {13|24}, {14|23} containing {1, x}, labelled so that
// (12) and (23) act as (12) and (23).
int pairing_label(int partner_of_1) {
  switch (partner_of_1) {
    case 2: return 3;
    case 3: return 2;
    default: return 1;
  }
}

}  // namespace

const char* pretzel_kind_name(PretzelKind k) {
  switch (k) {
    case PretzelKind::Liftable: return "liftable";
    case PretzelKind::NotLiftable: return "not_liftable";
    case PretzelKind::OutOfTheoremScope: return "out_of_theorem_scope";
  }
  return "?";
}

nlohmann::json PretzelVerdict::to_json() const { return {{"verdict", pretzel_kind_name(kind)}, {"rule", rule}}; }

PretzelVerdict classify_3odd(int p, int q, int r) {
  require_odd({p, q, r}, 0);
  long long det = 1LL * p * q + 1LL * q * r + 1LL * r * p;
  if (!mult3(det)) return verdict(PretzelKind::OutOfTheoremScope, "three-odd-not-tricolorable");
  std::array<int, 3> v{p, q, r};
  static const std::array<std::array<int, 3>, 4> lifts{{{1, 1, 1}, {3, 3, -1}, {3, -1, 3}, {-1, 3, 3}}};
  for (auto& l : lifts)
    if (v == l || v == std::array<int, 3>{-l[0], -l[1], -l[2]}) return verdict(PretzelKind::Liftable, "three-odd");
  return verdict(PretzelKind::NotLiftable, "three-odd");
}

PretzelVerdict classify_3one_even(const std::vector<int>& q, const std::vector<bool>& region_constant) {
  if (q.size() != 3 || region_constant.size() != 3 || even_count(q) != 1)
    throw Error(ErrorKind::ParityViolation, "expected three entries, exactly one even");
  size_t e = even_index(q);
  if (region_constant[e]) return verdict(PretzelKind::Liftable, "one-even-constant");
  if (q[e] == 0) return verdict(PretzelKind::Liftable, "one-even-zero");
  // +-P(2, 6a-1, 6b-1): adding multiples of 6 to the odd regions of the trefoil P(2,-1,-1).
  int o1 = q[(e + 1) % 3], o2 = q[(e + 2) % 3];
  if ((q[e] == 2 && mod(o1, 6) == 5 && mod(o2, 6) == 5) || (q[e] == -2 && mod(o1, 6) == 1 && mod(o2, 6) == 1))
    return verdict(PretzelKind::Liftable, "one-even-family");
  return verdict(PretzelKind::NotLiftable, "one-even-nonconstant");
}

PretzelVerdict classify_modd(const std::vector<int>& q) {
  if (q.size() % 2 == 0) throw Error(ErrorKind::ParityViolation, "expected an odd number of entries");
  require_odd(q, 0);
  if (adjacent_equal_hypothesis(q)) return verdict(PretzelKind::NotLiftable, "odd-adjacent-equal");
  if (same_sign_hypothesis(q)) return verdict(PretzelKind::NotLiftable, "odd-same-sign");
  return verdict(PretzelKind::OutOfTheoremScope, "no-rule");
}

PretzelVerdict classify_m_even_first(const std::vector<int>& q, const std::vector<bool>& region_constant) {
  if (q.empty() || odd(q[0])) throw Error(ErrorKind::ParityViolation, "expected an even first entry");
  require_odd(q, 1);
  if (region_constant.size() != q.size()) throw Error(ErrorKind::IndexOutOfRange, "one flag per twist region");
  size_t m = q.size();
  if (m % 2 == 0) return verdict(PretzelKind::Liftable, "even-m");
  if (m == 3) return classify_3one_even(q, region_constant);

  bool some3 = std::any_of(q.begin(), q.end(), [](int x) { return mult3(x); });
  if ((region_constant[0] || q[0] == 0) && some3) return verdict(PretzelKind::Liftable, "even-first-constant");
  if (region_constant[0]) return verdict(PretzelKind::OutOfTheoremScope, "no-rule");

  bool all3 = std::all_of(q.begin(), q.end(), [](int x) { return mult3(x); });
  bool nowhere_constant = std::none_of(region_constant.begin(), region_constant.end(), [](bool b) { return b; });
  if (all3 && q[0] != 0 && nowhere_constant) return verdict(PretzelKind::NotLiftable, "even-first-all-multiples-of-3");
  for (size_t j = 1; j + 1 < m; ++j)
    if (q[j] == q[j + 1] && std::abs(q[j]) == 3 && q[0] != 0)
      return verdict(PretzelKind::NotLiftable, "even-first-adjacent-threes");
  return verdict(PretzelKind::OutOfTheoremScope, "no-rule");
}

bool s4_colorable(const std::vector<int>& q) {
  size_t m = q.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      if (!mult3(q[i]) || !mult3(q[j])) continue;
      for (size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        long long r = mod(q[k], 6);
        if (r == 0 || r == 2 || r == 3 || r == 4) return true;
      }
    }
  return false;
}

Permutation rho_s4_to_s3(const Permutation& p) {
  if (p.degree() != 4) throw Error(ErrorKind::SizeMismatch, "expected a permutation of degree 4");
  // p sends the pairing containing {1, x} to the one containing {p(1), p(x)}.
  std::vector<int> img(3);
  for (int x = 2; x <= 4; ++x) {
    int a = p(1), b = p(x);
    int partner = a == 1 ? b : b == 1 ? a : 0;
    if (!partner) {
      // {a, b} avoids 1, so its complement contains 1.
      for (int y = 2; y <= 4; ++y)
        if (y != a && y != b) partner = y;
    }
    img[pairing_label(x) - 1] = pairing_label(partner);
  }
  return Permutation::from_images(img);
}

std::vector<bool> region_constancy(const std::vector<int>& q, const GColoring& coloring) {
  LinkDiagram d = pretzel_diagram(q);
  PretzelLayout lay = pretzel_layout(q);
  if (coloring.size() != d.strand_count()) throw Error(ErrorKind::InvalidColoring, "coloring size");
  std::vector<bool> out;
  for (auto& b : lay.bottom) {
    int s = d.strand_of_arc(b[0]), t = d.strand_of_arc(b[1]);
    switch (coloring.tag) {
      case GroupTag::Sn: out.push_back(coloring.perms[s] == coloring.perms[t]); break;
      case GroupTag::B3: out.push_back(equal(coloring.braids[s], coloring.braids[t])); break;
      case GroupTag::PSL2Z: out.push_back(coloring.mats[s].projective() == coloring.mats[t].projective()); break;
    }
  }
  return out;
}

PretzelVerdict classify_b4(const std::vector<int>& q, const GColoring& coloring) {
  LinkDiagram d = pretzel_diagram(q);
  if (coloring.tag != GroupTag::Sn || coloring.size() != d.strand_count() || !coloring.is_valid(d) ||
      !coloring.simple || (coloring.size() && coloring.perms[0].degree() != 4))
    throw Error(ErrorKind::InvalidColoring, "expected a simple S_4-coloring of the pretzel diagram");
  if (coloring.is_constant()) return verdict(PretzelKind::Liftable, "constant");
  if (orbits(4, coloring.perms).size() != 1) return verdict(PretzelKind::OutOfTheoremScope, "b4-not-transitive");

  PretzelLayout lay = pretzel_layout(q);
  auto region = [&](size_t i) {
    const Permutation& a = coloring.perms[d.strand_of_arc(lay.bottom[i][0])];
    const Permutation& b = coloring.perms[d.strand_of_arc(lay.bottom[i][1])];
    struct {
      bool identical, disjoint;
    } r{a == b, a != b && a * b == b * a};
    return r;
  };
  size_t m = q.size();
  int evens = even_count(q);
  if (m == 3) {
    if (evens != 1) return verdict(PretzelKind::NotLiftable, "b4-three-strand");
    size_t e = even_index(q);
    bool ok = q[e] == 0 || region(e).disjoint;
    return verdict(ok ? PretzelKind::Liftable : PretzelKind::NotLiftable, "b4-three-strand");
  }
  if (evens == 0 && m % 2 == 1) {
    if (adjacent_equal_hypothesis(q)) return verdict(PretzelKind::NotLiftable, "b4-odd-adjacent-equal");
    if (same_sign_hypothesis(q)) return verdict(PretzelKind::NotLiftable, "b4-odd-same-sign");
    return verdict(PretzelKind::OutOfTheoremScope, "no-rule");
  }
  if (evens == 1) {
    if (m % 2 == 0) return verdict(PretzelKind::Liftable, "b4-even-m");
    auto r = region(even_index(q));
    if (r.disjoint || r.identical) return verdict(PretzelKind::Liftable, "b4-even-first");
    if (q[even_index(q)] == 0) return verdict(PretzelKind::OutOfTheoremScope, "no-rule");
    return verdict(PretzelKind::NotLiftable, "b4-even-first");
  }
  return verdict(PretzelKind::OutOfTheoremScope, "no-rule");
}

PretzelVerdict classify_pretzel_coloring(const std::vector<int>& q, const GColoring& coloring) {
  if (q.size() < 2) throw Error(ErrorKind::IndexOutOfRange, "need at least two twist regions");
  if (coloring.tag != GroupTag::Sn || coloring.perms.empty())
    throw Error(ErrorKind::InvalidColoring, "expected a simple S_3- or S_4-coloring");
  int n = coloring.perms[0].degree();
  if (n != 3 && n != 4) throw Error(ErrorKind::SizeMismatch, "pretzel classification supports n = 3 or 4");
  if (n == 4) return classify_b4(q, coloring);
  if (!coloring.is_valid(pretzel_diagram(q))) throw Error(ErrorKind::InvalidColoring, "not a coloring of the pretzel diagram");
  if (coloring.is_constant()) return verdict(PretzelKind::Liftable, "constant");
  if (!is_pretzel_knot(q)) return verdict(PretzelKind::OutOfTheoremScope, "not-a-knot");
  size_t m = q.size();
  int evens = even_count(q);
  if (evens == 0 && m == 3) return classify_3odd(q[0], q[1], q[2]);
  if (evens == 0 && m % 2 == 1) return classify_modd(q);
  if (evens == 1) {
    size_t e = even_index(q);
    return classify_m_even_first(rotated(q, e), rotated(region_constancy(q, coloring), e));
  }
  return verdict(PretzelKind::OutOfTheoremScope, "no-rule");
}

std::vector<PretzelClass> classify_pretzel(const std::vector<int>& q, int n) {
  if (n != 3 && n != 4) throw Error(ErrorKind::SizeMismatch, "pretzel classification supports n = 3 or 4");
  if (q.size() < 2) throw Error(ErrorKind::IndexOutOfRange, "need at least two twist regions");
  auto all = enumerate_colorings(pretzel_diagram(q), n);
  std::vector<PretzelClass> out;
  for (int idx : coloring_classes(all)) {
    PretzelClass c;
    c.coloring = all[idx];
    c.region_constant = region_constancy(q, c.coloring);
    c.verdict = classify_pretzel_coloring(q, c.coloring);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace braidlift
