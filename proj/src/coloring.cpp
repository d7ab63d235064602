#include "braidlift/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "braidlift/errors.hpp"
#include "braidlift/garside.hpp"

namespace braidlift {

// ---------- colorings ----------

int GColoring::size() const {
  switch (tag) {
    case GroupTag::Sn: return static_cast<int>(perms.size());
    case GroupTag::B3: return static_cast<int>(braids.size());
    case GroupTag::PSL2Z: return static_cast<int>(mats.size());
  }
  return 0;
}

bool GColoring::is_constant() const {
  for (int i = 1; i < size(); ++i) {
    bool same = tag == GroupTag::Sn   ? perms[i] == perms[0]
                : tag == GroupTag::B3 ? equal(braids[i], braids[0])
                                      : mats[i].projective() == mats[0].projective();
    if (!same) return false;
  }
  return true;
}

namespace {

Mat2 mat_pow(const Mat2& m, int e) {
  Mat2 r;
  Mat2 b = e < 0 ? m.inverse() : m;
  for (int i = 0; i < std::abs(e); ++i) r = r * b;
  return r;
}

bool simple_b3(const BraidWord& b) {
  try {
    Label l = transvection_label(psl2z_image(b));
    return exponent_sum(b) == l.eps;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

bool GColoring::is_valid(const LinkDiagram& d) const {
  if (size() != d.strand_count()) return false;
  for (auto& c : d.strand_crossings()) {
    bool ok = false;
    if (tag == GroupTag::Sn) {
      const Permutation& o = perms[c.over];
      Permutation g = c.sign > 0 ? o : o.inverse();
      ok = perms[c.out] == perms[c.in].conjugated_by(g);
    } else if (tag == GroupTag::B3) {
      BraidWord g = c.sign > 0 ? braids[c.over] : braids[c.over].inverse();
      ok = equal(braids[c.out], conjugate(braids[c.in], g));
    } else {
      Mat2 g = mat_pow(mats[c.over], c.sign);
      ok = mats[c.out].projective() == (g.inverse() * mats[c.in] * g).projective();
    }
    if (!ok) return false;
  }
  if (simple)
    for (int i = 0; i < size(); ++i) {
      bool ok = tag == GroupTag::Sn   ? perms[i].is_transposition()
                : tag == GroupTag::B3 ? simple_b3(braids[i])
                                      : (transvection_label(mats[i]), true);
      if (!ok) return false;
    }
  return true;
}

std::string GColoring::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    os << i << '\t';
    if (tag == GroupTag::Sn) os << perms[i].str();
    else if (tag == GroupTag::B3) os << braids[i].str();
    else os << mats[i].a << ' ' << mats[i].b << ' ' << mats[i].c << ' ' << mats[i].d;
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

std::vector<GColoring> enumerate_colorings(const LinkDiagram& d, int n, bool simple) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "colorings need n >= 2");
  if (!d.is_connected()) throw Error(ErrorKind::Disconnected, "diagram is not connected");
  std::vector<Permutation> elems;
  for (auto& p : all_perms(n))
    if (!simple || p.is_transposition()) elems.push_back(p);
  std::sort(elems.begin(), elems.end());
  int e = static_cast<int>(elems.size());
  auto index = [&](const Permutation& p) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  // fwd[s][o][x]: image of x pushed across over-strand o with sign s.
  std::vector<std::vector<int>> fwd_pos(e, std::vector<int>(e)), fwd_neg = fwd_pos;
  for (int o = 0; o < e; ++o)
    for (int x = 0; x < e; ++x) {
      fwd_pos[o][x] = index(elems[x].conjugated_by(elems[o]));
      fwd_neg[o][x] = index(elems[x].conjugated_by(elems[o].inverse()));
    }

  const auto& sc = d.strand_crossings();
  int ns = d.strand_count();
  std::vector<std::vector<int>> found;
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> a) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& c : sc) {
        int o = a[c.over];
        if (o < 0) continue;
        auto& f = c.sign > 0 ? fwd_pos : fwd_neg;
        auto& b = c.sign > 0 ? fwd_neg : fwd_pos;
        if (a[c.in] >= 0) {
          int v = f[o][a[c.in]];
          if (a[c.out] < 0) {
            a[c.out] = v;
            changed = true;
          } else if (a[c.out] != v) {
            return;
          }
        } else if (a[c.out] >= 0) {
          a[c.in] = b[o][a[c.out]];
          changed = true;
        }
      }
    }
    auto it = std::find(a.begin(), a.end(), -1);
    if (it == a.end()) {
      found.push_back(a);
      return;
    }
    for (int v = 0; v < e; ++v) {
      *it = v;
      rec(a);
    }
  };
  rec(std::vector<int>(ns, -1));
  std::sort(found.begin(), found.end());
  std::vector<GColoring> out;
  for (auto& f : found) {
    GColoring g;
    g.simple = simple;
    for (int v : f) g.perms.push_back(elems[v]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<int> coloring_classes(const std::vector<GColoring>& colorings) {
  std::vector<int> reps;
  std::set<std::vector<Permutation>> seen;
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i) {
    auto& c = colorings[i];
    if (c.tag != GroupTag::Sn) throw Error(ErrorKind::InvalidColoring, "classes need S_n colorings");
    if (c.perms.empty()) {
      if (seen.insert(std::vector<Permutation>{}).second) reps.push_back(i);
      continue;
    }
    std::vector<Permutation> best;
    for (auto& g : all_perms(c.perms[0].degree())) {
      std::vector<Permutation> v;
      for (auto& p : c.perms) v.push_back(p.conjugated_by(g));
      if (best.empty() || v < best) best = v;
    }
    if (seen.insert(best).second) reps.push_back(i);
  }
  return reps;
}

// ---------- Laurent polynomials ----------

void LaurentPoly::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  low_ += static_cast<int>(lead);
  while (c_.back() == 0) c_.pop_back();
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int e) {
  LaurentPoly p;
  p.low_ = e;
  p.c_ = {c};
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::vector<std::int64_t> c, int low) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

std::int64_t LaurentPoly::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return 0;
  return c_[e - low_];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<std::int64_t> c(hi - lo + 1);
  for (int e = lo; e <= hi; ++e) c[e - lo] = coeff(e) + o.coeff(e);
  return from_coeffs(c, lo);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return from_coeffs(c, low_ + o.low_);
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
  if (o.is_zero()) throw Error(ErrorKind::InternalInconsistency, "division by zero polynomial");
  LaurentPoly rem = *this, q;
  int qlow = low_ - o.low_;
  while (!rem.is_zero()) {
    int e = rem.high() - o.high();
    std::int64_t lc = rem.c_.back(), lo = o.c_.back();
    if (e < qlow || lc % lo != 0)
      throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
    LaurentPoly term = monomial(lc / lo, e);
    q = q + term;
    rem = rem - term * o;
  }
  return q;
}

LaurentPoly LaurentPoly::mod_monic(const LaurentPoly& m) const {
  if (m.is_zero() || m.c_.back() != 1) throw Error(ErrorKind::InternalInconsistency, "divisor is not monic");
  LaurentPoly r = from_coeffs(c_, 0), mm = from_coeffs(m.c_, 0);
  while (!r.is_zero() && r.high() >= mm.high()) r = r - monomial(r.c_.back(), r.high() - mm.high()) * mm;
  return r;
}

std::int64_t LaurentPoly::eval(std::int64_t t) const {
  if (is_zero()) return 0;
  if (low_ < 0 && t != 1 && t != -1) throw Error(ErrorKind::InternalInconsistency, "negative power at non-unit");
  std::int64_t v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  std::int64_t shift = 1;
  for (int i = 0; i < std::abs(low_); ++i) shift *= t;
  return v * shift;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly r = from_coeffs(c_, 0);
  if (r.c_.back() < 0) r = -r;
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = high(); e >= low_; --e) {
    std::int64_t c = coeff(e);
    if (!c) continue;
    std::int64_t a = std::llabs(c);
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (a != 1 || e == 0) s += std::to_string(a);
    if (e != 0) s += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return s;
}

// ---------- Fox calculus ----------

namespace {

// Primitive integer vector spanning the kernel of an integer matrix of corank 1.
std::vector<long long> kernel_vector(std::vector<std::vector<long long>> m, int cols) {
  int rows = static_cast<int>(m.size()), r = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) p = i;
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = 0; i < rows; ++i)
      if (i != r && m[i][c]) {
        long long a = m[r][c], b = m[i][c];
        for (int k = 0; k < cols; ++k) m[i][k] = m[i][k] * a - m[r][k] * b;
        long long g = 0;
        for (long long v : m[i]) g = std::gcd(g, std::llabs(v));
        if (g > 1)
          for (auto& v : m[i]) v /= g;
      }
    pivcol.push_back(c);
    ++r;
  }
  if (r != cols - 1) throw Error(ErrorKind::NotKnotGroup, "abelianization is not Z");
  int freec = 0;
  while (std::find(pivcol.begin(), pivcol.end(), freec) != pivcol.end()) ++freec;
  // Row i reads m[i][pivcol[i]] x_p + m[i][freec] x_f = 0.
  long long l = 1;
  for (int i = 0; i < r; ++i) l = std::lcm(l, std::llabs(m[i][pivcol[i]]));
  std::vector<long long> x(cols, 0);
  x[freec] = l;
  for (int i = 0; i < r; ++i) x[pivcol[i]] = -m[i][freec] * (l / m[i][pivcol[i]]);
  long long g = 0;
  for (long long v : x) g = std::gcd(g, std::llabs(v));
  for (auto& v : x) v /= g;
  return x;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

LaurentPoly fox_alexander(const WirtingerPresentation& pres) {
  int g = pres.generators, r = static_cast<int>(pres.relators.size());
  if (g == 0) throw Error(ErrorKind::NotKnotGroup, "no generators");
  auto ab = abelianization(pres);
  if (ab.rank != 1 || !ab.torsion.empty()) throw Error(ErrorKind::NotKnotGroup, "abelianization is not Z");
  if (r != g && r != g - 1) throw Error(ErrorKind::NotKnotGroup, "expected deficiency 0 or 1");
  std::vector<long long> e(g, 1);
  if (g > 1) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(g, 0));
    for (int i = 0; i < r; ++i)
      for (int l : pres.relators[i].letters) m[i][std::abs(l) - 1] += l > 0 ? 1 : -1;
    e = kernel_vector(m, g);
  }
  int col = -1;
  for (int j = 0; j < g && col < 0; ++j)
    if (std::llabs(e[j]) == 1) col = j;
  if (col < 0) throw Error(ErrorKind::NotKnotGroup, "no generator maps to a meridian");
  // Wirtinger presentations carry one redundant relator; drop the last.
  int rows = std::min(r, g - 1);
  std::vector<std::vector<LaurentPoly>> jac(rows);
  for (int i = 0; i < rows; ++i) {
    std::vector<LaurentPoly> d(g);
    long long p = 0;
    for (int l : pres.relators[i].letters) {
      int k = std::abs(l) - 1;
      if (l > 0) {
        d[k] = d[k] + LaurentPoly::monomial(1, static_cast<int>(p));
        p += e[k];
      } else {
        p -= e[k];
        d[k] = d[k] - LaurentPoly::monomial(1, static_cast<int>(p));
      }
    }
    for (int j = 0; j < g; ++j)
      if (j != col) jac[i].push_back(d[j]);
  }
  LaurentPoly delta = determinant(jac).normalized();
  if (std::llabs(delta.eval(1)) != 1) throw Error(ErrorKind::NotKnotGroup, "Alexander polynomial has |D(1)| != 1");
  return delta;
}

Obstruction trefoil_divisibility_obstruction(const LaurentPoly& delta) {
  auto r = delta.normalized().mod_monic(LaurentPoly::from_coeffs({1, -1, 1}));
  return r.is_zero() ? Obstruction::Inconclusive : Obstruction::Obstructed;
}

// ---------- two-bridge ----------

LiftVerdict two_bridge_lift_decision(const WirtingerPresentation& pres, const Permutation& a, const Permutation& b) {
  if (pres.generators != 2 || pres.relators.size() != 1)
    throw Error(ErrorKind::SizeMismatch, "expected a two-generator one-relator presentation");
  if (a.degree() != 3 || b.degree() != 3 || !a.is_transposition() || !b.is_transposition())
    throw Error(ErrorKind::InvalidColoring, "tricoloring images must be transpositions of S_3");
  if (!evaluate(pres.relators[0], std::vector<Permutation>{a, b}, Permutation(3)).is_identity())
    throw Error(ErrorKind::InvalidColoring, "images do not satisfy the relator");
  BraidWord s1 = BraidWord::gen(3, 1), s2 = BraidWord::gen(3, 2);
  if (a == b) {
    BraidWord x = s1;
    for (auto& g : all_perms(3)) {
      BraidWord c = conjugate(s1, permutation_braid(g));
      if (forget(c) == a) x = c;
    }
    return LiftVerdict::liftable({x, x});
  }
  if (!is_identity(evaluate(pres.relators[0], std::vector<BraidWord>{s1, s2}, BraidWord(3))))
    return LiftVerdict::not_liftable("relator is nontrivial in B_3 at a = s1, b = s2");
  for (auto& g : all_perms(3)) {
    BraidWord p = permutation_braid(g);
    BraidWord x = conjugate(s1, p), y = conjugate(s2, p);
    if (forget(x) == a && forget(y) == b) return LiftVerdict::liftable({x, y});
  }
  throw Error(ErrorKind::InternalInconsistency, "no conjugator matches the tricoloring");
}

// ---------- twist regions ----------

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    s += static_cast<char>('0' + (d < 0 ? -d : d));
    v /= 10;
  }
  if (neg) s += '-';
  return {s.rbegin(), s.rend()};
}

TwistRecurrence twist_recurrences(int n, std::int64_t k) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "recurrence index starts at 1");
  TwistRecurrence t;
  t.n = n;
  t.k = k;
  Int128 k2 = static_cast<Int128>(k) * k;
  auto mul = [](Int128 x, Int128 y) {
    Int128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::InternalInconsistency, "recurrence overflow");
    return r;
  };
  for (int i = 1; i < n; ++i) {
    Int128 A = mul(1 - k2, t.A) + t.B + 1, B = t.B + 1 - mul(k2, t.A);
    Int128 C = mul(1 + k2, t.C) + t.D + 1, D = t.D + 1 + mul(k2, t.C);
    t.A = A, t.B = B, t.C = C, t.D = D;
  }
  return t;
}

std::int64_t pairing(const Vec2& v, const Vec2& w) { return v.x * w.y - v.y * w.x; }

Vec2 transvect(const Vec2& v, const Vec2& w, int e) {
  std::int64_t p = e * pairing(v, w);
  return {w.x + p * v.x, w.y + p * v.y};
}

Mat2 transvection(const Vec2& v, int e) {
  return {1 - e * v.x * v.y, e * v.x * v.x, -e * v.y * v.y, 1 + e * v.x * v.y};
}

Vec2 projective(const Vec2& v) {
  if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
  return v;
}

bool is_primitive(const Vec2& v) { return std::gcd(std::llabs(v.x), std::llabs(v.y)) == 1; }

std::pair<Label, Label> twist_region_propagate(const Label& bottom_left, const Label& bottom_right, int half_twists,
                                               StrandDirection dir) {
  for (auto* l : {&bottom_left, &bottom_right})
    if (!is_primitive(l->v) || (l->eps != 1 && l->eps != -1))
      throw Error(ErrorKind::NonPrimitiveLabel, "labels need primitive vectors and handedness +-1");
  Label u = bottom_left, v = bottom_right;
  bool opp = dir == StrandDirection::Opposite;
  if (opp) v.eps = -v.eps;
  for (int i = 0; i < std::abs(half_twists); ++i) {
    if (half_twists > 0) {
      Label nu{transvect(u.v, v.v, u.eps), v.eps};
      v = u;
      u = nu;
    } else {
      Label nv{transvect(v.v, u.v, -v.eps), u.eps};
      u = v;
      v = nv;
    }
  }
  if (opp) (std::abs(half_twists) % 2 ? u : v).eps *= -1;
  return {u, v};
}

Permutation tricolor_of_vector(const Vec2& v) {
  int a = static_cast<int>(std::llabs(v.x) % 2), b = static_cast<int>(std::llabs(v.y) % 2);
  if (!a && !b) throw Error(ErrorKind::NonPrimitive, "vector is zero mod 2");
  if (a && !b) return Permutation::transposition(3, 1, 2);
  if (!a && b) return Permutation::transposition(3, 2, 3);
  return Permutation::transposition(3, 1, 3);
}

Vec2 class_vector(const Permutation& t) {
  if (t == Permutation::transposition(3, 1, 2)) return {1, 0};
  if (t == Permutation::transposition(3, 2, 3)) return {0, 1};
  if (t == Permutation::transposition(3, 1, 3)) return {1, 1};
  throw Error(ErrorKind::InvalidColoring, t.str() + " is not a transposition of S_3");
}

// ---------- B_3 lifting ----------

Label transvection_label(const Mat2& m0) {
  Mat2 m = m0;
  if (m.a + m.d == -2) m = m.negated();
  if (m.a + m.d != 2 || m.a * m.d - m.b * m.c != 1 || (m.b == 0 && m.c == 0))
    throw Error(ErrorKind::NotATransvection, "trace, determinant or identity check failed");
  int eps = m.b != 0 ? (m.b > 0 ? 1 : -1) : (m.c < 0 ? 1 : -1);
  auto isqrt = [](std::int64_t x) {
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
  };
  std::int64_t v1 = isqrt(std::llabs(m.b)), v2 = isqrt(std::llabs(m.c));
  if (v1 != 0 && v2 != 0 && -(m.a - 1) * eps < 0) v2 = -v2;  // a - 1 = -eps v1 v2
  Vec2 v{v1, v2};
  if (!is_primitive(v) || transvection(v, eps) != m) throw Error(ErrorKind::NotATransvection, "not T_v^{+-1}");
  return {projective(v), eps};
}

BraidWord b3_transvection_lift(const Mat2& m) {
  Label l = transvection_label(m);
  // Left-multiply (a, c) down to (+-1, 0) by powers of S1 = [[1,1],[0,1]] and S2 = [[1,0],[-1,1]].
  std::int64_t a = l.v.x, c = l.v.y;
  std::vector<int> g;  // inverse of the reducing word, built front to back
  while (c != 0) {
    int gen;
    std::int64_t k;
    if (a != 0 && std::llabs(a) <= std::llabs(c)) {
      k = c / a;
      c -= k * a;
      gen = 2;
    } else {
      k = a == 0 ? 1 : -(a / c);
      a += k * c;
      gen = 1;
    }
    for (std::int64_t i = 0; i < std::llabs(k); ++i) g.push_back(k > 0 ? -gen : gen);
  }
  BraidWord gw(3, g);
  BraidWord b = gw * BraidWord::gen(3, 1, l.eps) * gw.inverse();
  b = b.freely_reduced();
  if (psl2z_image(b) != m.projective()) throw Error(ErrorKind::InternalInconsistency, "transvection lift mismatch");
  return b;
}

GColoring lift_to_b3_witness(const LinkDiagram& d, const GColoring& psl, int meridian_choice) {
  if (psl.tag != GroupTag::PSL2Z || psl.size() != d.strand_count())
    throw Error(ErrorKind::InvalidColoring, "expected a PSL(2,Z) coloring of every strand");
  if (meridian_choice < 0 || meridian_choice >= psl.size())
    throw Error(ErrorKind::IndexOutOfRange, "meridian choice");
  transvection_label(psl.mats[meridian_choice]);
  GColoring pc = psl;
  pc.simple = false;
  if (!pc.is_valid(d)) throw Error(ErrorKind::InvalidColoring, "PSL(2,Z) relations fail");
  GColoring out;
  out.tag = GroupTag::B3;
  for (auto& m : psl.mats) out.braids.push_back(b3_transvection_lift(m));
  if (!out.is_valid(d)) throw Error(ErrorKind::InternalInconsistency, "lifted relations fail in B_3");
  return out;
}

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t(1) << 40;

// T_v^e(w) with an overflow guard on the result.
bool guarded_transvect(const Vec2& v, const Vec2& w, int e, Vec2& out) {
  Int128 p = static_cast<Int128>(v.x) * w.y - static_cast<Int128>(v.y) * w.x;
  p *= e;
  Int128 x = w.x + p * v.x, y = w.y + p * v.y;
  if (x > kEntryLimit || x < -kEntryLimit || y > kEntryLimit || y < -kEntryLimit) return false;
  out = projective(Vec2{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
  return true;
}

int mod2class(const Vec2& v) { return static_cast<int>((std::llabs(v.x) % 2) + 2 * (std::llabs(v.y) % 2)); }

}  // namespace

LiftSearchResult b3_lift_search(const LinkDiagram& d, const GColoring& tricoloring, int bound) {
  if (bound < 1) throw Error(ErrorKind::IndexOutOfRange, "search bound must be positive");
  if (tricoloring.tag != GroupTag::Sn || tricoloring.size() != d.strand_count())
    throw Error(ErrorKind::InvalidColoring, "expected an S_3 coloring of every strand");
  for (auto& p : tricoloring.perms)
    if (p.degree() != 3 || !p.is_transposition()) throw Error(ErrorKind::InvalidColoring, "not a tricoloring");
  if (!tricoloring.is_valid(d)) throw Error(ErrorKind::InvalidColoring, "tricoloring violates a crossing");

  int ns = d.strand_count();
  std::vector<int> comp(ns, 0), cls(ns);
  for (int a = 1; a <= d.arc_count(); ++a)
    comp[d.strand_of_arc(a)] = d.component_of_arc(a);
  for (int s = 0; s < ns; ++s) cls[s] = mod2class(class_vector(tricoloring.perms[s]));
  int ncomp = d.component_count();

  // Seeds: primitive vectors up to sign in each mod-2 class, by max entry then lexicographically.
  std::vector<std::vector<Vec2>> seeds(4);
  for (int x = 0; x <= bound; ++x)
    for (int y = -bound; y <= bound; ++y) {
      Vec2 v{x, y};
      if ((x == 0 && y <= 0) || !is_primitive(v)) continue;
      seeds[mod2class(v)].push_back(v);
    }
  for (auto& s : seeds)
    std::stable_sort(s.begin(), s.end(), [](const Vec2& a, const Vec2& b) {
      auto m = [](const Vec2& v) { return std::max(std::llabs(v.x), std::llabs(v.y)); };
      return m(a) != m(b) ? m(a) < m(b) : a < b;
    });

  const auto& sc = d.strand_crossings();
  std::vector<int> eps(ncomp, 1);
  std::vector<std::optional<Vec2>> found;

  auto propagate = [&](std::vector<std::optional<Vec2>>& lab) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& c : sc) {
        if (!lab[c.over]) continue;
        int e = eps[comp[c.over]] * c.sign;
        Vec2 v;
        if (lab[c.in]) {
          if (!guarded_transvect(*lab[c.over], *lab[c.in], -e, v)) return false;
          if (!lab[c.out]) {
            if (mod2class(v) != cls[c.out]) return false;
            lab[c.out] = v;
            changed = true;
          } else if (*lab[c.out] != v) {
            return false;
          }
        } else if (lab[c.out]) {
          if (!guarded_transvect(*lab[c.over], *lab[c.out], e, v)) return false;
          if (mod2class(v) != cls[c.in]) return false;
          lab[c.in] = v;
          changed = true;
        }
      }
    }
    return true;
  };

  std::function<bool(std::vector<std::optional<Vec2>>)> dfs = [&](std::vector<std::optional<Vec2>> lab) {
    if (!propagate(lab)) return false;
    if (std::find(lab.begin(), lab.end(), std::nullopt) == lab.end()) {
      found = lab;
      return true;
    }
    // Branch on the strand that unlocks the most crossings.
    std::vector<int> score(ns, 0);
    for (auto& c : sc) {
      if (!lab[c.over] && (lab[c.in] || lab[c.out])) score[c.over] += 2;
      if (lab[c.over] && !lab[c.in] && !lab[c.out]) ++score[c.in], ++score[c.out];
      if (!lab[c.over]) ++score[c.over];
    }
    int s = -1;
    for (int t = 0; t < ns; ++t)
      if (!lab[t] && (s < 0 || score[t] > score[s])) s = t;
    for (auto& v : seeds[cls[s]]) {
      lab[s] = v;
      if (dfs(lab)) return true;
    }
    return false;
  };

  // Gamma(2) acts transitively on each mod-2 class, so the first strand's vector is fixed.
  for (int mask = 0; mask < (1 << ncomp); ++mask) {
    for (int i = 0; i < ncomp; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
    std::vector<std::optional<Vec2>> lab(ns);
    if (ns) lab[0] = seeds[cls[0]].front();
    if (!dfs(lab)) continue;
    LiftSearchResult r;
    r.psl.tag = GroupTag::PSL2Z;
    for (int s = 0; s < ns; ++s) {
      Label l{*found[s], eps[comp[s]]};
      r.labelling.push_back(l);
      r.psl.mats.push_back(transvection(l.v, l.eps));
    }
    if (!r.psl.is_valid(d)) throw Error(ErrorKind::InternalInconsistency, "PSL(2,Z) witness fails");
    for (int s = 0; s < ns; ++s)
      if (tricolor_of_vector(r.labelling[s].v) != tricoloring.perms[s])
        throw Error(ErrorKind::InternalInconsistency, "witness does not reduce to the tricoloring");
    r.b3 = lift_to_b3_witness(d, r.psl);
    for (int s = 0; s < ns; ++s)
      if (forget(r.b3.braids[s]) != tricoloring.perms[s])
        throw Error(ErrorKind::InternalInconsistency, "B_3 witness does not forget to the tricoloring");
    r.verdict = LiftVerdict::liftable(r.b3.braids);
    return r;
  }
  return {LiftVerdict::unknown(bound), {}, {}, {}};
}

// ---------- connected sums ----------

std::pair<GColoring, GColoring> connect_sum_split(const LinkDiagram& d, const std::vector<int>& first_summand,
                                                  const GColoring& c) {
  if (c.size() != d.strand_count()) throw Error(ErrorKind::InvalidColoring, "coloring size");
  std::vector<int> second;
  for (int i = 0; i < d.crossing_count(); ++i)
    if (std::find(first_summand.begin(), first_summand.end(), i) == first_summand.end()) second.push_back(i);

  std::map<int, int> count;
  for (int i : first_summand)
    for (int a : d.crossings().at(i)) count[a]++;
  std::vector<int> cut;
  for (auto& [a, k] : count)
    if (k == 1) cut.push_back(a);
  if (cut.size() != 2) throw Error(ErrorKind::InconsistentArcs, "crossing set is not cut off by a band");

  auto same = [&](int s, int t) {
    if (c.tag == GroupTag::Sn) return c.perms[s] == c.perms[t];
    if (c.tag == GroupTag::B3) return equal(c.braids[s], c.braids[t]);
    return c.mats[s].projective() == c.mats[t].projective();
  };
  if (!same(d.strand_of_arc(cut[0]), d.strand_of_arc(cut[1])))
    throw Error(ErrorKind::BandColorsDiffer, "band arcs " + std::to_string(cut[0]) + " and " +
                                                 std::to_string(cut[1]) + " carry different colors");

  auto restrict = [&](const std::vector<int>& set) {
    LinkDiagram sub = sub_diagram(d, set);
    std::vector<int> from(sub.strand_count(), -1);
    for (int i : set)
      for (int a : d.crossings()[i]) {
        int s = sub.strand_of_arc(sub.canonical_label(a == cut[1] ? cut[0] : a));
        int t = d.strand_of_arc(a);
        if (from[s] >= 0 && !same(from[s], t)) throw Error(ErrorKind::InvalidColoring, "strand colors disagree");
        from[s] = t;
      }
    GColoring r;
    r.tag = c.tag;
    r.simple = c.simple;
    for (int t : from) {
      if (c.tag == GroupTag::Sn) r.perms.push_back(c.perms[t]);
      else if (c.tag == GroupTag::B3) r.braids.push_back(c.braids[t]);
      else r.mats.push_back(c.mats[t]);
    }
    return r;
  };
  return {restrict(first_summand), restrict(second)};
}

}  // namespace braidlift
