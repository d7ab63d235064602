#include "braidlift/garside.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "braidlift/errors.hpp"

namespace braidlift {

namespace {

using Img = std::vector<int>;  // 0-based images: strand at position i ends at img[i]

Img identity_img(int n) {
  Img r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

Img delta_img(int n) {
  Img r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

bool is_id(const Img& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_delta(const Img& a) {
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    if (a[i] != n - 1 - i) return false;
  return true;
}

Img inv(const Img& a) {
  Img r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
Img flip(const Img& a) {
  int n = static_cast<int>(a.size());
  Img r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - a[n - 1 - i];
  return r;
}

// Make (A, B) left-weighted; returns true if anything moved.
bool left_weight(Img& a, Img& b) {
  int n = static_cast<int>(a.size());
  Img ainv = inv(a);
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int j = 0; j + 1 < n; ++j) {
      bool starts_b = b[j] > b[j + 1];
      bool finishes_a = ainv[j] > ainv[j + 1];
      if (starts_b && !finishes_a) {
        std::swap(ainv[j], ainv[j + 1]);
        a[ainv[j]] = j;
        a[ainv[j + 1]] = j + 1;
        std::swap(b[j], b[j + 1]);
        moved = again = true;
      }
    }
  }
  return moved;
}

struct Nf {
  explicit Nf(int strands) : n(strands) {}
  int n;
  int k = 0;
  std::vector<Img> f;

  void append_simple(Img s) {
    if (is_id(s)) return;
    f.push_back(std::move(s));
    // A single right-to-left sweep restores left-weightedness; it can stop at the first pair
    // that does not move.
    for (int i = static_cast<int>(f.size()) - 2; i >= 0; --i)
      if (!left_weight(f[i], f[i + 1])) break;
    size_t lead = 0;
    while (lead < f.size() && is_delta(f[lead])) ++lead;
    if (lead) {
      k += static_cast<int>(lead);
      f.erase(f.begin(), f.begin() + static_cast<long>(lead));
    }
    while (!f.empty() && is_id(f.back())) f.pop_back();
  }

  void times_delta_inverse() {
    for (auto& a : f) a = flip(a);
    --k;
  }

  void times_letter(int l) {
    Img s = identity_img(n);
    int j = std::abs(l) - 1;
    if (l > 0) {
      std::swap(s[j], s[j + 1]);
      append_simple(std::move(s));
    } else {
      times_delta_inverse();
      Img d = delta_img(n);
      // Delta * s_j: apply Delta then swap positions j, j+1
      for (int& v : d) {
        if (v == j)
          v = j + 1;
        else if (v == j + 1)
          v = j;
      }
      append_simple(std::move(d));
    }
  }
};

Permutation to_perm(const Img& a) {
  Img one(a.size());
  for (size_t i = 0; i < a.size(); ++i) one[i] = a[i] + 1;
  return Permutation::from_images(one);
}

GarsideNormalForm export_nf(const Nf& x) {
  GarsideNormalForm g;
  g.strands = x.n;
  g.delta_power = x.k;
  for (auto& a : x.f) g.factors.push_back(to_perm(a));
  return g;
}

Nf import_nf(const GarsideNormalForm& g) {
  Nf x(g.strands);
  x.k = g.delta_power;
  for (auto& p : g.factors) x.f.push_back(p.images0());
  return x;
}

}  // namespace

BraidWord permutation_braid(const Permutation& p) {
  Img b = p.images0();
  int n = static_cast<int>(b.size());
  std::vector<int> w;
  for (bool found = true; found;) {
    found = false;
    for (int j = 0; j + 1 < n; ++j)
      if (b[j] > b[j + 1]) {
        w.push_back(j + 1);
        std::swap(b[j], b[j + 1]);
        found = true;
        break;
      }
  }
  return BraidWord(std::max(n, 1), std::move(w));
}

BraidWord GarsideNormalForm::to_word() const {
  BraidWord w = BraidWord::delta(strands).pow(delta_power);
  for (auto& p : factors) w *= permutation_braid(p);
  return w;
}

std::string GarsideNormalForm::str() const {
  std::ostringstream os;
  os << "D^" << delta_power << " |";
  for (size_t i = 0; i < factors.size(); ++i) {
    os << (i ? " ;" : "");
    for (int v : factors[i].images()) os << ' ' << v;
  }
  return os.str();
}

GarsideNormalForm normal_form(const BraidWord& w) {
  Nf x(w.strands());
  for (int l : w.letters()) x.times_letter(l);
  return export_nf(x);
}

GarsideNormalForm multiply(const GarsideNormalForm& a, const GarsideNormalForm& b) {
  if (a.strands != b.strands) throw Error(ErrorKind::StrandMismatch, "multiply");
  Nf x = import_nf(a);
  // Delta^k passes to the left of a's factors by flipping them k times.
  if (b.delta_power % 2 != 0)
    for (auto& f : x.f) f = flip(f);
  x.k += b.delta_power;
  for (auto& p : b.factors) x.append_simple(p.images0());
  return export_nf(x);
}

GarsideNormalForm inverse(const GarsideNormalForm& a) {
  return normal_form(a.to_word().inverse());
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw Error(ErrorKind::StrandMismatch, "equal");
  return normal_form(u) == normal_form(v);
}

bool is_identity(const BraidWord& w) { return normal_form(w).is_identity(); }

namespace {

Img twist(Img a, int k) { return k % 2 != 0 ? flip(a) : a; }

// Delta^k * lead * A_1 ... A_r * tail, renormalized.
Nf rebuild(const Nf& x, int k, const Img& lead, size_t from, size_t to, const Img* tail) {
  Nf y(x.n);
  y.k = k;
  y.append_simple(lead);
  for (size_t i = from; i < to; ++i) y.append_simple(x.f[i]);
  if (tail) y.append_simple(*tail);
  return y;
}

// s^-1 x s for a simple s, using s^-1 = (s^-1 Delta) Delta^-1.
Nf conj_simple(const Nf& x, const Img& s) {
  int n = x.n;
  Img si = inv(s), comp(n);
  for (int i = 0; i < n; ++i) comp[i] = n - 1 - si[i];
  return rebuild(x, x.k - 1, twist(comp, x.k - 1), 0, x.f.size(), &s);
}

BraidWord simple_word(const Img& s) { return permutation_braid(to_perm(s)); }

struct Tracked {
  Nf nf;
  BraidWord conj;  // conj^-1 * original * conj == nf
};

Tracked cycle_once(const Tracked& t) {
  if (t.nf.f.empty()) return t;
  Img a1 = twist(t.nf.f.front(), t.nf.k);
  return {conj_simple(t.nf, a1), t.conj * simple_word(a1)};
}

// A_r x A_r^-1 = Delta^k tau^k(A_r) A_1 ... A_{r-1}
Tracked decycle_once(const Tracked& t) {
  if (t.nf.f.empty()) return t;
  const Img& ar = t.nf.f.back();
  return {rebuild(t.nf, t.nf.k, twist(ar, t.nf.k), 0, t.nf.f.size() - 1, nullptr),
          t.conj * simple_word(ar).inverse()};
}

int sup(const Nf& x) { return x.k + static_cast<int>(x.f.size()); }

Tracked to_super_summit(const BraidWord& x) {
  int n = x.strands();
  int budget = n * (n - 1) / 2 + 1;
  Nf start(n);
  for (int l : x.letters()) start.times_letter(l);
  Tracked t{start, BraidWord(n)};
  for (int stall = 0; stall < budget && !t.nf.f.empty();) {
    Tracked c = cycle_once(t);
    if (c.nf.k > t.nf.k) stall = 0; else ++stall;
    t = c;
  }
  for (int stall = 0; stall < budget && !t.nf.f.empty();) {
    Tracked d = decycle_once(t);
    if (sup(d.nf) < sup(t.nf)) stall = 0; else ++stall;
    t = d;
  }
  return t;
}

std::string key(const Nf& x) {
  std::string s = std::to_string(x.k) + ':';
  for (auto& a : x.f)
    for (int v : a) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::vector<Img> all_simples(int n) {
  Img p = identity_img(n);
  std::vector<Img> out;
  while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
  return out;
}

// Traces of powers of the Burau matrix at t = 3 modulo a prime: a cheap conjugacy invariant.
std::vector<std::uint64_t> burau_traces(const BraidWord& w) {
  constexpr std::uint64_t P = 1000000007ULL, T = 3, TINV = 333333336ULL;  // 3 * TINV = 1 mod P
  int n = w.strands();
  std::vector<std::uint64_t> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    // right-multiply by the 2x2 block acting on columns i, i+1
    std::uint64_t a, b, c, d;
    if (l > 0) a = (1 + P - T) % P, b = T, c = 1, d = 0;
    else a = 0, b = 1, c = TINV, d = (1 + P - TINV) % P;
    for (int r = 0; r < n; ++r) {
      std::uint64_t x = m[r * n + i], y = m[r * n + i + 1];
      m[r * n + i] = (x * a + y * c) % P;
      m[r * n + i + 1] = (x * b + y * d) % P;
    }
  }
  std::vector<std::uint64_t> out, pw = m;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t tr = 0;
    for (int i = 0; i < n; ++i) tr = (tr + pw[i * n + i]) % P;
    out.push_back(tr);
    std::vector<std::uint64_t> nx(n * n, 0);
    for (int r = 0; r < n; ++r)
      for (int q = 0; q < n; ++q) {
        std::uint64_t v = pw[r * n + q];
        if (!v) continue;
        for (int c2 = 0; c2 < n; ++c2) nx[r * n + c2] = (nx[r * n + c2] + v * m[q * n + c2]) % P;
      }
    pw.swap(nx);
  }
  return out;
}

}  // namespace

std::optional<BraidWord> find_conjugator(const BraidWord& x, const BraidWord& y, size_t max_states) {
  if (x.strands() != y.strands()) throw Error(ErrorKind::StrandMismatch, "find_conjugator");
  int n = x.strands();
  if (forget(x).cycle_type() != forget(y).cycle_type() || exponent_sum(x) != exponent_sum(y)) return std::nullopt;
  if (n > 7) return std::nullopt;
  if (burau_traces(x) != burau_traces(y)) return std::nullopt;
  Tracked sx = to_super_summit(x);
  Tracked sy = to_super_summit(y);
  if (sx.nf.k != sy.nf.k || sup(sx.nf) != sup(sy.nf)) return std::nullopt;
  auto simples = all_simples(n);
  // Breadth-first over the super summit set; each state remembers its parent and the simple used.
  struct State {
    Nf nf;
    int parent;
    int via;
  };
  std::vector<State> states{{sx.nf, -1, -1}};
  std::unordered_map<std::string, int> seen{{key(sx.nf), 0}};
  std::string goal = key(sy.nf);
  for (size_t head = 0; head < states.size(); ++head) {
    if (key(states[head].nf) == goal) {
      std::vector<int> path;
      for (int i = static_cast<int>(head); states[i].parent >= 0; i = states[i].parent) path.push_back(states[i].via);
      BraidWord c = sx.conj;
      for (auto it = path.rbegin(); it != path.rend(); ++it) c *= simple_word(simples[*it]);
      return c * sy.conj.inverse();
    }
    for (size_t s = 0; s < simples.size(); ++s) {
      Nf nx = conj_simple(states[head].nf, simples[s]);
      if (nx.k != sx.nf.k || sup(nx) != sup(sx.nf)) continue;
      auto kk = key(nx);
      if (seen.count(kk)) continue;
      if (seen.size() >= max_states) return std::nullopt;
      seen.emplace(std::move(kk), static_cast<int>(states.size()));
      states.push_back({std::move(nx), static_cast<int>(head), static_cast<int>(s)});
    }
  }
  return std::nullopt;
}

}  // namespace braidlift
