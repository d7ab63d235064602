#include "braidlift/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "braidlift/errors.hpp"
#include "braidlift/garside.hpp"

namespace braidlift {

// ---------- systems ----------

PermutationSystem::PermutationSystem(int degree, std::vector<Permutation> e)
    : n(degree), entries(std::move(e)), target(degree) {
  for (auto& p : entries) {
    if (p.degree() > n) throw Error(ErrorKind::SizeMismatch, "entry " + p.str() + " exceeds degree " + std::to_string(n));
    p = p.extended(n);
  }
}

Permutation PermutationSystem::product() const {
  Permutation acc(n);
  for (auto& p : entries) acc = acc * p;
  return acc;
}

bool PermutationSystem::product_is_target() const {
  Permutation t = target.degree() == n ? target : target.extended(n);
  return product() == t;
}

bool PermutationSystem::is_transitive() const { return orbits(n, entries).size() <= 1; }

std::string PermutationSystem::str() const {
  std::string s = "perm-system " + std::to_string(n) + ": ";
  for (size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + entries[i].str();
  return s;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "keyword n: body" into (n or 0, body).
std::pair<int, std::string> split_header(const std::string& text, const std::string& keyword) {
  std::string t = trim(text);
  auto colon = t.find(':');
  if (colon == std::string::npos) return {0, t};
  std::string head = trim(t.substr(0, colon));
  if (head.rfind(keyword, 0) == 0) head = trim(head.substr(keyword.size()));
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(head, &used);
    if (used != head.size()) throw std::invalid_argument(head);
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedToken, "bad system header '" + head + "'");
  }
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "degree must be positive");
  return {n, t.substr(colon + 1)};
}

}  // namespace

PermutationSystem parse_permutation_system(const std::string& text) {
  auto [n, body] = split_header(text, "perm-system");
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::MalformedToken, "unbalanced parenthesis");
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw Error(ErrorKind::MalformedToken, "unbalanced parenthesis");
  if (!trim(cur).empty() || !items.empty()) items.push_back(cur);
  std::vector<Permutation> perms;
  for (auto& it : items) {
    if (trim(it).empty()) throw Error(ErrorKind::MalformedToken, "empty entry");
    perms.push_back(Permutation::parse(it, 0));
  }
  int deg = n;
  for (auto& p : perms) deg = std::max(deg, p.degree());
  if (n != 0 && deg > n) throw Error(ErrorKind::IndexOutOfRange, "point beyond degree " + std::to_string(n));
  return PermutationSystem(std::max(deg, 1), perms);
}

BraidWord BraidSystem::product() const {
  BraidWord acc(n);
  for (auto& b : entries) acc *= b;
  return acc;
}

std::string BraidSystem::str() const {
  std::string s = "braid-system " + std::to_string(n) + ": ";
  for (size_t i = 0; i < entries.size(); ++i) s += (i ? ",[" : "[") + entries[i].str() + "]";
  return s;
}

BraidSystem parse_braid_system(const std::string& text) {
  auto [n, body] = split_header(text, "braid-system");
  if (n == 0) throw Error(ErrorKind::MalformedToken, "braid system needs a strand count");
  BraidSystem bs(n);
  size_t i = 0;
  while (i < body.size()) {
    char ch = body[i];
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n') {
      ++i;
      continue;
    }
    if (ch != '[') throw Error(ErrorKind::MalformedToken, std::string("unexpected '") + ch + "'");
    auto close = body.find(']', i);
    if (close == std::string::npos) throw Error(ErrorKind::MalformedToken, "missing ']'");
    bs.entries.push_back(parse_braid(body.substr(i + 1, close - i - 1), n));
    bs.certificates.push_back(std::nullopt);
    i = close + 1;
  }
  return bs;
}

// ---------- moves ----------

std::string Move::str() const {
  auto list = [&] {
    std::string s;
    for (size_t i = 0; i < perms.size(); ++i) s += (i ? "," : "") + perms[i].str();
    return s;
  };
  switch (kind) {
    case MoveKind::Slide: return "s" + std::to_string(position) + (direction < 0 ? "^-1" : "");
    case MoveKind::DeletePair: return "delete@" + std::to_string(position) + " " + list();
    case MoveKind::InsertPair: return "insert@" + std::to_string(position) + " " + list();
    case MoveKind::Fission: return "fission@" + std::to_string(position) + " " + list();
    case MoveKind::Fusion: return "fusion@" + std::to_string(position) + " " + list();
  }
  return "?";
}

MoveTrace MoveTrace::inverse() const {
  MoveTrace out;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    Move m = *it;
    switch (m.kind) {
      case MoveKind::Slide: m.direction = -m.direction; break;
      case MoveKind::DeletePair: m.kind = MoveKind::InsertPair; break;
      case MoveKind::InsertPair: m.kind = MoveKind::DeletePair; break;
      case MoveKind::Fission: m.kind = MoveKind::Fusion; break;
      case MoveKind::Fusion: m.kind = MoveKind::Fission; break;
    }
    out.moves.push_back(std::move(m));
  }
  return out;
}

std::string MoveTrace::slide_string() const {
  std::string s;
  for (auto& m : moves)
    if (m.kind == MoveKind::Slide) s += (s.empty() ? "" : " ") + m.str();
  return s;
}

namespace {

void check_slide_index(size_t m, int k) {
  if (k < 1 || static_cast<size_t>(k) >= m)
    throw Error(ErrorKind::IndexOutOfRange, "slide index " + std::to_string(k) + " outside 1.." + std::to_string(m) + "-1");
}

Move slide_move(int k, int dir) {
  Move m;
  m.kind = MoveKind::Slide;
  m.position = k;
  m.direction = dir < 0 ? -1 : 1;
  return m;
}

// The inverse of a chain word runs its blocks backwards; move it back onto the sign-flipped chain.
SplitUnlinkCertificate inverse_certificate(const SplitUnlinkCertificate& c) {
  const BraidWord& t = c.canonical_target;
  std::vector<int> flipped;
  for (int l : t.letters()) flipped.push_back(-l);
  BraidWord target(t.strands(), flipped);
  BraidWord inv = t.inverse();
  if (inv == target) return {c.kind, c.conjugator, target};
  auto h = find_conjugator(target, inv);
  if (!h) throw Error(ErrorKind::InternalInconsistency, "inverse chain is not conjugate to its flipped chain");
  return {c.kind, (*h * c.conjugator).freely_reduced(), target};
}

// Keeps certificate conjugators short; they are re-verified by callers anyway.
std::optional<SplitUnlinkCertificate> conjugated(const std::optional<SplitUnlinkCertificate>& c, const BraidWord& g) {
  if (!c) return std::nullopt;
  return SplitUnlinkCertificate{c->kind, (c->conjugator * g).freely_reduced(), c->canonical_target};
}

}  // namespace

PermutationSystem apply_slide(const PermutationSystem& s, int k, int dir, MoveTrace* trace) {
  check_slide_index(s.entries.size(), k);
  PermutationSystem out = s;
  const Permutation& a = s.entries[k - 1];
  const Permutation& b = s.entries[k];
  if (dir > 0) {
    out.entries[k - 1] = a * b * a.inverse();
    out.entries[k] = a;
  } else {
    out.entries[k - 1] = b;
    out.entries[k] = b.inverse() * a * b;
  }
  if (trace) trace->moves.push_back(slide_move(k, dir));
  return out;
}

BraidSystem apply_slide(const BraidSystem& s, int k, int dir, MoveTrace* trace) {
  check_slide_index(s.entries.size(), k);
  BraidSystem out = s;
  out.certificates.resize(out.entries.size());
  auto certs = out.certificates;
  const BraidWord& a = s.entries[k - 1];
  const BraidWord& b = s.entries[k];
  if (dir > 0) {
    out.entries[k - 1] = (a * b * a.inverse()).freely_reduced();
    out.entries[k] = a;
    out.certificates[k - 1] = conjugated(certs[k], a.inverse());
    out.certificates[k] = certs[k - 1];
  } else {
    out.entries[k - 1] = b;
    out.entries[k] = (b.inverse() * a * b).freely_reduced();
    out.certificates[k - 1] = certs[k];
    out.certificates[k] = conjugated(certs[k - 1], b);
  }
  if (trace) trace->moves.push_back(slide_move(k, dir));
  return out;
}

PermutationSystem apply_move(const PermutationSystem& s, const Move& m) {
  if (m.kind == MoveKind::Slide) return apply_slide(s, m.position, m.direction);
  PermutationSystem out = s;
  auto& e = out.entries;
  size_t p = static_cast<size_t>(m.position - 1);
  switch (m.kind) {
    case MoveKind::DeletePair:
      if (m.perms.size() != 1 || p + 1 >= e.size() || e[p] != m.perms[0] || e[p + 1] != m.perms[0].inverse())
        throw Error(ErrorKind::InternalInconsistency, "delete move does not match system");
      e.erase(e.begin() + p, e.begin() + p + 2);
      break;
    case MoveKind::InsertPair:
      if (m.perms.size() != 1 || p > e.size()) throw Error(ErrorKind::IndexOutOfRange, "insert position");
      e.insert(e.begin() + p, {m.perms[0], m.perms[0].inverse()});
      break;
    case MoveKind::Fission: {
      if (p >= e.size()) throw Error(ErrorKind::IndexOutOfRange, "fission position");
      Permutation prod(s.n);
      for (auto& f : m.perms) prod = prod * f;
      if (prod != e[p]) throw Error(ErrorKind::InternalInconsistency, "fission factors do not multiply to the entry");
      e.erase(e.begin() + p);
      e.insert(e.begin() + p, m.perms.begin(), m.perms.end());
      break;
    }
    case MoveKind::Fusion: {
      size_t c = m.perms.size();
      if (p + c > e.size() || p > e.size()) throw Error(ErrorKind::IndexOutOfRange, "fusion position");
      Permutation prod(s.n);
      for (size_t i = 0; i < c; ++i) {
        if (e[p + i] != m.perms[i]) throw Error(ErrorKind::InternalInconsistency, "fusion factors do not match");
        prod = prod * e[p + i];
      }
      e.erase(e.begin() + p, e.begin() + p + c);
      e.insert(e.begin() + p, prod);
      break;
    }
    case MoveKind::Slide: break;
  }
  return out;
}

BraidSystem apply_move(const BraidSystem& s, const Move& m) {
  if (m.kind == MoveKind::Slide) return apply_slide(s, m.position, m.direction);
  BraidSystem out = s;
  out.certificates.resize(out.entries.size());
  auto& e = out.entries;
  auto& c = out.certificates;
  size_t p = static_cast<size_t>(m.position - 1);
  switch (m.kind) {
    case MoveKind::InsertPair: {
      if (!m.braid || p > e.size()) throw Error(ErrorKind::InternalInconsistency, "insert move without a braid");
      e.insert(e.begin() + p, {*m.braid, m.braid->inverse()});
      std::optional<SplitUnlinkCertificate> c1 = m.certificate, c2;
      if (c1) c2 = inverse_certificate(*c1);
      c.insert(c.begin() + p, {c1, c2});
      break;
    }
    case MoveKind::DeletePair:
      if (p + 1 >= e.size()) throw Error(ErrorKind::IndexOutOfRange, "delete position");
      e.erase(e.begin() + p, e.begin() + p + 2);
      c.erase(c.begin() + p, c.begin() + p + 2);
      break;
    case MoveKind::Fusion: {
      size_t k = m.perms.size();
      if (p + k > e.size()) throw Error(ErrorKind::IndexOutOfRange, "fusion position");
      BraidWord prod(s.n);
      for (size_t i = 0; i < k; ++i) prod *= e[p + i];
      prod = prod.freely_reduced();
      e.erase(e.begin() + p, e.begin() + p + k);
      c.erase(c.begin() + p, c.begin() + p + k);
      e.insert(e.begin() + p, prod);
      c.insert(c.begin() + p, certify_split(prod));
      break;
    }
    case MoveKind::Fission: {
      // Only the two-factor split with a prescribed first factor has a braid counterpart.
      if (!m.braid || m.perms.size() != 2 || p >= e.size())
        throw Error(ErrorKind::InternalInconsistency, "fission has no braid counterpart");
      BraidWord rest = (m.braid->inverse() * e[p]).freely_reduced();
      e[p] = *m.braid;
      c[p] = m.certificate;
      e.insert(e.begin() + p + 1, rest);
      c.insert(c.begin() + p + 1, certify_split(rest));
      break;
    }
    case MoveKind::Slide: break;
  }
  return out;
}

PermutationSystem replay(PermutationSystem s, const MoveTrace& t) {
  for (auto& m : t.moves) s = apply_move(s, m);
  return s;
}

BraidSystem replay(BraidSystem s, const MoveTrace& t) {
  for (auto& m : t.moves) s = apply_move(s, m);
  return s;
}

// ---------- named braids ----------

BraidWord alpha_braid(int n, int k) {
  std::vector<int> l;
  for (int i = k; i >= 2; --i) l.push_back(i);
  l.push_back(1);
  for (int i = 2; i <= k; ++i) l.push_back(-i);
  return BraidWord(n, l);
}

BraidWord eta_braid(int n, int r, int k) {
  std::vector<int> l;
  for (int i = r; i <= k - 2; ++i) l.push_back(i);
  l.push_back(k - 1);
  for (int i = k - 2; i >= r; --i) l.push_back(-i);
  return BraidWord(n, l);
}

namespace {

// alpha_k = g^-1 sigma_1 g with g = sigma_2^-1 ... sigma_k^-1
SplitUnlinkCertificate alpha_certificate(int n, int k) {
  std::vector<int> g;
  for (int i = 2; i <= k; ++i) g.push_back(-i);
  return band_certificate(n, 1, 1, BraidWord(n, g));
}

SplitUnlinkCertificate eta_certificate(int n, int r, int k) {
  std::vector<int> g;
  for (int i = k - 2; i >= r; --i) g.push_back(-i);
  return band_certificate(n, k - 1, 1, BraidWord(n, g));
}

// Working state for the forward algorithms: a permutation list and the trace that produced it.
struct Work {
  int n;
  std::vector<Permutation> e;
  MoveTrace trace;

  void slide(int k, int dir) {
    PermutationSystem s;
    s.n = n;
    s.entries = std::move(e);
    s = apply_slide(s, k, dir, &trace);
    e = std::move(s.entries);
  }
  void apply(Move m) {
    PermutationSystem s;
    s.n = n;
    s.entries = std::move(e);
    s = apply_move(s, m);
    e = std::move(s.entries);
    trace.moves.push_back(std::move(m));
  }
  void delete_pair(size_t i, const BraidWord& lift, const SplitUnlinkCertificate& cert) {
    Move m;
    m.kind = MoveKind::DeletePair;
    m.position = static_cast<int>(i) + 1;
    m.perms = {e[i]};
    m.braid = lift;
    m.certificate = cert;
    apply(std::move(m));
  }
  int size() const { return static_cast<int>(e.size()); }
};

bool moves_point(const Permutation& p, int k) { return p(k) != k; }

// Other point of a transposition (a, k).
int partner(const Permutation& t, int k) { return t(k); }

bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

void check_identity_product(const PermutationSystem& ps) {
  if (!ps.product().is_identity())
    throw Error(ErrorKind::NotIdentityProduct, "product of entries is " + ps.product().str());
}

}  // namespace

// ---------- Lueroth-Clebsch standardization ----------

bool is_standard_form(const PermutationSystem& ps) {
  const auto& e = ps.entries;
  size_t i = 0;
  auto t12 = Permutation::transposition(ps.n, 1, 2);
  while (i < e.size() && ps.n >= 2 && e[i] == t12) ++i;
  if (i % 2 != 0) return false;
  for (int k = 3; k <= ps.n; ++k) {
    auto t = Permutation::transposition(ps.n, 1, k);
    if (i + 1 >= e.size() || e[i] != t || e[i + 1] != t) return false;
    i += 2;
  }
  return i == e.size();
}

namespace {

// Pair at 0-based (i, i+1) passes the entry at i-1 going left or i+2 going right.
// With relabel the pair is conjugated by the passed transposition, otherwise it is unchanged.
void pair_left(Work& w, int i, bool relabel) {
  if (relabel) {
    w.slide(i, 1);
    w.slide(i + 1, 1);
  } else {
    w.slide(i, -1);
    w.slide(i + 1, -1);
  }
}

void pair_right(Work& w, int i, bool relabel) {
  if (relabel) {
    w.slide(i + 2, -1);
    w.slide(i + 1, -1);
  } else {
    w.slide(i + 2, 1);
    w.slide(i + 1, 1);
  }
}

// Moves the pair at f, f+1 left through the inert prefix and back, relabeling it when `want`
// accepts the change from the current label to the new one.
void relabel_pair(Work& w, int f, int k, const std::function<bool(int, int)>& want) {
  int i = f;
  while (i > 0) {
    int a = partner(w.e[i], k);
    const Permutation& x = w.e[i - 1];
    int b = x(a);
    bool rel = b != a && want(a, b);
    pair_left(w, i, rel);
    --i;
  }
  while (i < f) {
    int a = partner(w.e[i], k);
    const Permutation& x = w.e[i + 2];
    int b = x(a);
    bool rel = b != a && want(a, b);
    pair_right(w, i, rel);
    ++i;
  }
}

// Distances from point 1 in the graph whose edges are the transpositions e[0..f).
std::vector<int> distances_from_one(const Work& w, int f, int k) {
  std::vector<int> d(k, -1);
  d[1] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < f; ++i) {
      auto cyc = w.e[i].cycles();
      if (cyc.size() != 1 || cyc[0].size() != 2) continue;
      int u = cyc[0][0], v = cyc[0][1];
      if (u >= k || v >= k) continue;
      for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}})
        if (d[s] >= 0 && (d[t] < 0 || d[t] > d[s] + 1)) {
          d[t] = d[s] + 1;
          changed = true;
        }
    }
  }
  return d;
}

// Works on the prefix e[0..m); the pairs of higher levels sit beyond it.
void standardize_level(Work& w, int k, int m) {
  auto is_tau = [&](int i) { return moves_point(w.e[i], k); };
  // Gather: each tau, from the right, travels right until it meets the next tau.
  int limit = m;
  for (int i = m - 1; i >= 0; --i) {
    if (!is_tau(i)) continue;
    int j = i;
    while (j + 1 < limit && !is_tau(j + 1)) {
      w.slide(j + 1, commute(w.e[j], w.e[j + 1]) ? 1 : -1);
      ++j;
    }
    limit = j;
  }
  int f = limit;
  if (m - f < 2) throw Error(ErrorKind::InternalInconsistency, "level block too short");
  bool fresh_pair = false;  // the first pair was just relabeled; do not undo it
  while (true) {
    int diff = -1;
    for (int i = f + (fresh_pair ? 1 : 0); i + 1 < m; ++i)
      if (w.e[i] != w.e[i + 1]) {
        diff = i;
        break;
      }
    fresh_pair = false;
    if (diff >= 0) {
      // (x,k),(y,k) -> (x,y),(x,k); the inert (x,y) leaves the block on the left.
      w.slide(diff + 1, 1);
      for (int q = diff; q > f; --q) w.slide(q, -1);
      ++f;
      continue;
    }
    int a = partner(w.e[f], k);
    if (m - f > 2) {
      bool done = false;
      relabel_pair(w, f, k, [&](int, int) { return !done && (done = true); });
      if (partner(w.e[f], k) == a) throw Error(ErrorKind::InternalInconsistency, "cannot relabel pair");
      fresh_pair = true;
      continue;
    }
    if (a == 1) break;
    auto d = distances_from_one(w, f, k);
    if (d[a] < 0) throw Error(ErrorKind::InternalInconsistency, "point disconnected from 1");
    relabel_pair(w, f, k, [&](int from, int to) { return d[to] >= 0 && d[to] < d[from]; });
  }
}

}  // namespace

StandardizeResult standardize_transpositions(const PermutationSystem& ps) {
  for (auto& p : ps.entries)
    if (!p.is_transposition()) throw Error(ErrorKind::NotTranspositions, p.str() + " is not a transposition");
  check_identity_product(ps);
  if (!ps.is_transitive()) throw Error(ErrorKind::NotTransitive, "the entries do not act transitively");
  Work w{ps.n, ps.entries, {}};
  for (int k = ps.n, m = w.size(); k >= 3; --k, m -= 2) standardize_level(w, k, m);
  PermutationSystem out(ps.n, w.e);
  if (!is_standard_form(out)) throw Error(ErrorKind::InternalInconsistency, "standardization missed: " + out.str());
  return {out, w.trace};
}

// ---------- lifting ----------

namespace {

// Moves every inert entry lying between the first and last tau to the left of the first tau.
void clear_block(Work& w, int k) {
  while (true) {
    int f = -1, l = -1;
    for (int i = 0; i < w.size(); ++i)
      if (moves_point(w.e[i], k)) {
        if (f < 0) f = i;
        l = i;
      }
    if (f < 0) return;
    int p = -1;
    for (int i = f + 1; i < l; ++i)
      if (!moves_point(w.e[i], k)) {
        p = i;
        break;
      }
    if (p < 0) return;
    for (int q = p; q > f; --q) w.slide(q, -1);
  }
}

void lift_level(Work& w, int k) {
  for (int i = 0; i < w.size(); ++i) {
    const Permutation& rho = w.e[i];
    if (!moves_point(rho, k) || rho.is_transposition()) continue;
    auto tau = Permutation::transposition(w.n, rho(k), k);
    auto rest = rho * tau;
    Move m;
    m.kind = MoveKind::Fission;
    m.position = i + 1;
    m.perms = {rest, tau};
    w.apply(std::move(m));
    ++i;
  }
  clear_block(w, k);
  while (true) {
    std::vector<int> taus;
    for (int i = 0; i < w.size(); ++i)
      if (moves_point(w.e[i], k)) taus.push_back(i);
    if (taus.empty()) return;
    int r = 0;
    for (int i : taus) r = std::max(r, partner(w.e[i], k));
    std::vector<int> occ;
    for (int i : taus)
      if (partner(w.e[i], k) == r) occ.push_back(i);
    if (occ.size() >= 2) {
      for (int q = occ[0]; q < occ[1] - 1; ++q) w.slide(q + 1, 1);
      w.delete_pair(occ[1] - 1, eta_braid(w.n, r, k), eta_certificate(w.n, r, k));
    } else {
      for (int q = occ[0]; q < taus.back(); ++q) w.slide(q + 1, 1);
      if (occ[0] == taus.back()) throw Error(ErrorKind::InternalInconsistency, "unpaired transposition at level " + std::to_string(k));
    }
    clear_block(w, k);
  }
}

struct Variant {
  BraidWord braid;
  SplitUnlinkCertificate cert;
};

// Certified braids forgetting to rho: conjugates of chain words by short words, shortest first.
std::vector<Variant> certified_lifts(const Permutation& rho, int max_len) {
  int n = rho.degree();
  std::vector<int> lens;
  for (auto& c : rho.cycles()) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  // Chain blocks for the nontrivial cycles first, then fixed strands.
  std::vector<std::vector<int>> patterns{{}};
  int pos = 1;
  for (int l : lens) {
    std::vector<std::vector<int>> next;
    for (auto& pat : patterns)
      for (int mask = 0; mask < (1 << (l - 1)); ++mask) {
        auto q = pat;
        for (int i = 0; i < l - 1; ++i) q.push_back(((mask >> i) & 1 ? -1 : 1) * (pos + i));
        next.push_back(q);
      }
    patterns = std::move(next);
    pos += l;
  }
  BraidWord positive(n, patterns.front());
  Permutation t = forget(positive);
  std::vector<Variant> out;
  auto add = [&](const BraidWord& g) {
    for (auto& pat : patterns) {
      BraidWord T(n, pat);
      bool standard = true;
      auto blocks = chain_blocks(T);
      for (auto& blk : *blocks)
        for (int sgn : blk.signs) standard = standard && sgn == blk.signs.front();
      out.push_back({conjugate(T, g).freely_reduced(),
                     {standard ? UnlinkKind::CompletelySplitStandardUnlink : UnlinkKind::CompletelySplitUnlink, g, T}});
    }
  };
  // A permutation braid carrying the chain's cycles onto rho's.
  std::vector<int> img(n, 0);
  std::vector<bool> used(n + 1, false);
  auto tc = t.cycles(), rc = rho.cycles();
  std::stable_sort(rc.begin(), rc.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (size_t c = 0; c < tc.size(); ++c)
    for (size_t i = 0; i < tc[c].size(); ++i) {
      img[tc[c][i] - 1] = rc[c][i];
      used[rc[c][i]] = true;
    }
  for (int i = 0, next = 1; i < n; ++i)
    if (!img[i]) {
      while (used[next]) ++next;
      img[i] = next;
      used[next] = true;
    }
  Permutation carry = Permutation::from_images(img);
  for (const Permutation& q : {carry, carry.inverse()}) {
    BraidWord g = permutation_braid(q);
    if (forget(conjugate(positive, g)).extended(n) == rho) {
      add(g);
      break;
    }
  }
  std::vector<BraidWord> layer{BraidWord(n)};
  for (int len = 0; len <= max_len; ++len) {
    for (auto& g : layer) {
      Permutation pi = forget(g);
      if (t.conjugated_by(pi) != rho) continue;
      add(g);
    }
    std::vector<BraidWord> next;
    for (auto& g : layer)
      for (int q = 1; q < n; ++q)
        for (int sgn : {1, -1}) {
          if (!g.empty() && g.letters().back() == -sgn * q) continue;
          next.push_back(g * BraidWord::gen(n, q, sgn));
        }
    layer = std::move(next);
  }
  return out;
}

// Re-splits entries a, a+1 so that both certify, keeping their product: a Fusion followed by a
// Fission with a prescribed first factor.
bool resplit(BraidSystem& bs, int a, MoveTrace& used) {
  int n = bs.n;
  BraidWord prod = (bs.entries[a] * bs.entries[a + 1]).freely_reduced();
  Permutation ra = forget(bs.entries[a]).extended(n), rb = forget(bs.entries[a + 1]).extended(n);
  for (auto& v : certified_lifts(ra, n <= 4 ? 4 : 3)) {
    BraidWord rest = (v.braid.inverse() * prod).freely_reduced();
    if (!certify_split(rest)) continue;
    Move fu;
    fu.kind = MoveKind::Fusion;
    fu.position = a + 1;
    fu.perms = {ra, rb};
    Move fi = fu;
    fi.kind = MoveKind::Fission;
    fi.braid = v.braid;
    fi.certificate = v.cert;
    bs = apply_move(apply_move(bs, fu), fi);
    used.moves.push_back(std::move(fu));
    used.moves.push_back(std::move(fi));
    return true;
  }
  return false;
}

// An uncertified entry can only change class by a resplit, so bring it next to each other entry
// in turn by slides, resplit there and slide back.
bool repair_entry(BraidSystem& bs, int j, MoveTrace& used) {
  int m = static_cast<int>(bs.entries.size());
  if (j + 1 < m && resplit(bs, j, used)) return true;
  if (j >= 1 && resplit(bs, j - 1, used)) return true;
  for (int dir : {1, -1}) {
    BraidSystem saved = bs;
    size_t mark = used.moves.size();
    std::vector<int> ks;
    int p = j;
    bool ok = false;
    while (!ok) {
      // Forward slide carries the entry right unchanged, the inverse slide carries it left.
      if (dir == 1 && p + 2 < m) {
        bs = apply_slide(bs, p + 1, 1, &used);
        ks.push_back(p + 1);
        ++p;
        ok = resplit(bs, p, used);
      } else if (dir == -1 && p >= 2) {
        bs = apply_slide(bs, p, -1, &used);
        ks.push_back(p);
        --p;
        ok = resplit(bs, p - 1, used);
      } else {
        break;
      }
    }
    if (ok) {
      for (auto it = ks.rbegin(); it != ks.rend(); ++it) bs = apply_slide(bs, *it, -dir, &used);
      return true;
    }
    bs = std::move(saved);
    used.moves.resize(mark);
  }
  return false;
}

void repair(BraidSystem& bs, MoveTrace& used) {
  for (size_t j = 0; j < bs.entries.size(); ++j)
    if (!bs.certificates[j]) repair_entry(bs, static_cast<int>(j), used);
}

LiftResult lift_core(const PermutationSystem& ps, bool with_repair) {
  int n = ps.n;
  Work w{n, ps.entries, {}};
  bool simple = !ps.entries.empty() && ps.is_transitive() &&
                std::all_of(ps.entries.begin(), ps.entries.end(), [](const Permutation& p) { return p.is_transposition(); });
  if (simple) {
    auto st = standardize_transpositions(ps);
    w.e = st.system.entries;
    w.trace = st.trace;
    for (int k = n; k >= 2; --k) {
      while (w.size() >= 2 && w.e.back() == Permutation::transposition(n, 1, k))
        w.delete_pair(w.e.size() - 2, alpha_braid(n, k - 1), alpha_certificate(n, k - 1));
    }
  } else {
    for (int i = 0; i < w.size(); ++i)
      if (w.e[i].is_identity()) {
        Move m;
        m.kind = MoveKind::Fission;
        m.position = i + 1;
        w.apply(std::move(m));
        --i;
      }
    for (int k = n; k >= 2; --k) lift_level(w, k);
  }
  if (!w.e.empty()) throw Error(ErrorKind::InternalInconsistency, "reduction left " + std::to_string(w.e.size()) + " entries");
  MoveTrace used = w.trace.inverse();
  BraidSystem bs = replay(BraidSystem(n), used);
  if (with_repair) repair(bs, used);
  return {bs, used.inverse()};
}

size_t uncertified(const BraidSystem& bs) {
  return static_cast<size_t>(std::count(bs.certificates.begin(), bs.certificates.end(), std::nullopt));
}

}  // namespace

// The construction depends on the order of the entries, so an uncertified result is retried on
// Hurwitz-equivalent systems obtained by fixed pseudo-random slides; slides keep every entry's
// conjugacy class, so pulling a good lift back keeps its certificates.
LiftResult lift_permutation_system(const PermutationSystem& ps) {
  check_identity_product(ps);
  if (ps.entries.size() == 2 && !ps.entries[0].is_identity()) {
    Work w{ps.n, ps.entries, {}};
    auto v = certified_lifts(ps.entries[0], 0).front();
    w.delete_pair(0, v.braid, v.cert);
    return {replay(BraidSystem(ps.n), w.trace.inverse()), w.trace};
  }
  const int attempts = 24;
  std::optional<LiftResult> best;
  for (int pass = 0; pass < 2; ++pass)
    for (int a = 0; a < attempts; ++a) {
      MoveTrace pre;
      PermutationSystem q = ps;
      std::mt19937 rng(static_cast<unsigned>(a));
      int m = static_cast<int>(q.entries.size());
      if (a > 0 && m >= 2)
        for (int i = 0; i < 2 * m; ++i) q = apply_slide(q, 1 + static_cast<int>(rng() % (m - 1)), rng() % 2 ? 1 : -1, &pre);
      LiftResult r = lift_core(q, pass == 1);
      for (auto it = pre.moves.rbegin(); it != pre.moves.rend(); ++it)
        r.system = apply_slide(r.system, it->position, -it->direction);
      pre.moves.insert(pre.moves.end(), r.trace.moves.begin(), r.trace.moves.end());
      r.trace = std::move(pre);
      if (uncertified(r.system) == 0) return r;
      if (!best || uncertified(r.system) < uncertified(best->system)) best = std::move(r);
    }
  return *best;
}

VerificationReport verify_braid_system(const BraidSystem& bs, const PermutationSystem& ps) {
  VerificationReport r;
  size_t m = bs.entries.size();
  r.entry_status.assign(m, "ok");
  r.forget_match = m == ps.entries.size() && bs.n == ps.n;
  for (size_t i = 0; i < m; ++i) {
    if (i < ps.entries.size() && bs.n == ps.n && forget(bs.entries[i]).extended(ps.n) != ps.entries[i]) {
      r.forget_match = false;
      r.entry_status[i] = "forget-mismatch";
    }
  }
  r.identity_product = is_identity(bs.product());
  r.certificates_valid = true;
  for (size_t i = 0; i < m; ++i) {
    const auto* c = i < bs.certificates.size() && bs.certificates[i] ? &*bs.certificates[i] : nullptr;
    if (!c) {
      r.certificates_valid = false;
      if (r.entry_status[i] == "ok") r.entry_status[i] = "missing-certificate";
    } else if (!verify_certificate(bs.entries[i], *c)) {
      r.certificates_valid = false;
      if (r.entry_status[i] == "ok") r.entry_status[i] = "invalid-certificate";
    }
  }
  return r;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["forget_match"] = forget_match;
  j["identity_product"] = identity_product;
  j["certificates_valid"] = certificates_valid;
  j["pass"] = pass();
  j["entries"] = entry_status;
  return j;
}

// ---------- smooth obstruction ----------

namespace {

// Lexicographically least sign vector (+ before -) with sum of sign*w equal to zero.
std::optional<std::vector<int>> least_signs_exhaustive(const std::vector<int>& w) {
  size_t c = w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    long long sum = 0;
    for (size_t i = 0; i < c; ++i) sum += (mask >> (c - 1 - i)) & 1 ? -w[i] : w[i];
    if (sum == 0) {
      std::vector<int> s(c);
      for (size_t i = 0; i < c; ++i) s[i] = (mask >> (c - 1 - i)) & 1 ? -1 : 1;
      return s;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> least_signs_dp(const std::vector<int>& w) {
  size_t c = w.size();
  long long total = std::accumulate(w.begin(), w.end(), 0LL);
  size_t width = static_cast<size_t>(2 * total + 1);
  // reach[i][s + total]: suffix i.. can sum to s
  std::vector<std::vector<char>> reach(c + 1, std::vector<char>(width, 0));
  reach[c][total] = 1;
  for (size_t i = c; i-- > 0;)
    for (size_t s = 0; s < width; ++s) {
      if (!reach[i + 1][s]) continue;
      if (s + w[i] < width) reach[i][s + w[i]] = 1;
      if (s >= static_cast<size_t>(w[i])) reach[i][s - w[i]] = 1;
    }
  if (!reach[0][total]) return std::nullopt;
  std::vector<int> out(c);
  long long cur = 0;
  for (size_t i = 0; i < c; ++i) {
    long long need = -(cur + w[i]);
    if (need >= -total && need <= total && reach[i + 1][need + total]) {
      out[i] = 1;
      cur += w[i];
    } else {
      out[i] = -1;
      cur -= w[i];
    }
  }
  return out;
}

}  // namespace

std::optional<SignAssignment> smooth_obstruction(const PermutationSystem& ps) {
  auto orb = orbits(ps.n, ps.entries);
  std::vector<int> orbit_of(ps.n + 1, 0);
  for (size_t o = 0; o < orb.size(); ++o)
    for (int p : orb[o]) orbit_of[p] = static_cast<int>(o);
  SignAssignment a;
  a.signs.resize(ps.entries.size());
  std::vector<std::vector<std::pair<size_t, size_t>>> slots(orb.size());
  std::vector<std::vector<int>> weights(orb.size());
  for (size_t j = 0; j < ps.entries.size(); ++j) {
    auto cyc = ps.entries[j].cycles();
    a.signs[j].assign(cyc.size(), 1);
    for (size_t c = 0; c < cyc.size(); ++c) {
      int o = orbit_of[cyc[c][0]];
      slots[o].push_back({j, c});
      weights[o].push_back(static_cast<int>(cyc[c].size()) - 1);
    }
  }
  for (size_t o = 0; o < orb.size(); ++o) {
    auto s = weights[o].size() <= 20 ? least_signs_exhaustive(weights[o]) : least_signs_dp(weights[o]);
    if (!s) return std::nullopt;
    for (size_t i = 0; i < s->size(); ++i) a.signs[slots[o][i].first][slots[o][i].second] = (*s)[i];
  }
  return a;
}

bool satisfies_sign_condition(const PermutationSystem& ps, const SignAssignment& a) {
  if (a.signs.size() != ps.entries.size()) return false;
  auto orb = orbits(ps.n, ps.entries);
  std::vector<long long> sum(ps.n + 1, 0);
  std::vector<int> orbit_of(ps.n + 1, 0);
  for (size_t o = 0; o < orb.size(); ++o)
    for (int p : orb[o]) orbit_of[p] = static_cast<int>(o);
  for (size_t j = 0; j < ps.entries.size(); ++j) {
    auto cyc = ps.entries[j].cycles();
    if (a.signs[j].size() != cyc.size()) return false;
    for (size_t c = 0; c < cyc.size(); ++c) {
      if (a.signs[j][c] != 1 && a.signs[j][c] != -1) return false;
      sum[orbit_of[cyc[c][0]]] += a.signs[j][c] * (static_cast<long long>(cyc[c].size()) - 1);
    }
  }
  return std::all_of(sum.begin(), sum.end(), [](long long s) { return s == 0; });
}

CyclicLift lift_cyclic_cover(int n) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "cyclic cover needs n >= 2");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 1);
  PermutationSystem ps(n, std::vector<Permutation>(n, Permutation::cycle(n, pts)));
  if (!smooth_obstruction(ps))
    return {std::nullopt, "an odd number of terms +-" + std::to_string(n - 1) + " cannot sum to zero"};
  // alpha = sigma_{n-1} ... sigma_1 rotates the points along a circle, and alpha^(n/2) is the half turn.
  // H, the product of band generators on the nested chords {i, n+1-i}, commutes with the half turn
  // and reverses the cyclic order, so H^-1 alpha^-1 H is a negative rotation lifting the same cycle.
  std::vector<int> al, chain, neg;
  for (int i = n - 1; i >= 1; --i) al.push_back(i);
  for (int i = 1; i < n; ++i) {
    chain.push_back(i);
    neg.push_back(-i);
  }
  BraidWord alpha(n, al), pos(n, chain), negative(n, neg), h(n);
  for (int i = 1; i <= n / 2; ++i) {
    BraidWord up(n);
    for (int j = n - i; j > i; --j) up *= BraidWord::gen(n, j);
    h *= conjugate(BraidWord::gen(n, i), up.inverse());
  }
  BraidWord beta = conjugate(negative, h).freely_reduced();
  BraidSystem bs(n);
  for (int i = 0; i < n; ++i) {
    bool first = i < n / 2;
    bs.entries.push_back(first ? alpha : beta);
    bs.certificates.push_back(first ? SplitUnlinkCertificate{UnlinkKind::CompletelySplitStandardUnlink, BraidWord::delta(n), pos}
                                    : SplitUnlinkCertificate{UnlinkKind::CompletelySplitStandardUnlink, h, negative});
  }
  if (!is_identity(bs.product())) throw Error(ErrorKind::InternalInconsistency, "cyclic lift product");
  return {bs, {}};
}

std::vector<int> cover_genus(const PermutationSystem& ps) {
  std::vector<int> out;
  for (auto& orb : orbits(ps.n, ps.entries)) {
    long long d = static_cast<long long>(orb.size());
    long long chi = 2 * d;
    for (auto& p : ps.entries) {
      long long moved_cycles = 0, moved_points = 0;
      for (auto& c : p.cycles())
        if (std::find(orb.begin(), orb.end(), c[0]) != orb.end()) {
          ++moved_cycles;
          moved_points += static_cast<long long>(c.size());
        }
      chi -= moved_points - moved_cycles;
    }
    if (chi % 2 != 0) throw Error(ErrorKind::InternalInconsistency, "odd Euler characteristic");
    out.push_back(static_cast<int>((2 - chi) / 2));
  }
  return out;
}

TorsionVerdict torsion_obstruction(bool relator_check, const Permutation& image) {
  return relator_check && !image.is_identity() ? TorsionVerdict::Obstructed : TorsionVerdict::Inconclusive;
}

LiftVerdict klein_bottle_2fold(KleinCase c) {
  // Relation a^2 b^2 = 1 over B_2 = Z: a -> sigma_1^m, b -> sigma_1^n need 2(m+n) = 0 with the
  // parities of m and n fixed by whether a and b swap the sheets.
  int pa = 0, pb = 0;
  switch (c) {
    case KleinCase::OrientationDouble: pa = 1; pb = 1; break;
    case KleinCase::SelfCover: pa = 1; pb = 0; break;
    case KleinCase::Disconnected: break;
  }
  if (pa != pb)
    return LiftVerdict::not_liftable("a^2 b^2 maps to sigma_1^(2(m+n)) with m+n odd, so 2(m+n) is not divisible by 4");
  BraidWord a = BraidWord::gen(2, 1).pow(pa), b = a.inverse();
  if (!is_identity(a * a * b * b)) throw Error(ErrorKind::InternalInconsistency, "Klein witness");
  return LiftVerdict::liftable({a, b});
}

}  // namespace braidlift
