#include "braidlift/link.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidlift/errors.hpp"

namespace braidlift {

// ---------- free words ----------

FreeWord::FreeWord(const std::vector<int>& l) {
  for (int x : l) {
    if (!letters.empty() && letters.back() == -x)
      letters.pop_back();
    else
      letters.push_back(x);
  }
}

FreeWord FreeWord::gen(int g, int e) { return FreeWord(std::vector<int>{e > 0 ? g + 1 : -(g + 1)}); }

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> l = letters;
  l.insert(l.end(), o.letters.begin(), o.letters.end());
  return FreeWord(l);
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

FreeWord FreeWord::pow(int k) const {
  FreeWord base = k < 0 ? inverse() : *this, r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

FreeWord FreeWord::conjugated_by(const FreeWord& y) const { return y.inverse() * *this * y; }

int FreeWord::exponent_sum() const {
  int s = 0;
  for (int l : letters) s += l > 0 ? 1 : -1;
  return s;
}

std::string FreeWord::str() const {
  if (letters.empty()) return "1";
  int maxg = 0;
  for (int l : letters) maxg = std::max(maxg, std::abs(l));
  std::string s;
  for (int l : letters) {
    int g = std::abs(l);
    if (maxg <= 26) {
      s += static_cast<char>((l > 0 ? 'a' : 'A') + g - 1);
    } else {
      if (!s.empty()) s += ' ';
      s += "x" + std::to_string(g) + (l < 0 ? "^-1" : "");
    }
  }
  return s;
}

// ---------- diagram construction ----------

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

struct Slot {
  int c, s;
};

}  // namespace

LinkDiagram LinkDiagram::unknot() { return build({}, 1, true); }

LinkDiagram LinkDiagram::from_pd(const std::vector<Quad>& x, int free_loops) { return build(x, free_loops, true); }

LinkDiagram LinkDiagram::from_unoriented(const std::vector<Quad>& x, int free_loops) {
  return build(x, free_loops, false);
}

LinkDiagram LinkDiagram::build(const std::vector<Quad>& input, int free_loops, bool pd_oriented) {
  std::vector<Quad> x = input;
  int nc = static_cast<int>(x.size());
  std::map<int, std::vector<Slot>> occ;
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 4; ++s) occ[x[c][s]].push_back({c, s});
  for (auto& [label, v] : occ)
    if (v.size() != 2)
      throw Error(ErrorKind::InconsistentArcs,
                  "arc " + std::to_string(label) + " appears " + std::to_string(v.size()) + " times");
  if (nc == 0 && free_loops == 0) throw Error(ErrorKind::MalformedPD, "empty diagram");

  auto other = [&](int label, Slot at) {
    auto& v = occ[label];
    return (v[0].c == at.c && v[0].s == at.s) ? v[1] : v[0];
  };

  // head[c][s]: +1 if the arc in that slot enters crossing c, -1 if it leaves, 0 unknown.
  std::vector<std::array<int, 4>> head(nc, {0, 0, 0, 0});
  std::vector<std::vector<int>> comps;  // input labels in traversal order
  std::map<int, bool> seen;

  auto trace = [&](int label, Slot h) {
    std::vector<int> comp;
    int cur = label;
    Slot hs = h;
    while (!seen[cur]) {
      seen[cur] = true;
      comp.push_back(cur);
      Slot ts = other(cur, hs);
      if (head[hs.c][hs.s] == -1 || head[ts.c][ts.s] == 1)
        throw Error(ErrorKind::InconsistentArcs, "orientation conflict at arc " + std::to_string(cur));
      head[hs.c][hs.s] = 1;
      head[ts.c][ts.s] = -1;
      Slot out{hs.c, (hs.s + 2) % 4};
      cur = x[out.c][out.s];
      hs = other(cur, out);
    }
    comps.push_back(comp);
  };

  if (pd_oriented)
    for (int c = 0; c < nc; ++c) {
      head[c][0] = head[c][0] == -1 ? 2 : 1;
      head[c][2] = head[c][2] == 1 ? 2 : -1;
      if (head[c][0] == 2 || head[c][2] == 2)
        throw Error(ErrorKind::InconsistentArcs, "arc enters and leaves under the same crossing");
    }
  // Components passing under some crossing start at the lowest such crossing.
  for (int c = 0; c < nc; ++c)
    for (int s : {0, 2}) {
      int label = x[c][s];
      if (seen[label]) continue;
      if (pd_oriented) {
        if (s == 0) trace(label, {c, 0});
        else trace(label, other(label, {c, 2}));
      } else {
        trace(label, {c, s});
      }
    }
  for (int c = 0; c < nc; ++c)
    for (int s : {1, 3})
      if (!seen[x[c][s]]) trace(x[c][s], {c, s});

  if (!pd_oriented)
    for (int c = 0; c < nc; ++c)
      if (head[c][0] != 1) {
        x[c] = {x[c][2], x[c][3], x[c][0], x[c][1]};
        head[c] = {head[c][2], head[c][3], head[c][0], head[c][1]};
      }

  LinkDiagram d;
  d.free_loops_ = free_loops;
  int label = 0;
  std::vector<int> next_in;
  for (size_t k = 0; k < comps.size(); ++k) {
    int first = label + 1;
    for (int l : comps[k]) {
      d.relabel_[l] = ++label;
      d.component_.push_back(static_cast<int>(k));
      d.next_.push_back(label + 1);
    }
    d.next_.back() = first;
  }
  for (int f = 0; f < free_loops; ++f) {
    ++label;
    d.component_.push_back(static_cast<int>(comps.size()) + f);
    d.next_.push_back(label);
  }
  d.components_ = static_cast<int>(comps.size()) + free_loops;
  d.x_.resize(nc);
  for (int c = 0; c < nc; ++c)
    for (int s = 0; s < 4; ++s) d.x_[c][s] = d.relabel_[x[c][s]];

  int na = label;
  Dsu dsu(na);
  for (auto& q : d.x_) dsu.unite(q[1] - 1, q[3] - 1);
  std::map<int, int> root_id;
  d.strand_.assign(na, 0);
  for (int a = 0; a < na; ++a) {
    int r = dsu.find(a);
    auto it = root_id.find(r);
    if (it == root_id.end()) it = root_id.emplace(r, static_cast<int>(root_id.size())).first;
    d.strand_[a] = it->second;
  }
  d.strands_ = static_cast<int>(root_id.size());
  for (int c = 0; c < nc; ++c) {
    auto& q = d.x_[c];
    int sgn = head[c][3] == 1 ? 1 : -1;
    d.sc_.push_back({d.strand_[q[1] - 1], d.strand_[q[0] - 1], d.strand_[q[2] - 1], sgn});
  }
  return d;
}

bool LinkDiagram::is_connected() const {
  if (arc_count() == 0) return false;
  Dsu dsu(arc_count());
  for (auto& q : x_)
    for (int s = 1; s < 4; ++s) dsu.unite(q[0] - 1, q[s] - 1);
  int r = dsu.find(0);
  for (int a = 0; a < arc_count(); ++a)
    if (dsu.find(a) != r) return false;
  return true;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (auto& c : sc_) w += c.sign;
  return w;
}

LinkDiagram LinkDiagram::mirror() const {
  std::vector<Quad> m;
  for (auto& q : x_) m.push_back({q[0], q[3], q[2], q[1]});
  return from_pd(m, free_loops_);
}

std::string LinkDiagram::pd_string() const {
  if (x_.empty() && free_loops_ == 1) return "U";
  std::string s = "PD[";
  bool first = true;
  for (auto& q : x_) {
    if (!first) s += ",";
    first = false;
    s += "X[" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + "]";
  }
  for (int f = 0; f < free_loops_; ++f) {
    if (!first) s += ",";
    first = false;
    s += "U";
  }
  return s + "]";
}

// ---------- parsing ----------

LinkDiagram parse_pd(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "U") return LinkDiagram::unknot();
  size_t pos = 0;
  auto fail = [&](const std::string& why) -> LinkDiagram {
    throw Error(ErrorKind::MalformedPD, why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto expect = [&](const std::string& tok) {
    if (t.compare(pos, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    pos += tok.size();
  };
  auto number = [&]() {
    size_t start = pos;
    if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == start || !std::isdigit(static_cast<unsigned char>(t[pos - 1]))) fail("expected integer");
    return std::stoi(t.substr(start, pos - start));
  };
  // KnotInfo style [[a,b,c,d],...] is accepted alongside PD[X[...],...].
  bool bracket = t.rfind("[[", 0) == 0;
  std::vector<LinkDiagram::Quad> quads;
  int loops = 0;
  expect(bracket ? "[" : "PD[");
  while (pos < t.size() && t[pos] != ']') {
    if (!bracket && t[pos] == 'U') {
      ++pos;
      ++loops;
    } else {
      expect(bracket ? "[" : "X[");
      LinkDiagram::Quad q{};
      for (int i = 0; i < 4; ++i) {
        if (i) expect(",");
        q[i] = number();
      }
      expect("]");
      quads.push_back(q);
    }
    if (pos < t.size() && t[pos] == ',') ++pos;
  }
  expect("]");
  if (pos != t.size()) fail("trailing text");
  if (quads.empty() && loops == 0) fail("no crossings");
  return LinkDiagram::from_pd(quads, loops);
}

// ---------- generated diagrams ----------

namespace {

// Endpoint nodes joined by wires; each wire class becomes one arc.
struct Builder {
  Dsu wires{0};
  std::vector<int> slot_node;  // node id for crossing slot 4*c+s
  int nodes = 0;
  std::vector<LinkDiagram::Quad> quads;

  int node() {
    wires.p.push_back(nodes);
    return nodes++;
  }
  // Bottom-left, bottom-right, top-right, top-left endpoints of a new crossing whose
  // bottom-left/top-right strand passes over when `bl_over`.
  std::array<int, 4> crossing(bool bl_over) {
    std::array<int, 4> e{node(), node(), node(), node()};  // BL BR TR TL
    int c = static_cast<int>(quads.size());
    quads.push_back({});
    std::array<int, 4> order = bl_over ? std::array<int, 4>{1, 2, 3, 0} : std::array<int, 4>{0, 1, 2, 3};
    for (int s = 0; s < 4; ++s) {
      slot_node.resize(4 * (c + 1));
      slot_node[4 * c + s] = e[order[s]];
    }
    return e;
  }
  void join(int a, int b) { wires.unite(a, b); }

  LinkDiagram finish(bool pd_oriented, std::map<int, int>* node_label = nullptr) {
    std::map<int, int> label;
    std::map<int, int> count;
    for (int v : slot_node) count[wires.find(v)]++;
    for (auto& [r, k] : count) label[r] = static_cast<int>(label.size()) + 1;
    int loops = 0;
    std::map<int, bool> has_slot;
    for (int v : slot_node) has_slot[wires.find(v)] = true;
    std::map<int, bool> counted;
    for (int v = 0; v < nodes; ++v) {
      int r = wires.find(v);
      if (!has_slot[r] && !counted[r]) {
        counted[r] = true;
        ++loops;
      }
    }
    for (size_t c = 0; c < quads.size(); ++c)
      for (int s = 0; s < 4; ++s) quads[c][s] = label[wires.find(slot_node[4 * c + s])];
    if (node_label)
      for (int v = 0; v < nodes; ++v) {
        auto it = label.find(wires.find(v));
        (*node_label)[v] = it == label.end() ? 0 : it->second;
      }
    return pd_oriented ? LinkDiagram::from_pd(quads, loops) : LinkDiagram::from_unoriented(quads, loops);
  }
};

struct PretzelBuild {
  LinkDiagram d;
  PretzelLayout layout;
};

PretzelBuild build_pretzel(const std::vector<int>& q) {
  int m = static_cast<int>(q.size());
  if (m < 1) throw Error(ErrorKind::SizeMismatch, "pretzel needs at least one twist region");
  Builder b;
  std::vector<std::array<int, 4>> ends(m);  // BL BR TR TL of each region
  PretzelBuild out;
  out.layout.crossings.resize(m);
  int c = 0;
  for (int i = 0; i < m; ++i) {
    std::array<int, 4> r{b.node(), b.node(), b.node(), b.node()};
    ends[i] = r;
    int bl = r[0], br = r[1];
    for (int k = 0; k < std::abs(q[i]); ++k) {
      auto e = b.crossing(q[i] > 0);
      b.join(bl, e[0]);
      b.join(br, e[1]);
      bl = e[3];
      br = e[2];
      out.layout.crossings[i].push_back(c++);
    }
    b.join(bl, r[3]);
    b.join(br, r[2]);
  }
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    b.join(ends[i][2], ends[j][3]);
    b.join(ends[i][1], ends[j][0]);
  }
  std::map<int, int> nl;
  out.d = b.finish(false, &nl);
  for (int i = 0; i < m; ++i) {
    auto canon = [&](int node) { return nl[node] ? out.d.canonical_label(nl[node]) : 0; };
    out.layout.bottom.push_back({canon(ends[i][0]), canon(ends[i][1])});
    out.layout.top.push_back({canon(ends[i][3]), canon(ends[i][2])});
  }
  return out;
}

}  // namespace

LinkDiagram braid_closure(const BraidWord& w) {
  int n = w.strands();
  Builder b;
  std::vector<int> bottom(n), top(n);
  for (int i = 0; i < n; ++i) top[i] = bottom[i] = b.node();
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    auto e = b.crossing(l > 0);
    b.join(top[i], e[0]);
    b.join(top[i + 1], e[1]);
    top[i] = e[3];
    top[i + 1] = e[2];
  }
  for (int i = 0; i < n; ++i) b.join(top[i], bottom[i]);
  return b.finish(true);
}

LinkDiagram pretzel_diagram(const std::vector<int>& q) { return build_pretzel(q).d; }

PretzelLayout pretzel_layout(const std::vector<int>& q) { return build_pretzel(q).layout; }

bool is_pretzel_knot(const std::vector<int>& q) {
  int even = 0;
  for (int v : q) even += v % 2 == 0;
  return even == 1 || (even == 0 && q.size() % 2 == 1);
}

namespace {

// Slot where an arc enters its head crossing.
Slot head_slot(const LinkDiagram& d, int arc) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    auto& q = d.crossings()[c];
    if (q[0] == arc) return {c, 0};
    int over_in = d.sign(c) > 0 ? 3 : 1;
    if (q[over_in] == arc) return {c, over_in};
  }
  throw Error(ErrorKind::InconsistentArcs, "arc " + std::to_string(arc) + " has no head crossing");
}

}  // namespace

LinkDiagram connect_sum(const LinkDiagram& d1, int arc1, const LinkDiagram& d2, int arc2) {
  if (d1.free_loops() || d2.free_loops() || !d1.crossing_count() || !d2.crossing_count())
    throw Error(ErrorKind::InconsistentArcs, "connected sum needs crossings on both sides");
  int off = d1.arc_count();
  std::vector<LinkDiagram::Quad> x = d1.crossings();
  for (auto q : d2.crossings()) {
    for (int& v : q) v += off;
    x.push_back(q);
  }
  Slot h1 = head_slot(d1, arc1), h2 = head_slot(d2, arc2);
  x[h1.c][h1.s] = arc2 + off;
  x[d1.crossing_count() + h2.c][h2.s] = arc1;
  return LinkDiagram::from_pd(x);
}

LinkDiagram sub_diagram(const LinkDiagram& d, const std::vector<int>& crossing_set) {
  std::vector<LinkDiagram::Quad> x;
  std::map<int, int> count;
  for (int c : crossing_set) {
    if (c < 0 || c >= d.crossing_count()) throw Error(ErrorKind::IndexOutOfRange, "crossing index");
    x.push_back(d.crossings()[c]);
    for (int v : d.crossings()[c]) count[v]++;
  }
  std::vector<int> cut;
  for (auto& [a, k] : count)
    if (k == 1) cut.push_back(a);
  if (cut.size() == 2) {
    for (auto& q : x)
      for (int& v : q)
        if (v == cut[1]) v = cut[0];
  } else if (!cut.empty()) {
    throw Error(ErrorKind::InconsistentArcs, "crossing set is not cut off by a band");
  }
  return LinkDiagram::from_pd(x);
}

// ---------- presentations ----------

std::string WirtingerPresentation::str() const {
  std::string s = "<";
  for (int g = 0; g < generators; ++g) {
    if (g) s += ",";
    s += FreeWord::gen(g).str();
  }
  s += " |";
  for (size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : " ") + relators[i].str();
  return s + ">";
}

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  if (!d.is_connected()) throw Error(ErrorKind::Disconnected, "diagram is not connected");
  WirtingerPresentation p;
  p.generators = d.strand_count();
  for (auto& c : d.strand_crossings()) {
    FreeWord o = FreeWord::gen(c.over, c.sign);
    p.relators.push_back(FreeWord::gen(c.out, -1) * o.inverse() * FreeWord::gen(c.in) * o);
  }
  return p;
}

AbelianGroup abelianization(const WirtingerPresentation& p) {
  int rows = static_cast<int>(p.relators.size()), cols = p.generators;
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols, 0));
  for (int r = 0; r < rows; ++r)
    for (int l : p.relators[r].letters) m[r][std::abs(l) - 1] += l > 0 ? 1 : -1;
  // Smith normal form by repeated gcd elimination.
  std::vector<long long> diag;
  int t = 0;
  while (t < rows && t < cols) {
    int pr = -1, pc = -1;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] && (pr < 0 || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) pr = r, pc = c;
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        long long f = m[r][t] / m[t][t];
        for (int c = t; c < cols; ++c) m[r][c] -= f * m[t][c];
        if (m[r][t]) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        long long f = m[t][c] / m[t][t];
        for (int r = t; r < rows; ++r) m[r][c] -= f * m[r][t];
        if (m[t][c]) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean)
        for (int r = t + 1; r < rows && clean; ++r)
          for (int c = t + 1; c < cols; ++c)
            if (m[r][c] % m[t][t]) {
              for (int k = t; k < cols; ++k) m[t][k] += m[r][k];
              clean = false;
              break;
            }
    }
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  AbelianGroup g;
  g.rank = cols - static_cast<int>(diag.size());
  for (long long v : diag)
    if (v > 1) g.torsion.push_back(v);
  return g;
}

std::pair<FreeWord, FreeWord> twist_region_meridians(const FreeWord& left, const FreeWord& right,
                                                     int half_twists) {
  auto m = braid_meridians(BraidWord(2, std::vector<int>(std::abs(half_twists), half_twists > 0 ? 1 : -1)),
                           {left, right});
  return {m[0], m[1]};
}

std::vector<FreeWord> braid_meridians(const BraidWord& b, std::vector<FreeWord> x) {
  if (static_cast<int>(x.size()) != b.strands()) throw Error(ErrorKind::SizeMismatch, "one meridian per strand");
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    FreeWord L = x[i], R = x[i + 1];
    if (l > 0) {
      x[i] = R.conjugated_by(L);
      x[i + 1] = L;
    } else {
      x[i] = R;
      x[i + 1] = L.conjugated_by(R.inverse());
    }
  }
  return x;
}

FreeWord schubert_word(const TwoBridgeForm& f) {
  if (f.p < 1 || std::gcd(f.p, f.q) != 1)
    throw Error(ErrorKind::NotCoprime, std::to_string(f.p) + "/" + std::to_string(f.q));
  long long q = ((f.q % f.p) + f.p) % f.p;
  // The sign rule needs q odd; q - p names the same knot.
  if (q % 2 == 0) q -= f.p;
  std::vector<int> l;
  for (long long i = 1; i < f.p; ++i) {
    long long fl = i * q >= 0 ? i * q / f.p : -((-i * q + f.p - 1) / f.p);
    int e = fl % 2 ? -1 : 1;
    int g = i % 2 ? 2 : 1;
    l.push_back(e * g);
  }
  return FreeWord(l);
}

WirtingerPresentation two_bridge_presentation(const TwoBridgeForm& f) {
  FreeWord w = schubert_word(f);
  FreeWord a = FreeWord::gen(0), b = FreeWord::gen(1);
  WirtingerPresentation p;
  p.generators = 2;
  p.relators.push_back(a * w * (f.p % 2 ? b : a).inverse() * w.inverse());
  return p;
}

TwoBridgeForm parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    size_t u = 0, v = 0;
    TwoBridgeForm f{std::stoll(text.substr(0, slash), &u), std::stoll(text.substr(slash + 1), &v)};
    if (u != slash || slash + 1 + v != text.size()) throw std::invalid_argument("junk");
    return f;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::MalformedToken, "expected p/q, got '" + text + "'");
  }
}

}  // namespace braidlift
