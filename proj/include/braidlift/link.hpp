#ifndef BRAIDLIFT_LINK_HPP
#define BRAIDLIFT_LINK_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidlift/braid.hpp"

namespace braidlift {

// Freely reduced word in a free group. Letter +k is generator k-1, -k its inverse.
struct FreeWord {
  std::vector<int> letters;

  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& l);

  static FreeWord gen(int g, int e = 1);
  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  FreeWord pow(int k) const;
  // y^-1 x y
  FreeWord conjugated_by(const FreeWord& y) const;
  bool empty() const { return letters.empty(); }
  int exponent_sum() const;
  // a, b, c, ... with capitals for inverses; x1, x2, ... past 26 generators.
  std::string str() const;

  bool operator==(const FreeWord&) const = default;
};

template <class T>
T evaluate(const FreeWord& w, const std::vector<T>& images, const T& one) {
  T r = one;
  for (int l : w.letters) r = r * (l > 0 ? images[l - 1] : images[-l - 1].inverse());
  return r;
}

// Crossing relation x_out = x_over^{-s} x_in x_over^{s}, strand ids 0-based.
struct StrandCrossing {
  int over = 0, in = 0, out = 0, sign = 1;
};

// Oriented link diagram. Arcs are the edges of the 4-valent graph, labelled 1..arc_count()
// canonically; strands are the Wirtinger arcs (over-arcs), numbered from 0.
class LinkDiagram {
 public:
  using Quad = std::array<int, 4>;

  LinkDiagram() = default;
  static LinkDiagram unknot();
  // PD quadruples: slot 0 is the incoming under-arc, slots run counterclockwise.
  static LinkDiagram from_pd(const std::vector<Quad>& x, int free_loops = 0);
  // Slots 0 and 2 carry the under-strand in either direction; components are oriented
  // by traversal and quadruples rotated into PD form.
  static LinkDiagram from_unoriented(const std::vector<Quad>& x, int free_loops = 0);

  int crossing_count() const { return static_cast<int>(x_.size()); }
  int arc_count() const { return static_cast<int>(component_.size()); }
  int component_count() const { return components_; }
  int strand_count() const { return strands_; }
  int free_loops() const { return free_loops_; }

  const std::vector<Quad>& crossings() const { return x_; }
  int sign(int c) const { return sc_[c].sign; }
  const std::vector<StrandCrossing>& strand_crossings() const { return sc_; }
  int strand_of_arc(int arc) const { return strand_[arc - 1]; }
  int component_of_arc(int arc) const { return component_[arc - 1]; }
  int next_arc(int arc) const { return next_[arc - 1]; }
  // Label the input used for an arc, mapped to its canonical label.
  int canonical_label(int input_label) const { return relabel_.at(input_label); }

  bool is_connected() const;
  int writhe() const;
  LinkDiagram mirror() const;
  std::string pd_string() const;

 private:
  static LinkDiagram build(const std::vector<Quad>& x, int free_loops, bool pd_oriented);

  std::vector<Quad> x_;
  std::vector<StrandCrossing> sc_;
  std::vector<int> strand_, component_, next_;
  std::map<int, int> relabel_;
  int components_ = 0, strands_ = 0, free_loops_ = 0;
};

// `PD[X[a,b,c,d],...]`, optionally with `U` entries for crossingless circles, or `U` alone.
LinkDiagram parse_pd(const std::string& text);

// Standard closure of a braid; sigma_i is a positive crossing with strands oriented upward.
LinkDiagram braid_closure(const BraidWord& b);

struct PretzelLayout {
  // Per twist region: crossing indices bottom to top, and the arcs entering at the bottom
  // and leaving at the top (left, right).
  std::vector<std::vector<int>> crossings;
  std::vector<std::array<int, 2>> bottom, top;
};

LinkDiagram pretzel_diagram(const std::vector<int>& q);
PretzelLayout pretzel_layout(const std::vector<int>& q);
bool is_pretzel_knot(const std::vector<int>& q);

// Connected sum along arc1 of d1 and arc2 of d2. Crossings of d1 come first.
LinkDiagram connect_sum(const LinkDiagram& d1, int arc1, const LinkDiagram& d2, int arc2);
// The crossings listed, with the two arcs leaving the set glued back together.
LinkDiagram sub_diagram(const LinkDiagram& d, const std::vector<int>& crossing_set);

struct WirtingerPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  int basepoint = 0;

  std::string str() const;
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

struct AbelianGroup {
  int rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1
};
AbelianGroup abelianization(const WirtingerPresentation& p);

// Meridians at the top of a twist region on two upward strands with bottom meridians
// (left, right). Positive half twists: (L, R) -> (L^-1 R L, L).
std::pair<FreeWord, FreeWord> twist_region_meridians(const FreeWord& left, const FreeWord& right,
                                                     int half_twists);
// Same rule applied letter by letter to a braid on n upward strands.
std::vector<FreeWord> braid_meridians(const BraidWord& b, std::vector<FreeWord> bottom);

struct TwoBridgeForm {
  long long p = 1, q = 1;
};

// w = b^e1 a^e2 b^e3 ... of length p-1 with e_i = (-1)^floor(i q / p), after replacing an
// even q by q - p.
FreeWord schubert_word(const TwoBridgeForm& f);
// Generators a (0), b (1); relator a w b^-1 w^-1 for odd p, a w a^-1 w^-1 for even p.
WirtingerPresentation two_bridge_presentation(const TwoBridgeForm& f);
TwoBridgeForm parse_fraction(const std::string& text);

}  // namespace braidlift

#endif
