#ifndef BRAIDLIFT_COLORING_HPP
#define BRAIDLIFT_COLORING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlift/braid.hpp"
#include "braidlift/link.hpp"
#include "braidlift/permutation.hpp"
#include "braidlift/verdict.hpp"

namespace braidlift {

enum class GroupTag { Sn, B3, PSL2Z };

// Strand -> group element. Only the vector matching `tag` is populated.
struct GColoring {
  GroupTag tag = GroupTag::Sn;
  std::vector<Permutation> perms;
  std::vector<BraidWord> braids;
  std::vector<Mat2> mats;
  bool simple = true;

  int size() const;
  bool is_constant() const;
  // Every crossing relation out = over^-s in over^s holds, and the simple flag is honest.
  bool is_valid(const LinkDiagram& d) const;
  std::string str() const;
};

// All S_n colorings of a connected diagram, constant ones included, in lexicographic order
// of strand images. `simple` restricts meridians to transpositions.
std::vector<GColoring> enumerate_colorings(const LinkDiagram& d, int n, bool simple = true);

// Indices of one representative per S_n-conjugacy class, in first-occurrence order.
std::vector<int> coloring_classes(const std::vector<GColoring>& colorings);

// ---------- Alexander polynomial ----------

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c) : low_(0), c_{c} { trim(); }
  static LaurentPoly monomial(std::int64_t c, int e);
  // Coefficients of t^0, t^1, ...
  static LaurentPoly from_coeffs(std::vector<std::int64_t> c, int low = 0);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int e) const;
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  // Exact quotient; throws InternalInconsistency when the division leaves a remainder.
  LaurentPoly exact_div(const LaurentPoly& o) const;
  // Remainder on division by a monic polynomial, after shifting both to start at t^0.
  LaurentPoly mod_monic(const LaurentPoly& m) const;
  std::int64_t eval(std::int64_t t) const;
  // Lowest exponent 0, leading coefficient positive.
  LaurentPoly normalized() const;

  std::string str() const;
  bool operator==(const LaurentPoly&) const = default;

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> c_;
};

// Alexander polynomial from the abelianized Fox Jacobian. Accepts Wirtinger presentations
// (one redundant relator) and deficiency-one presentations whose abelianization is Z with
// some generator mapping to a generator of Z.
LaurentPoly fox_alexander(const WirtingerPresentation& pres);

enum class Obstruction { Obstructed, Inconclusive };
// Obstructed iff t^2 - t + 1 does not divide delta.
Obstruction trefoil_divisibility_obstruction(const LaurentPoly& delta);

// ---------- two-bridge decision ----------

// Exact decision for a presentation <a,b | r> from two_bridge_presentation: the tricoloring
// (images of a and b) lifts iff r is trivial in B_3 after a = s1, b = s2.
LiftVerdict two_bridge_lift_decision(const WirtingerPresentation& pres, const Permutation& a,
                                     const Permutation& b);

// ---------- twist regions ----------

using Int128 = __int128;
std::string to_string(Int128 v);

struct TwistRecurrence {
  int n = 1;
  std::int64_t k = 0;
  Int128 A = 1, B = 1, C = 1, D = 1;
};
// A_1 = B_1 = C_1 = D_1 = 1, A_0 = B_0 = C_0 = D_0 = 0 and
// A_{n+1} = (1-k^2)A_n + B_n + 1, B_{n+1} = B_n + 1 - k^2 A_n,
// C_{n+1} = (1+k^2)C_n + D_n + 1, D_{n+1} = D_n + 1 + k^2 C_n.
TwistRecurrence twist_recurrences(int n, std::int64_t k);

struct Vec2 {
  std::int64_t x = 0, y = 0;
  bool operator==(const Vec2&) const = default;
  auto operator<=>(const Vec2&) const = default;
};
std::int64_t pairing(const Vec2& v, const Vec2& w);  // det(v, w)
Vec2 transvect(const Vec2& v, const Vec2& w, int e = 1);  // T_v^e(w) = w + e<v,w>v
Mat2 transvection(const Vec2& v, int e = 1);
// Sign representative: first nonzero entry positive.
Vec2 projective(const Vec2& v);
bool is_primitive(const Vec2& v);

struct Label {
  Vec2 v;
  int eps = 1;
  bool operator==(const Label&) const = default;
};

enum class StrandDirection { Same, Opposite };

// Labels at the top of a twist region. A positive half twist sends (u, v) to (T_u^{e_u}(v), u);
// negative half twists apply the inverse move. Same: both strands run upward. Opposite: the
// bottom-left strand runs upward and the bottom-right one downward; the downward strand's
// handedness is flipped on the way through.
std::pair<Label, Label> twist_region_propagate(const Label& bottom_left, const Label& bottom_right,
                                               int half_twists, StrandDirection dir = StrandDirection::Same);

// (1,0) -> (12), (0,1) -> (23), (1,1) -> (13) by reduction mod 2.
Permutation tricolor_of_vector(const Vec2& v);
// Canonical representative of a mod-2 class of a transposition of S_3.
Vec2 class_vector(const Permutation& t);

// ---------- B_3 lifting ----------

struct LiftSearchResult {
  LiftVerdict verdict;
  std::vector<Label> labelling;  // per strand when Liftable
  GColoring psl;                 // per strand when Liftable
  GColoring b3;                  // per strand when Liftable
};

// Bounded search for a simple B_3-coloring lifting the tricoloring. Never returns
// NotLiftable; see decide_lift for the exact routes.
LiftSearchResult b3_lift_search(const LinkDiagram& d, const GColoring& tricoloring, int bound);

// Primitive vector v and handedness e with M = +-T_v^e; NotATransvection otherwise.
Label transvection_label(const Mat2& m);
// B_3 element with PSL image m, conjugate to s1^{+-1}; NotATransvection if there is none.
BraidWord b3_transvection_lift(const Mat2& m);
// Lifts every strand; checks the chosen strand first and all relations in B_3 afterwards.
GColoring lift_to_b3_witness(const LinkDiagram& d, const GColoring& psl, int meridian_choice = 0);

// ---------- connected sums ----------

// Restricts a coloring to the two summands cut off by the crossing set (see sub_diagram).
std::pair<GColoring, GColoring> connect_sum_split(const LinkDiagram& d, const std::vector<int>& first_summand,
                                                  const GColoring& c);

}  // namespace braidlift

#endif
