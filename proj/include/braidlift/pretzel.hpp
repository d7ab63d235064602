#ifndef BRAIDLIFT_PRETZEL_HPP
#define BRAIDLIFT_PRETZEL_HPP

#include <string>
#include <vector>

#include "braidlift/coloring.hpp"
#include "json.hpp"

namespace braidlift {

enum class PretzelKind { Liftable, NotLiftable, OutOfTheoremScope };
const char* pretzel_kind_name(PretzelKind k);

struct PretzelVerdict {
  PretzelKind kind = PretzelKind::OutOfTheoremScope;
  std::string rule;  // short tag naming the criterion that decided
  bool operator==(const PretzelVerdict&) const = default;
  nlohmann::json to_json() const;
};

// Nontrivial tricolorings of P(p,q,r) with p, q, r odd.
PretzelVerdict classify_3odd(int p, int q, int r);

// Exactly one even entry, m = 3. region_constant[i] says whether the coloring is constant
// on twist region i.
PretzelVerdict classify_3one_even(const std::vector<int>& q, const std::vector<bool>& region_constant);

// Nonconstant tricolorings, m odd and every entry odd.
PretzelVerdict classify_modd(const std::vector<int>& q);

// q[0] even and every other entry odd. Delegates to classify_3one_even when m = 3.
PretzelVerdict classify_m_even_first(const std::vector<int>& q, const std::vector<bool>& region_constant);

bool s4_colorable(const std::vector<int>& q);

// S_4 -> S_3 with kernel the Klein four group: (14) -> (23), (24) -> (13), (34) -> (12).
Permutation rho_s4_to_s3(const Permutation& p);

// Simple S_4-coloring of pretzel_diagram(q); InvalidColoring when it is not one.
PretzelVerdict classify_b4(const std::vector<int>& q, const GColoring& coloring);

// Whether the coloring agrees on the two bottom arcs of each twist region.
std::vector<bool> region_constancy(const std::vector<int>& q, const GColoring& coloring);

struct PretzelClass {
  GColoring coloring;  // class representative on pretzel_diagram(q)
  std::vector<bool> region_constant;
  PretzelVerdict verdict;
};

// Dispatches on the parities of q. Simple S_3- or S_4-colorings of pretzel_diagram(q).
PretzelVerdict classify_pretzel_coloring(const std::vector<int>& q, const GColoring& coloring);

// One entry per conjugacy class of simple S_n-colorings (n = 3 or 4), constant ones included.
std::vector<PretzelClass> classify_pretzel(const std::vector<int>& q, int n = 3);

}  // namespace braidlift

#endif
