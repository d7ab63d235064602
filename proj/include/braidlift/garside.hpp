#ifndef BRAIDLIFT_GARSIDE_HPP
#define BRAIDLIFT_GARSIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidlift/braid.hpp"
#include "braidlift/permutation.hpp"

namespace braidlift {

// Left normal form Delta^k A_1 ... A_r in the classical Garside structure.
struct GarsideNormalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;

  int inf() const { return delta_power; }
  int sup() const { return delta_power + static_cast<int>(factors.size()); }
  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  BraidWord to_word() const;
  // "D^k | p1 ; p2 ; ..." with each factor as its one-line image list.
  std::string str() const;

  bool operator==(const GarsideNormalForm&) const = default;
};

GarsideNormalForm normal_form(const BraidWord& w);
bool equal(const BraidWord& u, const BraidWord& v);
bool is_identity(const BraidWord& w);

// Positive word of the permutation braid with the given permutation.
BraidWord permutation_braid(const Permutation& p);
GarsideNormalForm multiply(const GarsideNormalForm& a, const GarsideNormalForm& b);
GarsideNormalForm inverse(const GarsideNormalForm& a);

// c with c^-1 x c = y, searched through super summit sets. Gives up (nullopt) when the
// super summit set of x grows beyond max_states or n! simple elements are too many.
std::optional<BraidWord> find_conjugator(const BraidWord& x, const BraidWord& y,
                                         size_t max_states = 50000);

}  // namespace braidlift

#endif
