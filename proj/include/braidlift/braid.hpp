#ifndef BRAIDLIFT_BRAID_HPP
#define BRAIDLIFT_BRAID_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "braidlift/permutation.hpp"

namespace braidlift {

// Word in the Artin generators of B_n. Letter +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int n, std::vector<int> letters = {});

  static BraidWord identity(int n) { return BraidWord(n); }
  static BraidWord gen(int n, int i, int sign = 1);
  // Positive half twist Delta.
  static BraidWord delta(int n);

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord& operator*=(const BraidWord& o);
  BraidWord inverse() const;
  BraidWord pow(int k) const;
  BraidWord freely_reduced() const;
  // Same word read in B_m, m >= n.
  BraidWord embedded(int m) const;
  // Every generator index shifted up by `offset`, read in B_m.
  BraidWord shifted(int offset, int m) const;

  // "1 2 -1"; the empty word prints as "".
  std::string str() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

// Tokens `k`, `-k`, `sK`, `sK^-1`, separated by whitespace or commas.
BraidWord parse_braid(const std::string& text, int n);

Permutation forget(const BraidWord& w);
int exponent_sum(const BraidWord& w);

// g^-1 w g
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// m blocks of l strands; interior i acts on block i, then the blocks follow the tubular braid.
BraidWord cable(const BraidWord& tubular, const std::vector<BraidWord>& interiors);

// Block composition of forget for a cable: strand (i,j) goes to (phi(i), chi_i(j)).
Permutation cable_permutation(const Permutation& tube, const std::vector<Permutation>& inner);

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const { return {d, -b, -c, a}; }
  Mat2 negated() const { return {-a, -b, -c, -d}; }
  // Representative modulo sign: first nonzero entry positive.
  Mat2 projective() const;
  bool is_pm_identity() const { return b == 0 && c == 0 && ((a == 1 && d == 1) || (a == -1 && d == -1)); }
  bool operator==(const Mat2&) const = default;
};

// sigma_1 -> [[1,1],[0,1]], sigma_2 -> [[1,0],[-1,1]], returned modulo sign.
Mat2 psl2z_image(const BraidWord& w);
Mat2 psl2z_generator(int i, int sign);

}  // namespace braidlift

#endif
