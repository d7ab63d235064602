#ifndef BRAIDLIFT_PERMUTATION_HPP
#define BRAIDLIFT_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace braidlift {

// Permutation of {1..n}. Products read left to right: (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);

  static Permutation from_images(const std::vector<int>& one_based);
  static Permutation transposition(int n, int a, int b);
  static Permutation cycle(int n, const std::vector<int>& points);
  // Cycle notation such as "(1 2)(3 4)", "(1,4,3)" or "()". n = 0 infers the degree.
  static Permutation parse(const std::string& text, int n = 0);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1] + 1; }
  const std::vector<int>& images0() const { return img_; }
  std::vector<int> images() const;

  Permutation operator*(const Permutation& q) const;
  Permutation inverse() const;
  // g^-1 * this * g
  Permutation conjugated_by(const Permutation& g) const;
  Permutation extended(int n) const;

  bool is_identity() const;
  bool is_transposition() const;
  int sign() const;
  int support_max() const;
  // Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  std::vector<int> cycle_type() const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

// Orbits of the group generated by the given permutations, as sorted point lists.
std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens);

}  // namespace braidlift

#endif
