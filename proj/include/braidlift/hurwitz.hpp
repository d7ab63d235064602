#ifndef BRAIDLIFT_HURWITZ_HPP
#define BRAIDLIFT_HURWITZ_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidlift/braid.hpp"
#include "braidlift/certificate.hpp"
#include "braidlift/permutation.hpp"
#include "braidlift/verdict.hpp"
#include "json.hpp"

namespace braidlift {

struct PermutationSystem {
  int n = 0;
  std::vector<Permutation> entries;
  Permutation target;  // expected left-to-right product; identity when default constructed

  PermutationSystem() = default;
  PermutationSystem(int degree, std::vector<Permutation> e);

  Permutation product() const;
  bool product_is_target() const;
  bool is_transitive() const;
  std::string str() const;
  bool operator==(const PermutationSystem& o) const { return n == o.n && entries == o.entries; }
};

// "perm-system 4: (1 2),(3 4),(1 3)"; the "perm-system" keyword and the degree are optional.
PermutationSystem parse_permutation_system(const std::string& text);

struct BraidSystem {
  int n = 0;
  std::vector<BraidWord> entries;
  std::vector<std::optional<SplitUnlinkCertificate>> certificates;

  BraidSystem() = default;
  explicit BraidSystem(int strands) : n(strands) {}

  BraidWord product() const;
  // "braid-system 4: [1],[3],[2 1 -2]"
  std::string str() const;
};

BraidSystem parse_braid_system(const std::string& text);

enum class MoveKind { Slide, DeletePair, InsertPair, Fission, Fusion };

// Positions are 1-based. Slide(k, dir) acts on entries k, k+1.
// DeletePair/InsertPair carry the pair value, the braid lifting its first member and that braid's certificate.
// Fission(position, factors) replaces one entry by the factors; Fusion is its inverse.
struct Move {
  MoveKind kind = MoveKind::Slide;
  int position = 1;
  int direction = 1;
  std::vector<Permutation> perms;
  std::optional<BraidWord> braid;
  std::optional<SplitUnlinkCertificate> certificate;

  std::string str() const;
};

struct MoveTrace {
  std::vector<Move> moves;
  MoveTrace inverse() const;
  // Slides only, as "s5 s4^-1 ..."
  std::string slide_string() const;
};

PermutationSystem apply_slide(const PermutationSystem& s, int k, int dir, MoveTrace* trace = nullptr);
BraidSystem apply_slide(const BraidSystem& s, int k, int dir, MoveTrace* trace = nullptr);

PermutationSystem apply_move(const PermutationSystem& s, const Move& m);
// Fission is not defined on braids. Fusion searches a certificate for the fused entry.
BraidSystem apply_move(const BraidSystem& s, const Move& m);

PermutationSystem replay(PermutationSystem s, const MoveTrace& t);
BraidSystem replay(BraidSystem s, const MoveTrace& t);

struct StandardizeResult {
  PermutationSystem system;
  MoveTrace trace;
};

StandardizeResult standardize_transpositions(const PermutationSystem& ps);
bool is_standard_form(const PermutationSystem& ps);

// alpha_k = sigma_k alpha_{k-1} sigma_k^-1 with alpha_1 = sigma_1; lifts (1, k+1).
BraidWord alpha_braid(int n, int k);
// (sigma_r ... sigma_{k-2}) sigma_{k-1} (sigma_r ... sigma_{k-2})^-1; lifts (r, k).
BraidWord eta_braid(int n, int r, int k);

struct LiftResult {
  BraidSystem system;
  // Forward trace taking the input to the empty system; its inverse rebuilds `system` from the empty one.
  MoveTrace trace;
};

LiftResult lift_permutation_system(const PermutationSystem& ps);

struct VerificationReport {
  bool forget_match = false;
  bool identity_product = false;
  bool certificates_valid = false;
  std::vector<std::string> entry_status;

  bool pass() const { return forget_match && identity_product && certificates_valid; }
  nlohmann::json to_json() const;
};

VerificationReport verify_braid_system(const BraidSystem& bs, const PermutationSystem& ps);

// signs[j][c] is the sign of the c-th nontrivial cycle of entry j.
struct SignAssignment {
  std::vector<std::vector<int>> signs;
};

// nullopt means no assignment exists, a proof of smooth non-liftability.
// Otherwise the lexicographically least assignment, reading + before -.
std::optional<SignAssignment> smooth_obstruction(const PermutationSystem& ps);
bool satisfies_sign_condition(const PermutationSystem& ps, const SignAssignment& a);

struct CyclicLift {
  std::optional<BraidSystem> system;
  std::string obstruction;
};

CyclicLift lift_cyclic_cover(int n);

std::vector<int> cover_genus(const PermutationSystem& ps);

enum class TorsionVerdict { Obstructed, Inconclusive };
TorsionVerdict torsion_obstruction(bool relator_check, const Permutation& image);

enum class KleinCase { OrientationDouble, SelfCover, Disconnected };
LiftVerdict klein_bottle_2fold(KleinCase c);

}  // namespace braidlift

#endif
