#ifndef BRAIDLIFT_CERTIFICATE_HPP
#define BRAIDLIFT_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidlift/braid.hpp"

namespace braidlift {

enum class UnlinkKind { CompletelySplitUnlink, CompletelySplitStandardUnlink };

const char* unlink_kind_name(UnlinkKind k);

// conjugator^-1 * canonical_target * conjugator is the certified braid.
struct SplitUnlinkCertificate {
  UnlinkKind kind = UnlinkKind::CompletelySplitStandardUnlink;
  BraidWord conjugator;
  BraidWord canonical_target;
};

struct ChainBlock {
  int first = 1;           // first strand of the block
  std::vector<int> signs;  // one sign per generator first .. first+size-2
};

// Splits a word into disjoint chains sigma_a^e sigma_{a+1}^e ... ; nullopt if it has another shape.
std::optional<std::vector<ChainBlock>> chain_blocks(const BraidWord& t);

bool verify_certificate(const BraidWord& b, const SplitUnlinkCertificate& c);

// Signed count of crossings between strands of the same closed component, one entry per
// cycle of forget(b) (fixed points included), ordered by least strand.
std::vector<int> self_writhes(const BraidWord& b);

// Builds the canonical chain target suggested by b's components and searches for a conjugator.
std::optional<SplitUnlinkCertificate> certify_split(const BraidWord& b);

// Certificate for g^-1 sigma_i^sign g, available without search.
SplitUnlinkCertificate band_certificate(int n, int i, int sign, const BraidWord& g);

}  // namespace braidlift

#endif
