#include "braidlift/certificate.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidlift/garside.hpp"

namespace braidlift {

const char* unlink_kind_name(UnlinkKind k) {
  return k == UnlinkKind::CompletelySplitStandardUnlink ? "CompletelySplitStandardUnlink" : "CompletelySplitUnlink";
}

std::optional<std::vector<ChainBlock>> chain_blocks(const BraidWord& t) {
  std::vector<ChainBlock> out;
  int last = -1;
  for (int l : t.letters()) {
    int g = std::abs(l);
    int s = l > 0 ? 1 : -1;
    if (!out.empty() && g == last + 1) {
      out.back().signs.push_back(s);
    } else {
      if (g <= last + 1) return std::nullopt;
      out.push_back({g, {s}});
    }
    last = g;
  }
  return out;
}

bool verify_certificate(const BraidWord& b, const SplitUnlinkCertificate& c) {
  if (b.strands() != c.conjugator.strands() || b.strands() != c.canonical_target.strands()) return false;
  auto blocks = chain_blocks(c.canonical_target);
  if (!blocks) return false;
  if (c.kind == UnlinkKind::CompletelySplitStandardUnlink)
    for (auto& blk : *blocks)
      for (int s : blk.signs)
        if (s != blk.signs.front()) return false;
  return equal(conjugate(c.canonical_target, c.conjugator), b);
}

std::vector<int> self_writhes(const BraidWord& b) {
  int n = b.strands();
  auto cyc = orbits(n, {forget(b)});
  std::vector<int> comp(n);
  for (size_t c = 0; c < cyc.size(); ++c)
    for (int s : cyc[c]) comp[s - 1] = static_cast<int>(c);
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[i] = i;
  std::vector<int> w(cyc.size(), 0);
  for (int l : b.letters()) {
    int p = std::abs(l) - 1;
    if (comp[at[p]] == comp[at[p + 1]]) w[comp[at[p]]] += l > 0 ? 1 : -1;
    std::swap(at[p], at[p + 1]);
  }
  return w;
}

namespace {

// All sign sequences of length len with the given number of +1 entries, plus-first order first.
std::vector<std::vector<int>> sign_patterns(int len, int plus) {
  std::vector<int> v(len, -1);
  std::fill(v.begin(), v.begin() + plus, 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::prev_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

std::optional<SplitUnlinkCertificate> certify_split(const BraidWord& b) {
  int n = b.strands();
  auto cyc = orbits(n, {forget(b)});
  auto wr = self_writhes(b);
  std::vector<std::vector<std::vector<int>>> choices;
  bool standard = true;
  for (size_t c = 0; c < cyc.size(); ++c) {
    int len = static_cast<int>(cyc[c].size());
    int w = wr[c];
    if (std::abs(w) > len - 1 || (len - 1 + w) % 2 != 0) return std::nullopt;
    int plus = (len - 1 + w) / 2;
    if (plus != 0 && plus != len - 1) standard = false;
    choices.push_back(sign_patterns(len - 1, plus));
  }
  // Mixed-sign chains with different orderings need not be conjugate, so every ordering is tried.
  std::vector<size_t> idx(choices.size(), 0);
  for (int budget = 64; budget > 0; --budget) {
    std::vector<int> letters;
    int pos = 1;
    for (size_t c = 0; c < choices.size(); ++c) {
      const auto& signs = choices[c][idx[c]];
      for (size_t k = 0; k < signs.size(); ++k) letters.push_back(signs[k] * (pos + static_cast<int>(k)));
      pos += static_cast<int>(signs.size()) + 1;
    }
    BraidWord target(n, letters);
    if (auto conj = find_conjugator(target, b)) {
      SplitUnlinkCertificate cert{standard ? UnlinkKind::CompletelySplitStandardUnlink : UnlinkKind::CompletelySplitUnlink,
                                  *conj, target};
      if (verify_certificate(b, cert)) return cert;
    }
    size_t c = 0;
    while (c < idx.size() && ++idx[c] == choices[c].size()) idx[c++] = 0;
    if (c == idx.size()) break;
  }
  return std::nullopt;
}

SplitUnlinkCertificate band_certificate(int n, int i, int sign, const BraidWord& g) {
  return {UnlinkKind::CompletelySplitStandardUnlink, g, BraidWord::gen(n, i, sign)};
}

}  // namespace braidlift
