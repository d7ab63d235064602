#ifndef BRAIDLIFT_TEST_UTIL_HPP
#define BRAIDLIFT_TEST_UTIL_HPP

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "braidlift/link.hpp"
#include "braidlift/permutation.hpp"

// Independent oracles shared by the test files.

// Fox 3-colorings: 3^(strands - rank) of 2*over - in - out = 0 over GF(3).
inline long long fox3_count(const braidlift::LinkDiagram& d) {
  int n = d.strand_count();
  std::vector<std::vector<int>> m;
  for (auto& c : d.strand_crossings()) {
    std::vector<int> row(n, 0);
    row[c.over] += 2;
    row[c.in] += 2;
    row[c.out] += 2;
    for (int& v : row) v %= 3;
    m.push_back(row);
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[r][col]) piv = r;
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    int inv = m[rank][col];  // 1 and 2 are self-inverse mod 3
    for (int& v : m[rank]) v = v * inv % 3;
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
      if (r != rank && m[r][col]) {
        int f = m[r][col];
        for (int k = 0; k < n; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % 3 + 3) % 3;
      }
    ++rank;
  }
  long long out = 1;
  for (int i = 0; i < n - rank; ++i) out *= 3;
  return out;
}

// Homomorphisms sending every generator to a transposition of S3, by brute force.
inline long long s3_transposition_homs(const braidlift::WirtingerPresentation& p) {
  using braidlift::Permutation;
  std::vector<Permutation> t{Permutation::transposition(3, 1, 2), Permutation::transposition(3, 1, 3),
                             Permutation::transposition(3, 2, 3)};
  std::vector<int> choice(p.generators, 0);
  long long count = 0;
  while (true) {
    std::vector<Permutation> img;
    for (int c : choice) img.push_back(t[c]);
    bool ok = true;
    for (auto& r : p.relators)
      if (!braidlift::evaluate(r, img, Permutation(3)).is_identity()) {
        ok = false;
        break;
      }
    count += ok;
    int k = 0;
    while (k < p.generators && ++choice[k] == 3) choice[k++] = 0;
    if (k == p.generators) break;
  }
  return count;
}

// name -> text column of a fixture file, skipping comments.
inline std::map<std::string, std::string> load_fixture(const std::string& file) {
  std::ifstream in(std::string(BRAIDLIFT_FIXTURES) + "/" + file);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

#endif
