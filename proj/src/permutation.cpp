#include "braidlift/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "braidlift/errors.hpp"

namespace braidlift {

Permutation::Permutation(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Permutation Permutation::from_images(const std::vector<int>& one_based) {
  Permutation p;
  int n = static_cast<int>(one_based.size());
  p.img_.resize(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int v = one_based[i] - 1;
    if (v < 0 || v >= n || seen[v]) throw Error(ErrorKind::MalformedToken, "not a bijection");
    seen[v] = true;
    p.img_[i] = v;
  }
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw Error(ErrorKind::IndexOutOfRange, "bad transposition");
  Permutation p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  Permutation p(n);
  std::vector<bool> seen(n, false);
  for (int x : points) {
    if (x < 1 || x > n) throw Error(ErrorKind::IndexOutOfRange, "cycle point out of range");
    if (seen[x - 1]) throw Error(ErrorKind::MalformedToken, "repeated point in cycle");
    seen[x - 1] = true;
  }
  for (size_t k = 0; k < points.size(); ++k)
    p.img_[points[k] - 1] = points[(k + 1) % points.size()] - 1;
  return p;
}

Permutation Permutation::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> cyc;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw Error(ErrorKind::MalformedToken, "empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorKind::MalformedToken, "expected '(' in " + text);
    ++i;
    std::vector<int> c;
    while (true) {
      skip();
      if (i >= text.size()) throw Error(ErrorKind::MalformedToken, "unclosed cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorKind::MalformedToken, "bad character in " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw Error(ErrorKind::MalformedToken, "point too large");
        ++i;
      }
      c.push_back(v);
    }
    cyc.push_back(std::move(c));
    skip();
  }
  int need = 0;
  for (auto& c : cyc)
    for (int v : c) need = std::max(need, v);
  if (n == 0) n = std::max(need, 1);
  if (need > n) throw Error(ErrorKind::IndexOutOfRange, "point exceeds degree in " + text);
  Permutation p(n);
  for (auto& c : cyc) {
    if (c.size() <= 1) continue;
    p = p * cycle(n, c);
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[i] = img_[i] + 1;
  return r;
}

Permutation Permutation::operator*(const Permutation& q) const {
  int n = std::max(degree(), q.degree());
  Permutation a = extended(n), b = q.extended(n);
  Permutation r(n);
  for (int i = 0; i < n; ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

Permutation Permutation::extended(int n) const {
  if (n <= degree()) return *this;
  Permutation r(n);
  std::copy(img_.begin(), img_.end(), r.img_.begin());
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

bool Permutation::is_transposition() const {
  auto c = cycles();
  return c.size() == 1 && c[0].size() == 2;
}

int Permutation::sign() const {
  int s = 1;
  for (auto& c : cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

int Permutation::support_max() const {
  for (int i = degree() - 1; i >= 0; --i)
    if (img_[i] != i) return i + 1;
  return 0;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Permutation::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (auto& c : cs) {
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

std::vector<std::vector<int>> orbits(int n, const std::vector<Permutation>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& g : gens)
    for (int i = 0; i < std::min(n, g.degree()); ++i) {
      int a = find(i), b = find(g.images0()[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i + 1);
  }
  return out;
}

}  // namespace braidlift
