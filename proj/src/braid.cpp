#include "braidlift/braid.hpp"

#include <cctype>
#include <sstream>

#include "braidlift/errors.hpp"

namespace braidlift {

namespace {

void check_letter(int n, int l) {
  if (l == 0 || std::abs(l) >= n)
    throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(l) + " not in B_" + std::to_string(n));
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "strand count must be positive");
  for (int l : letters_) check_letter(n_, l);
}

BraidWord BraidWord::gen(int n, int i, int sign) { return BraidWord(n, {sign > 0 ? i : -i}); }

BraidWord BraidWord::delta(int n) {
  std::vector<int> w;
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i) w.push_back(i);
  return BraidWord(n, std::move(w));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  BraidWord r = *this;
  r *= o;
  return r;
}

BraidWord& BraidWord::operator*=(const BraidWord& o) {
  if (o.n_ != n_) throw Error(ErrorKind::StrandMismatch, "multiplying braids on different strand counts");
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

BraidWord BraidWord::inverse() const {
  BraidWord r(n_);
  r.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& l : r.letters_) l = -l;
  return r;
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord r(n_);
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord r(n_);
  for (int l : letters_) {
    if (!r.letters_.empty() && r.letters_.back() == -l)
      r.letters_.pop_back();
    else
      r.letters_.push_back(l);
  }
  return r;
}

BraidWord BraidWord::embedded(int m) const {
  if (m < n_) throw Error(ErrorKind::StrandMismatch, "cannot embed into fewer strands");
  BraidWord r = *this;
  r.n_ = m;
  return r;
}

BraidWord BraidWord::shifted(int offset, int m) const {
  BraidWord r(m);
  for (int l : letters_) {
    int v = l > 0 ? l + offset : l - offset;
    check_letter(m, v);
    r.letters_.push_back(v);
  }
  return r;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

BraidWord parse_braid(const std::string& text, int n) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::string t = tok;
    tok.clear();
    int sign = 1;
    size_t i = 0;
    if (t[0] == 's' || t[0] == 'S') {
      i = 1;
      auto caret = t.find('^');
      std::string exp;
      if (caret != std::string::npos) {
        exp = t.substr(caret + 1);
        t = t.substr(0, caret);
        if (exp == "-1")
          sign = -1;
        else if (exp != "1" && exp != "+1")
          throw Error(ErrorKind::MalformedToken, "bad exponent in token");
      }
    } else if (t[0] == '-') {
      sign = -1;
      i = 1;
    } else if (t[0] == '+') {
      i = 1;
    }
    if (i >= t.size()) throw Error(ErrorKind::MalformedToken, "empty token");
    long v = 0;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw Error(ErrorKind::MalformedToken, "bad token '" + t + "'");
      v = v * 10 + (t[i] - '0');
      if (v > 100000) throw Error(ErrorKind::IndexOutOfRange, "generator index too large");
    }
    if (v < 1 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "generator " + std::to_string(v) + " not in B_" + std::to_string(n));
    out.push_back(sign * static_cast<int>(v));
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
      flush();
    else
      tok.push_back(ch);
  }
  flush();
  return BraidWord(n, std::move(out));
}

Permutation forget(const BraidWord& w) {
  int n = w.strands();
  std::vector<int> pos(n);  // pos[s] = current position of the strand that started at s
  std::vector<int> at(n);   // at[p] = strand currently at position p
  for (int i = 0; i < n; ++i) pos[i] = at[i] = i;
  for (int l : w.letters()) {
    int p = std::abs(l) - 1;
    std::swap(at[p], at[p + 1]);
    pos[at[p]] = p;
    pos[at[p + 1]] = p + 1;
  }
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = pos[i] + 1;
  return Permutation::from_images(img);
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  if (w.strands() != g.strands()) throw Error(ErrorKind::StrandMismatch, "conjugate");
  return g.inverse() * w * g;
}

BraidWord cable(const BraidWord& tubular, const std::vector<BraidWord>& interiors) {
  int m = tubular.strands();
  if (static_cast<int>(interiors.size()) != m) throw Error(ErrorKind::SizeMismatch, "need one interior per tube");
  int l = interiors.empty() ? 1 : interiors[0].strands();
  for (auto& b : interiors)
    if (b.strands() != l) throw Error(ErrorKind::SizeMismatch, "interiors must share a strand count");
  int N = m * l;
  BraidWord out(N);
  for (int i = 0; i < m; ++i) out *= interiors[i].shifted(i * l, N);
  for (int letter : tubular.letters()) {
    int k = std::abs(letter);
    int p = (k - 1) * l + 1;  // first position of the left block
    std::vector<int> cross;
    for (int s = l - 1; s >= 0; --s)
      for (int t = 0; t < l; ++t) cross.push_back(p + s + t);
    BraidWord x(N, cross);
    out *= letter > 0 ? x : x.inverse();
  }
  return out;
}

Permutation cable_permutation(const Permutation& tube, const std::vector<Permutation>& inner) {
  int m = tube.degree();
  int l = inner.empty() ? 1 : inner[0].degree();
  std::vector<int> img(m * l);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= l; ++j) img[(i - 1) * l + (j - 1)] = (tube(i) - 1) * l + inner[i - 1](j);
  return Permutation::from_images(img);
}

Mat2 Mat2::projective() const {
  bool flip = a < 0 || (a == 0 && (b < 0 || (b == 0 && (c < 0 || (c == 0 && d < 0)))));
  return flip ? negated() : *this;
}

Mat2 psl2z_generator(int i, int sign) {
  if (i == 1) return sign > 0 ? Mat2{1, 1, 0, 1} : Mat2{1, -1, 0, 1};
  if (i == 2) return sign > 0 ? Mat2{1, 0, -1, 1} : Mat2{1, 0, 1, 1};
  throw Error(ErrorKind::IndexOutOfRange, "B_3 has generators 1 and 2 only");
}

Mat2 psl2z_image(const BraidWord& w) {
  if (w.strands() != 3) throw Error(ErrorKind::StrandMismatch, "psl2z_image needs a 3-braid");
  Mat2 m;
  for (int l : w.letters()) m = m * psl2z_generator(std::abs(l), l > 0 ? 1 : -1);
  return m.projective();
}

}  // namespace braidlift
