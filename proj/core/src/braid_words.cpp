#include "dcs/braid_words.hpp"

#include <algorithm>
#include <sstream>

#include "dcs/projective.hpp"

namespace dcs {

namespace {

void push_reduced(std::vector<Letter>& w, Letter l) {
  if (!w.empty() && w.back().gen == l.gen && w.back().exp == -l.exp) {
    w.pop_back();
  } else {
    w.push_back(l);
  }
}

void check_letter(const Letter& l) {
  if (l.gen < 1 || (l.exp != 1 && l.exp != -1)) {
    throw Error(ErrorKind::OutOfDomain, "free word letter out of range");
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    check_letter(l);
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::gen(int i, int exp) { return FreeWord({Letter{i, exp}}); }

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back({it->gen, -it->exp});
  }
  return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& o) {
  for (const auto& l : o.letters_) push_reduced(letters_, l);
  return *this;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord out = *this;
  out *= o;
  return out;
}

std::vector<std::int64_t> FreeWord::abelianized(int n) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
  for (const auto& l : letters_) {
    if (l.gen > n) throw Error(ErrorKind::OutOfDomain, "generator beyond n");
    out[static_cast<std::size_t>(l.gen - 1)] += l.exp;
  }
  return out;
}

FreeWord FreeWord::cyclic_normal() const {
  std::vector<Letter> w = letters_;
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().exp == -w.back().exp) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return FreeWord{};
  auto key = [](const Letter& l) { return std::pair(l.gen, l.exp); };
  std::vector<Letter> best = w;
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::vector<Letter> rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(),
                                     [&](const Letter& a, const Letter& b) { return key(a) < key(b); })) {
      best = std::move(rot);
    }
  }
  FreeWord out;
  out.letters_ = std::move(best);
  return out;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream o;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) o << ' ';
    o << 'x' << letters_[k].gen;
    if (letters_[k].exp < 0) o << "^-1";
  }
  return o.str();
}

BraidWord BraidWord::sigma(int i, int exp) {
  if (i < 1) throw Error(ErrorKind::OutOfDomain, "sigma index must be >= 1");
  return BraidWord({BraidLetter{BraidLetter::Kind::Sigma, i, i + 1, exp}});
}

BraidWord BraidWord::alpha(int i, int j, int exp) {
  if (i < 1 || j <= i) throw Error(ErrorKind::OutOfDomain, "alpha_ij needs 1 <= i < j");
  return BraidWord({BraidLetter{BraidLetter::Kind::Alpha, i, j, exp}});
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    BraidLetter l = *it;
    l.exp = -l.exp;
    out.push_back(l);
  }
  return BraidWord(std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  std::vector<BraidLetter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(std::move(out));
}

BraidWord alpha_expansion(int i, int j) {
  if (i < 1 || j <= i) throw Error(ErrorKind::OutOfDomain, "alpha_ij needs 1 <= i < j");
  std::vector<BraidLetter> out;
  for (int m = j - 1; m > i; --m) out.push_back({BraidLetter::Kind::Sigma, m, m + 1, 1});
  out.push_back({BraidLetter::Kind::Sigma, i, i + 1, 1});
  out.push_back({BraidLetter::Kind::Sigma, i, i + 1, 1});
  for (int m = i + 1; m < j; ++m) out.push_back({BraidLetter::Kind::Sigma, m, m + 1, -1});
  return BraidWord(std::move(out));
}

BraidWord BraidWord::to_sigma() const {
  std::vector<BraidLetter> out;
  for (const auto& l : letters_) {
    if (l.kind == BraidLetter::Kind::Sigma) {
      out.push_back(l);
      continue;
    }
    BraidWord a = alpha_expansion(l.i, l.j);
    if (l.exp < 0) a = a.inverse();
    for (int r = 0; r < std::abs(l.exp); ++r) {
      out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    }
  }
  return BraidWord(std::move(out));
}

int BraidWord::strands() const {
  int n = 1;
  for (const auto& l : letters_) n = std::max(n, l.kind == BraidLetter::Kind::Sigma ? l.i + 1 : l.j);
  return n;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream o;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const auto& l = letters_[k];
    if (k) o << ' ';
    if (l.kind == BraidLetter::Kind::Sigma) {
      o << 's' << l.i;
    } else {
      o << 'a' << l.i << l.j;
    }
    if (l.exp != 1) o << '^' << l.exp;
  }
  return o.str();
}

namespace {

// image of x_g under one sigma letter
FreeWord sigma_image(int i, int exp, int g) {
  if (exp > 0) {
    if (g == i) return FreeWord({{i, 1}, {i + 1, 1}, {i, -1}});
    if (g == i + 1) return FreeWord::gen(i);
  } else {
    if (g == i) return FreeWord::gen(i + 1);
    if (g == i + 1) return FreeWord({{i + 1, -1}, {i, 1}, {i + 1, 1}});
  }
  return FreeWord::gen(g);
}

FreeWord substitute(const FreeWord& w, int i, int exp) {
  FreeWord out;
  for (const auto& l : w.letters()) {
    const FreeWord img = sigma_image(i, exp, l.gen);
    out *= l.exp > 0 ? img : img.inverse();
  }
  return out;
}

void check_strands(const BraidWord& b, int n) {
  if (n < 1 || n > kMaxStrands) {
    throw Error(ErrorKind::OutOfDomain, "strand count must lie in 1.." + std::to_string(kMaxStrands));
  }
  if (b.strands() > n) throw Error(ErrorKind::OutOfDomain, "braid index beyond n");
}

}  // namespace

std::vector<FreeWord> artin_images(const BraidWord& b, int n) {
  check_strands(b, n);
  const BraidWord s = b.to_sigma();
  std::vector<FreeWord> img;
  for (int g = 1; g <= n; ++g) img.push_back(FreeWord::gen(g));
  const auto& ls = s.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    for (int r = 0; r < std::abs(it->exp); ++r) {
      for (auto& w : img) w = substitute(w, it->i, it->exp > 0 ? 1 : -1);
    }
  }
  return img;
}

FreeWord artin_act(const BraidWord& b, const FreeWord& w, int n) {
  const auto img = artin_images(b, n);
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (l.gen > n) throw Error(ErrorKind::OutOfDomain, "free generator beyond n");
    const FreeWord& x = img[static_cast<std::size_t>(l.gen - 1)];
    out *= l.exp > 0 ? x : x.inverse();
  }
  return out;
}

bool same_action(const BraidWord& a, const BraidWord& b, int n) {
  return artin_images(a, n) == artin_images(b, n);
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return a * b * a.inverse() * b.inverse();
}

namespace {

BraidWord A(int i, int j) { return BraidWord::alpha(i, j); }
BraidWord Ainv(int i, int j) { return BraidWord::alpha(i, j, -1); }

std::string tuple_str(std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int x : idx) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

void record(RelationCheck& r, const BraidWord& lhs, const BraidWord& rhs, const std::string& what) {
  ++r.identities;
  if (same_action(lhs, rhs, r.n)) {
    ++r.passed;
  } else {
    r.failures.push_back(what + ": " + lhs.str() + " != " + rhs.str());
  }
}

RelationCheck yb3(int n, bool corrupt) {
  if (n < 3) throw Error(ErrorKind::OutOfDomain, "YB3 needs n >= 3");
  RelationCheck r{"YB3", n, 0, 0, {}};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const BraidWord a = A(i, j) * A(i, k) * A(j, k);
        const BraidWord b = corrupt ? A(i, k) * A(i, j) * A(j, k) : A(i, k) * A(j, k) * A(i, j);
        const BraidWord c = A(j, k) * A(i, j) * A(i, k);
        const std::string t = tuple_str({i, j, k});
        record(r, a, b, t + " first equality");
        record(r, b, c, t + " second equality");
      }
    }
  }
  return r;
}

RelationCheck yb4(int n, bool corrupt) {
  if (n < 4) throw Error(ErrorKind::OutOfDomain, "YB4 needs n >= 4");
  RelationCheck r{"YB4", n, 0, 0, {}};
  const BraidWord one;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          const std::string t = tuple_str({i, j, k, l});
          record(r, commutator(A(k, l), A(i, j)), one, t + " [a_kl,a_ij]");
          const BraidWord conj1 = corrupt ? A(j, k) * A(i, k) * Ainv(j, k)
                                          : Ainv(j, k) * A(i, k) * A(j, k);
          record(r, commutator(A(j, l), conj1), one, t + " [a_jl,a_jk^-1 a_ik a_jk]");
          record(r, commutator(A(i, l), A(j, k)), one, t + " [a_il,a_jk]");
          record(r, commutator(A(j, l), A(k, l) * A(i, k) * Ainv(k, l)), one,
                 t + " [a_jl,a_kl a_ik a_kl^-1]");
        }
      }
    }
  }
  return r;
}

}  // namespace

RelationCheck verify_yb3(int n) { return yb3(n, false); }
RelationCheck verify_yb4(int n) { return yb4(n, false); }
RelationCheck verify_yb3_corrupted(int n) { return yb3(n, true); }
RelationCheck verify_yb4_corrupted(int n) { return yb4(n, true); }

BraidWord garside_Dk(int k) {
  if (k < 2) throw Error(ErrorKind::OutOfDomain, "D_k needs k >= 2");
  BraidWord out;
  for (int j = 2; j <= k; ++j) {
    for (int i = 1; i < j; ++i) out = out * A(i, j);
  }
  return out;
}

BraidWord garside_delta(int k) {
  if (k < 2) throw Error(ErrorKind::OutOfDomain, "Delta_k needs k >= 2");
  BraidWord out;
  for (int top = k - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) out = out * BraidWord::sigma(i);
  }
  return out;
}

}  // namespace dcs
