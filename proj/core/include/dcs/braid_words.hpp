#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dcs {

struct Letter {
  int gen = 1;  // x_gen, 1-based
  int exp = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in x_1..x_n.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord gen(int i, int exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  FreeWord& operator*=(const FreeWord& o);
  bool operator==(const FreeWord&) const = default;
  // Exponent sum of each generator (abelianization).
  std::vector<std::int64_t> abelianized(int n) const;
  // Cyclically reduced form, rotated to the lexicographically least rotation.
  FreeWord cyclic_normal() const;
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

struct BraidLetter {
  enum class Kind { Sigma, Alpha };
  Kind kind = Kind::Sigma;
  int i = 1;
  int j = 2;  // Alpha only
  int exp = 1;
  bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {}
  static BraidWord sigma(int i, int exp = 1);
  static BraidWord alpha(int i, int j, int exp = 1);

  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& o) const;
  // Expansion over sigma letters only.
  BraidWord to_sigma() const;
  // Largest strand index used.
  int strands() const;
  std::string str() const;

 private:
  std::vector<BraidLetter> letters_;
};

// alpha_ij = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1).
BraidWord alpha_expansion(int i, int j);

// Images of x_1..x_n; products act rightmost letter first.
std::vector<FreeWord> artin_images(const BraidWord& b, int n);
FreeWord artin_act(const BraidWord& b, const FreeWord& w, int n);
bool same_action(const BraidWord& a, const BraidWord& b, int n);

BraidWord commutator(const BraidWord& a, const BraidWord& b);

struct RelationCheck {
  std::string family;
  int n = 0;
  std::size_t identities = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == identities && failures.empty(); }
};

RelationCheck verify_yb3(int n);
RelationCheck verify_yb4(int n);
// Negative controls: one factor order or conjugation direction is altered.
RelationCheck verify_yb3_corrupted(int n);
RelationCheck verify_yb4_corrupted(int n);

// D_k = alpha_12 (alpha_13 alpha_23) ... (alpha_1k ... alpha_{k-1,k}).
BraidWord garside_Dk(int k);
// Half twist (s_1 .. s_{k-1})(s_1 .. s_{k-2}) .. (s_1).
BraidWord garside_delta(int k);

inline constexpr int kMaxStrands = 8;

}  // namespace dcs
