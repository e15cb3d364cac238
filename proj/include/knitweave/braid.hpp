#pragma once

// Braid words and symmetric-group combinatorics.
//
// Conventions shared by every module:
//  * letter g means sigma_|g| (g > 0) or its inverse (g < 0); sigma_k crosses
//    strand positions k and k+1 (1-based);
//  * words act left to right: the leftmost letter is applied first;
//  * a permutation p in one-line notation sends the strand that starts at
//    position x to position p(x).

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace knitweave {

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation; throws std::invalid_argument unless a bijection of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Order-reversing permutation n, n-1, ..., 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// this followed by other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  /// this followed by the simple transposition s_k.
  Permutation then_simple(int k) const;
  /// Whether appending s_k increases the Coxeter length.
  bool length_increases(int k) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  /// Throws std::invalid_argument if a letter is 0 or out of [1, strands-1].
  BraidWord(int strands, std::vector<int> letters);

  int length() const { return static_cast<int>(letters.size()); }
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

Permutation perm_of_word(const BraidWord& w);
int coxeter_length(const Permutation& p);
/// Lexicographically smallest positive word of minimal length for p.
BraidWord reduced_word(const Permutation& p);
BraidWord half_twist_word(int n);
BraidWord full_twist_word(int n);
int writhe_word(const BraidWord& w);

/// Parses "1,-2,1" (whitespace tolerated, empty string is the empty word).
BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_word(const BraidWord& w);

/// All permutations of 1..n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace knitweave
