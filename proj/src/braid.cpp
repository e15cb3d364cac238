#include "knitweave/braid.hpp"
#include "knitweave/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace knitweave {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[x])
      throw std::invalid_argument("Permutation: not a bijection of 1.." + std::to_string(size()));
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: size must be positive");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: size must be positive");
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = n - i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("Permutation: size mismatch");
  Permutation out = *this;
  for (int& x : out.images_) x = other(x);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (int i = 0; i < size(); ++i) out.images_[images_[i] - 1] = i + 1;
  return out;
}

Permutation Permutation::then_simple(int k) const {
  Permutation out = *this;
  for (int& x : out.images_) {
    if (x == k)
      x = k + 1;
    else if (x == k + 1)
      x = k;
  }
  return out;
}

bool Permutation::length_increases(int k) const {
  // Swapping the values k and k+1 adds an inversion iff k currently precedes k+1.
  auto pos_k = std::find(images_.begin(), images_.end(), k);
  auto pos_k1 = std::find(images_.begin(), images_.end(), k + 1);
  return pos_k < pos_k1;
}

std::string Permutation::to_string() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i]);
  }
  return out + ")";
}

BraidWord::BraidWord(int strands_, std::vector<int> letters_) : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be positive");
  for (int g : letters)
    if (g == 0 || std::abs(g) > strands - 1)
      throw std::invalid_argument("BraidWord: letter " + std::to_string(g) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands != strands) throw std::invalid_argument("BraidWord: strand mismatch");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out = *this;
  std::reverse(out.letters.begin(), out.letters.end());
  for (int& g : out.letters) g = -g;
  return out;
}

Permutation perm_of_word(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int g : w.letters) p = p.then_simple(std::abs(g));
  return p;
}

int coxeter_length(const Permutation& p) {
  const auto& a = p.images();
  int inversions = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inversions;
  return inversions;
}

BraidWord reduced_word(const Permutation& p) {
  // Greedy on left descents: the smallest k with p(k) > p(k+1) is the
  // smallest admissible first letter, and the remainder is again reduced.
  std::vector<int> a = p.images();
  std::vector<int> letters;
  const int n = p.size();
  for (;;) {
    int k = 0;
    while (k + 1 < n && a[k] < a[k + 1]) ++k;
    if (k + 1 >= n) break;
    letters.push_back(k + 1);
    std::swap(a[k], a[k + 1]);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord half_twist_word(int n) { return reduced_word(Permutation::longest(n)); }

BraidWord full_twist_word(int n) {
  BraidWord half = half_twist_word(n);
  return half * half;
}

int writhe_word(const BraidWord& w) {
  int total = 0;
  for (int g : w.letters) total += g > 0 ? 1 : -1;
  return total;
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  std::vector<int> letters;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return BraidWord(strands, {});
  for (;;) {
    skip_ws();
    size_t start = pos;
    if (start == text.size())
      throw ParseError("braid word: expected an integer", 1, static_cast<int>(start + 1));
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    int value = 0;
    const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
    if (ec != std::errc() || ptr != text.data() + pos)
      throw ParseError("braid word: expected an integer", 1, static_cast<int>(start + 1));
    letters.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw ParseError("braid word: expected ','", 1, static_cast<int>(pos + 1));
    ++pos;
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_braid_word(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.letters[i]);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(a);
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

}  // namespace knitweave
