#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace substdyn {

using letter_t = std::uint32_t;
using Word = std::vector<letter_t>;

// Length first, then lexicographic by letter index.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ w.size();
    for (letter_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class T>
using WordMap = std::unordered_map<Word, T, WordHash>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(letter_t a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<letter_t> find(std::string_view name) const;
  letter_t letter(std::string_view name) const;

  // True when every letter name is a single character, so words can be
  // printed without separators.
  bool compact() const { return compact_; }

  // Words print as plain concatenation for compact alphabets and as
  // space-separated tokens otherwise.
  std::string format(const Word& w) const;
  // Same, but joined with '.' so the result is a single token.
  std::string format_token(const Word& w) const;
  Word parse(std::string_view text) const;

  bool contains(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, letter_t> index_;
  bool compact_ = true;
};

struct PointedWord {
  Word word;
  std::size_t origin = 0;

  friend bool operator==(const PointedWord& a, const PointedWord& b) {
    return a.origin == b.origin && a.word == b.word;
  }
};

bool pointed_less(const PointedWord& a, const PointedWord& b);
std::string format_pointed(const Alphabet& alphabet, const PointedWord& p);

Word concat(const Word& a, const Word& b);
Word slice(const Word& w, std::size_t begin, std::size_t end);
bool is_factor(const Word& needle, const Word& hay);
std::size_t count_letter(const Word& w, letter_t a);

// Shortest u with w = u^k.
Word primitive_root(const Word& w);
// Least rotation of w in lexicographic order.
Word least_rotation(const Word& w);
bool is_lyndon(const Word& w);

}  // namespace substdyn
