#pragma once

#include "substdyn/intlin.hpp"
#include "substdyn/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace substdyn {

// Upper bound on the length of any word produced by iteration.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 26;

class Substitution {
 public:
  Substitution() = default;
  Substitution(Alphabet alphabet, std::vector<Word> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  const Word& image(letter_t a) const { return rules_.at(a); }
  const std::vector<Word>& rules() const { return rules_; }
  std::size_t max_image_length() const;

  Word apply(const Word& w) const;
  Word iterate(const Word& w, std::size_t n) const;
  Word iterate(letter_t a, std::size_t n) const { return iterate(Word{a}, n); }

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.alphabet_ == b.alphabet_ && a.rules_ == b.rules_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> rules_;
};

Word iterate(const Substitution& s, const Word& w, std::size_t n);

Substitution parse_substitution(std::string_view text);
Substitution make_substitution(const std::vector<std::pair<std::string, std::string>>& rules);
std::string format_substitution(const Substitution& s);

IntMatrix substitution_matrix(const Substitution& s);
bool is_primitive(const Substitution& s);
Substitution power(const Substitution& s, std::size_t n);

}  // namespace substdyn
