#pragma once

#include "substdyn/language.hpp"
#include "substdyn/substitution.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace substdyn {

struct LetterClassification {
  std::vector<letter_t> bounded;
  std::vector<letter_t> expanding;
  std::vector<letter_t> right;  // expanding, image ends with a bounded letter
  std::vector<letter_t> left;   // expanding, image starts with a bounded letter
  std::vector<bool> is_bounded;
};

LetterClassification classify_letters(const Substitution& s);

// Rightmost / leftmost expanding letter of σ(a), indexed by letter; only
// meaningful for expanding a.
std::vector<letter_t> right_frontier(const Substitution& s, const LetterClassification& c);
std::vector<letter_t> left_frontier(const Substitution& s, const LetterClassification& c);

enum class Verdict { tame, wild, empty_subshift };
enum class Side { left, right };

std::string to_string(Verdict v);
std::string to_string(Side s);

struct WildWitness {
  letter_t letter = 0;
  Side side = Side::right;
  std::size_t cycle_length = 0;
  Word periodic_word;
};

struct TamenessReport {
  Verdict verdict = Verdict::tame;
  LetterClassification letters;
  std::optional<WildWitness> witness;
  std::vector<Word> bounded_legal_words;  // tame only, includes the empty word
  std::size_t n_sigma = 0;                // tame only
};

TamenessReport decide_tameness(const Substitution& s);

// The bounded word σ^{KN}(u) of the periodic-point construction.
Word wild_periodic_word(const Substitution& s, const WildWitness& witness);

struct SeedResult {
  PointedWord fixed_pointed_word;
  std::size_t power = 0;
  std::array<letter_t, 2> legal_expanding_letters{};
  letter_t seed_letter = 0;
  std::size_t n_for_doubling = 0;
  std::vector<PointedWord> seed_set;
};

SeedResult find_seed(const Substitution& s);

enum class Minimality { yes, no, unknown };
std::string to_string(Minimality m);

struct MinimalityReport {
  Minimality verdict = Minimality::unknown;
  std::size_t c_bound = 0;
  std::optional<std::size_t> constant;  // smallest C that worked at every tested scale
  std::vector<std::size_t> scales;
  std::optional<std::pair<Word, Word>> witness;  // (u, v): v legal, long, avoids u
  std::string reason;
};

MinimalityReport is_minimal(const Substitution& s, std::size_t c_bound = 32);

}  // namespace substdyn
