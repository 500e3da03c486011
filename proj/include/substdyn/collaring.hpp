#pragma once

#include "substdyn/language.hpp"
#include "substdyn/substitution.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace substdyn {

class CollaredSubstitution {
 public:
  const Substitution& base() const { return base_; }
  std::size_t radius() const { return radius_; }
  letter_t padding() const { return padding_; }
  // σ_n on the whole collared alphabet; letters are named `a|u`.
  const Substitution& substitution() const { return collared_; }
  std::size_t size() const { return contexts_.size(); }
  const std::string& name(letter_t c) const { return collared_.alphabet().name(c); }
  const Word& context(letter_t c) const { return contexts_.at(c); }
  letter_t center(letter_t c) const { return contexts_.at(c)[radius_]; }
  bool is_legal(letter_t c) const { return legal_.at(c); }
  const std::vector<letter_t>& legal_letters() const { return legal_letters_; }
  std::optional<letter_t> find(const Word& context) const;
  // Pairs of legal collared letters that overlap in a legal (2n+2)-word.
  const std::vector<std::pair<letter_t, letter_t>>& legal_transitions() const {
    return transitions_;
  }
  const LanguageTable& base_table() const { return *table_; }
  std::shared_ptr<const LanguageTable> shared_table() const { return table_; }

 private:
  friend CollaredSubstitution collar(const Substitution&, std::size_t, std::optional<letter_t>,
                                     std::shared_ptr<const LanguageTable>);
  friend CollaredSubstitution forget(const CollaredSubstitution&, std::size_t);
  void finish(std::vector<Word> contexts);

  Substitution base_;
  std::size_t radius_ = 0;
  letter_t padding_ = 0;
  std::vector<Word> contexts_;
  std::vector<bool> legal_;
  std::vector<letter_t> legal_letters_;
  WordMap<letter_t> index_;
  Substitution collared_;
  std::vector<std::pair<letter_t, letter_t>> transitions_;
  std::shared_ptr<const LanguageTable> table_;
};

// Image contexts of a (2n+1)-context under σ, read at the offset rule.
std::vector<Word> collared_image(const Substitution& s, const Word& context, std::size_t n);

CollaredSubstitution collar(const Substitution& s, std::size_t n,
                            std::optional<letter_t> padding = std::nullopt,
                            std::shared_ptr<const LanguageTable> table = nullptr);
CollaredSubstitution forget(const CollaredSubstitution& c, std::size_t m);

// Letterwise forgetful map between two collarings of the same base.
std::vector<letter_t> forget_map(const CollaredSubstitution& from, const CollaredSubstitution& to);

std::size_t border_forcing_level(const CollaredSubstitution& c, std::size_t n_sigma);

}  // namespace substdyn
