#pragma once

#include "substdyn/substitution.hpp"

#include <memory>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

namespace substdyn {

using WordSet = std::unordered_set<Word, WordHash>;

struct LanguageOptions {
  // Rauzy order used for legality; defaults to max(L, 2 * max|σ(a)| * |A|).
  std::optional<std::size_t> order;
  // Largest order tried while waiting for two successive orders to agree.
  std::size_t max_order = 512;
  // Throw insufficient-margin instead of returning a table flagged inexact.
  bool strict = false;
};

class LanguageTable {
 public:
  std::size_t max_length() const { return max_length_; }

  const std::vector<Word>& admitted(std::size_t length) const { return admitted_.at(length); }
  const std::vector<Word>& legal(std::size_t length) const { return legal_.at(length); }
  bool admits(const Word& w) const;
  bool is_legal(const Word& w) const;

  bool has_legal() const { return has_legal_; }
  bool empty_subshift() const { return has_legal_ && legal_.size() > 1 && legal_[1].empty(); }
  bool exact() const { return exact_; }
  std::size_t order() const { return order_; }
  std::size_t stabilized_at() const { return stabilized_at_; }

 private:
  friend LanguageTable admitted_language(const Substitution&, std::size_t);
  friend LanguageTable language_table(const Substitution&, std::size_t, const LanguageOptions&);

  std::size_t max_length_ = 0;
  std::vector<std::vector<Word>> admitted_;
  std::vector<std::vector<Word>> legal_;
  std::vector<WordSet> admitted_set_;
  std::vector<WordSet> legal_set_;
  bool has_legal_ = false;
  bool exact_ = false;
  std::size_t order_ = 0;
  std::size_t stabilized_at_ = 0;
};

// Admitted words only; legal(...) is empty.
LanguageTable admitted_language(const Substitution& s, std::size_t max_length);
LanguageTable language_table(const Substitution& s, std::size_t max_length,
                             const LanguageOptions& options = {});

std::size_t default_order(const Substitution& s, std::size_t max_length);

// Vertices of a directed multigraph that lie on some bi-infinite path.
std::vector<bool> bi_infinite_core(std::size_t vertex_count,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct RauzyGraph {
  std::vector<Word> vertices;
  std::vector<Word> edges;
  std::vector<std::pair<std::size_t, std::size_t>> incidence;
};

// Rauzy graph of admitted words at the given order (needs order + 1 <= max_length).
RauzyGraph rauzy_graph(const LanguageTable& table, std::size_t order);

bool is_admissible(const Substitution& s);

// Primitive cyclic words u with |u| <= max_period whose powers are legal.
// Results are the least rotations, sorted length-lexicographically.
std::vector<Word> periodic_point_search(const Substitution& s, std::size_t max_period);
std::vector<Word> periodic_point_search(const LanguageTable& table, std::size_t alphabet_size,
                                        std::size_t max_period);

// All cyclic windows of u^Z of length `window` are legal.
bool periodic_word_is_legal(const LanguageTable& table, const Word& u, std::size_t window);

}  // namespace substdyn
