#pragma once

#include "substdyn/substitution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace substdyn {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::string text;  // rule file contents

  Substitution substitution() const { return parse_substitution(text); }
};

const std::vector<CorpusEntry>& corpus();
std::optional<CorpusEntry> find_corpus(const std::string& name);

// a -> ab ab^2 ... ab^n a, b -> b
std::string sigma_n_text(std::size_t n);

}  // namespace substdyn
