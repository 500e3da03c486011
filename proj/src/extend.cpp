#include "substdyn/cis.hpp"
#include "substdyn/errors.hpp"

#include <set>

namespace substdyn {

namespace {

constexpr std::size_t kMaxAutoPower = 8;

// Greedy interior embedding of `target` into `base` (1-based positions).
std::optional<std::vector<std::size_t>> embed(const Word& base, const Word& target) {
  std::vector<std::size_t> pos;
  std::size_t i = 1;
  for (letter_t x : target) {
    while (i + 1 < base.size() && base[i] != x) ++i;
    if (i + 1 >= base.size()) return std::nullopt;
    pos.push_back(i + 1);
    ++i;
  }
  return pos;
}

}  // namespace

Extension extend_substitution(const Substitution& sigma, const Substitution& psi,
                              const std::map<std::string, std::string>& injection,
                              const std::map<std::string, std::vector<std::size_t>>& positions) {
  if (!is_primitive(sigma)) fail("not-primitive", "the base substitution is not primitive");
  const Alphabet& A = sigma.alphabet();
  const Alphabet& B = psi.alphabet();
  for (const auto& name : B.names())
    if (A.find(name)) fail("name-clash", "letter " + name + " occurs in both alphabets");

  std::vector<letter_t> inj(B.size());
  std::set<letter_t> targets;
  for (letter_t b = 0; b < B.size(); ++b) {
    auto it = injection.find(B.name(b));
    if (it == injection.end()) fail("injection-not-injective", "no image for letter " + B.name(b));
    auto a = A.find(it->second);
    if (!a) fail("injection-not-injective", "unknown base letter " + it->second);
    if (!targets.insert(*a).second)
      fail("injection-not-injective", "base letter " + it->second + " is used twice");
    inj[b] = *a;
  }
  for (const auto& [name, pos] : positions)
    if (!B.find(name)) fail("subsequence-not-interior", "positions given for unknown letter " + name);

  Extension ext;
  auto attempt = [&](std::size_t p, bool quiet) -> std::optional<std::vector<Word>> {
    std::vector<Word> rules;
    for (letter_t a = 0; a < A.size(); ++a) rules.push_back(sigma.iterate(a, p));
    ext.positions.clear();
    for (letter_t b = 0; b < B.size(); ++b) {
      Word base = sigma.iterate(inj[b], p);
      Word mapped;
      for (letter_t x : psi.image(b)) mapped.push_back(inj[x]);
      std::vector<std::size_t> pos;
      auto given = positions.find(B.name(b));
      if (given != positions.end()) {
        pos = given->second;
        if (pos.size() != mapped.size())
          fail("subsequence-not-interior", "wrong number of positions for " + B.name(b));
        for (std::size_t j = 0; j < pos.size(); ++j) {
          if (pos[j] <= 1 || pos[j] >= base.size() || (j > 0 && pos[j] <= pos[j - 1]))
            fail("subsequence-not-interior", "positions for " + B.name(b) + " are not interior");
          if (base[pos[j] - 1] != mapped[j])
            fail("subsequence-not-interior",
                 "position " + std::to_string(pos[j]) + " does not carry the injected letter");
        }
      } else {
        auto found = embed(base, mapped);
        if (!found) {
          if (quiet) return std::nullopt;
          fail("subsequence-not-interior",
               "image of " + B.name(b) + " does not embed in the interior of its base image");
        }
        pos = *found;
      }
      Word rule;
      for (letter_t x : base) rule.push_back(x);
      for (std::size_t j = 0; j < pos.size(); ++j)
        rule[pos[j] - 1] = static_cast<letter_t>(A.size() + psi.image(b)[j]);
      ext.positions[B.name(b)] = pos;
      rules.push_back(std::move(rule));
    }
    return rules;
  };

  std::optional<std::vector<Word>> rules;
  if (!positions.empty()) {
    ext.sigma_power = 1;
    rules = attempt(1, false);
  } else {
    for (std::size_t p = 1; p <= kMaxAutoPower && !rules; ++p) {
      ext.sigma_power = p;
      rules = attempt(p, p < kMaxAutoPower);
    }
  }
  std::vector<std::string> names = A.names();
  names.insert(names.end(), B.names().begin(), B.names().end());
  ext.result = Substitution(Alphabet(names), std::move(*rules));
  return ext;
}

}  // namespace substdyn
