#include "substdyn/cis.hpp"
#include "substdyn/classification.hpp"
#include "substdyn/errors.hpp"

#include <algorithm>

namespace substdyn {

namespace {

constexpr std::size_t kTableLength = 64;
constexpr std::size_t kLongTableLength = 256;

// Least r such that every legal r-word contains every legal l-word, if r ≤ max length.
std::optional<std::size_t> return_bound(const LanguageTable& t, std::size_t l) {
  const std::size_t want = t.legal(l).size();
  for (std::size_t r = l; r <= t.max_length(); ++r) {
    bool ok = true;
    for (const Word& v : t.legal(r)) {
      WordSet seen;
      for (std::size_t i = 0; i + l <= v.size(); ++i) seen.insert(slice(v, i, i + l));
      if (seen.size() != want) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  return std::nullopt;
}

bool single_orbit(const LanguageTable& t) {
  const auto& words = t.legal(t.max_length());
  if (words.empty()) return false;
  Word root = primitive_root(words.front());
  // All long legal words are factors of one periodic sequence.
  Word u = least_rotation(root);
  if (u.size() * 2 > t.max_length()) return false;
  Word big;
  while (big.size() < t.max_length() + 2 * u.size()) big = concat(big, u);
  for (const Word& w : words)
    if (!is_factor(w, big)) return false;
  return true;
}

}  // namespace

MinimalityReport is_minimal(const Substitution& s, std::size_t c_bound) {
  MinimalityReport r;
  r.c_bound = c_bound;
  LanguageTable t = language_table(s, kTableLength);
  if (t.empty_subshift()) {
    r.verdict = Minimality::no;
    r.reason = "the subshift is empty";
    return r;
  }

  if (s.max_image_length() > 1 && is_primitive(s)) {
    r.verdict = Minimality::yes;
    r.reason = "primitive substitution";
    return r;
  }

  TamenessReport tr = decide_tameness(s);
  if (tr.verdict == Verdict::wild) {
    if (t.exact() && single_orbit(t)) {
      r.verdict = Minimality::yes;
      r.reason = "the subshift is a single periodic orbit";
    } else {
      r.reason = "wild substitution with more than one periodic pattern; no certificate";
    }
    return r;
  }

  try {
    InverseLimitPresentation p = inverse_limit_presentation(s);
    CisLattice lat = enumerate_cis(p);
    CisContext ctx(p.collared, p.complex, p.map, lat.order);
    if (!lat.consistent) {
      r.reason = "closed invariant subsets not stable at the largest Rauzy order";
      return r;
    }
    for (const CisNode& node : lat.nodes) {
      if (node.edges.empty() || node.edges.size() == lat.edge_count) continue;
      std::vector<bool> in(lat.edge_count, false);
      for (std::size_t e : node.edges) in[e] = true;
      std::size_t outside = 0;
      while (in[outside]) ++outside;
      Word u = p.collared.context(p.complex.edges[outside]);
      r.verdict = Minimality::no;
      r.witness = std::make_pair(u, ctx.sample_word(node.edges));
      r.reason = "a nonempty proper closed invariant subset exists";
      return r;
    }
  } catch (const Error& e) {
    r.reason = std::string("lattice unavailable: ") + e.what();
  }

  std::size_t constant = 0;
  for (std::size_t length : {kTableLength, kLongTableLength}) {
    if (length != kTableLength) t = language_table(s, length);
    constant = 0;
    r.scales.clear();
    for (std::size_t l : {1, 2, 4, 8}) {
      auto bound = return_bound(t, l);
      if (!bound) break;
      r.scales.push_back(l);
      constant = std::max(constant, (*bound + l - 1) / l);
    }
    if (r.scales.size() >= 2) break;
  }
  if (r.scales.size() < 2) {
    r.reason = "fewer than two scales have a return bound within length " +
               std::to_string(kLongTableLength);
    return r;
  }
  r.constant = constant;
  if (constant > c_bound) {
    r.reason = "recurrence constant " + std::to_string(constant) + " exceeds the bound";
    return r;
  }
  if (r.reason.empty()) {
    r.verdict = Minimality::yes;
    r.reason = "linearly recurrent at every tested scale and no proper invariant subset";
  }
  return r;
}

}  // namespace substdyn
