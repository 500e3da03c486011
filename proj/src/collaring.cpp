#include "substdyn/collaring.hpp"

#include "substdyn/classification.hpp"
#include "substdyn/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace substdyn {

std::optional<letter_t> CollaredSubstitution::find(const Word& context) const {
  auto it = index_.find(context);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Word> collared_image(const Substitution& s, const Word& context, std::size_t n) {
  Word img = s.apply(context);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n; ++i) offset += s.image(context[i]).size();
  const std::size_t len = s.image(context[n]).size();
  std::vector<Word> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t c = offset + i;
    out.push_back(slice(img, c - n, c + n + 1));
  }
  return out;
}

void CollaredSubstitution::finish(std::vector<Word> contexts) {
  std::sort(contexts.begin(), contexts.end(), LengthLex{});
  contexts_ = std::move(contexts);
  index_.clear();
  for (std::size_t i = 0; i < contexts_.size(); ++i)
    index_.emplace(contexts_[i], static_cast<letter_t>(i));

  const Alphabet& A = base_.alphabet();
  std::vector<std::string> names;
  legal_.assign(contexts_.size(), false);
  legal_letters_.clear();
  for (std::size_t i = 0; i < contexts_.size(); ++i) {
    names.push_back(A.name(contexts_[i][radius_]) + "|" + A.format_token(contexts_[i]));
    legal_[i] = table_->is_legal(contexts_[i]);
    if (legal_[i]) legal_letters_.push_back(static_cast<letter_t>(i));
  }
  std::vector<Word> rules;
  for (const Word& ctx : contexts_) {
    Word r;
    for (const Word& c : collared_image(base_, ctx, radius_)) {
      auto it = index_.find(c);
      if (it == index_.end()) fail("internal", "collared alphabet is not closed");
      r.push_back(it->second);
    }
    rules.push_back(std::move(r));
  }
  collared_ = Substitution(Alphabet(names), std::move(rules));

  transitions_.clear();
  for (const Word& w : table_->legal(2 * radius_ + 2)) {
    auto p = find(slice(w, 0, 2 * radius_ + 1));
    auto q = find(slice(w, 1, 2 * radius_ + 2));
    if (!p || !q) fail("internal", "legal transition uses an unknown collared letter");
    transitions_.emplace_back(*p, *q);
  }
  std::sort(transitions_.begin(), transitions_.end());
}

CollaredSubstitution collar(const Substitution& s, std::size_t n, std::optional<letter_t> padding,
                            std::shared_ptr<const LanguageTable> table) {
  letter_t pad = padding.value_or(0);
  if (pad >= s.size()) fail("padding-letter-invalid", "padding letter is not in the alphabet");
  if (!table || table->max_length() < 2 * n + 2 || !table->has_legal())
    table = std::make_shared<LanguageTable>(language_table(s, 2 * n + 2));

  CollaredSubstitution c;
  c.base_ = s;
  c.radius_ = n;
  c.padding_ = pad;
  c.table_ = table;

  std::vector<Word> found;
  WordSet seen;
  std::deque<Word> queue;
  auto add = [&](Word w) {
    if (seen.insert(w).second) {
      found.push_back(w);
      queue.push_back(std::move(w));
    }
  };
  for (const Word& w : table->legal(2 * n + 1)) add(w);
  for (letter_t a = 0; a < s.size(); ++a) {
    if (table->is_legal(Word{a})) continue;
    Word w(2 * n + 1, pad);
    w[n] = a;
    add(std::move(w));
  }

  double cap = 1.0;
  for (std::size_t i = 0; i < 2 * n + 2; ++i) cap *= static_cast<double>(s.size());
  cap = std::max(cap, 1.0);
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (Word& x : collared_image(s, w, n)) add(std::move(x));
    if (static_cast<double>(found.size()) > cap)
      fail("closure-overflow", "collared alphabet exceeded its size bound");
  }
  c.finish(std::move(found));
  return c;
}

CollaredSubstitution forget(const CollaredSubstitution& c, std::size_t m) {
  const std::size_t n = c.radius();
  if (m > n) fail("invalid-argument", "cannot forget to a larger radius");
  CollaredSubstitution out;
  out.base_ = c.base_;
  out.radius_ = m;
  out.padding_ = c.padding_;
  out.table_ = c.table_;

  WordSet seen;
  std::vector<Word> contexts;
  WordMap<Word> rule_of;
  for (letter_t x = 0; x < c.size(); ++x) {
    Word t = slice(c.context(x), n - m, n + m + 1);
    Word img;
    for (letter_t y : c.substitution().image(x)) {
      const Word& cy = c.context(y);
      img.insert(img.end(), cy.begin() + static_cast<std::ptrdiff_t>(n - m),
                 cy.begin() + static_cast<std::ptrdiff_t>(n + m + 1));
    }
    auto [it, fresh] = rule_of.emplace(t, img);
    if (!fresh && it->second != img) fail("internal", "forgetful map does not intertwine");
    if (seen.insert(t).second) contexts.push_back(std::move(t));
  }
  out.finish(std::move(contexts));
  // The induced rules on truncated contexts must match the offset rule.
  for (letter_t x = 0; x < out.size(); ++x) {
    Word flat;
    for (letter_t y : out.substitution().image(x)) {
      const Word& cy = out.context(y);
      flat.insert(flat.end(), cy.begin(), cy.end());
    }
    if (flat != rule_of.at(out.context(x))) fail("internal", "forgetful map does not intertwine");
  }
  return out;
}

std::vector<letter_t> forget_map(const CollaredSubstitution& from, const CollaredSubstitution& to) {
  const std::size_t n = from.radius(), m = to.radius();
  if (m > n) fail("invalid-argument", "cannot forget to a larger radius");
  if (from.padding() != to.padding()) fail("padding-mismatch", "collarings use different padding");
  std::vector<letter_t> f;
  for (letter_t x = 0; x < from.size(); ++x) {
    auto y = to.find(slice(from.context(x), n - m, n + m + 1));
    if (!y) fail("internal", "forgotten context is missing from the target collaring");
    f.push_back(*y);
  }
  return f;
}

std::size_t border_forcing_level(const CollaredSubstitution& c, std::size_t n_sigma) {
  if (c.radius() < n_sigma)
    fail("verification-failed", "collaring radius is smaller than N_sigma");
  const Substitution& s = c.base();
  LetterClassification cl = classify_letters(s);
  std::size_t k = 1;
  for (;; ++k) {
    bool ok = true;
    for (letter_t a : cl.expanding)
      if (s.iterate(Word{a}, k).size() <= n_sigma) ok = false;
    if (ok) break;
    if (k > 64) fail("verification-failed", "expanding letters do not outgrow N_sigma");
  }

  const Substitution& sn = c.substitution();
  std::vector<std::optional<letter_t>> left(c.size()), right(c.size());
  WordMap<Word> cache;
  auto super = [&](letter_t x) -> const Word& {
    Word key{x};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, sn.iterate(key, k)).first->second;
  };
  for (auto [x, y] : c.legal_transitions()) {
    letter_t l = super(x).back();
    letter_t r = super(y).front();
    if (left[y] && *left[y] != l)
      fail("verification-failed", "supertile of " + c.name(y) + " has two left flanks");
    if (right[x] && *right[x] != r)
      fail("verification-failed", "supertile of " + c.name(x) + " has two right flanks");
    left[y] = l;
    right[x] = r;
  }
  return k;
}

}  // namespace substdyn
