#include "substdyn/classification.hpp"

#include "substdyn/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace substdyn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tame: return "tame";
    case Verdict::wild: return "wild";
    case Verdict::empty_subshift: return "empty_subshift";
  }
  return "unknown";
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

std::string to_string(Minimality m) {
  switch (m) {
    case Minimality::yes: return "yes";
    case Minimality::no: return "no";
    case Minimality::unknown: return "unknown";
  }
  return "unknown";
}

LetterClassification classify_letters(const Substitution& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<letter_t>> succ(n);
  for (letter_t a = 0; a < n; ++a) {
    succ[a] = s.image(a);
    std::sort(succ[a].begin(), succ[a].end());
    succ[a].erase(std::unique(succ[a].begin(), succ[a].end()), succ[a].end());
  }
  auto reachable = [&](letter_t a) {
    std::vector<bool> seen(n, false);
    std::deque<letter_t> q;
    for (letter_t b : succ[a])
      if (!seen[b]) {
        seen[b] = true;
        q.push_back(b);
      }
    while (!q.empty()) {
      letter_t x = q.front();
      q.pop_front();
      for (letter_t b : succ[x])
        if (!seen[b]) {
          seen[b] = true;
          q.push_back(b);
        }
    }
    return seen;  // letters reachable in one or more steps
  };
  std::vector<std::vector<bool>> reach(n);
  for (letter_t a = 0; a < n; ++a) reach[a] = reachable(a);

  // A letter is growing when it lies on a cycle and its image has length > 1.
  std::vector<bool> growing(n, false);
  for (letter_t a = 0; a < n; ++a) growing[a] = reach[a][a] && s.image(a).size() > 1;

  LetterClassification c;
  c.is_bounded.assign(n, true);
  for (letter_t a = 0; a < n; ++a) {
    bool expands = growing[a];
    for (letter_t b = 0; b < n && !expands; ++b) expands = reach[a][b] && growing[b];
    c.is_bounded[a] = !expands;
    (expands ? c.expanding : c.bounded).push_back(a);
  }
  for (letter_t a : c.expanding) {
    const Word& img = s.image(a);
    if (c.is_bounded[img.back()]) c.right.push_back(a);
    if (c.is_bounded[img.front()]) c.left.push_back(a);
  }
  return c;
}

std::vector<letter_t> right_frontier(const Substitution& s, const LetterClassification& c) {
  std::vector<letter_t> r(s.size());
  for (letter_t a = 0; a < s.size(); ++a) {
    r[a] = a;
    const Word& img = s.image(a);
    for (std::size_t i = img.size(); i-- > 0;)
      if (!c.is_bounded[img[i]]) {
        r[a] = img[i];
        break;
      }
  }
  return r;
}

std::vector<letter_t> left_frontier(const Substitution& s, const LetterClassification& c) {
  std::vector<letter_t> l(s.size());
  for (letter_t a = 0; a < s.size(); ++a) {
    l[a] = a;
    for (letter_t x : s.image(a))
      if (!c.is_bounded[x]) {
        l[a] = x;
        break;
      }
  }
  return l;
}

namespace {

std::optional<std::size_t> cycle_length(const std::vector<letter_t>& f, letter_t c) {
  letter_t x = f[c];
  for (std::size_t k = 1; k <= f.size(); ++k) {
    if (x == c) return k;
    x = f[x];
  }
  return std::nullopt;
}

std::optional<WildWitness> find_witness(const Substitution& s, const LetterClassification& c) {
  auto r = right_frontier(s, c);
  for (letter_t a : c.right)
    if (auto p = cycle_length(r, a)) return WildWitness{a, Side::right, *p, {}};
  auto l = left_frontier(s, c);
  for (letter_t a : c.left)
    if (auto p = cycle_length(l, a)) return WildWitness{a, Side::left, *p, {}};
  return std::nullopt;
}

bool all_bounded(const Word& w, const LetterClassification& c) {
  return std::all_of(w.begin(), w.end(), [&](letter_t x) { return c.is_bounded[x]; });
}

}  // namespace

Word wild_periodic_word(const Substitution& s, const WildWitness& witness) {
  LetterClassification c = classify_letters(s);
  if (witness.letter >= s.size()) fail("witness-invalid", "witness letter out of range");
  const auto& side_set = witness.side == Side::right ? c.right : c.left;
  if (std::find(side_set.begin(), side_set.end(), witness.letter) == side_set.end())
    fail("witness-invalid", "letter '" + s.alphabet().name(witness.letter) +
                                "' is not an expanding letter with a bounded " +
                                to_string(witness.side) + " end");
  auto frontier = witness.side == Side::right ? right_frontier(s, c) : left_frontier(s, c);
  auto p = cycle_length(frontier, witness.letter);
  if (!p) fail("witness-invalid", "witness letter does not lie on a frontier cycle");

  const std::size_t N = *p;
  Word img = s.iterate(witness.letter, N);
  Word u;
  if (witness.side == Side::right) {
    std::size_t i = img.size();
    while (i > 0 && c.is_bounded[img[i - 1]]) --i;
    u = slice(img, i, img.size());
  } else {
    std::size_t i = 0;
    while (i < img.size() && c.is_bounded[img[i]]) ++i;
    u = slice(img, 0, i);
  }
  if (u.empty() || !all_bounded(u, c)) fail("internal", "empty bounded tail in wild construction");

  // σ^{kN}(u) over bounded letters is eventually periodic.
  std::vector<Word> orbit{u};
  std::size_t pre = 0, period = 0;
  for (;;) {
    Word next = s.iterate(orbit.back(), N);
    auto it = std::find(orbit.begin(), orbit.end(), next);
    if (it != orbit.end()) {
      pre = static_cast<std::size_t>(it - orbit.begin());
      period = orbit.size() - pre;
      break;
    }
    orbit.push_back(std::move(next));
    if (orbit.size() > 4096) fail("internal", "bounded orbit did not close");
  }
  std::size_t K = (pre + period - 1) / period;
  std::size_t M = K * period;
  Word W = orbit.at(M < orbit.size() ? M : pre + (M - pre) % period);

  std::size_t L = std::max<std::size_t>(4 * W.size(), 4);
  LanguageTable t = language_table(s, L);
  if (!periodic_word_is_legal(t, W, L))
    fail("internal", "constructed periodic word is not legal");
  return W;
}

TamenessReport decide_tameness(const Substitution& s) {
  TamenessReport rep;
  rep.letters = classify_letters(s);
  {
    LanguageTable t = language_table(s, 2);
    if (t.legal(1).empty()) {
      rep.verdict = Verdict::empty_subshift;
      return rep;
    }
  }
  if (auto w = find_witness(s, rep.letters)) {
    rep.verdict = Verdict::wild;
    w->periodic_word = wild_periodic_word(s, *w);
    rep.witness = std::move(w);
    return rep;
  }

  rep.verdict = Verdict::tame;
  std::size_t L = 4;
  for (;;) {
    LanguageTable t = language_table(s, L);
    std::vector<Word> words;
    bool at_top = false;
    for (std::size_t l = 0; l <= L; ++l)
      for (const Word& w : t.legal(l))
        if (all_bounded(w, rep.letters)) {
          words.push_back(w);
          if (l == L) at_top = true;
        }
    if (!at_top) {
      rep.bounded_legal_words = std::move(words);
      break;
    }
    if (L >= 1024) fail("internal", "bounded legal words did not terminate for a tame input");
    L *= 2;
  }
  std::size_t longest = 0;
  for (const Word& w : rep.bounded_legal_words) longest = std::max(longest, w.size());
  rep.n_sigma = longest + 1;
  return rep;
}

SeedResult find_seed(const Substitution& s) {
  TamenessReport tr = decide_tameness(s);
  if (tr.verdict == Verdict::empty_subshift) fail("empty-subshift", "the subshift is empty");
  if (tr.verdict == Verdict::wild) fail("wild-input", "find_seed requires a tame substitution");
  const LetterClassification& c = tr.letters;

  // Admitted words with expanding ends and a bounded interior. The interior
  // length must be finite; if the admitted language has unboundedly long
  // bounded words the legal language is used instead.
  std::size_t L = 4;
  std::optional<LanguageTable> table;
  bool use_legal = false;
  for (;;) {
    LanguageTable t = admitted_language(s, L);
    bool long_bounded = false;
    for (const Word& w : t.admitted(L - 1))
      if (all_bounded(w, c)) long_bounded = true;
    if (!long_bounded) {
      table = std::move(t);
      break;
    }
    if (L >= 256) {
      use_legal = true;
      table = language_table(s, std::max(L, tr.n_sigma + 2));
      break;
    }
    L *= 2;
  }

  SeedResult res;
  for (std::size_t l = 2; l <= table->max_length(); ++l) {
    const auto& words = use_legal ? table->legal(l) : table->admitted(l);
    for (const Word& w : words) {
      if (c.is_bounded[w.front()] || c.is_bounded[w.back()]) continue;
      if (!all_bounded(slice(w, 1, w.size() - 1), c)) continue;
      for (std::size_t o = 1; o < w.size(); ++o) res.seed_set.push_back(PointedWord{w, o});
    }
  }
  std::sort(res.seed_set.begin(), res.seed_set.end(), pointed_less);
  if (res.seed_set.empty()) fail("internal", "no seed words found");

  std::map<std::pair<Word, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < res.seed_set.size(); ++i)
    index.emplace(std::make_pair(res.seed_set[i].word, res.seed_set[i].origin), i);

  auto f = [&](const PointedWord& p) {
    Word img = s.apply(p.word);
    std::size_t first_len = s.image(p.word.front()).size();
    std::size_t last_start = img.size() - s.image(p.word.back()).size();
    std::size_t origin = 0;
    for (std::size_t i = 0; i < p.origin; ++i) origin += s.image(p.word[i]).size();
    std::size_t m1 = first_len;
    while (c.is_bounded[img[m1 - 1]]) --m1;
    --m1;
    std::size_t m2 = last_start;
    while (c.is_bounded[img[m2]]) ++m2;
    return PointedWord{slice(img, m1, m2 + 1), origin - m1};
  };

  std::vector<std::size_t> next(res.seed_set.size());
  for (std::size_t i = 0; i < res.seed_set.size(); ++i) {
    PointedWord q = f(res.seed_set[i]);
    auto it = index.find({q.word, q.origin});
    if (it == index.end()) fail("internal", "seed map left the seed set");
    next[i] = it->second;
  }

  // Nodes on cycles of the functional graph; the seed set is sorted so the
  // first cyclic node found is the least.
  std::vector<int> state(next.size(), 0);
  std::vector<bool> cyclic(next.size(), false);
  for (std::size_t i = 0; i < next.size(); ++i) {
    std::vector<std::size_t> path;
    std::size_t x = i;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = next[x];
    }
    if (state[x] == 1) {
      std::size_t y = x;
      do {
        cyclic[y] = true;
        y = next[y];
      } while (y != x);
    }
    for (std::size_t v : path) state[v] = 2;
  }
  std::size_t chosen = 0;
  while (!cyclic[chosen]) ++chosen;
  res.fixed_pointed_word = res.seed_set[chosen];
  res.power = 1;
  for (std::size_t y = next[chosen]; y != chosen; y = next[y]) ++res.power;

  const Word& v = res.fixed_pointed_word.word;
  res.legal_expanding_letters = {v.front(), v.back()};
  res.seed_letter = std::min(v.front(), v.back());

  Word img{res.seed_letter};
  for (std::size_t m = 1;; ++m) {
    img = s.iterate(img, res.power);
    if (count_letter(img, res.seed_letter) >= 2) {
      res.n_for_doubling = m * res.power;
      break;
    }
    if (m > 64) fail("internal", "seed letter never recurs in its own image");
  }
  return res;
}

}  // namespace substdyn
