#include "substdyn/language.hpp"

#include "substdyn/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace substdyn {

namespace {

std::vector<Word> sorted(const WordSet& set) {
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), LengthLex{});
  return out;
}

// Per-letter state: the word itself while short, else its set of L-factors.
struct LetterState {
  bool is_short = true;
  std::vector<Word> words;  // one word when short, sorted factor list otherwise

  friend bool operator==(const LetterState& a, const LetterState& b) {
    return a.is_short == b.is_short && a.words == b.words;
  }
};

struct AdmittedResult {
  std::vector<WordSet> levels;  // index = length, 0..L
  std::size_t steps = 0;
};

AdmittedResult compute_admitted(const Substitution& s, std::size_t L) {
  if (L < 1) fail("invalid-argument", "length bound must be at least 1");
  AdmittedResult res;
  res.levels.assign(L + 1, {});
  res.levels[0].insert(Word{});

  for (letter_t a = 0; a < s.size(); ++a) {
    std::vector<LetterState> history;
    history.push_back(LetterState{true, {Word{a}}});
    for (;;) {
      const LetterState& cur = history.back();
      LetterState next;
      if (cur.is_short) {
        Word img = s.apply(cur.words[0]);
        if (img.size() <= L) {
          next.words.push_back(std::move(img));
        } else {
          next.is_short = false;
          WordSet set;
          for (std::size_t i = 0; i + L <= img.size(); ++i) set.insert(slice(img, i, i + L));
          next.words.assign(set.begin(), set.end());
        }
      } else {
        next.is_short = false;
        WordSet set;
        for (const Word& u : cur.words) {
          Word img = s.apply(u);
          for (std::size_t i = 0; i + L <= img.size(); ++i) set.insert(slice(img, i, i + L));
        }
        next.words.assign(set.begin(), set.end());
      }
      if (!next.is_short) std::sort(next.words.begin(), next.words.end());
      bool seen = std::find(history.begin(), history.end(), next) != history.end();
      if (seen) break;
      history.push_back(std::move(next));
    }
    res.steps = std::max(res.steps, history.size());
    for (const LetterState& st : history) {
      if (st.is_short) {
        res.levels[st.words[0].size()].insert(st.words[0]);
      } else {
        for (const Word& w : st.words) res.levels[L].insert(w);
      }
    }
  }

  for (std::size_t l = L; l > 1; --l) {
    for (const Word& w : res.levels[l]) {
      res.levels[l - 1].insert(slice(w, 0, l - 1));
      res.levels[l - 1].insert(slice(w, 1, l));
    }
  }
  return res;
}

// Legal words up to `up_to`, from the Rauzy core at `order`; needs levels to order + 1.
std::vector<WordSet> legal_from_core(const std::vector<WordSet>& admitted, std::size_t order,
                                     std::size_t up_to) {
  std::vector<WordSet> legal(up_to + 1);
  const WordSet& vset = admitted[order];
  std::vector<Word> vertices(vset.begin(), vset.end());
  WordMap<std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<const Word*> edge_words;
  for (const Word& e : admitted[order + 1]) {
    auto p = index.find(slice(e, 0, order));
    auto q = index.find(slice(e, 1, order + 1));
    if (p == index.end() || q == index.end()) continue;
    edges.emplace_back(p->second, q->second);
    edge_words.push_back(&e);
  }
  std::vector<bool> core = bi_infinite_core(vertices.size(), edges);

  // Seed the top level, then close downward under prefixes and suffixes.
  std::size_t top = std::min(up_to, order + 1);
  if (top == order + 1) {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (core[edges[i].first] && core[edges[i].second]) legal[top].insert(*edge_words[i]);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!core[i]) continue;
    const Word& v = vertices[i];
    if (top == order + 1) {
      legal[order].insert(v);
    } else {
      for (std::size_t k = 0; k + top <= v.size(); ++k) legal[top].insert(slice(v, k, k + top));
    }
  }
  for (std::size_t l = top; l > 1; --l) {
    for (const Word& w : legal[l]) {
      legal[l - 1].insert(slice(w, 0, l - 1));
      legal[l - 1].insert(slice(w, 1, l));
    }
  }
  bool any = std::any_of(core.begin(), core.end(), [](bool b) { return b; });
  if (any) legal[0].insert(Word{});
  return legal;
}

}  // namespace

std::vector<bool> bi_infinite_core(std::size_t vertex_count,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> indeg(vertex_count, 0), outdeg(vertex_count, 0);
  std::vector<std::vector<std::size_t>> out_edges(vertex_count), in_edges(vertex_count);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [p, q] = edges[i];
    ++outdeg[p];
    ++indeg[q];
    out_edges[p].push_back(i);
    in_edges[q].push_back(i);
  }
  std::vector<bool> alive(vertex_count, true);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : out_edges[v]) {
      std::size_t q = edges[e].second;
      if (!alive[q]) continue;
      if (--indeg[q] == 0) {
        alive[q] = false;
        queue.push_back(q);
      }
    }
    for (std::size_t e : in_edges[v]) {
      std::size_t p = edges[e].first;
      if (!alive[p]) continue;
      if (--outdeg[p] == 0) {
        alive[p] = false;
        queue.push_back(p);
      }
    }
  }
  return alive;
}

bool LanguageTable::admits(const Word& w) const {
  if (w.size() > max_length_) fail("length-limit", "word longer than the language table");
  return admitted_set_[w.size()].count(w) > 0;
}

bool LanguageTable::is_legal(const Word& w) const {
  if (!has_legal_) fail("internal", "language table has no legal part");
  if (w.size() > max_length_) fail("length-limit", "word longer than the language table");
  return legal_set_[w.size()].count(w) > 0;
}

LanguageTable admitted_language(const Substitution& s, std::size_t max_length) {
  AdmittedResult ad = compute_admitted(s, max_length);
  LanguageTable t;
  t.max_length_ = max_length;
  t.stabilized_at_ = ad.steps;
  t.admitted_set_ = std::move(ad.levels);
  for (const auto& set : t.admitted_set_) t.admitted_.push_back(sorted(set));
  t.legal_.assign(max_length + 1, {});
  t.legal_set_.assign(max_length + 1, {});
  return t;
}

std::size_t default_order(const Substitution& s, std::size_t max_length) {
  return std::max<std::size_t>({max_length, 2 * s.max_image_length() * s.size(), 1});
}

LanguageTable language_table(const Substitution& s, std::size_t max_length,
                             const LanguageOptions& options) {
  if (max_length < 1) fail("invalid-argument", "length bound must be at least 1");
  // Primitive and growing: every admitted word is legal.
  if (!options.order && s.max_image_length() > 1 && is_primitive(s)) {
    AdmittedResult ad = compute_admitted(s, max_length);
    LanguageTable t;
    t.max_length_ = max_length;
    t.order_ = max_length;
    t.exact_ = true;
    t.stabilized_at_ = ad.steps;
    t.has_legal_ = true;
    t.admitted_set_ = std::move(ad.levels);
    for (const auto& set : t.admitted_set_) t.admitted_.push_back(sorted(set));
    t.legal_set_ = t.admitted_set_;
    t.legal_ = t.admitted_;
    return t;
  }
  std::size_t order = options.order.value_or(default_order(s, max_length));
  order = std::max(order, max_length);

  for (;;) {
    AdmittedResult ad = compute_admitted(s, order + 2);
    auto legal_a = legal_from_core(ad.levels, order, max_length);
    auto legal_b = legal_from_core(ad.levels, order + 1, max_length);
    bool agree = legal_a == legal_b;
    if (agree || order >= options.max_order) {
      if (!agree && options.strict)
        fail("insufficient-margin",
             "legal language did not stabilize by order " + std::to_string(order));
      LanguageTable t;
      t.max_length_ = max_length;
      t.order_ = order + 1;
      t.exact_ = agree;
      t.stabilized_at_ = ad.steps;
      t.has_legal_ = true;
      ad.levels.resize(max_length + 1);
      t.admitted_set_ = std::move(ad.levels);
      for (const auto& set : t.admitted_set_) t.admitted_.push_back(sorted(set));
      t.legal_set_ = std::move(legal_b);
      for (const auto& set : t.legal_set_) t.legal_.push_back(sorted(set));
      return t;
    }
    order = std::min(options.max_order, order * 2);
  }
}

RauzyGraph rauzy_graph(const LanguageTable& table, std::size_t order) {
  if (order + 1 > table.max_length()) fail("length-limit", "Rauzy order exceeds table length");
  RauzyGraph g;
  g.vertices = table.admitted(order);
  WordMap<std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (const Word& e : table.admitted(order + 1)) {
    g.edges.push_back(e);
    g.incidence.emplace_back(index.at(slice(e, 0, order)), index.at(slice(e, 1, order + 1)));
  }
  return g;
}

bool is_admissible(const Substitution& s) {
  std::size_t L = std::max<std::size_t>(4, 2 * s.max_image_length());
  LanguageTable t = language_table(s, L);
  if (t.legal(1).size() != s.size()) return false;
  for (std::size_t l = 1; l <= L; ++l)
    if (t.legal(l) != t.admitted(l)) return false;
  return true;
}

bool periodic_word_is_legal(const LanguageTable& table, const Word& u, std::size_t window) {
  if (u.empty()) return false;
  window = std::min(window, table.max_length());
  Word buf;
  for (std::size_t i = 0; i < u.size(); ++i) {
    buf.clear();
    for (std::size_t k = 0; k < window; ++k) buf.push_back(u[(i + k) % u.size()]);
    if (!table.is_legal(buf)) return false;
  }
  return true;
}

std::vector<Word> periodic_point_search(const LanguageTable& table, std::size_t alphabet_size,
                                        std::size_t max_period) {
  std::vector<Word> found;
  const std::size_t M = table.max_length();
  Word cur;
  // Depth-first over words whose trailing windows stay legal.
  auto extend = [&](auto&& self) -> void {
    if (!cur.empty() && is_lyndon(cur) && periodic_word_is_legal(table, cur, M))
      found.push_back(cur);
    if (cur.size() == max_period) return;
    for (letter_t a = 0; a < alphabet_size; ++a) {
      // A Lyndon word never has a letter smaller than its first letter.
      if (!cur.empty() && a < cur[0]) continue;
      cur.push_back(a);
      std::size_t w = std::min(cur.size(), M);
      Word tail(cur.end() - static_cast<std::ptrdiff_t>(w), cur.end());
      if (table.is_legal(tail)) self(self);
      cur.pop_back();
    }
  };
  if (table.legal(1).empty()) return found;
  extend(extend);
  std::sort(found.begin(), found.end(), LengthLex{});
  return found;
}

std::vector<Word> periodic_point_search(const Substitution& s, std::size_t max_period) {
  if (max_period < 1) fail("invalid-argument", "period bound must be at least 1");
  std::size_t L = std::max(4 * max_period, default_order(s, 1));
  LanguageTable t = language_table(s, L);
  return periodic_point_search(t, s.size(), max_period);
}

}  // namespace substdyn
