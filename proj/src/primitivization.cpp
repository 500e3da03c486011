#include "substdyn/primitivization.hpp"

#include "substdyn/errors.hpp"
#include "substdyn/language.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace substdyn {

std::optional<std::size_t> ReturnWordSystem::index_of(const Word& v) const {
  auto it = std::lower_bound(return_words.begin(), return_words.end(), v, LengthLex{});
  if (it == return_words.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - return_words.begin());
}

namespace {

// Split a word that starts with b at every occurrence of b.
std::vector<Word> split_at(const Word& w, letter_t b) {
  std::vector<Word> out;
  for (letter_t x : w) {
    if (x == b || out.empty()) out.emplace_back();
    out.back().push_back(x);
  }
  return out;
}

bool is_return_shape(const Word& v, letter_t b) {
  return !v.empty() && v[0] == b && count_letter(v, b) == 1;
}

struct Decomposition {
  Word w;
  std::vector<Word> blocks;
};

Decomposition decompose(const Substitution& s, std::size_t N, const Word& head, const Word& v,
                        letter_t b) {
  Word img = s.iterate(v, N);
  if (img.size() < head.size() || !std::equal(head.begin(), head.end(), img.begin()))
    fail("internal", "image of a return word does not start with the image of the seed");
  Decomposition d;
  std::size_t i = head.size();
  while (i < img.size() && img[i] != b) d.w.push_back(img[i++]);
  d.blocks = split_at(slice(img, i, img.size()), b);
  return d;
}

}  // namespace

ReturnWordSystem return_words(const Substitution& s, const SeedResult& seed) {
  const letter_t b = seed.seed_letter;
  const std::size_t N = seed.n_for_doubling;
  ReturnWordSystem rws;
  rws.seed_letter = b;
  rws.power = N;

  std::set<Word, LengthLex> found;
  auto scan = [&](const Word& w) {
    std::size_t added = 0;
    std::optional<std::size_t> last;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != b) continue;
      if (last && found.insert(slice(w, *last, i)).second) ++added;
      last = i;
    }
    return added;
  };

  const std::size_t cap = (std::size_t{1} << std::min<std::size_t>(s.size(), 20)) *
                          std::max<std::size_t>(1, s.max_image_length());
  Word cur{b};
  std::size_t quiet = 0;
  for (std::size_t k = 1; k <= cap && quiet < 2; ++k) {
    if (cur.size() * std::max<std::size_t>(1, s.max_image_length()) > (kMaxWordLength >> 2)) break;
    cur = s.iterate(cur, N);
    quiet = scan(cur) == 0 ? quiet + 1 : 0;
    rws.scans = k;
  }
  if (quiet < 2) fail("non-closure", "return words did not stabilize within the iteration cap");

  const Word head = s.iterate(Word{b}, N);
  std::size_t first_b = 0;
  while (first_b < head.size() && head[first_b] != b) ++first_b;
  rws.u = slice(head, 0, first_b);
  rws.head_blocks = split_at(slice(head, first_b, head.size()), b);
  if (rws.head_blocks.size() < 2) fail("internal", "seed image contains fewer than two seeds");
  const Word& last_head = rws.head_blocks.back();

  // Close the set under every word the block formulas refer to.
  for (std::size_t round = 0;; ++round) {
    std::vector<Word> need;
    for (std::size_t j = 0; j + 1 < rws.head_blocks.size(); ++j) need.push_back(rws.head_blocks[j]);
    // v_{0r0}u is only required when b itself is a return word, and then the
    // decomposition of b below produces it.
    for (const Word& v : found) {
      Decomposition d = decompose(s, N, head, v, b);
      if (d.blocks.empty()) {
        need.push_back(concat(concat(last_head, d.w), rws.u));
      } else {
        need.push_back(concat(last_head, d.w));
        for (std::size_t j = 0; j + 1 < d.blocks.size(); ++j) need.push_back(d.blocks[j]);
        need.push_back(concat(d.blocks.back(), rws.u));
      }
    }
    std::size_t added = 0;
    for (const Word& v : need) {
      if (!is_return_shape(v, b))
        fail("non-closure", "block decomposition produced a word that is not a return word");
      if (found.insert(v).second) ++added;
    }
    if (added == 0) break;
    if (round > 64) fail("non-closure", "block decompositions did not close");
  }

  rws.return_words.assign(found.begin(), found.end());
  for (const Word& v : rws.return_words) {
    Decomposition d = decompose(s, N, head, v, b);
    rws.expansions.push_back(ReturnWordSystem::Expansion{std::move(d.w), std::move(d.blocks)});
  }
  return rws;
}

DerivedSubstitution build_psi(const Substitution& s, const ReturnWordSystem& rws) {
  const auto& B = rws.return_words;
  std::vector<std::string> names;
  for (const Word& v : B) names.push_back(s.alphabet().format_token(v));
  Alphabet gamma(names);

  auto sym = [&](const Word& v) -> letter_t {
    auto i = rws.index_of(v);
    if (!i) fail("non-closure", "word " + s.alphabet().format(v) + " is not a return word");
    return static_cast<letter_t>(*i);
  };

  const Word& last_head = rws.head_blocks.back();
  Word prefix;
  for (std::size_t j = 0; j + 1 < rws.head_blocks.size(); ++j)
    prefix.push_back(sym(rws.head_blocks[j]));

  std::vector<Word> rules;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const auto& e = *rws.expansions[i];
    Word img = prefix;
    if (e.blocks.empty()) {
      img.push_back(sym(concat(concat(last_head, e.w), rws.u)));
    } else {
      img.push_back(sym(concat(last_head, e.w)));
      for (std::size_t j = 0; j + 1 < e.blocks.size(); ++j) img.push_back(sym(e.blocks[j]));
      img.push_back(sym(concat(e.blocks.back(), rws.u)));
    }
    rules.push_back(std::move(img));
  }

  DerivedSubstitution ds{Substitution(gamma, rules), B, rws.power, false};
  for (std::size_t i = 0; i < B.size(); ++i) {
    std::size_t len = 0;
    for (letter_t x : ds.psi.image(static_cast<letter_t>(i))) len += B[x].size();
    if (len != s.iterate(B[i], rws.power).size())
      fail("internal", "length bookkeeping failed for return word " + names[i]);
  }
  ds.primitive = is_primitive(ds.psi);
  if (!ds.primitive) fail("primitivity-check-failed", "derived substitution is not primitive");
  return ds;
}

ConjugateSubstitution build_theta(const DerivedSubstitution& ds, std::size_t max_power) {
  const std::size_t n = ds.alpha.size();
  ConjugateSubstitution cs;

  Substitution lifted = ds.psi;
  for (cs.psi_power = 1;; ++cs.psi_power) {
    bool long_enough = true;
    for (letter_t i = 0; i < n; ++i)
      if (lifted.image(i).size() < ds.alpha[i].size()) long_enough = false;
    if (long_enough) break;
    if (cs.psi_power >= max_power) fail("block-shortfall", "ψ images stay shorter than their blocks");
    lifted = power(ds.psi, cs.psi_power + 1);
  }

  std::vector<std::string> names;
  std::vector<std::size_t> first(n);
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = cs.z_index.size();
    for (std::size_t k = 1; k <= ds.alpha[i].size(); ++k) {
      cs.z_index.emplace_back(i, k);
      names.push_back(ds.psi.alphabet().name(static_cast<letter_t>(i)) + ":" + std::to_string(k));
    }
    cs.p_block_size = std::max(cs.p_block_size, ds.alpha[i].size());
  }

  auto expand = [&](letter_t g, Word& out) {
    for (std::size_t k = 0; k < ds.alpha[g].size(); ++k)
      out.push_back(static_cast<letter_t>(first[g] + k));
  };

  std::vector<Word> rules;
  for (auto [i, k] : cs.z_index) {
    const Word& blocks = lifted.image(static_cast<letter_t>(i));
    const std::size_t len = ds.alpha[i].size();
    Word img;
    if (k < len) {
      expand(blocks[k - 1], img);
    } else {
      for (std::size_t j = k - 1; j < blocks.size(); ++j) expand(blocks[j], img);
    }
    rules.push_back(std::move(img));
    cs.h.push_back(ds.alpha[i][k - 1]);
  }
  cs.theta = Substitution(Alphabet(names), std::move(rules));
  cs.primitive = is_primitive(cs.theta);
  if (!cs.primitive) fail("primitivity-check-failed", "letter expansion is not primitive");
  return cs;
}

namespace {

struct Parse {
  std::size_t begin = 0;  // position of the first seed letter
  std::size_t end = 0;    // position of the last seed letter
  Word z;                 // Z letters for [begin, end)
  bool ok = true;
  std::string error;
};

Parse p_parse(const Word& x, letter_t b, const ReturnWordSystem& rws,
              const std::vector<std::size_t>& first) {
  Parse p;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == b) pos.push_back(i);
  if (pos.size() < 2) {
    p.ok = false;
    p.error = "fewer than two seed letters";
    return p;
  }
  p.begin = pos.front();
  p.end = pos.back();
  for (std::size_t j = 0; j + 1 < pos.size(); ++j) {
    Word v = slice(x, pos[j], pos[j + 1]);
    auto i = rws.index_of(v);
    if (!i) {
      p.ok = false;
      p.error = "segment is not a return word";
      return p;
    }
    for (std::size_t k = 0; k < v.size(); ++k) p.z.push_back(static_cast<letter_t>(first[*i] + k));
  }
  return p;
}

}  // namespace

ConjugacyReport verify_conjugacy(const Substitution& s, const ReturnWordSystem& rws,
                                 const DerivedSubstitution& ds, const ConjugateSubstitution& cs,
                                 std::size_t depth) {
  ConjugacyReport rep;
  if (depth < 1) depth = 1;
  const letter_t b = rws.seed_letter;
  const std::size_t pmax = cs.p_block_size;
  std::vector<std::size_t> first(ds.alpha.size());
  for (std::size_t z = cs.z_index.size(); z-- > 0;)
    if (cs.z_index[z].second == 1) first[cs.z_index[z].first] = z;

  auto mismatch = [&](const std::string& check, const std::string& detail) {
    rep.ok = false;
    rep.failed_check = check;
    rep.counterexample = detail;
    return rep;
  };

  const std::size_t D = depth + 2 * pmax;
  LanguageTable ts = language_table(s, D);

  // p ∘ σ^M = θ ∘ p on complete return-word spans. This needs no θ language, so it runs
  // first and catches a wrong rule cheaply.
  const std::size_t M = ds.base_power * cs.psi_power;
  Word shift = rws.u;
  for (std::size_t k = 1; k < cs.psi_power; ++k) shift = concat(s.iterate(shift, ds.base_power), rws.u);
  for (const Word& x : ts.legal(D)) {
    Parse p = p_parse(x, b, rws, first);
    if (!p.ok) return mismatch("p-parse", s.alphabet().format(x) + ": " + p.error);
    Word span = slice(x, p.begin, p.end);
    Word img = s.iterate(concat(span, Word{b}), M);
    std::size_t span_len = s.iterate(span, M).size();
    Word seg = slice(img, shift.size(), shift.size() + span_len + 1);
    Parse q = p_parse(seg, b, rws, first);
    if (!q.ok || q.begin != 0 || q.end != span_len)
      return mismatch("intertwining", s.alphabet().format(span) + ": image does not parse");
    Word expected = cs.theta.apply(p.z);
    ++rep.intertwining_checked;
    if (q.z != expected)
      return mismatch("intertwining", s.alphabet().format(span) + ": θ image " +
                                          cs.theta.alphabet().format(expected) + " != parse " +
                                          cs.theta.alphabet().format(q.z));
  }

  LanguageTable tt = language_table(cs.theta, depth);

  // h carries legal θ-words to legal σ-words.
  for (std::size_t l = 1; l <= depth; ++l) {
    for (const Word& z : tt.legal(l)) {
      Word x;
      for (letter_t c : z) x.push_back(cs.h[c]);
      ++rep.theta_words_checked;
      if (!ts.is_legal(x))
        return mismatch("h-legality", cs.theta.alphabet().format(z) + " maps to illegal " +
                                          s.alphabet().format(x));
    }
  }

  // p parses legal σ-words into legal θ-words, and h inverts p.
  for (const Word& x : ts.legal(D)) {
    ++rep.sigma_words_checked;
    Parse p = p_parse(x, b, rws, first);
    if (!p.ok) return mismatch("p-parse", s.alphabet().format(x) + ": " + p.error);
    for (std::size_t i = 0; i < p.z.size(); ++i)
      if (cs.h[p.z[i]] != x[p.begin + i])
        return mismatch("h-inverts-p", s.alphabet().format(x));
    for (std::size_t i = 0; i + depth <= p.z.size(); ++i) {
      Word w = slice(p.z, i, i + depth);
      if (!tt.is_legal(w))
        return mismatch("p-legality", s.alphabet().format(x) + " parses to illegal " +
                                          cs.theta.alphabet().format(w));
    }
  }

  return rep;
}

Primitivization primitivize(const Substitution& s, std::size_t verify_depth) {
  Primitivization out;
  TamenessReport tr = decide_tameness(s);
  if (tr.verdict == Verdict::empty_subshift) fail("empty-subshift", "the subshift is empty");

  if (tr.verdict == Verdict::wild) {
    // Minimal and periodic: the subshift is a single periodic orbit.
    Word u = least_rotation(primitive_root(tr.witness->periodic_word));
    std::size_t L = std::max<std::size_t>(2 * u.size() + 2, 4);
    LanguageTable t = language_table(s, L);
    Word orbit;
    for (std::size_t k = 0; k < L + u.size() + 1; ++k) orbit.push_back(u[k % u.size()]);
    for (std::size_t l = 1; l <= L; ++l)
      for (const Word& w : t.legal(l))
        if (!is_factor(w, orbit))
          fail("not-minimal", "wild substitution whose subshift is not a single periodic orbit");
    std::vector<std::string> names;
    std::vector<letter_t> legal_letters;
    for (const Word& w : t.legal(1)) {
      legal_letters.push_back(w[0]);
      names.push_back(s.alphabet().name(w[0]));
    }
    Alphabet alpha(names);
    Word image;
    for (letter_t x : u)
      image.push_back(static_cast<letter_t>(
          std::find(legal_letters.begin(), legal_letters.end(), x) - legal_letters.begin()));
    out.periodic_bypass = true;
    out.conjugate.theta = Substitution(alpha, std::vector<Word>(names.size(), image));
    out.conjugate.h = legal_letters;
    out.conjugate.p_block_size = 1;
    out.conjugate.primitive = is_primitive(out.conjugate.theta);
    return out;
  }

  out.seed = find_seed(s);
  out.rws = return_words(s, *out.seed);
  out.derived = build_psi(s, *out.rws);
  out.conjugate = build_theta(*out.derived);
  out.report = verify_conjugacy(s, *out.rws, *out.derived, out.conjugate, verify_depth);
  return out;
}

}  // namespace substdyn
