#include "substdyn/substitution.hpp"

#include "substdyn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace substdyn {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  if (rules_.size() != alphabet_.size())
    fail("invalid-substitution", "rule count does not match alphabet size");
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    if (rules_[a].empty())
      fail("invalid-substitution", "image of '" + alphabet_.name(a) + "' is empty");
    if (!alphabet_.contains(rules_[a]))
      fail("symbol-not-in-alphabet", "image of '" + alphabet_.name(a) + "' leaves the alphabet");
  }
}

std::size_t Substitution::max_image_length() const {
  std::size_t m = 0;
  for (const auto& r : rules_) m = std::max(m, r.size());
  return m;
}

Word Substitution::apply(const Word& w) const {
  if (!alphabet_.contains(w)) fail("symbol-not-in-alphabet", "word leaves the alphabet");
  std::size_t len = 0;
  for (letter_t x : w) len += rules_[x].size();
  if (len > kMaxWordLength) fail("length-limit", "iterated word exceeds the length limit");
  Word out;
  out.reserve(len);
  for (letter_t x : w) out.insert(out.end(), rules_[x].begin(), rules_[x].end());
  return out;
}

Word Substitution::iterate(const Word& w, std::size_t n) const {
  Word cur = w;
  if (!alphabet_.contains(cur)) fail("symbol-not-in-alphabet", "word leaves the alphabet");
  for (std::size_t k = 0; k < n; ++k) {
    Word next = apply(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

Word iterate(const Substitution& s, const Word& w, std::size_t n) { return s.iterate(w, n); }

namespace {

std::vector<std::pair<std::string_view, std::size_t>> tokens(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i), i + 1);
    i = j;
  }
  return out;
}

struct RawRule {
  std::string lhs;
  std::vector<std::pair<std::string, std::size_t>> rhs;
  std::size_t line;
};

}  // namespace

Substitution parse_substitution(std::string_view text) {
  std::vector<RawRule> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto arrow = line.find("->");
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (arrow == std::string_view::npos) throw ParseError("expected '->'", line_no, toks[0].second);
    auto lhs = tokens(line.substr(0, arrow));
    if (lhs.size() != 1)
      throw ParseError("expected exactly one letter before '->'", line_no,
                       lhs.empty() ? 1 : lhs[1 % lhs.size()].second);
    RawRule r{std::string(lhs[0].first), {}, line_no};
    for (auto& [tok, col] : tokens(line.substr(arrow + 2)))
      r.rhs.emplace_back(std::string(tok), col + arrow + 2);
    if (r.rhs.empty()) throw ParseError("empty image", line_no, arrow + 3);
    raw.push_back(std::move(r));
    if (eol == text.size()) break;
  }
  if (raw.empty()) throw ParseError("no rules", line_no, 1);

  std::vector<std::string> names;
  for (const auto& r : raw) {
    if (std::find(names.begin(), names.end(), r.lhs) != names.end())
      throw ParseError("duplicate rule for '" + r.lhs + "'", r.line, 1);
    names.push_back(r.lhs);
  }
  Alphabet alphabet(names);
  std::vector<Word> rules(names.size());
  for (const auto& r : raw) {
    Word& img = rules[alphabet.letter(r.lhs)];
    for (const auto& [tok, col] : r.rhs) {
      if (auto x = alphabet.find(tok)) {
        img.push_back(*x);
        continue;
      }
      for (std::size_t k = 0; k < tok.size(); ++k) {
        auto x = alphabet.find(std::string_view(&tok[k], 1));
        if (!x)
          throw ParseError("unknown letter '" + tok.substr(k, 1) + "' in '" + tok + "'", r.line,
                           col + k);
        img.push_back(*x);
      }
    }
  }
  return Substitution(std::move(alphabet), std::move(rules));
}

Substitution make_substitution(const std::vector<std::pair<std::string, std::string>>& rules) {
  std::ostringstream text;
  for (const auto& [lhs, rhs] : rules) text << lhs << " -> " << rhs << '\n';
  return parse_substitution(text.str());
}

std::string format_substitution(const Substitution& s) {
  std::string out;
  for (letter_t a = 0; a < s.size(); ++a) {
    out += s.alphabet().name(a);
    out += " -> ";
    out += s.alphabet().format(s.image(a));
    out += '\n';
  }
  return out;
}

IntMatrix substitution_matrix(const Substitution& s) {
  IntMatrix m(s.size(), s.size());
  for (letter_t j = 0; j < s.size(); ++j)
    for (letter_t i : s.image(j)) m(i, j) += 1;
  return m;
}

bool is_primitive(const Substitution& s) {
  const std::size_t n = s.size();
  if (n == 0) return false;
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (letter_t j = 0; j < n; ++j)
    for (letter_t i : s.image(j)) m[i][j] = 1;
  auto p = m;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool positive = true;
    for (std::size_t i = 0; i < n && positive; ++i)
      for (std::size_t j = 0; j < n && positive; ++j) positive = p[i][j];
    if (positive) return true;
    std::vector<std::vector<char>> q(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (p[i][l])
          for (std::size_t j = 0; j < n; ++j)
            if (m[l][j]) q[i][j] = 1;
    p = std::move(q);
  }
  return false;
}

Substitution power(const Substitution& s, std::size_t n) {
  if (n == 0) fail("invalid-argument", "substitution power must be positive");
  std::vector<Word> rules;
  for (letter_t a = 0; a < s.size(); ++a) {
    Word w{a};
    for (std::size_t k = 0; k < n; ++k) w = s.apply(w);
    rules.push_back(std::move(w));
  }
  return Substitution(s.alphabet(), std::move(rules));
}

}  // namespace substdyn
