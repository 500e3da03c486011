#include "substdyn/word.hpp"

#include "substdyn/errors.hpp"

#include <algorithm>
#include <cctype>

namespace substdyn {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) fail("invalid-alphabet", "empty letter name");
    for (char ch : n) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#')
        fail("invalid-alphabet", "letter name '" + n + "' contains a reserved character");
    }
    if (!index_.emplace(n, static_cast<letter_t>(i)).second)
      fail("invalid-alphabet", "duplicate letter '" + n + "'");
    if (n.size() != 1) compact_ = false;
  }
}

std::optional<letter_t> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

letter_t Alphabet::letter(std::string_view name) const {
  auto x = find(name);
  if (!x) fail("symbol-not-in-alphabet", "unknown letter '" + std::string(name) + "'");
  return *x;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact_ && i > 0) out += ' ';
    out += name(w[i]);
  }
  return out;
}

std::string Alphabet::format_token(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact_ && i > 0) out += '.';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) break;
    std::string_view tok = text.substr(i, j - i);
    if (auto x = find(tok)) {
      out.push_back(*x);
    } else {
      for (char ch : tok) out.push_back(letter(std::string_view(&ch, 1)));
    }
    i = j;
  }
  return out;
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](letter_t x) { return x < names_.size(); });
}

bool pointed_less(const PointedWord& a, const PointedWord& b) {
  if (a.word != b.word) return LengthLex{}(a.word, b.word);
  return a.origin < b.origin;
}

std::string format_pointed(const Alphabet& alphabet, const PointedWord& p) {
  Word left(p.word.begin(), p.word.begin() + static_cast<std::ptrdiff_t>(p.origin));
  Word right(p.word.begin() + static_cast<std::ptrdiff_t>(p.origin), p.word.end());
  if (alphabet.compact()) return alphabet.format(left) + "." + alphabet.format(right);
  return alphabet.format(left) + " . " + alphabet.format(right);
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word slice(const Word& w, std::size_t begin, std::size_t end) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(begin),
              w.begin() + static_cast<std::ptrdiff_t>(end));
}

bool is_factor(const Word& needle, const Word& hay) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

std::size_t count_letter(const Word& w, letter_t a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return slice(w, 0, p);
  }
  return w;
}

Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (rot < best) best = std::move(rot);
  }
  return best;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    // Compare w with its rotation by r without materializing it.
    bool decided = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      letter_t a = w[i];
      letter_t b = w[(i + r) % w.size()];
      if (a != b) {
        if (a > b) return false;
        decided = true;
        break;
      }
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace substdyn
