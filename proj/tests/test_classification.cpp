#include "substdyn/classification.hpp"
#include "substdyn/corpus.hpp"
#include "substdyn/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace substdyn;

namespace {

std::vector<std::string> names(const Substitution& s, const std::vector<letter_t>& ls) {
  std::vector<std::string> out;
  for (letter_t a : ls) out.push_back(s.alphabet().name(a));
  return out;
}

}  // namespace

TEST_SUITE("classification") {
  TEST_CASE("bounded letters") {
    auto s = make_substitution({{"a", "aaca"}, {"b", "b"}, {"c", "bb"}});
    auto c = classify_letters(s);
    CHECK(names(s, c.bounded) == std::vector<std::string>{"b", "c"});
    CHECK(names(s, c.expanding) == std::vector<std::string>{"a"});

    auto t = make_substitution({{"a", "abb"}, {"b", "bbb"}});
    CHECK(classify_letters(t).bounded.empty());

    auto w = make_substitution({{"a", "ab"}, {"b", "b"}});
    auto cw = classify_letters(w);
    CHECK(names(w, cw.bounded) == std::vector<std::string>{"b"});
    CHECK(names(w, cw.right) == std::vector<std::string>{"a"});
    CHECK(cw.left.empty());
  }

  TEST_CASE("frontiers") {
    auto s = find_corpus("chacon")->substitution();
    auto c = classify_letters(s);
    letter_t a = s.alphabet().letter("a");
    CHECK(right_frontier(s, c)[a] == a);
    CHECK(left_frontier(s, c)[a] == a);
  }

  TEST_CASE("wild example") {
    auto s = make_substitution({{"a", "ab"}, {"b", "b"}});
    auto r = decide_tameness(s);
    CHECK(r.verdict == Verdict::wild);
    REQUIRE(r.witness);
    CHECK(r.witness->letter == s.alphabet().letter("a"));
    CHECK(r.witness->side == Side::right);
    CHECK(s.alphabet().format(r.witness->periodic_word) == "b");
    CHECK(s.alphabet().format(wild_periodic_word(s, *r.witness)) == "b");
  }

  TEST_CASE("wild with a two letter bounded period") {
    auto s = find_corpus("abc_bounded")->substitution();
    auto r = decide_tameness(s);
    REQUIRE(r.witness);
    CHECK(s.alphabet().name(r.witness->letter) == "a");
    Word u = wild_periodic_word(s, *r.witness);
    CHECK(s.alphabet().format(u) == "bc");
    CHECK(periodic_word_is_legal(language_table(s, 8), u, 8));
  }

  TEST_CASE("tame examples") {
    auto s = make_substitution({{"a", "abb"}, {"b", "bbb"}});
    auto r = decide_tameness(s);
    CHECK(r.verdict == Verdict::tame);
    CHECK(r.n_sigma == 1);
    CHECK(r.bounded_legal_words == std::vector<Word>{Word{}});

    auto ch = decide_tameness(find_corpus("chacon")->substitution());
    CHECK(ch.verdict == Verdict::tame);
    CHECK(ch.n_sigma == 2);
  }

  TEST_CASE("empty subshift") {
    auto r = decide_tameness(make_substitution({{"a", "b"}, {"b", "a"}}));
    CHECK(r.verdict == Verdict::empty_subshift);
  }

  TEST_CASE("fixed periodic point beside a fibonacci part") {
    auto s = find_corpus("fib_fixed_point")->substitution();
    auto r = decide_tameness(s);
    if (r.verdict == Verdict::wild) {
      REQUIRE(r.witness);
      CHECK(s.alphabet().format(wild_periodic_word(s, *r.witness)) == "c");
    }
    auto p = periodic_point_search(s, 1);
    REQUIRE(p.size() == 1);
    CHECK(s.alphabet().format(p[0]) == "c");
  }

  TEST_CASE("seed for the sigma family") {
    for (std::size_t n = 2; n <= 4; ++n) {
      auto s = parse_substitution(sigma_n_text(n));
      auto seed = find_seed(s);
      CHECK(seed.power == 1);
      CHECK(seed.n_for_doubling == 1);
      CHECK(s.alphabet().name(seed.seed_letter) == "a");
      // S = {ab^i.b^j a : 1 <= i + j <= n}; aa is not legal
      std::vector<std::string> got;
      for (const auto& p : seed.seed_set) got.push_back(format_pointed(s.alphabet(), p));
      std::vector<std::string> want;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i == 0 ? 1 : 0; i + j <= n; ++j)
          want.push_back("a" + std::string(i, 'b') + "." + std::string(j, 'b') + "a");
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }

  TEST_CASE("seed for fibonacci") {
    auto s = find_corpus("fibonacci")->substitution();
    auto seed = find_seed(s);
    CHECK(s.alphabet().name(seed.seed_letter) == "0");
    CHECK(seed.power >= 1);
    CHECK(seed.power <= seed.seed_set.size());
    Word img = s.iterate(seed.seed_letter, seed.n_for_doubling);
    CHECK(count_letter(img, seed.seed_letter) >= 2);
  }

  TEST_CASE("seed rejects wild input") {
    CHECK_THROWS_AS(find_seed(make_substitution({{"a", "ab"}, {"b", "b"}})), Error);
  }
}
