#include "substdyn/collaring.hpp"
#include "substdyn/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace substdyn;

TEST_SUITE("collaring") {
  TEST_CASE("fibonacci with a handle, radius one") {
    auto s = find_corpus("fib_handle")->substitution();
    auto c = collar(s, 1);
    std::set<std::string> legal;
    for (letter_t x : c.legal_letters()) legal.insert(c.name(x));
    CHECK(legal == std::set<std::string>{"0|001", "1|010", "2|021", "0|100", "0|101", "0|102",
                                         "1|210"});
    for (letter_t x : c.legal_letters()) CHECK(c.center(x) == c.context(x)[1]);
  }

  TEST_CASE("chacon, radius one") {
    auto s = find_corpus("chacon")->substitution();
    auto c = collar(s, 1);
    REQUIRE(c.legal_letters().size() == 5);
    const std::vector<std::string> n = {"", "a|aaa", "a|aab", "b|aba", "a|bab", "a|baa"};
    auto img = [&](int i) {
      std::string out;
      for (letter_t y : c.substitution().image(*c.find(s.alphabet().parse(n[i].substr(2)))))
        for (int k = 1; k <= 5; ++k)
          if (c.name(y) == n[k]) out += char('0' + k);
      return out;
    };
    CHECK(img(1) == "1235");
    CHECK(img(2) == "1234");
    CHECK(img(3) == "3");
    CHECK(img(4) == "5234");
    // σ(baa) = b.aaba.aaba, so the centre reads baa aab aba baa.
    CHECK(img(5) == "5235");
  }

  TEST_CASE("collared letters agree with collared legal words") {
    for (const char* name : {"fibonacci", "chacon", "fib_handle", "tame_abb", "acbd"}) {
      auto s = find_corpus(name)->substitution();
      for (std::size_t n = 0; n <= 2; ++n) {
        auto c = collar(s, n);
        auto t = language_table(s, 2 * n + 1);
        std::set<Word> from_words(t.legal(2 * n + 1).begin(), t.legal(2 * n + 1).end());
        std::set<Word> from_letters;
        for (letter_t x : c.legal_letters()) from_letters.insert(c.context(x));
        CHECK(from_words == from_letters);
      }
    }
  }

  TEST_CASE("legal letters map to legal letters") {
    auto c = collar(find_corpus("fib_handle")->substitution(), 2);
    for (letter_t x : c.legal_letters())
      for (letter_t y : c.substitution().image(x)) CHECK(c.is_legal(y));
  }

  TEST_CASE("forgetting commutes with the substitution") {
    auto s = find_corpus("chacon")->substitution();
    auto c2 = collar(s, 2);
    auto c1 = collar(s, 1);
    auto f = forget_map(c2, c1);
    for (letter_t x : c2.legal_letters()) {
      Word a;
      for (letter_t y : c2.substitution().image(x)) a.push_back(f[y]);
      CHECK(a == c1.substitution().image(f[x]));
      CHECK(c1.center(f[x]) == c2.center(x));
    }
    auto c1b = forget(c2, 1);
    CHECK(c1b.legal_letters().size() == c1.legal_letters().size());
  }

  TEST_CASE("radius zero is the base substitution on legal letters") {
    auto s = find_corpus("fibonacci")->substitution();
    auto c = collar(s, 0);
    CHECK(c.legal_letters().size() == 2);
    for (letter_t x : c.legal_letters()) CHECK(c.context(x).size() == 1);
  }
}
