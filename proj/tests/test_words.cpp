#include "substdyn/errors.hpp"
#include "substdyn/substitution.hpp"

#include <doctest.h>

using namespace substdyn;

TEST_SUITE("words") {
  TEST_CASE("alphabet formatting") {
    Alphabet a({"a", "b"});
    CHECK(a.compact());
    CHECK(a.format(a.parse("abba")) == "abba");
    Alphabet m({"0", "0b", "1"});
    CHECK_FALSE(m.compact());
    Word w = m.parse("0 0b 1");
    CHECK(w == Word{0, 1, 2});
    CHECK(m.format(w) == "0 0b 1");
    CHECK(m.format_token(w) == "0.0b.1");
    CHECK_THROWS(Alphabet({"a", "a"}));
    CHECK_THROWS(Alphabet({"a b"}));
  }

  TEST_CASE("length-lex order and Lyndon words") {
    CHECK(LengthLex{}(Word{1}, Word{0, 0}));
    CHECK(LengthLex{}(Word{0, 1}, Word{1, 0}));
    CHECK(is_lyndon(Word{0, 0, 1}));
    CHECK_FALSE(is_lyndon(Word{0, 1, 0}));
    CHECK(least_rotation(Word{1, 0, 0}) == Word{0, 0, 1});
    CHECK(primitive_root(Word{0, 1, 0, 1}) == Word{0, 1});
  }

  TEST_CASE("pointed words") {
    Alphabet a({"a", "b"});
    PointedWord p{a.parse("aba"), 1};
    CHECK(format_pointed(a, p) == "a.ba");
  }
}

TEST_SUITE("substitution") {
  TEST_CASE("iteration") {
    auto fib = make_substitution({{"0", "001"}, {"1", "01"}});
    CHECK(fib.alphabet().format(fib.iterate(fib.alphabet().parse("0"), 2)) == "00100101");
    auto ab = make_substitution({{"a", "ab"}, {"b", "b"}});
    CHECK(ab.alphabet().format(ab.iterate(0, 3)) == "abbb");
  }

  TEST_CASE("matrix and primitivity") {
    auto fib = make_substitution({{"0", "001"}, {"1", "01"}});
    CHECK(substitution_matrix(fib) == IntMatrix{{2, 1}, {1, 1}});
    CHECK(substitution_matrix(make_substitution({{"a", "a"}})) == IntMatrix{{1}});
    CHECK(is_primitive(fib));
    CHECK_FALSE(is_primitive(make_substitution({{"a", "ab"}, {"b", "b"}})));
    CHECK_FALSE(is_primitive(make_substitution({{"a", "b"}, {"b", "a"}})));
    for (std::size_t n = 2; n <= 5; ++n) {
      std::vector<std::pair<std::string, std::string>> rules;
      std::string head;
      for (std::size_t i = 1; i <= n; ++i) head += std::to_string(i);
      for (std::size_t i = 1; i <= n; ++i) rules.emplace_back(std::to_string(i), head + std::to_string(i));
      IntMatrix m = substitution_matrix(make_substitution(rules));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(m(i, j) == (i == j ? 2 : 1));
    }
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_substitution("a -> ab\nb -> bc\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_substitution("a -> ab\na -> b\n"), ParseError);
    CHECK_THROWS_AS(parse_substitution("a ab\n"), ParseError);
    CHECK_THROWS_AS(parse_substitution("# nothing\n"), ParseError);
  }

  TEST_CASE("multi-character letters") {
    auto s = parse_substitution("0 -> 0b 0b 1 0b\n0b -> 0 0 1 0\n1 -> 1\nX -> 0 0b\n");
    CHECK(s.size() == 4);
    CHECK(s.alphabet().format(s.image(0)) == "0b 0b 1 0b");
    CHECK(parse_substitution(format_substitution(s)) == s);
  }

  TEST_CASE("power") {
    auto fib = make_substitution({{"0", "001"}, {"1", "01"}});
    auto f2 = power(fib, 2);
    CHECK(f2.alphabet().format(f2.image(0)) == "00100101");
    CHECK(f2.alphabet().format(f2.image(1)) == "00101");
  }
}
