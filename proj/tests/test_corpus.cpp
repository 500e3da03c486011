#include "substdyn/classification.hpp"
#include "substdyn/corpus.hpp"
#include "substdyn/report.hpp"

#include <doctest.h>

#include <set>

using namespace substdyn;

TEST_SUITE("corpus") {
  TEST_CASE("entries parse and round trip") {
    std::set<std::string> names;
    for (const auto& e : corpus()) {
      CHECK(names.insert(e.name).second);
      auto s = e.substitution();
      CHECK(parse_substitution(format_substitution(s)) == s);
      CHECK(find_corpus(e.name).has_value());
    }
    CHECK_FALSE(find_corpus("no-such-entry").has_value());
  }

  TEST_CASE("sigma text") {
    CHECK(sigma_n_text(2) == "a -> ababba\nb -> b\n");
    auto s = parse_substitution(sigma_n_text(3));
    CHECK(s.alphabet().format(s.image(0)) == "ababbabbba");
  }

  TEST_CASE("extended example matches the extension") {
    auto fc = find_corpus("fib_chacon")->substitution();
    CHECK(fc.alphabet().format(fc.image(fc.alphabet().letter("X"))) == "1aXa0");
  }
}

TEST_SUITE("report") {
  TEST_CASE("analysis of the handle example") {
    auto a = analyze(find_corpus("fib_handle")->substitution());
    CHECK(a.exit_code == 0);
    CHECK(a.report["classification"]["verdict"] == "tame");
    CHECK(a.report["cohomology"]["h1"]["rank"] == 3);
    CHECK(a.report["cis"]["nodes"].size() == 3);
  }

  TEST_CASE("wild input skips later stages") {
    auto a = analyze(find_corpus("wild_ab")->substitution());
    CHECK(a.report["classification"]["verdict"] == "wild");
    CHECK(a.report["cis"] == "skipped: wild input");
  }

  TEST_CASE("empty subshift") {
    auto a = analyze(find_corpus("empty")->substitution());
    CHECK(a.exit_code == 2);
  }

  TEST_CASE("big integers") {
    CHECK(to_json(Integer(5)) == 5);
    Integer big = Integer(1) << 80;
    CHECK(to_json(big) == big.str());
  }

  TEST_CASE("dump is deterministic") {
    auto s = find_corpus("chacon")->substitution();
    CHECK(dump(analyze(s).report) == dump(analyze(s).report));
  }
}
