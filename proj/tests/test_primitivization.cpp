#include "substdyn/corpus.hpp"
#include "substdyn/errors.hpp"
#include "substdyn/primitivization.hpp"

#include <doctest.h>

#include <map>

using namespace substdyn;

namespace {

std::map<std::string, std::string> table(const Substitution& s) {
  std::map<std::string, std::string> out;
  for (letter_t a = 0; a < s.size(); ++a)
    out[s.alphabet().name(a)] = s.alphabet().format(s.image(a));
  return out;
}

std::vector<std::string> fmt(const Alphabet& a, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(a.format(w));
  return out;
}

}  // namespace

TEST_SUITE("primitivization") {
  TEST_CASE("return words of the sigma family") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto s = parse_substitution(sigma_n_text(n));
      auto rws = return_words(s, find_seed(s));
      std::vector<std::string> want;
      for (std::size_t i = 1; i <= n; ++i) want.push_back("a" + std::string(i, 'b'));
      CHECK(fmt(s.alphabet(), rws.return_words) == want);
      CHECK(rws.u.empty());
      CHECK(rws.head_blocks.size() == n + 1);
    }
  }

  TEST_CASE("psi for the sigma family") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto s = parse_substitution(sigma_n_text(n));
      auto ds = build_psi(s, return_words(s, find_seed(s)));
      CHECK(ds.primitive);
      REQUIRE(ds.psi.size() == n);
      // i -> 1 2 ... n i
      for (letter_t i = 0; i < n; ++i) {
        Word want;
        for (letter_t j = 0; j < n; ++j) want.push_back(j);
        want.push_back(i);
        CHECK(ds.psi.image(i) == want);
      }
    }
  }

  TEST_CASE("length bookkeeping") {
    for (const char* name : {"chacon", "fibonacci", "bounded_growth", "acbd"}) {
      auto s = find_corpus(name)->substitution();
      auto ds = build_psi(s, return_words(s, find_seed(s)));
      Substitution sn = power(s, ds.base_power);
      for (letter_t v = 0; v < ds.psi.size(); ++v) {
        std::size_t total = 0;
        for (letter_t x : ds.psi.image(v)) total += ds.alpha[x].size();
        CHECK(total == sn.iterate(ds.alpha[v], 1).size());
      }
    }
  }

  TEST_CASE("chacon has a single letter return word") {
    auto s = find_corpus("chacon")->substitution();
    auto rws = return_words(s, find_seed(s));
    CHECK(rws.index_of(s.alphabet().parse("a")).has_value());
    auto ds = build_psi(s, rws);
    CHECK(ds.psi.size() == 2);
    CHECK(ds.primitive);
  }

  TEST_CASE("theta for sigma 3") {
    auto s = parse_substitution(sigma_n_text(3));
    auto p = primitivize(s);
    REQUIRE(p.report);
    CHECK(p.report->ok);
    auto want = find_corpus("theta_sigma3")->substitution();
    const auto& theta = p.conjugate.theta;
    REQUIRE(theta.size() == want.size());
    // Letters sorted by (return word, index) line up with A, B, ... of the table.
    Substitution renamed(want.alphabet(), theta.rules());
    CHECK(table(renamed) == table(want));
    std::string h;
    for (letter_t z : p.conjugate.h) h += s.alphabet().name(z);
    CHECK(h == "ababbabbb");
    CHECK(p.conjugate.primitive);
  }

  TEST_CASE("all single position return words give theta = psi") {
    auto s = find_corpus("fibonacci")->substitution();
    auto p = primitivize(s);
    REQUIRE(p.derived);
    bool single = true;
    for (const Word& w : p.derived->alpha) single = single && w.size() == 1;
    if (single) CHECK(p.conjugate.theta.rules() == p.derived->psi.rules());
    REQUIRE(p.report);
    CHECK(p.report->ok);
  }

  TEST_CASE("conjugacy verification catches a mutated rule") {
    for (const char* name : {"chacon", "sigma_3"}) {
      auto s = find_corpus(name)->substitution();
      auto p = primitivize(s);
      REQUIRE(p.report);
      CHECK(p.report->ok);
      auto cs = p.conjugate;
      auto rules = cs.theta.rules();
      std::swap(rules[0], rules[1]);
      if (rules == cs.theta.rules()) rules[0].push_back(rules[0].front());
      cs.theta = Substitution(cs.theta.alphabet(), rules);
      auto r = verify_conjugacy(s, *p.rws, *p.derived, cs, 6);
      CHECK_FALSE(r.ok);
      CHECK_FALSE(r.failed_check.empty());
    }
  }

  TEST_CASE("periodic inputs bypass the pipeline") {
    auto s = make_substitution({{"a", "ab"}, {"b", "b"}});
    auto p = primitivize(s);
    CHECK(p.periodic_bypass);
    CHECK(p.conjugate.primitive);
    CHECK(format_substitution(p.conjugate.theta) == "b -> b\n");
  }
}
