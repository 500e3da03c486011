// Prints one line per acceptance criterion and exits nonzero if any fails.
#include "substdyn/cis.hpp"
#include "substdyn/classification.hpp"
#include "substdyn/corpus.hpp"
#include "substdyn/errors.hpp"
#include "substdyn/language.hpp"
#include "substdyn/primitivization.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace substdyn;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

Substitution entry(const std::string& name) { return find_corpus(name)->substitution(); }

std::vector<std::size_t> h1_profile(const CisLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& n : l.nodes) out.push_back(n.h1.limit.eventual_rank);
  return out;
}

std::vector<std::size_t> quotient_profile(const CisLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& n : l.nodes) out.push_back(n.quotient_h1.limit.eventual_rank);
  return out;
}

void criterion1(Check& c) {
  auto w = entry("wild_ab");
  auto r = decide_tameness(w);
  c.expect(r.verdict == Verdict::wild && r.witness &&
               w.alphabet().format(wild_periodic_word(w, *r.witness)) == "b",
           "a->ab, b->b wild with periodic word b");
  c.expect(decide_tameness(entry("tame_abb")).verdict == Verdict::tame, "a->abb, b->bbb tame");
  auto ch = decide_tameness(entry("chacon"));
  c.expect(ch.verdict == Verdict::tame && ch.n_sigma == 2, "Chacon tame with N = 2");
  c.expect(decide_tameness(entry("empty")).verdict == Verdict::empty_subshift,
           "a->b, b->a empty");
}

void criterion2(Check& c) {
  auto s = entry("wild_ab");
  auto t = language_table(s, 2);
  Word ab = s.alphabet().parse("ab");
  c.expect(t.admits(ab) && !t.is_legal(ab), "ab admitted but not legal");
  auto x = entry("square_language");
  Word w = x.alphabet().parse("0 0b");
  c.expect(language_table(x, 4).is_legal(w), "0 0b legal for the substitution");
  c.expect(!language_table(power(x, 2), 4).is_legal(w), "0 0b not legal for its square");
}

void criterion3(Check& c) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto s = parse_substitution(sigma_n_text(n));
    auto p = primitivize(s);
    bool ok = p.derived && p.derived->psi.size() == n && p.derived->primitive;
    for (letter_t i = 0; ok && i < n; ++i) {
      Word want;
      for (letter_t j = 0; j < n; ++j) want.push_back(j);
      want.push_back(i);
      ok = p.derived->psi.image(i) == want;
    }
    c.expect(ok, "psi_" + std::to_string(n));
    c.expect(p.report && p.report->ok, "conjugacy for sigma_" + std::to_string(n));
  }
  auto s3 = parse_substitution(sigma_n_text(3));
  auto p = primitivize(s3, 6);
  auto want = entry("theta_sigma3");
  bool table = p.conjugate.theta.size() == want.size();
  if (table) table = Substitution(want.alphabet(), p.conjugate.theta.rules()) == want;
  c.expect(table, "theta table for sigma_3");
  std::string h;
  for (letter_t z : p.conjugate.h) h += s3.alphabet().name(z);
  c.expect(h == "ababbabbb", "h map for sigma_3");
  c.expect(p.report && p.report->ok, "conjugacy to depth 6");
  auto cs = p.conjugate;
  auto rules = cs.theta.rules();
  std::swap(rules[1], rules[2]);
  cs.theta = Substitution(cs.theta.alphabet(), rules);
  c.expect(!verify_conjugacy(s3, *p.rws, *p.derived, cs, 6).ok, "mutated rule detected");
}

void criterion4(Check& c) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto s = parse_substitution(sigma_n_text(n));
    auto ip = inverse_limit_presentation(s);
    c.expect(h1_presentation(ip.complex, ip.map).limit.eventual_rank == n,
             "rank H1 of sigma_" + std::to_string(n));
    auto psi = build_psi(s, return_words(s, find_seed(s))).psi;
    IntMatrix m = substitution_matrix(psi);
    c.expect(rank(m) == n, "full rank of the psi matrix");
    auto pp = inverse_limit_presentation(psi);
    c.expect(h1_presentation(pp.complex, pp.map).limit.eventual_rank == n,
             "rank H1 via psi_" + std::to_string(n));
  }
  auto fh = inverse_limit_presentation(entry("fib_handle"), 1);
  auto h = h1_presentation(fh.complex, fh.map);
  IntMatrix expected{{1, 1, 0}, {1, 2, 0}, {1, 1, 1}};
  c.expect(h.rank == 3 && h.limit.eventual_rank == 3, "fib+handle rank 3");
  c.expect(char_poly(h.induced_matrix) == char_poly(expected), "fib+handle characteristic polynomial");
  c.expect(probably_conjugate(h.induced_matrix, expected), "fib+handle conjugacy probes");
  auto ch = inverse_limit_presentation(entry("chacon"), 2);
  std::size_t ours = h1_presentation(ch.complex, ch.map).limit.eventual_rank;
  IntMatrix bd{{1, 1, 1, 0, 1}, {1, 1, 1, 1, 0}, {0, 0, 1, 0, 0}, {0, 1, 1, 1, 1}, {0, 1, 1, 0, 2}};
  IntMatrix h1{{0, 1, 0}, {-1, 3, 1}, {-1, 1, 1}};
  c.expect(ours == 2, "Chacon rank 2 at radius 2");
  c.expect(direct_limit(bd).eventual_rank == ours + 2, "Chacon five-edge exact sequence");
  c.expect(direct_limit(h1).eventual_rank == ours, "Chacon three generator matrix");
}

void criterion5(Check& c) {
  auto fh = enumerate_cis(entry("fib_handle"));
  c.expect(fh.nodes.size() == 3 && h1_profile(fh) == std::vector<std::size_t>{3, 2, 0},
           "fib+handle inclusion profile");
  c.expect(fh.nodes.size() == 3 && fh.nodes[1].quotient_h1.limit.eventual_rank == 1,
           "fib+handle quotient rank");
  auto two = enumerate_cis(entry("two_trib_bridge"));
  c.expect(h1_profile(two) == std::vector<std::size_t>{6, 6, 3, 3, 0},
           "two Tribonaccis inclusion profile");
  c.expect(quotient_profile(two) == std::vector<std::size_t>{0, 1, 3, 3, 6},
           "two Tribonaccis quotient profile");
  auto quad = enumerate_cis(entry("quad_fib_bridge"));
  std::multiset<std::size_t> mins;
  for (std::size_t i : quad.minimal_nodes()) mins.insert(quad.nodes[i].h1.limit.eventual_rank);
  c.expect(mins == std::multiset<std::size_t>{2, 4}, "Quadibonacci bridge minimal ranks");
  auto one = enumerate_cis(entry("aba_bbab_aa"));
  c.expect(one.nodes.size() == 3, "one nonempty proper invariant subset");
  auto prox = enumerate_cis(entry("proximal_fib"));
  bool chain = prox.nodes.size() == 4;
  for (std::size_t i = 0; chain && i + 1 < 4; ++i) chain = prox.contained[i + 1][i];
  c.expect(chain && h1_profile(prox) == std::vector<std::size_t>{4, 3, 2, 0},
           "proximal Fibonacci chain");
}

void criterion6(Check& c) {
  auto two = enumerate_cis(entry("two_trib_bridge"));
  auto quad = enumerate_cis(entry("quad_fib_bridge"));
  auto d = diagram_compare(two, quad);
  c.expect(d.cohomology_equal && d.isomorphic_shape && !d.profiles_equal, "bridges separated");
  c.notes << " " << d.witness << ";";
  auto e = diagram_compare(enumerate_cis(entry("fib_handle")), enumerate_cis(entry("trib")));
  c.expect(!e.isomorphic_shape, "fib+handle and Tribonacci separated");
  c.notes << " " << e.witness;
}

void criterion7(Check& c, const std::string& binary) {
  int rc = std::system((binary + " > property_tests.log 2>&1").c_str());
  c.expect(rc == 0, "property suite (see property_tests.log)");
}

}  // namespace

int main(int argc, char** argv) {
  std::string properties = argc > 1 ? argv[1] : "";
  struct Item {
    int id;
    double budget;
    std::function<void(Check&)> run;
  };
  std::vector<Item> items = {
      {1, 4, criterion1},
      {2, 5, criterion2},
      {3, 10, criterion3},
      {4, 60, criterion4},
      {5, 300, criterion5},
      {6, 300, criterion6},
      {7, 600, [&](Check& c) { criterion7(c, properties); }},
  };
  bool all = true;
  for (auto& item : items) {
    Check c;
    if (item.id == 7 && properties.empty()) {
      std::cout << "criterion 7: SKIP (no property binary given)\n";
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      item.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < item.budget, "time budget");
    all = all && c.ok;
    std::cout << "criterion " << item.id << ": " << (c.ok ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << c.notes.str() << "\n";
  }
  // The 87-letter substitution itself is not published; only its inputs can be checked.
  std::size_t r1 = 0, r2 = 0;
  {
    auto p1 = inverse_limit_presentation(entry("asym_sigma1"));
    auto p2 = inverse_limit_presentation(entry("asym_sigma2"));
    r1 = h1_presentation(p1.complex, p1.map).limit.eventual_rank;
    r2 = h1_presentation(p2.complex, p2.map).limit.eventual_rank;
  }
  std::cout << "criterion 8: SKIP (87-letter stretch computation is declared out of reach; "
            << "base substitutions have H1 ranks " << r1 << " and " << r2 << ")\n";
  return all ? 0 : 1;
}
