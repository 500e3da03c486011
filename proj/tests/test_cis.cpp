#include "substdyn/cis.hpp"
#include "substdyn/corpus.hpp"

#include <doctest.h>

#include <algorithm>

using namespace substdyn;

namespace {

EdgeSet edges_named(const InverseLimitPresentation& p, const std::vector<std::string>& names) {
  EdgeSet out;
  for (const std::string& n : names)
    for (std::size_t e = 0; e < p.complex.edge_count(); ++e)
      if (p.collared.name(p.complex.edges[e]) == n) out.push_back(e);
  REQUIRE(out.size() == names.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> h1_ranks(const CisLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& n : l.nodes) out.push_back(n.h1.limit.eventual_rank);
  return out;
}

std::vector<std::size_t> quotient_ranks(const CisLattice& l) {
  std::vector<std::size_t> out;
  for (const auto& n : l.nodes) out.push_back(n.quotient_h1.limit.eventual_rank);
  return out;
}

}  // namespace

TEST_SUITE("cis") {
  TEST_CASE("fibonacci with a handle") {
    auto p = inverse_limit_presentation(find_corpus("fib_handle")->substitution(), 1);
    CisContext ctx(p.collared, p.complex, p.map);
    CHECK(ctx.canonicalize(ctx.all_edges()) == ctx.all_edges());
    auto blue = edges_named(p, {"0|001", "1|010", "0|100", "0|101"});
    CHECK(ctx.canonicalize(blue) == blue);
    CHECK(ctx.eventual_range(ctx.all_edges()) == ctx.all_edges());

    auto l = enumerate_cis(p);
    CHECK(l.consistent);
    REQUIRE(l.nodes.size() == 3);
    CHECK(l.nodes[1].edges == blue);
    CHECK(h1_ranks(l) == std::vector<std::size_t>{3, 2, 0});
    CHECK(quotient_ranks(l) == std::vector<std::size_t>{0, 1, 3});
    CHECK(l.minimal_nodes() == std::vector<std::size_t>{1});
  }

  TEST_CASE("chacon") {
    auto p = inverse_limit_presentation(find_corpus("chacon")->substitution(), 1);
    CisContext ctx(p.collared, p.complex, p.map);
    auto b = edges_named(p, {"b|aba"});
    CHECK(ctx.eventual_range(b) == b);
    CHECK(ctx.canonicalize(b).empty());
    auto l = enumerate_cis(p);
    CHECK(l.nodes.size() == 2);
  }

  TEST_CASE("augmented handle has a ten edge eventual range") {
    auto s = find_corpus("fib_handle_augmented")->substitution();
    auto p = inverse_limit_presentation(s, 2);
    CisContext ctx(p.collared, p.complex, p.map);
    auto g = edges_named(p, {"a|abaab", "a|ababa", "a|ababc", "a|baaba", "a|bcaab", "a|caaba",
                             "b|aabaa", "b|aabab", "b|babaa", "b|babca"});
    CHECK(ctx.eventual_range(g) == g);
    EdgeSet img = g;
    bool returns = false;
    for (int i = 0; i < 8 && !returns; ++i) {
      img = ctx.image(img);
      returns = img == g;
    }
    CHECK(returns);
  }

  TEST_CASE("bridged tribonaccis") {
    auto l = enumerate_cis(find_corpus("two_trib_bridge")->substitution());
    CHECK(l.consistent);
    CHECK(h1_ranks(l) == std::vector<std::size_t>{6, 6, 3, 3, 0});
    CHECK(quotient_ranks(l) == std::vector<std::size_t>{0, 1, 3, 3, 6});
  }

  TEST_CASE("one proper node") {
    auto l = enumerate_cis(find_corpus("aba_bbab_aa")->substitution());
    CHECK(l.nodes.size() == 3);
  }

  TEST_CASE("proximal fibonacci") {
    auto l = enumerate_cis(find_corpus("proximal_fib")->substitution());
    CHECK(h1_ranks(l) == std::vector<std::size_t>{4, 3, 2, 0});
  }

  TEST_CASE("comparison") {
    auto two = enumerate_cis(find_corpus("two_trib_bridge")->substitution());
    auto quad = enumerate_cis(find_corpus("quad_fib_bridge")->substitution());
    auto c = diagram_compare(two, quad);
    CHECK(c.isomorphic_shape);
    CHECK(c.cohomology_equal);
    CHECK_FALSE(c.profiles_equal);
    CHECK(c.witness == "minimal-node H1 ranks {3,3} vs {4,2}");

    auto fh = enumerate_cis(find_corpus("fib_handle")->substitution());
    auto tr = enumerate_cis(find_corpus("trib")->substitution());
    auto d = diagram_compare(fh, tr);
    CHECK_FALSE(d.isomorphic_shape);
    CHECK(d.witness == "node counts differ: 3 vs 2");

    auto self = diagram_compare(two, two);
    CHECK(self.isomorphic_shape);
    CHECK(self.profiles_equal);
    CHECK(self.witness.empty());
  }

  TEST_CASE("lattice invariants") {
    for (const char* name : {"fib_handle", "proximal_fib", "aba_bbab_aa", "fib_chacon"}) {
      auto p = inverse_limit_presentation(find_corpus(name)->substitution());
      CisContext ctx(p.collared, p.complex, p.map);
      auto l = enumerate_cis(p);
      for (std::size_t i = 0; i < l.nodes.size(); ++i) {
        const EdgeSet& k = l.nodes[i].edges;
        CHECK(ctx.canonicalize(k) == k);
        CHECK(l.nodes[i].leafless);
        EdgeSet img = k;
        for (std::size_t j = 0; j < l.power; ++j) img = ctx.image(img);
        CHECK(img == k);
        for (std::size_t j = i + 1; j < l.nodes.size(); ++j) CHECK(l.nodes[j].edges != k);
      }
      for (const auto& a : l.atoms)
        CHECK(std::find_if(l.nodes.begin(), l.nodes.end(),
                           [&](const CisNode& n) { return n.edges == a; }) != l.nodes.end());
      for (std::size_t i = 0; i < l.nodes.size(); ++i)
        for (std::size_t j = 0; j < l.nodes.size(); ++j) {
          EdgeSet u;
          std::set_union(l.nodes[i].edges.begin(), l.nodes[i].edges.end(),
                         l.nodes[j].edges.begin(), l.nodes[j].edges.end(),
                         std::back_inserter(u));
          EdgeSet cu = ctx.canonicalize(u);
          CHECK(std::find_if(l.nodes.begin(), l.nodes.end(),
                             [&](const CisNode& n) { return n.edges == cu; }) != l.nodes.end());
        }
    }
  }
}
