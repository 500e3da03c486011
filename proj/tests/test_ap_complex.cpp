#include "substdyn/ap_complex.hpp"
#include "substdyn/classification.hpp"
#include "substdyn/corpus.hpp"

#include <doctest.h>

using namespace substdyn;

TEST_SUITE("ap_complex") {
  TEST_CASE("fibonacci with a handle") {
    auto p = inverse_limit_presentation(find_corpus("fib_handle")->substitution(), 1);
    CHECK(p.complex.edge_count() == 7);
    CHECK(p.complex.vertex_count() == 5);
    CHECK(p.complex.component_count == 1);
    auto h = h1_presentation(p.complex, p.map);
    CHECK(h.rank == 3);
    CHECK(h.limit.eventual_rank == 3);
    CHECK(h.limit.unimodular_on_image);
    IntMatrix expected{{1, 1, 0}, {1, 2, 0}, {1, 1, 1}};
    CHECK(det(expected) == 1);
    CHECK(probably_conjugate(h.induced_matrix, expected));
    CHECK(probably_conjugate(h.induced_matrix.transpose(), expected.transpose()));
  }

  TEST_CASE("euler characteristic") {
    for (const auto& e : corpus()) {
      auto s = e.substitution();
      if (decide_tameness(s).verdict != Verdict::tame) continue;
      if (s.size() > 6) continue;
      auto p = inverse_limit_presentation(s);
      const Graph& g = p.complex.graph;
      auto h = h1_presentation(p.complex, p.map);
      CHECK_MESSAGE(h.rank + g.vertex_count == g.edge_count() + p.complex.component_count,
                    e.name);
    }
  }

  TEST_CASE("chacon") {
    auto s = find_corpus("chacon")->substitution();
    auto p = inverse_limit_presentation(s, 2);
    auto h = h1_presentation(p.complex, p.map);
    CHECK(h.limit.eventual_rank == 2);
    auto q = inverse_limit_presentation(s);
    CHECK(q.n_sigma == 2);
    CHECK(h1_presentation(q.complex, q.map).limit.eventual_rank == 2);
  }

  TEST_CASE("fibonacci") {
    auto p = inverse_limit_presentation(find_corpus("fibonacci")->substitution());
    auto h = h1_presentation(p.complex, p.map);
    CHECK(h.limit.eventual_rank == 2);
    CHECK(h.limit.unimodular_on_image);
  }

  TEST_CASE("sigma family") {
    for (std::size_t n = 2; n <= 4; ++n) {
      auto p = inverse_limit_presentation(parse_substitution(sigma_n_text(n)));
      CHECK(h1_presentation(p.complex, p.map).limit.eventual_rank == n);
    }
  }

  TEST_CASE("functoriality of the induced map") {
    for (const char* name : {"fib_handle", "chacon", "acbd"}) {
      auto s = find_corpus(name)->substitution();
      auto p = inverse_limit_presentation(s);
      auto p2 = inverse_limit_presentation(power(s, 2), p.collared.radius());
      CellularMap ff = compose(p.map, p.map);
      REQUIRE(p2.complex.edge_count() == p.complex.edge_count());
      CHECK(to_matrix(ff.chain_map()) == to_matrix(power(p.map.chain_map(), 2)));
      CHECK(to_matrix(ff.chain_map()) == to_matrix(p2.map.chain_map()));
    }
  }

  TEST_CASE("cycle basis spans the kernel of the boundary") {
    auto p = inverse_limit_presentation(find_corpus("fib_handle")->substitution(), 2);
    const Graph& g = p.complex.graph;
    auto cb = cycle_basis(g);
    for (const auto& z : cb.cycles) {
      std::vector<long long> bd(g.vertex_count, 0);
      for (std::size_t e = 0; e < z.size(); ++e) {
        bd[g.target[e]] += z[e];
        bd[g.source[e]] -= z[e];
      }
      for (long long x : bd) CHECK(x == 0);
    }
  }

  TEST_CASE("circle") {
    Graph g;
    g.vertex_count = 1;
    g.source = {0};
    g.target = {0};
    ChainMap f;
    f.columns = {{{0, Integer(2)}}};
    auto h = h1_presentation(g, f);
    CHECK(h.rank == 1);
    CHECK(h.limit.eventual_rank == 1);
    CHECK_FALSE(h.limit.unimodular_on_image);
    CHECK(count_components(g) == 1);
  }
}
