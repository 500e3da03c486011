#include "substdyn/cis.hpp"

#include "substdyn/classification.hpp"
#include "substdyn/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace substdyn {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask to_mask(const EdgeSet& k, std::size_t n) {
  Mask m((n + 63) / 64, 0);
  for (std::size_t e : k) m[e / 64] |= std::uint64_t{1} << (e % 64);
  return m;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool contains(const EdgeSet& big, const EdgeSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool node_before(const EdgeSet& a, const EdgeSet& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::vector<std::size_t> vertex_power(const std::vector<std::size_t>& vmap, std::size_t n) {
  std::vector<std::size_t> out(vmap.size());
  std::iota(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (auto& v : out) v = vmap[v];
  return out;
}

std::size_t eventual_rank_of(const IntMatrix& a, const IntMatrix& map, const IntMatrix& b,
                             std::size_t d) {
  if (map.empty()) return 0;
  return rank(pow(a, static_cast<unsigned>(d)) * map * pow(b, static_cast<unsigned>(d)));
}

}  // namespace

CisContext::CisContext(const CollaredSubstitution& c, const APComplex& k, const CellularMap& f,
                       std::size_t order)
    : collared_(c), complex_(k), map_(f) {
  const Substitution& s = c.base();
  if (order == 0)
    order = std::min<std::size_t>(64, std::max<std::size_t>(8, 2 * s.max_image_length() * s.size()));
  order_ = order;
  const std::size_t n = c.radius();
  LanguageTable t = language_table(s, 2 * n + order + 1);
  fine_ = build_level(t, order);
  coarse_ = build_level(t, order - 1);
}

CisContext::Level CisContext::build_level(const LanguageTable& t, std::size_t m) const {
  const std::size_t n = collared_.radius();
  const std::size_t E = complex_.edge_count();
  Level level;
  const auto& verts = t.legal(2 * n + m);
  std::map<Word, std::size_t> index;
  for (const Word& w : verts) {
    Mask mask((E + 63) / 64, 0);
    std::vector<std::size_t> letters;
    bool ok = true;
    for (std::size_t i = 0; i + 2 * n + 1 <= w.size(); ++i) {
      auto c = collared_.find(slice(w, i, i + 2 * n + 1));
      std::optional<std::size_t> e;
      if (c) e = complex_.edge_of(*c);
      if (!e) {
        ok = false;
        break;
      }
      mask[*e / 64] |= std::uint64_t{1} << (*e % 64);
      letters.push_back(*e);
    }
    if (!ok) fail("internal", "legal window without a collared edge");
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    index.emplace(w, level.vertex_masks.size());
    level.vertex_masks.push_back(std::move(mask));
    level.vertex_letters.push_back(std::move(letters));
    level.vertex_words.push_back(w);
  }
  for (const Word& w : t.legal(2 * n + m + 1)) {
    auto a = index.find(slice(w, 0, w.size() - 1));
    auto b = index.find(slice(w, 1, w.size()));
    if (a != index.end() && b != index.end()) level.edges.emplace_back(a->second, b->second);
  }
  return level;
}

EdgeSet CisContext::run(const Level& level, const EdgeSet& k, std::vector<bool>* core_out) const {
  const std::size_t V = level.vertex_masks.size();
  Mask km = to_mask(k, complex_.edge_count());
  std::vector<std::size_t> keep_index(V, V);
  std::size_t kept = 0;
  for (std::size_t v = 0; v < V; ++v)
    if (subset(level.vertex_masks[v], km)) keep_index[v] = kept++;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : level.edges)
    if (keep_index[a] < V && keep_index[b] < V) edges.emplace_back(keep_index[a], keep_index[b]);
  std::vector<bool> core = bi_infinite_core(kept, edges);
  std::vector<bool> in(complex_.edge_count(), false);
  std::vector<bool> full(V, false);
  for (std::size_t v = 0; v < V; ++v) {
    if (keep_index[v] == V || !core[keep_index[v]]) continue;
    full[v] = true;
    for (std::size_t e : level.vertex_letters[v]) in[e] = true;
  }
  if (core_out) *core_out = std::move(full);
  EdgeSet out;
  for (std::size_t e = 0; e < in.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

EdgeSet CisContext::all_edges() const {
  EdgeSet out(complex_.edge_count());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

EdgeSet CisContext::image(const EdgeSet& k) const {
  std::vector<bool> in(complex_.edge_count(), false);
  for (std::size_t e : k)
    for (std::size_t x : map_.edge_paths.at(e)) in[x] = true;
  EdgeSet out;
  for (std::size_t e = 0; e < in.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

EdgeSet CisContext::eventual_range(const EdgeSet& k) const {
  std::vector<EdgeSet> seq{k};
  std::map<EdgeSet, std::size_t> seen{{k, 0}};
  while (true) {
    EdgeSet next = image(seq.back());
    auto it = seen.find(next);
    if (it != seen.end()) {
      EdgeSet out;
      for (std::size_t i = it->second; i < seq.size(); ++i) out = set_union(out, seq[i]);
      return out;
    }
    seen.emplace(next, seq.size());
    seq.push_back(std::move(next));
  }
}

EdgeSet CisContext::canonicalize(const EdgeSet& k) const { return run(fine_, k, nullptr); }
EdgeSet CisContext::canonicalize_coarse(const EdgeSet& k) const { return run(coarse_, k, nullptr); }

Word CisContext::sample_word(const EdgeSet& k) const {
  std::vector<bool> core;
  run(fine_, k, &core);
  for (std::size_t v = 0; v < core.size(); ++v)
    if (core[v]) return fine_.vertex_words[v];
  return {};
}

std::vector<std::size_t> CisLattice::inclusion_h1_profile() const {
  std::vector<std::size_t> out;
  for (const auto& n : nodes) out.push_back(n.h1.limit.eventual_rank);
  return out;
}

std::vector<std::size_t> CisLattice::quotient_h1_profile() const {
  std::vector<std::size_t> out;
  for (const auto& n : nodes) out.push_back(n.quotient_h1.limit.eventual_rank);
  return out;
}

std::vector<std::size_t> CisLattice::minimal_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].edges.empty()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < nodes.size() && minimal; ++j)
      if (j != i && !nodes[j].edges.empty() && contained[j][i]) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

CisLattice enumerate_cis(const CisContext& ctx, bool partial) {
  const APComplex& k = ctx.complex();
  const std::size_t E = k.edge_count();
  CisLattice lat;
  lat.edge_count = E;
  for (letter_t c : k.edges) lat.edge_names.push_back(ctx.collared().name(c));

  // Canonical sets are the fixed points of an interior operator, so every
  // one is reached from the top by deleting single edges.
  std::set<EdgeSet> found;
  std::deque<EdgeSet> queue;
  EdgeSet top = ctx.canonicalize(ctx.all_edges());
  found.insert(top);
  found.insert(EdgeSet{});
  queue.push_back(top);
  bool coarse_agrees = true;
  while (!queue.empty()) {
    EdgeSet cur = std::move(queue.front());
    queue.pop_front();
    if (ctx.canonicalize_coarse(cur) != cur) coarse_agrees = false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      EdgeSet smaller = cur;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      EdgeSet child = ctx.canonicalize(smaller);
      if (found.insert(child).second) queue.push_back(child);
    }
  }
  lat.order = ctx.order();
  if (!coarse_agrees) {
    lat.consistent = false;
    lat.warnings.push_back("canonical subcomplexes changed between the two Rauzy orders");
  }

  std::set<EdgeSet> atoms;
  for (std::size_t e = 0; e < E; ++e) {
    EdgeSet a = ctx.canonicalize(ctx.eventual_range({e}));
    if (!a.empty()) atoms.insert(a);
  }
  lat.atoms.assign(atoms.begin(), atoms.end());
  for (const auto& a : lat.atoms)
    if (!found.count(a)) lat.warnings.push_back("atom missing from the enumerated lattice");

  std::vector<EdgeSet> sets(found.begin(), found.end());
  std::sort(sets.begin(), sets.end(), node_before);
  const std::size_t N = sets.size();

  // Least power fixing every node.
  std::size_t period = 1;
  for (const auto& s : sets) {
    if (s.empty()) continue;
    EdgeSet cur = ctx.image(s);
    std::size_t p = 1;
    while (cur != s && p <= 4 * N + 4) {
      cur = ctx.image(cur);
      ++p;
    }
    if (cur != s) {
      lat.consistent = false;
      lat.warnings.push_back("a canonical subcomplex is not periodic under the map");
      continue;
    }
    period = std::lcm(period, p);
  }
  lat.power = period;
  if (partial && !lat.consistent) return lat;

  const Graph& g = k.graph;
  ChainMap fn = power(ctx.map().chain_map(), period);
  std::vector<std::size_t> vn = vertex_power(ctx.map().vertex_map, period);

  lat.contained.assign(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) lat.contained[i][j] = contains(sets[j], sets[i]);

  std::vector<EdgeSet> complements;
  for (const auto& s : sets) {
    CisNode node;
    node.edges = s;

    // Subcomplex.
    std::vector<std::size_t> vid(g.vertex_count, g.vertex_count);
    std::vector<std::size_t> degree(g.vertex_count, 0);
    Graph sub;
    for (std::size_t e : s) {
      for (std::size_t v : {g.source[e], g.target[e]}) {
        if (vid[v] == g.vertex_count) vid[v] = sub.vertex_count++;
        ++degree[v];
      }
    }
    for (std::size_t e : s) {
      sub.source.push_back(vid[g.source[e]]);
      sub.target.push_back(vid[g.target[e]]);
    }
    for (std::size_t v = 0; v < g.vertex_count; ++v)
      if (vid[v] != g.vertex_count && degree[v] < 2) node.leafless = false;
    node.h1 = h1_presentation(sub, restrict_map(fn, s));
    std::vector<std::size_t> sub_vmap(sub.vertex_count, 0);
    for (std::size_t v = 0; v < g.vertex_count; ++v)
      if (vid[v] != g.vertex_count) {
        std::size_t w = vid[vn[v]];
        if (w == g.vertex_count) {
          lat.consistent = false;
          lat.warnings.push_back("a vertex of a canonical subcomplex leaves it under the map");
          w = 0;
        }
        sub_vmap[vid[v]] = w;
      }
    node.h0_rank = direct_limit(component_matrix(sub, sub_vmap)).eventual_rank;

    // Quotient by the subcomplex; its vertices collapse to one point.
    EdgeSet rest;
    std::vector<bool> in_s(E, false);
    for (std::size_t e : s) in_s[e] = true;
    for (std::size_t e = 0; e < E; ++e)
      if (!in_s[e]) rest.push_back(e);
    std::vector<std::size_t> qid(g.vertex_count);
    Graph quo;
    if (!s.empty()) quo.vertex_count = 1;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
      qid[v] = vid[v] != g.vertex_count ? 0 : quo.vertex_count++;
    for (std::size_t e : rest) {
      quo.source.push_back(qid[g.source[e]]);
      quo.target.push_back(qid[g.target[e]]);
    }
    node.quotient_h1 = h1_presentation(quo, restrict_map(fn, rest));
    std::vector<std::size_t> quo_vmap(quo.vertex_count, 0);
    for (std::size_t v = 0; v < g.vertex_count; ++v) quo_vmap[qid[v]] = qid[vn[v]];
    node.quotient_h0_rank = direct_limit(component_matrix(quo, quo_vmap)).eventual_rank;

    complements.push_back(std::move(rest));
    lat.nodes.push_back(std::move(node));
  }

  // Cover relations with the ranks of the induced maps.
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j || !lat.contained[i][j]) continue;
      bool cover = true;
      for (std::size_t m = 0; m < N && cover; ++m)
        if (m != i && m != j && lat.contained[i][m] && lat.contained[m][j]) cover = false;
      if (!cover) continue;
      CisArrow arrow{i, j, 0, 0};
      const CisNode& small = lat.nodes[i];
      const CisNode& large = lat.nodes[j];
      std::size_t d = std::max<std::size_t>({small.h1.rank, large.h1.rank, 1});

      auto coefficients = [E](const EdgeSet& local, const std::vector<long long>& cycle) {
        std::vector<long long> global(E, 0);
        for (std::size_t e = 0; e < cycle.size(); ++e) global[local[e]] = cycle[e];
        return global;
      };

      IntMatrix inc(large.h1.rank, small.h1.rank);
      for (std::size_t c = 0; c < small.h1.rank; ++c) {
        auto gv = coefficients(small.edges, small.h1.basis[c]);
        for (std::size_t r = 0; r < large.h1.rank; ++r)
          inc(r, c) = gv[large.edges[large.h1.non_tree_edges[r]]];
      }
      arrow.inclusion_rank =
          eventual_rank_of(large.h1.induced_matrix, inc, small.h1.induced_matrix, d);

      const std::size_t qs = small.quotient_h1.rank, ql = large.quotient_h1.rank;
      d = std::max<std::size_t>({qs, ql, 1});
      IntMatrix quo(ql, qs);
      for (std::size_t c = 0; c < qs; ++c) {
        auto gv = coefficients(complements[i], small.quotient_h1.basis[c]);
        for (std::size_t r = 0; r < ql; ++r)
          quo(r, c) = gv[complements[j][large.quotient_h1.non_tree_edges[r]]];
      }
      arrow.quotient_rank = eventual_rank_of(large.quotient_h1.induced_matrix, quo,
                                             small.quotient_h1.induced_matrix, d);
      lat.covers.push_back(arrow);
    }
  }
  return lat;
}

CisLattice enumerate_cis(const InverseLimitPresentation& p, std::size_t max_order) {
  std::size_t order = 0;
  while (true) {
    CisContext ctx(p.collared, p.complex, p.map, order);
    const bool last = 2 * ctx.order() > max_order;
    CisLattice lat = enumerate_cis(ctx, !last);
    if (lat.consistent || last) {
      lat.warnings.insert(lat.warnings.begin(), p.warnings.begin(), p.warnings.end());
      return lat;
    }
    order = 2 * ctx.order();
  }
}

CisLattice enumerate_cis(const Substitution& s, std::size_t max_edges) {
  return enumerate_cis(inverse_limit_presentation(s, std::nullopt, max_edges));
}

namespace {

std::string multiset(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

struct NodeKey {
  std::size_t h0, h1, qh0, qh1;
  bool operator==(const NodeKey&) const = default;
};

NodeKey key(const CisNode& n) {
  return {n.h0_rank, n.h1.limit.eventual_rank, n.quotient_h0_rank, n.quotient_h1.limit.eventual_rank};
}

// Enumerates order isomorphisms; `check` decides whether a full bijection is accepted.
bool find_iso(const CisLattice& a, const CisLattice& b, std::vector<std::size_t>& m,
              std::vector<bool>& used, std::size_t i,
              const std::function<bool(const std::vector<std::size_t>&)>& check) {
  const std::size_t N = a.nodes.size();
  if (i == N) return check(m);
  for (std::size_t j = 0; j < N; ++j) {
    if (used[j] || a.nodes[i].edges.empty() != b.nodes[j].edges.empty()) continue;
    bool ok = true;
    for (std::size_t p = 0; p < i && ok; ++p)
      ok = a.contained[p][i] == b.contained[m[p]][j] && a.contained[i][p] == b.contained[j][m[p]];
    if (!ok) continue;
    used[j] = true;
    m[i] = j;
    if (find_iso(a, b, m, used, i + 1, check)) return true;
    used[j] = false;
  }
  return false;
}

std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> arrows(
    const CisLattice& l) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : l.covers) out[{c.from, c.to}] = {c.inclusion_rank, c.quotient_rank};
  return out;
}

}  // namespace

DiagramComparison diagram_compare(const CisLattice& a, const CisLattice& b) {
  DiagramComparison r;
  r.cohomology_equal = !a.nodes.empty() && !b.nodes.empty() &&
                       a.nodes.front().h1.limit.eventual_rank == b.nodes.front().h1.limit.eventual_rank;
  if (a.nodes.size() != b.nodes.size()) {
    r.witness = "node counts differ: " + std::to_string(a.nodes.size()) + " vs " +
                std::to_string(b.nodes.size());
    return r;
  }
  const std::size_t N = a.nodes.size();
  std::vector<std::size_t> m(N);
  std::vector<bool> used(N, false);
  r.isomorphic_shape = find_iso(a, b, m, used, 0, [](const auto&) { return true; });
  if (!r.isomorphic_shape) {
    r.witness = "inclusion orders are not isomorphic";
    return r;
  }
  auto aa = arrows(a), ab = arrows(b);
  std::fill(used.begin(), used.end(), false);
  r.profiles_equal = find_iso(a, b, m, used, 0, [&](const std::vector<std::size_t>& mm) {
    for (std::size_t i = 0; i < N; ++i)
      if (!(key(a.nodes[i]) == key(b.nodes[mm[i]]))) return false;
    for (const auto& [edge, ranks] : aa) {
      auto it = ab.find({mm[edge.first], mm[edge.second]});
      if (it == ab.end() || it->second != ranks) return false;
    }
    return true;
  });
  if (r.profiles_equal) return r;

  std::vector<std::size_t> ma, mb;
  for (std::size_t i : a.minimal_nodes()) ma.push_back(a.nodes[i].h1.limit.eventual_rank);
  for (std::size_t i : b.minimal_nodes()) mb.push_back(b.nodes[i].h1.limit.eventual_rank);
  if (multiset(ma) != multiset(mb)) {
    r.witness = "minimal-node H1 ranks " + multiset(ma) + " vs " + multiset(mb);
    return r;
  }
  auto ranks = [](const CisLattice& l, bool quotient) {
    std::vector<std::size_t> v = quotient ? l.quotient_h1_profile() : l.inclusion_h1_profile();
    return multiset(v);
  };
  if (ranks(a, false) != ranks(b, false)) {
    r.witness = "inclusion H1 ranks " + ranks(a, false) + " vs " + ranks(b, false);
  } else if (ranks(a, true) != ranks(b, true)) {
    r.witness = "quotient H1 ranks " + ranks(a, true) + " vs " + ranks(b, true);
  } else {
    r.witness = "no order isomorphism preserves node ranks and arrow ranks";
  }
  return r;
}

}  // namespace substdyn
