#include "substdyn/ap_complex.hpp"

#include "substdyn/classification.hpp"
#include "substdyn/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace substdyn {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<std::size_t> component_ids(const Graph& g) {
  UnionFind uf(g.vertex_count);
  for (std::size_t e = 0; e < g.edge_count(); ++e) uf.unite(g.source[e], g.target[e]);
  std::map<std::size_t, std::size_t> id;
  std::vector<std::size_t> out(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    auto [it, fresh] = id.emplace(uf.find(v), id.size());
    out[v] = it->second;
  }
  return out;
}

std::size_t count_components(const Graph& g) {
  auto ids = component_ids(g);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::optional<std::size_t> APComplex::edge_of(letter_t collared) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), collared);
  if (it == edges.end() || *it != collared) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

APComplex build_complex(const CollaredSubstitution& c) {
  APComplex k;
  k.edges = c.legal_letters();
  if (k.edges.empty()) fail("empty-subshift", "the subshift is empty");
  for (auto [x, y] : c.legal_transitions())
    k.transitions.emplace_back(*k.edge_of(x), *k.edge_of(y));

  const std::size_t T = k.transitions.size();
  UnionFind uf(T);
  std::vector<std::optional<std::size_t>> by_out(k.edges.size()), by_in(k.edges.size());
  for (std::size_t t = 0; t < T; ++t) {
    auto [x, y] = k.transitions[t];
    if (by_out[x]) uf.unite(t, *by_out[x]);
    else by_out[x] = t;
    if (by_in[y]) uf.unite(t, *by_in[y]);
    else by_in[y] = t;
  }

  // Vertices are ordered by their overlap word, then by class.
  const std::size_t n = c.radius();
  std::map<std::size_t, Word> overlap;
  for (std::size_t t = 0; t < T; ++t) {
    const Word& cx = c.context(k.edges[k.transitions[t].first]);
    overlap.emplace(uf.find(t), slice(cx, 1, 2 * n + 1));
  }
  std::vector<std::pair<Word, std::size_t>> order;
  for (const auto& [root, w] : overlap) order.emplace_back(w, root);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return LengthLex{}(a.first, b.first);
    return a.second < b.second;
  });
  std::map<std::size_t, std::size_t> vertex_of_root;
  std::map<Word, std::size_t> label_uses;
  const Alphabet& A = c.base().alphabet();
  for (const auto& [w, root] : order) {
    vertex_of_root.emplace(root, vertex_of_root.size());
    std::string label = n == 0 ? "v" + std::to_string(vertex_of_root.size() - 1) : A.format_token(w);
    std::size_t uses = label_uses[w]++;
    if (uses > 0) label += "~" + std::to_string(uses);
    k.vertex_labels.push_back(std::move(label));
  }

  k.graph.vertex_count = vertex_of_root.size();
  k.graph.source.assign(k.edges.size(), 0);
  k.graph.target.assign(k.edges.size(), 0);
  for (std::size_t e = 0; e < k.edges.size(); ++e) {
    if (!by_in[e] || !by_out[e]) fail("internal", "legal collared letter without transitions");
    k.graph.source[e] = vertex_of_root.at(uf.find(*by_in[e]));
    k.graph.target[e] = vertex_of_root.at(uf.find(*by_out[e]));
  }
  k.component_count = count_components(k.graph);
  return k;
}

ChainMap CellularMap::chain_map() const {
  ChainMap f;
  for (const auto& path : edge_paths) {
    std::map<std::size_t, Integer> counts;
    for (std::size_t e : path) counts[e] += 1;
    f.columns.emplace_back(counts.begin(), counts.end());
  }
  return f;
}

ChainMap compose(const ChainMap& outer, const ChainMap& inner) {
  ChainMap out;
  out.columns.reserve(inner.size());
  for (const auto& col : inner.columns) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [e, m] : col)
      for (const auto& [e2, m2] : outer.columns.at(e)) acc[e2] += m * m2;
    SparseColumn c;
    for (auto& [e, m] : acc)
      if (m != 0) c.emplace_back(e, std::move(m));
    out.columns.push_back(std::move(c));
  }
  return out;
}

ChainMap power(const ChainMap& f, std::size_t n) {
  ChainMap result;
  for (std::size_t e = 0; e < f.size(); ++e) result.columns.push_back({{e, Integer(1)}});
  ChainMap base = f;
  while (n > 0) {
    if (n & 1u) result = compose(base, result);
    n >>= 1u;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

ChainMap restrict_map(const ChainMap& f, const std::vector<std::size_t>& keep) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < keep.size(); ++i) pos.emplace(keep[i], i);
  ChainMap out;
  for (std::size_t e : keep) {
    SparseColumn c;
    for (const auto& [e2, m] : f.columns.at(e)) {
      auto it = pos.find(e2);
      if (it != pos.end()) c.emplace_back(it->second, m);
    }
    out.columns.push_back(std::move(c));
  }
  return out;
}

IntMatrix to_matrix(const ChainMap& f) {
  IntMatrix m(f.size(), f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    for (const auto& [i, x] : f.columns[j]) m(i, j) = x;
  return m;
}

CellularMap induced_map(const CollaredSubstitution& c, const APComplex& k) {
  CellularMap f;
  const Graph& g = k.graph;
  std::vector<std::optional<std::size_t>> vmap(g.vertex_count);
  auto set_vertex = [&](std::size_t v, std::size_t image) {
    if (vmap[v] && *vmap[v] != image)
      fail("inconsistent-rule", "vertex " + k.vertex_labels[v] + " has two images");
    vmap[v] = image;
  };
  for (std::size_t e = 0; e < k.edges.size(); ++e) {
    std::vector<std::size_t> path;
    for (letter_t x : c.substitution().image(k.edges[e])) {
      auto pe = k.edge_of(x);
      if (!pe) fail("inconsistent-rule", "image of a legal edge uses an illegal letter");
      if (!path.empty() && g.target[path.back()] != g.source[*pe])
        fail("inconsistent-rule", "edge path of " + c.name(k.edges[e]) + " is not connected");
      path.push_back(*pe);
    }
    set_vertex(g.source[e], g.source[path.front()]);
    set_vertex(g.target[e], g.target[path.back()]);
    f.edge_paths.push_back(std::move(path));
  }
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (!vmap[v]) fail("inconsistent-rule", "vertex without image");
    f.vertex_map.push_back(*vmap[v]);
  }
  return f;
}

CellularMap compose(const CellularMap& outer, const CellularMap& inner) {
  CellularMap f;
  for (const auto& path : inner.edge_paths) {
    std::vector<std::size_t> p;
    for (std::size_t e : path) p.insert(p.end(), outer.edge_paths[e].begin(), outer.edge_paths[e].end());
    f.edge_paths.push_back(std::move(p));
  }
  for (std::size_t v : inner.vertex_map) f.vertex_map.push_back(outer.vertex_map[v]);
  return f;
}

DirectLimit direct_limit(const IntMatrix& a) {
  DirectLimit d;
  d.matrix = a;
  EventualImage ev = eventual_image(a);
  d.eventual_rank = ev.rank;
  d.unimodular_on_image = ev.unimodular;
  d.restricted = ev.restricted;
  if (ev.rank == 0) {
    d.group_description = "0";
  } else if (ev.unimodular) {
    d.group_description = ev.rank == 1 ? "Z" : "Z^" + std::to_string(ev.rank);
  } else {
    d.group_description = "lim(Z^" + std::to_string(ev.rank) + ", B^T)";
  }
  return d;
}

CycleBasis cycle_basis(const Graph& g) {
  const std::size_t V = g.vertex_count, E = g.edge_count();
  UnionFind uf(V);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(V);  // (edge, other end)
  std::vector<bool> tree(E, false);
  CycleBasis cb;
  for (std::size_t e = 0; e < E; ++e) {
    if (uf.unite(g.source[e], g.target[e])) {
      tree[e] = true;
      adj[g.source[e]].emplace_back(e, g.target[e]);
      adj[g.target[e]].emplace_back(e, g.source[e]);
    } else {
      cb.non_tree_edges.push_back(e);
    }
  }
  // Root each tree at its least vertex and record signed paths to the root.
  std::vector<std::optional<std::size_t>> parent_edge(V);
  std::vector<std::size_t> parent(V), depth(V, 0);
  std::vector<bool> visited(V, false);
  for (std::size_t r = 0; r < V; ++r) {
    if (visited[r]) continue;
    visited[r] = true;
    parent[r] = r;
    std::vector<std::size_t> stack{r};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto [e, w] : adj[v]) {
        if (visited[w]) continue;
        visited[w] = true;
        parent[w] = v;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        stack.push_back(w);
      }
    }
  }
  // Adds the signed tree path from v up to its root, scaled by sign.
  auto add_root_path = [&](std::vector<long long>& z, std::size_t v, long long sign) {
    while (parent_edge[v]) {
      std::size_t e = *parent_edge[v];
      z[e] += sign * (g.source[e] == v ? 1 : -1);
      v = parent[v];
    }
  };
  for (std::size_t f : cb.non_tree_edges) {
    std::vector<long long> z(E, 0);
    z[f] += 1;
    add_root_path(z, g.target[f], 1);
    add_root_path(z, g.source[f], -1);
    cb.cycles.push_back(std::move(z));
  }
  return cb;
}

std::vector<Integer> apply_chain(const ChainMap& f, const std::vector<long long>& chain) {
  std::vector<Integer> out(f.size());
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e] == 0) continue;
    for (const auto& [e2, m] : f.columns[e]) out[e2] += m * chain[e];
  }
  return out;
}

H1Presentation h1_presentation(const Graph& g, const ChainMap& f) {
  if (f.size() != g.edge_count()) fail("dimension-mismatch", "chain map does not match graph");
  H1Presentation h;
  CycleBasis cb = cycle_basis(g);
  h.rank = cb.non_tree_edges.size();
  if (h.rank + g.vertex_count != g.edge_count() + count_components(g))
    fail("internal", "cycle basis violates the Euler identity");
  h.non_tree_edges = cb.non_tree_edges;
  h.basis = cb.cycles;
  h.induced_matrix = IntMatrix(h.rank, h.rank);
  for (std::size_t j = 0; j < h.rank; ++j) {
    std::vector<Integer> img = apply_chain(f, cb.cycles[j]);
    for (std::size_t i = 0; i < h.rank; ++i) h.induced_matrix(i, j) = img[cb.non_tree_edges[i]];
  }
  h.limit = direct_limit(h.induced_matrix);
  return h;
}

H1Presentation h1_presentation(const APComplex& k, const CellularMap& f) {
  return h1_presentation(k.graph, f.chain_map());
}

IntMatrix component_matrix(const Graph& g, const std::vector<std::size_t>& vertex_map) {
  auto ids = component_ids(g);
  std::size_t C = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  IntMatrix m(C, C);
  std::vector<bool> done(C, false);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (done[ids[v]]) continue;
    done[ids[v]] = true;
    m(ids[vertex_map[v]], ids[v]) = 1;
  }
  return m;
}

InverseLimitPresentation inverse_limit_presentation(const Substitution& s,
                                                    std::optional<std::size_t> radius,
                                                    std::size_t max_edges) {
  TamenessReport tr = decide_tameness(s);
  if (tr.verdict == Verdict::empty_subshift) fail("empty-subshift", "the subshift is empty");
  if (tr.verdict == Verdict::wild) fail("wild-input", "the substitution is wild");
  InverseLimitPresentation p;
  p.n_sigma = tr.n_sigma;
  std::size_t n = radius.value_or(tr.n_sigma);
  p.collared = collar(s, n);
  if (p.collared.legal_letters().size() > max_edges)
    fail("max-edges", "collared complex has " + std::to_string(p.collared.legal_letters().size()) +
                          " edges, above the limit of " + std::to_string(max_edges));
  p.complex = build_complex(p.collared);
  p.map = induced_map(p.collared, p.complex);
  if (n >= tr.n_sigma) {
    p.forcing_level = border_forcing_level(p.collared, tr.n_sigma);
  } else {
    p.warnings.push_back("radius below N_sigma: border forcing not verified");
  }
  std::size_t P = std::max<std::size_t>(8, 2 * s.size());
  if (periodic_point_search(s, P).empty()) {
    p.recognisability_assumed = true;
  } else {
    p.warnings.push_back("periodic points found: recognisability is not implied");
  }
  return p;
}

}  // namespace substdyn
