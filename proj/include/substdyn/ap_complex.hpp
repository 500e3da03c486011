#pragma once

#include "substdyn/collaring.hpp"
#include "substdyn/intlin.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace substdyn {

// Directed multigraph: edge i runs from source[i] to target[i].
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::size_t> source;
  std::vector<std::size_t> target;

  std::size_t edge_count() const { return source.size(); }
};

std::size_t count_components(const Graph& g);

struct APComplex {
  std::vector<letter_t> edges;  // legal collared letters, ascending
  Graph graph;
  std::vector<std::string> vertex_labels;
  std::size_t component_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> transitions;  // edge positions

  std::size_t edge_count() const { return edges.size(); }
  std::size_t vertex_count() const { return graph.vertex_count; }
  std::optional<std::size_t> edge_of(letter_t collared) const;
};

APComplex build_complex(const CollaredSubstitution& c);

// Sparse integer chain map on edges: column e lists (edge, multiplicity).
using SparseColumn = std::vector<std::pair<std::size_t, Integer>>;
struct ChainMap {
  std::vector<SparseColumn> columns;
  std::size_t size() const { return columns.size(); }
};

ChainMap compose(const ChainMap& outer, const ChainMap& inner);
ChainMap power(const ChainMap& f, std::size_t n);
// Rows and columns restricted to `keep` (sorted edge indices), renumbered.
ChainMap restrict_map(const ChainMap& f, const std::vector<std::size_t>& keep);
IntMatrix to_matrix(const ChainMap& f);

struct CellularMap {
  std::vector<std::vector<std::size_t>> edge_paths;
  std::vector<std::size_t> vertex_map;

  ChainMap chain_map() const;
};

CellularMap induced_map(const CollaredSubstitution& c, const APComplex& k);
CellularMap compose(const CellularMap& outer, const CellularMap& inner);

struct DirectLimit {
  IntMatrix matrix;
  std::size_t eventual_rank = 0;
  bool unimodular_on_image = false;
  IntMatrix restricted;
  std::string group_description;
};

DirectLimit direct_limit(const IntMatrix& a);

struct H1Presentation {
  std::size_t rank = 0;
  std::vector<std::size_t> non_tree_edges;
  std::vector<std::vector<long long>> basis;  // edge-index vectors
  IntMatrix induced_matrix;
  DirectLimit limit;
};

// Cycle basis from a spanning forest built in edge order.
struct CycleBasis {
  std::vector<std::size_t> non_tree_edges;
  std::vector<std::vector<long long>> cycles;
};

CycleBasis cycle_basis(const Graph& g);
std::vector<Integer> apply_chain(const ChainMap& f, const std::vector<long long>& chain);

H1Presentation h1_presentation(const Graph& g, const ChainMap& f);
H1Presentation h1_presentation(const APComplex& k, const CellularMap& f);

// H⁰ data: the map induced on connected components by a vertex map.
IntMatrix component_matrix(const Graph& g, const std::vector<std::size_t>& vertex_map);
std::vector<std::size_t> component_ids(const Graph& g);

struct InverseLimitPresentation {
  std::size_t n_sigma = 0;
  CollaredSubstitution collared;
  APComplex complex;
  CellularMap map;
  std::size_t forcing_level = 0;
  bool recognisability_assumed = false;
  std::vector<std::string> warnings;
};

InverseLimitPresentation inverse_limit_presentation(const Substitution& s,
                                                    std::optional<std::size_t> radius = {},
                                                    std::size_t max_edges = 5000);

}  // namespace substdyn
