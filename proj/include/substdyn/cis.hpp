#pragma once

#include "substdyn/ap_complex.hpp"
#include "substdyn/collaring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace substdyn {

// Sorted edge indices of an AP complex.
using EdgeSet = std::vector<std::size_t>;

// Edge-restricted legality data for one collared complex.
class CisContext {
 public:
  CisContext(const CollaredSubstitution& c, const APComplex& k, const CellularMap& f,
             std::size_t order = 0);

  const CollaredSubstitution& collared() const { return collared_; }
  const APComplex& complex() const { return complex_; }
  const CellularMap& map() const { return map_; }
  std::size_t order() const { return order_; }

  EdgeSet all_edges() const;
  EdgeSet image(const EdgeSet& k) const;
  EdgeSet eventual_range(const EdgeSet& k) const;
  // Collared letters legal inside the subsystem using only letters of k.
  EdgeSet canonicalize(const EdgeSet& k) const;
  // Same test one order lower; disagreement means the order is too small.
  EdgeSet canonicalize_coarse(const EdgeSet& k) const;

  // Longest legal base word realised inside the canonical system of k.
  Word sample_word(const EdgeSet& k) const;

 private:
  struct Level {
    std::vector<std::vector<std::uint64_t>> vertex_masks;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> vertex_letters;
    std::vector<Word> vertex_words;
  };
  Level build_level(const LanguageTable& t, std::size_t m) const;
  EdgeSet run(const Level& level, const EdgeSet& k, std::vector<bool>* core_out) const;

  CollaredSubstitution collared_;
  APComplex complex_;
  CellularMap map_;
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  Level fine_;
  Level coarse_;
};

struct CisNode {
  EdgeSet edges;
  bool leafless = true;
  std::size_t h0_rank = 0;
  H1Presentation h1;
  std::size_t quotient_h0_rank = 0;
  H1Presentation quotient_h1;
};

struct CisArrow {
  std::size_t from = 0;  // smaller node
  std::size_t to = 0;    // larger node
  std::size_t inclusion_rank = 0;
  std::size_t quotient_rank = 0;
};

struct CisLattice {
  std::vector<CisNode> nodes;  // largest first
  std::vector<std::vector<bool>> contained;  // contained[i][j]: nodes[i] ⊆ nodes[j]
  std::vector<CisArrow> covers;
  std::size_t power = 1;
  std::vector<EdgeSet> atoms;
  std::size_t edge_count = 0;
  std::vector<std::string> edge_names;
  std::vector<std::string> warnings;
  std::size_t order = 0;    // Rauzy order used for canonicalization
  bool consistent = true;   // every node periodic and stable one order lower

  std::vector<std::size_t> inclusion_h1_profile() const;
  std::vector<std::size_t> quotient_h1_profile() const;
  std::vector<std::size_t> minimal_nodes() const;  // nonempty nodes covering only ∅
};

// With `partial`, stops after the consistency checks when they fail.
CisLattice enumerate_cis(const CisContext& ctx, bool partial = false);
// Doubles the Rauzy order until the lattice is consistent.
CisLattice enumerate_cis(const InverseLimitPresentation& p, std::size_t max_order = 256);
CisLattice enumerate_cis(const Substitution& s, std::size_t max_edges = 5000);

struct DiagramComparison {
  bool isomorphic_shape = false;
  bool profiles_equal = false;
  bool cohomology_equal = false;  // top-node Ȟ¹ ranks agree
  std::string witness;
};

DiagramComparison diagram_compare(const CisLattice& a, const CisLattice& b);

struct Extension {
  Substitution result;
  std::size_t sigma_power = 1;
  std::map<std::string, std::vector<std::size_t>> positions;  // 1-based, within σ^p(i(b))
};

// [σ, ψ]_S. Letters of ψ are injected into σ's alphabet by `injection`;
// positions missing from `positions` are chosen greedily.
Extension extend_substitution(const Substitution& sigma, const Substitution& psi,
                              const std::map<std::string, std::string>& injection,
                              const std::map<std::string, std::vector<std::size_t>>& positions = {});

}  // namespace substdyn
