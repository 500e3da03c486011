#pragma once

#include "substdyn/classification.hpp"
#include "substdyn/substitution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace substdyn {

struct ReturnWordSystem {
  letter_t seed_letter = 0;
  std::size_t power = 0;
  std::vector<Word> return_words;  // length-lex order

  // σ^N(b) = u v_01 ... v_0r0
  Word u;
  std::vector<Word> head_blocks;

  // Per return word v_i != b: σ^N(v_i) = σ^N(b) w_i v_i1 ... v_iri.
  struct Expansion {
    Word w;
    std::vector<Word> blocks;
  };
  std::vector<std::optional<Expansion>> expansions;  // aligned with return_words
  std::size_t scans = 0;

  std::optional<std::size_t> index_of(const Word& v) const;
};

ReturnWordSystem return_words(const Substitution& s, const SeedResult& seed);

struct DerivedSubstitution {
  Substitution psi;            // letters named by their expansion words
  std::vector<Word> alpha;     // expansion of each Γ̃ letter over the base alphabet
  std::size_t base_power = 0;  // N
  bool primitive = false;
};

DerivedSubstitution build_psi(const Substitution& s, const ReturnWordSystem& rws);

struct ConjugateSubstitution {
  Substitution theta;
  std::vector<letter_t> h;  // one-block code Z -> base letter
  std::vector<std::pair<std::size_t, std::size_t>> z_index;  // (Γ̃ letter, 1-based position)
  std::size_t p_block_size = 0;
  std::size_t psi_power = 1;  // θ is built from ψ^psi_power
  bool primitive = false;
};

ConjugateSubstitution build_theta(const DerivedSubstitution& ds, std::size_t max_power = 16);

struct ConjugacyReport {
  bool ok = true;
  std::string failed_check;
  std::string counterexample;
  std::size_t theta_words_checked = 0;
  std::size_t sigma_words_checked = 0;
  std::size_t intertwining_checked = 0;
};

ConjugacyReport verify_conjugacy(const Substitution& s, const ReturnWordSystem& rws,
                                 const DerivedSubstitution& ds, const ConjugateSubstitution& cs,
                                 std::size_t depth);

struct Primitivization {
  bool periodic_bypass = false;
  std::optional<SeedResult> seed;
  std::optional<ReturnWordSystem> rws;
  std::optional<DerivedSubstitution> derived;
  ConjugateSubstitution conjugate;
  std::optional<ConjugacyReport> report;
};

// Full pipeline: seed, return words, ψ, θ, verification.
Primitivization primitivize(const Substitution& s, std::size_t verify_depth = 6);

}  // namespace substdyn
