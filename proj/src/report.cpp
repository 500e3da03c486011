#include "substdyn/report.hpp"

#include "substdyn/errors.hpp"

namespace substdyn {

namespace {

Json words(const Alphabet& a, const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(a.format(w));
  return out;
}

Json letters(const Alphabet& a, const std::vector<letter_t>& ls) {
  Json out = Json::array();
  for (letter_t x : ls) out.push_back(a.name(x));
  return out;
}

Json stage_error(const Error& e) { return {{"error", e.kind()}, {"message", e.what()}}; }

}  // namespace

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Substitution& s) {
  Json rules = Json::array();
  for (letter_t a = 0; a < s.size(); ++a)
    rules.push_back({{"letter", s.alphabet().name(a)}, {"image", s.alphabet().format(s.image(a))}});
  return {{"alphabet", s.alphabet().names()}, {"rules", rules}};
}

Json to_json(const LanguageTable& t, const Alphabet& a) {
  auto words = [&](const std::vector<Word>& ws) {
    Json out = Json::array();
    for (const Word& w : ws) out.push_back(a.format(w));
    return out;
  };
  Json levels = Json::array();
  for (std::size_t l = 1; l <= t.max_length(); ++l) {
    Json level = {{"length", l}, {"admitted", words(t.admitted(l))}};
    if (t.has_legal()) level["legal"] = words(t.legal(l));
    levels.push_back(level);
  }
  Json j = {{"max_length", t.max_length()}, {"levels", levels}};
  if (t.has_legal()) {
    j["exact"] = t.exact();
    j["order"] = t.order();
  }
  return j;
}

Json to_json(const TamenessReport& r, const Alphabet& a) {
  Json j = {{"verdict", to_string(r.verdict)},
            {"bounded_letters", letters(a, r.letters.bounded)},
            {"expanding_letters", letters(a, r.letters.expanding)}};
  if (r.witness) {
    j["witness"] = {{"letter", a.name(r.witness->letter)},
                    {"side", to_string(r.witness->side)},
                    {"cycle_length", r.witness->cycle_length},
                    {"periodic_word", a.format(r.witness->periodic_word)}};
  }
  if (r.verdict == Verdict::tame) {
    j["bounded_legal_words"] = words(a, r.bounded_legal_words);
    j["n_sigma"] = r.n_sigma;
  }
  return j;
}

Json to_json(const MinimalityReport& r, const Alphabet& a) {
  Json j = {{"verdict", to_string(r.verdict)}, {"c_bound", r.c_bound}, {"reason", r.reason},
            {"scales", r.scales}};
  if (r.constant) j["constant"] = *r.constant;
  if (r.witness) j["witness"] = {{"avoided", a.format(r.witness->first)},
                                 {"word", a.format(r.witness->second)}};
  return j;
}

Json to_json(const Primitivization& p, const Alphabet& a) {
  Json j;
  j["periodic_bypass"] = p.periodic_bypass;
  if (p.seed) {
    j["seed"] = {{"pointed_word", format_pointed(a, p.seed->fixed_pointed_word)},
                 {"period", p.seed->power},
                 {"letter", a.name(p.seed->seed_letter)},
                 {"n", p.seed->n_for_doubling}};
  }
  if (p.rws) {
    j["return_words"] = words(a, p.rws->return_words);
    j["u"] = a.format(p.rws->u);
  }
  if (p.derived) {
    j["psi"] = to_json(p.derived->psi);
    j["psi_primitive"] = p.derived->primitive;
    j["base_power"] = p.derived->base_power;
  }
  const ConjugateSubstitution& c = p.conjugate;
  j["theta"] = to_json(c.theta);
  j["theta_primitive"] = c.primitive;
  j["psi_power"] = c.psi_power;
  Json h = Json::object();
  for (letter_t z = 0; z < c.theta.size(); ++z) h[c.theta.alphabet().name(z)] = a.name(c.h[z]);
  j["h"] = h;
  if (p.report) {
    j["conjugacy"] = {{"ok", p.report->ok},
                      {"failed_check", p.report->failed_check},
                      {"counterexample", p.report->counterexample},
                      {"theta_words_checked", p.report->theta_words_checked},
                      {"sigma_words_checked", p.report->sigma_words_checked},
                      {"intertwining_checked", p.report->intertwining_checked}};
  }
  return j;
}

Json to_json(const DirectLimit& d) {
  return {{"matrix", to_json(d.matrix)},
          {"eventual_rank", d.eventual_rank},
          {"unimodular_on_image", d.unimodular_on_image},
          {"restricted", to_json(d.restricted)},
          {"group", d.group_description}};
}

Json to_json(const H1Presentation& h) {
  return {{"rank", h.rank},
          {"non_tree_edges", h.non_tree_edges},
          {"basis", h.basis},
          {"induced_matrix", to_json(h.induced_matrix)},
          {"limit", to_json(h.limit)}};
}

Json to_json(const InverseLimitPresentation& p) {
  const APComplex& k = p.complex;
  Json edges = Json::array();
  for (std::size_t e = 0; e < k.edge_count(); ++e)
    edges.push_back({{"name", p.collared.name(k.edges[e])},
                     {"source", k.vertex_labels[k.graph.source[e]]},
                     {"target", k.vertex_labels[k.graph.target[e]]},
                     {"image", p.map.edge_paths[e]}});
  return {{"radius", p.collared.radius()},
          {"n_sigma", p.n_sigma},
          {"edges", edges},
          {"vertices", k.vertex_labels},
          {"components", k.component_count},
          {"forcing_level", p.forcing_level},
          {"recognisability_assumed", p.recognisability_assumed},
          {"warnings", p.warnings}};
}

Json to_json(const CisLattice& l) {
  Json nodes = Json::array();
  for (const auto& n : l.nodes) {
    Json names = Json::array();
    for (std::size_t e : n.edges) names.push_back(l.edge_names[e]);
    nodes.push_back({{"edges", n.edges},
                     {"edge_names", names},
                     {"leafless", n.leafless},
                     {"h0_rank", n.h0_rank},
                     {"h1_rank", n.h1.limit.eventual_rank},
                     {"h1", n.h1.limit.group_description},
                     {"quotient_h0_rank", n.quotient_h0_rank},
                     {"quotient_h1_rank", n.quotient_h1.limit.eventual_rank},
                     {"quotient_h1", n.quotient_h1.limit.group_description}});
  }
  Json covers = Json::array();
  for (const auto& c : l.covers)
    covers.push_back({{"from", c.from},
                      {"to", c.to},
                      {"inclusion_rank", c.inclusion_rank},
                      {"quotient_rank", c.quotient_rank}});
  return {{"power", l.power},
          {"edge_count", l.edge_count},
          {"nodes", nodes},
          {"covers", covers},
          {"atoms", l.atoms},
          {"inclusion_h1_profile", l.inclusion_h1_profile()},
          {"quotient_h1_profile", l.quotient_h1_profile()},
          {"order", l.order},
          {"consistent", l.consistent},
          {"warnings", l.warnings}};
}

Json to_json(const DiagramComparison& c) {
  return {{"isomorphic_shape", c.isomorphic_shape},
          {"profiles_equal", c.profiles_equal},
          {"top_cohomology_equal", c.cohomology_equal},
          {"distinguished", !c.profiles_equal},
          {"witness", c.witness}};
}

Json to_json(const Extension& e) {
  return {{"substitution", to_json(e.result)},
          {"sigma_power", e.sigma_power},
          {"positions", e.positions}};
}

Analysis analyze(const Substitution& s, const AnalysisOptions& options) {
  Analysis out;
  Json& r = out.report;
  const Alphabet& a = s.alphabet();
  r["input"] = to_json(s);

  const std::size_t L = options.max_length.value_or(8);
  LanguageTable t = language_table(s, L);
  r["language"] = to_json(t, a);

  TamenessReport tr = decide_tameness(s);
  r["classification"] = to_json(tr, a);
  if (tr.verdict == Verdict::empty_subshift) {
    out.exit_code = 2;
    return out;
  }
  MinimalityReport mr = is_minimal(s);
  r["minimality"] = to_json(mr, a);
  if (tr.verdict == Verdict::wild) {
    for (const char* stage : {"complex", "cohomology", "cis"}) r[stage] = "skipped: wild input";
  }

  if (mr.verdict == Minimality::no) {
    r["primitivization"] = "skipped: not minimal";
  } else {
    try {
      r["primitivization"] = to_json(primitivize(s, options.verify_depth), a);
    } catch (const Error& e) {
      r["primitivization"] = stage_error(e);
    }
  }
  if (tr.verdict == Verdict::wild) return out;

  std::optional<InverseLimitPresentation> p;
  try {
    p = inverse_limit_presentation(s, options.radius, options.max_edges);
  } catch (const Error& e) {
    r["complex"] = stage_error(e);
    out.exit_code = 1;
    return out;
  }
  r["complex"] = to_json(*p);
  H1Presentation h1 = h1_presentation(p->complex, p->map);
  DirectLimit h0 = direct_limit(component_matrix(p->complex.graph, p->map.vertex_map));
  r["cohomology"] = {{"h1", to_json(h1)}, {"h0", to_json(h0)}};
  try {
    r["cis"] = to_json(enumerate_cis(*p));
  } catch (const Error& e) {
    r["cis"] = stage_error(e);
    out.exit_code = 1;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace substdyn
