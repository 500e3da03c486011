#include "substdyn/cis.hpp"
#include "substdyn/corpus.hpp"
#include "substdyn/errors.hpp"
#include "substdyn/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace substdyn;

namespace {

Substitution load(const std::string& text) {
  if (text.rfind("corpus:", 0) == 0) {
    auto e = find_corpus(text.substr(7));
    if (!e) fail("unknown-corpus-entry", "no corpus entry named " + text.substr(7));
    return e->substitution();
  }
  return parse_substitution(text);
}

std::string analyze_json(const std::string& text, std::optional<std::size_t> radius,
                         std::optional<std::size_t> max_length, std::size_t max_edges) {
  AnalysisOptions o;
  o.radius = radius;
  o.max_length = max_length;
  o.max_edges = max_edges;
  return dump(analyze(load(text), o).report);
}

std::string cohomology_json(const std::string& text, std::optional<std::size_t> radius,
                            std::size_t max_edges) {
  auto p = inverse_limit_presentation(load(text), radius, max_edges);
  H1Presentation h1 = h1_presentation(p.complex, p.map);
  DirectLimit h0 = direct_limit(component_matrix(p.complex.graph, p.map.vertex_map));
  return dump(Json{{"h1", to_json(h1)}, {"h0", to_json(h0)}});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Substitution subshifts, tiling space cohomology and invariant subsets";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("normalize", [](const std::string& text) { return format_substitution(load(text)); },
        py::arg("text"));
  m.def("rules", [](const std::string& text) {
    Substitution s = load(text);
    std::vector<std::pair<std::string, std::string>> out;
    for (letter_t a = 0; a < s.size(); ++a)
      out.emplace_back(s.alphabet().name(a), s.alphabet().format(s.image(a)));
    return out;
  }, py::arg("text"));
  m.def("iterate", [](const std::string& text, const std::string& word, std::size_t n) {
    Substitution s = load(text);
    return s.alphabet().format(s.iterate(s.alphabet().parse(word), n));
  }, py::arg("text"), py::arg("word"), py::arg("n") = 1);
  m.def("is_primitive", [](const std::string& text) { return is_primitive(load(text)); },
        py::arg("text"));
  m.def("legal_words", [](const std::string& text, std::size_t length) {
    Substitution s = load(text);
    LanguageTable t = language_table(s, length);
    std::vector<std::string> out;
    for (const Word& w : t.legal(length))
      out.push_back(s.alphabet().format(w));
    return out;
  }, py::arg("text"), py::arg("length"));

  m.def("classify_json", [](const std::string& text) {
    Substitution s = load(text);
    return dump(to_json(decide_tameness(s), s.alphabet()));
  }, py::arg("text"));
  m.def("minimality_json", [](const std::string& text) {
    Substitution s = load(text);
    return dump(to_json(is_minimal(s), s.alphabet()));
  }, py::arg("text"));
  m.def("primitivize_json", [](const std::string& text, std::size_t verify_depth) {
    Substitution s = load(text);
    return dump(to_json(primitivize(s, verify_depth), s.alphabet()));
  }, py::arg("text"), py::arg("verify_depth") = 6);
  m.def("analyze_json", &analyze_json, py::arg("text"), py::arg("radius") = py::none(),
        py::arg("max_length") = py::none(), py::arg("max_edges") = 5000);
  m.def("cohomology_json", &cohomology_json, py::arg("text"), py::arg("radius") = py::none(),
        py::arg("max_edges") = 5000);
  m.def("cis_json", [](const std::string& text, std::size_t max_edges) {
    return dump(to_json(enumerate_cis(load(text), max_edges)));
  }, py::arg("text"), py::arg("max_edges") = 5000);
  m.def("compare_json", [](const std::string& a, const std::string& b) {
    return dump(to_json(diagram_compare(enumerate_cis(load(a)), enumerate_cis(load(b)))));
  }, py::arg("a"), py::arg("b"));
  m.def("extend", [](const std::string& base, const std::string& psi,
                     const std::map<std::string, std::string>& injection,
                     const std::map<std::string, std::vector<std::size_t>>& positions) {
    return format_substitution(extend_substitution(load(base), load(psi), injection, positions).result);
  }, py::arg("base"), py::arg("psi"), py::arg("injection"),
     py::arg("positions") = std::map<std::string, std::vector<std::size_t>>{});

  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const auto& e : corpus()) out.push_back(e.name);
    return out;
  });
  m.def("corpus_text", [](const std::string& name) {
    auto e = find_corpus(name);
    if (!e) fail("unknown-corpus-entry", "no corpus entry named " + name);
    return e->text;
  }, py::arg("name"));
}
