#pragma once

#include "substdyn/ap_complex.hpp"
#include "substdyn/cis.hpp"
#include "substdyn/classification.hpp"
#include "substdyn/primitivization.hpp"

#include <json.hpp>

#include <optional>

namespace substdyn {

using Json = nlohmann::json;

// Integers that fit in 64 bits become numbers, larger ones strings.
Json to_json(const Integer& x);
Json to_json(const IntMatrix& m);
Json to_json(const Substitution& s);
// Word lists per length in the table's length-lex order.
Json to_json(const LanguageTable& t, const Alphabet& a);
Json to_json(const TamenessReport& r, const Alphabet& a);
Json to_json(const MinimalityReport& r, const Alphabet& a);
Json to_json(const Primitivization& p, const Alphabet& a);
Json to_json(const DirectLimit& d);
Json to_json(const H1Presentation& h);
Json to_json(const InverseLimitPresentation& p);
Json to_json(const CisLattice& l);
Json to_json(const DiagramComparison& c);
Json to_json(const Extension& e);

struct AnalysisOptions {
  std::optional<std::size_t> radius;
  std::optional<std::size_t> max_length;
  std::size_t max_edges = 5000;
  std::size_t verify_depth = 6;
};

struct Analysis {
  Json report;
  int exit_code = 0;
};

// Classification, minimality, primitivization, complex, cohomology and lattice.
Analysis analyze(const Substitution& s, const AnalysisOptions& options = {});

// Serialised with sorted keys and two-space indentation.
std::string dump(const Json& j);

}  // namespace substdyn
