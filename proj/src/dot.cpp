#include "substdyn/dot.hpp"

#include <algorithm>
#include <sstream>

namespace substdyn {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string complex_to_dot(const InverseLimitPresentation& p, const EdgeSet& highlight) {
  const APComplex& k = p.complex;
  std::ostringstream os;
  os << "digraph complex {\n  rankdir=LR;\n";
  for (std::size_t v = 0; v < k.vertex_count(); ++v)
    os << "  v" << v << " [label=" << quote(k.vertex_labels[v]) << "];\n";
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    bool hi = std::binary_search(highlight.begin(), highlight.end(), e);
    os << "  v" << k.graph.source[e] << " -> v" << k.graph.target[e]
       << " [label=" << quote(p.collared.name(k.edges[e]));
    if (hi) os << ", color=blue, fontcolor=blue";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string lattice_to_dot(const CisLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    const CisNode& n = l.nodes[i];
    std::string label = n.edges.empty() ? "empty" : std::to_string(n.edges.size()) + " edges";
    if (!n.edges.empty() && n.edges.size() == l.edge_count) label = "total";
    label += "\\nH1 rank " + std::to_string(n.h1.limit.eventual_rank);
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& c : l.covers)
    os << "  n" << c.from << " -> n" << c.to << " [label=\"" << c.inclusion_rank << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace substdyn
