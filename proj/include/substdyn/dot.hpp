#pragma once

#include "substdyn/ap_complex.hpp"
#include "substdyn/cis.hpp"

#include <string>

namespace substdyn {

// Edges in `highlight` are drawn in a second colour.
std::string complex_to_dot(const InverseLimitPresentation& p, const EdgeSet& highlight = {});
std::string lattice_to_dot(const CisLattice& l);

}  // namespace substdyn
