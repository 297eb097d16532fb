#pragma once

#include <string>
#include <vector>

#include "betw/formula.hpp"

namespace betw {

// Named formulas used throughout the test batteries: the hybrid
// correspondents HB1..HB8 of the betweenness axioms, the modal symmetry
// axiom HB2m, the pure density axiom HB8p, the bridge principle, the
// Dedekind completeness axiom D, and the two convexity test formulas.
Formula builtin(const std::string& name);
std::vector<std::string> builtin_names();

// E phi <-> (<B>(phi, true) | phi): the E-elimination equivalence valid on
// linear betweenness frames without endpoints.
Formula e_elimination(const Formula& phi);

}  // namespace betw
