#pragma once

#include <string>
#include <vector>

#include "betw/frame.hpp"

namespace betw::fin {

// First-order betweenness sentences, decided by exhaustive quantification.
// Catalog:
//   B1..B8        the base axioms (strictness, outer symmetry, asymmetry,
//                 outer/inner transitivity, linearity, unboundedness, density)
//   B4p, B5p      the derived transitivity variants
//   B6x           the six-disjunct linearity sentence (B6 without symmetry)
//   proj          both projection implications
//   side          every point has witnesses on both sides of any other point
//   dsound        points between inner points stay between the outer pair
//   cc            double convexity collapses onto single convexity
std::vector<std::string> axiom_catalog();
CheckReport check_axiom(const Frame3& f, const std::string& axiom_id);

// Strict-order axioms L1..L5 (asymmetry, transitivity, trichotomy,
// unboundedness, density).
CheckReport check_order_axiom(const OrderFrame& o, const std::string& axiom_id);

}  // namespace betw::fin
