#pragma once

#include <string>

#include "betw/formula.hpp"

namespace betw {

// Standard translation into a first-order language with a ternary predicate
// B, equality, one variable x_i per nominal i and one unary predicate P_p per
// proposition p.  The output is fully parenthesized ASCII:
//   true | false | B(v,v,v) | v = v | P_p(v) | ~fo | (fo & fo) | (fo | fo)
//   | (fo -> fo) | (fo <-> fo) | exists v fo
// Fresh bound variables are drawn from y, z, y2, z2, y3, z3, ...
std::string standard_translation(const Formula& f, const std::string& free_var);

// Validates a string against the first-order grammar above (used to keep the
// translation output format honest).
bool fo_wellformed(const std::string& text);

}  // namespace betw
