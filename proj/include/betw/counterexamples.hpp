#pragma once

#include <string>

#include "betw/frame_ops.hpp"

namespace betw::fin {

// Pre-built constructions showing that single betweenness axioms are not
// preserved by the frame operation named in `kind`: a bounded morphic image
// (B1, B3, B4, B5), a disjoint union (B6), or a generated subframe (B8).
struct CounterexampleBundle {
  std::string name;          // B1, B3, B4, B5, B6, B8
  std::string kind;          // morphism | union | subframe
  std::string axiom;         // axiom id that holds on the source, fails on the result

  // kind == morphism
  MorphismSpec morphism;
  std::vector<int> back_exempt;  // declared boundary worlds (B4 window only)

  // kind == union
  Frame3 part;   // one component
  Frame3 whole;  // the disjoint union of two copies

  // kind == subframe: middle-closed two-point subframe of a dense carrier
  Frame3 sub;
};

// For B4 the window parameter N >= 2 sets the number of repetitions of the
// chain pattern; the back condition then fails exactly at the last
// mapped-to-the-inner-point world of the window.
CounterexampleBundle counterexample(const std::string& name, int N = 20);

// Runs all checks the bundle promises and reports the first problem.
CheckReport verify_counterexample(const CounterexampleBundle& b);

// Human-readable rendition used by the command-line tool.
std::string describe_counterexample(const CounterexampleBundle& b);

}  // namespace betw::fin
