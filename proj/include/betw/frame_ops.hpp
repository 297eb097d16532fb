#pragma once

#include <string>
#include <vector>

#include "betw/frame.hpp"

namespace betw::fin {

// B_<(x,y,z) iff x<y<z or z<y<x.
Frame3 order_to_betweenness(const OrderFrame& o);

// Inverse direction: reconstructs the strict linear order in which
// origin < positive from a frame satisfying B1-B6.  Throws when the
// precondition fails (message names the failing axiom and witness) or when
// the frame does not embed into a linear order.
OrderFrame betweenness_to_order(const Frame3& f, int origin, int positive);

// Worlds renumbered blockwise: frame k starts at the sum of the sizes of
// frames 0..k-1.
Frame3 disjoint_union(const std::vector<Frame3>& fs);

enum class Coord { First, Middle };

struct Subframe {
  Frame3 frame;
  std::vector<int> worlds;  // kept original worlds, ascending; index = new id
};

// Least superset of the seeds closed under the relation:
//   Middle: y in W', B(x,y,z)  =>  x,z in W'
//   First:  x in W', B(x,y,z)  =>  y,z in W'
Subframe generated_subframe(const Frame3& f, const std::vector<int>& seeds, Coord coord);

struct MorphismSpec {
  Frame3 source;
  Frame3 target;
  std::vector<int> map;  // total on source worlds
  Coord coord = Coord::Middle;
};

struct MorphismReport {
  CheckReport forth;
  CheckReport back;
};

// Checks the relation-preservation (forth) and witness-lifting (back)
// conditions.  Source worlds listed in back_exempt are skipped by the back
// check.
MorphismReport check_bounded_morphism(const MorphismSpec& spec,
                                      const std::vector<int>& back_exempt = {});

// All source worlds at which the back condition fails.
std::vector<int> back_failure_set(const MorphismSpec& spec);

struct UEResult {
  Frame3 ue;         // points are principal ultrafilters, numbered like the worlds
  CheckReport iso;   // does w |-> principal(w) carry f onto ue isomorphically?
};

// Finite ultrafilter extension: every ultrafilter over a finite set is
// principal, and the extended relation is computed from the containment
// condition over all member-set pairs.
UEResult ultrafilter_extension_finite(const Frame3& f);

// Second-order completeness check over all subset pairs X,Y:
// (exists w, all x in X, y in Y: B(w,x,y)) -> (exists u, ...: B(x,u,y)).
// Refuses frames larger than max_worlds.
CheckReport check_B9_finite(const Frame3& f, int max_worlds = 12);

}  // namespace betw::fin
