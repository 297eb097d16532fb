#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betw/surd.hpp"

namespace betw::dense {

// Surd extended with the two infinities.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf } kind = Kind::Finite;
  Surd value;  // meaningful only when finite

  static Endpoint neg_inf() { return {Kind::NegInf, {}}; }
  static Endpoint pos_inf() { return {Kind::PosInf, {}}; }
  static Endpoint fin(Surd s) { return {Kind::Finite, std::move(s)}; }

  bool finite() const { return kind == Kind::Finite; }
  int cmp(const Endpoint& o) const;
  bool operator<(const Endpoint& o) const { return cmp(o) < 0; }
  bool operator<=(const Endpoint& o) const { return cmp(o) <= 0; }
  bool operator==(const Endpoint& o) const { return cmp(o) == 0; }
  bool operator!=(const Endpoint& o) const { return cmp(o) != 0; }
  std::string str() const;
};

enum class Base { Z, Q, R };

// Underlying ordered universe: all of Z/Q/R or an interval of it.  A finite
// bound may be closed (member) or open.
struct Carrier {
  Base base = Base::Q;
  Endpoint lo = Endpoint::neg_inf();
  Endpoint hi = Endpoint::pos_inf();
  bool lo_closed = false;
  bool hi_closed = false;

  static Carrier Z() { return {Base::Z}; }
  static Carrier Q() { return {Base::Q}; }
  static Carrier R() { return {Base::R}; }
  static Carrier bounded(Base b, Surd lo, Surd hi, bool lo_closed, bool hi_closed) {
    return {b, Endpoint::fin(std::move(lo)), Endpoint::fin(std::move(hi)), lo_closed, hi_closed};
  }

  bool member(const Surd& s) const;
  bool bounded_finite() const;  // finitely many members (Z with finite bounds)
  std::string str() const;
};

// One maximal piece of a canonical set: an isolated point or an open
// interval with lo < hi.
struct Component {
  bool is_point = true;
  Surd point;
  Endpoint lo, hi;

  static Component pt(Surd s) {
    Component c;
    c.point = std::move(s);
    return c;
  }
  static Component open(Endpoint l, Endpoint h) {
    Component c;
    c.is_point = false;
    c.lo = std::move(l);
    c.hi = std::move(h);
    return c;
  }
  bool operator==(const Component& o) const;
};

// Canonical finite union of points and open intervals inside a carrier:
// components are pairwise disjoint, sorted, and maximal (two open intervals
// never share an endpoint unless the shared point is absent from the set).
// On Z all bounded runs are stored as explicit points and interval endpoints
// are integers.
struct LinearSet {
  std::vector<Component> comps;

  bool empty() const { return comps.empty(); }
  bool operator==(const LinearSet& o) const { return comps == o.comps; }
  bool contains(const Surd& s, const Carrier& c) const;
  std::string str() const;
};

// Builds the canonical form of an arbitrary finite union of points and open
// intervals, clipped to the carrier.
LinearSet canonicalize(std::vector<Component> raw, const Carrier& c);

LinearSet empty_set();
LinearSet full_set(const Carrier& c);

LinearSet set_union(const LinearSet& x, const LinearSet& y, const Carrier& c);
LinearSet set_complement(const LinearSet& x, const Carrier& c);
LinearSet set_intersect(const LinearSet& x, const LinearSet& y, const Carrier& c);

// { w : exists x in X, y in Y with x < w < y or y < w < x }, computed in
// closed form from the attained/approachable extrema of the operands.
LinearSet between_image(const LinearSet& x, const LinearSet& y, const Carrier& c);

// A representable member of the set (point value, interval midpoint, or a
// rational/integer inside), if the set is nonempty.
std::optional<Surd> pick_member(const LinearSet& x, const Carrier& c);

}  // namespace betw::dense
