#include "betw/frame_axioms.hpp"

#include <stdexcept>

namespace betw::fin {

namespace {

CheckReport ok() { return CheckReport{}; }
CheckReport fail(std::vector<int> witness, std::string detail) {
  return CheckReport{false, std::move(witness), std::move(detail)};
}

bool distinct3(int a, int b, int c) { return a != b && a != c && b != c; }

CheckReport b1(const Frame3& f) {
  for (auto& t : f.triples())
    if (!distinct3(t[0], t[1], t[2])) return fail({t[0], t[1], t[2]}, "non-strict triple");
  return ok();
}

CheckReport b2(const Frame3& f) {
  for (auto& t : f.triples())
    if (!f.b(t[2], t[1], t[0])) return fail({t[0], t[1], t[2]}, "outer symmetry fails");
  return ok();
}

CheckReport b3(const Frame3& f) {
  for (auto& t : f.triples())
    if (f.b(t[0], t[2], t[1])) return fail({t[0], t[1], t[2]}, "inner asymmetry fails");
  return ok();
}

CheckReport b4(const Frame3& f) {
  for (auto& t : f.triples())
    for (int u = 0; u < f.n; ++u)
      if (f.b(t[1], t[2], u) && !f.b(t[0], t[1], u))
        return fail({t[0], t[1], t[2], u}, "outer transitivity fails");
  return ok();
}

CheckReport b5(const Frame3& f) {
  for (auto& t : f.triples())
    for (int u = 0; u < f.n; ++u)
      if (f.b(t[1], u, t[2]) && !f.b(t[0], t[1], u))
        return fail({t[0], t[1], t[2], u}, "inner transitivity fails");
  return ok();
}

CheckReport b6(const Frame3& f) {
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z)
        if (distinct3(x, y, z) && !f.b(x, y, z) && !f.b(x, z, y) && !f.b(y, x, z))
          return fail({x, y, z}, "linearity fails");
  return ok();
}

CheckReport b6x(const Frame3& f) {
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z)
        if (distinct3(x, y, z) && !f.b(x, y, z) && !f.b(x, z, y) && !f.b(y, x, z) &&
            !f.b(y, z, x) && !f.b(z, x, y) && !f.b(z, y, x))
          return fail({x, y, z}, "six-disjunct linearity fails");
  return ok();
}

CheckReport b7(const Frame3& f) {
  for (int y = 0; y < f.n; ++y) {
    bool found = false;
    for (int x = 0; x < f.n && !found; ++x)
      for (int z = 0; z < f.n && !found; ++z)
        if (f.b(x, y, z)) found = true;
    if (!found) return fail({y}, "unboundedness fails");
  }
  return ok();
}

CheckReport b8(const Frame3& f) {
  for (int x = 0; x < f.n; ++x)
    for (int z = 0; z < f.n; ++z) {
      if (x == z) continue;
      bool found = false;
      for (int y = 0; y < f.n && !found; ++y)
        if (f.b(x, y, z)) found = true;
      if (!found) return fail({x, z}, "density fails");
    }
  return ok();
}

CheckReport b4p(const Frame3& f) {
  for (auto& t : f.triples())
    for (int u = 0; u < f.n; ++u)
      if (f.b(t[1], t[2], u) && !f.b(t[0], t[2], u))
        return fail({t[0], t[1], t[2], u}, "derived outer transitivity fails");
  return ok();
}

CheckReport b5p(const Frame3& f) {
  for (auto& t : f.triples())
    for (int u = 0; u < f.n; ++u)
      if (f.b(t[1], u, t[2]) && !f.b(t[0], u, t[2]))
        return fail({t[0], t[1], t[2], u}, "derived inner transitivity fails");
  return ok();
}

CheckReport proj(const Frame3& f) {
  // B(a,x,y) & B(a,x,w) -> y=w | B(x,w,y) | B(x,y,w)
  for (int a = 0; a < f.n; ++a)
    for (int x = 0; x < f.n; ++x)
      for (int y = 0; y < f.n; ++y) {
        if (!f.b(a, x, y)) continue;
        for (int w = 0; w < f.n; ++w)
          if (f.b(a, x, w) && y != w && !f.b(x, w, y) && !f.b(x, y, w))
            return fail({a, x, y, w}, "first projection implication fails");
      }
  // B(a,u,y) & B(a,w,y) -> u=w | B(a,u,w) | B(a,w,u)
  for (int a = 0; a < f.n; ++a)
    for (int u = 0; u < f.n; ++u)
      for (int y = 0; y < f.n; ++y) {
        if (!f.b(a, u, y)) continue;
        for (int w = 0; w < f.n; ++w)
          if (f.b(a, w, y) && u != w && !f.b(a, u, w) && !f.b(a, w, u))
            return fail({a, u, y, w}, "second projection implication fails");
      }
  return ok();
}

CheckReport side(const Frame3& f) {
  for (int w = 0; w < f.n; ++w)
    for (int x = 0; x < f.n; ++x) {
      if (w == x) continue;
      bool right = false, left = false;
      for (int u = 0; u < f.n; ++u) {
        if (f.b(x, w, u)) right = true;
        if (f.b(u, x, w)) left = true;
      }
      if (!right || !left) return fail({w, x}, "side witness missing");
    }
  return ok();
}

CheckReport dsound(const Frame3& f) {
  for (int x = 0; x < f.n; ++x)
    for (int a = 0; a < f.n; ++a)
      for (int y = 0; y < f.n; ++y) {
        if (!f.b(x, a, y)) continue;
        for (int b = 0; b < f.n; ++b) {
          if (!f.b(x, b, y)) continue;
          for (int u = 0; u < f.n; ++u)
            if (f.b(a, u, b) && !f.b(x, u, y))
              return fail({x, a, y, b, u}, "inner point escapes the outer pair");
        }
      }
  return ok();
}

CheckReport cc(const Frame3& f) {
  for (auto& t : f.triples()) {
    int y = t[0], x = t[1], z = t[2];
    for (int y0 = 0; y0 < f.n; ++y0)
      for (int y1 = 0; y1 < f.n; ++y1) {
        if (!f.b(y0, y, y1)) continue;
        for (int z0 = 0; z0 < f.n; ++z0)
          for (int z1 = 0; z1 < f.n; ++z1)
            if (f.b(z0, z, z1) && !f.b(y0, x, z0) && !f.b(y0, x, z1) && !f.b(y1, x, z0) &&
                !f.b(y1, x, z1))
              return fail({y, x, z, y0, y1, z0, z1}, "double convexity does not collapse");
      }
  }
  return ok();
}

}  // namespace

std::vector<std::string> axiom_catalog() {
  return {"B1", "B2", "B3", "B4",  "B5",  "B6",   "B7",   "B8",
          "B4p", "B5p", "B6x", "proj", "side", "dsound", "cc"};
}

CheckReport check_axiom(const Frame3& f, const std::string& id) {
  if (id == "B1") return b1(f);
  if (id == "B2") return b2(f);
  if (id == "B3") return b3(f);
  if (id == "B4") return b4(f);
  if (id == "B5") return b5(f);
  if (id == "B6") return b6(f);
  if (id == "B7") return b7(f);
  if (id == "B8") return b8(f);
  if (id == "B4p") return b4p(f);
  if (id == "B5p") return b5p(f);
  if (id == "B6x") return b6x(f);
  if (id == "proj") return proj(f);
  if (id == "side") return side(f);
  if (id == "dsound") return dsound(f);
  if (id == "cc") return cc(f);
  throw std::invalid_argument("unknown axiom id: '" + id + "'");
}

CheckReport check_order_axiom(const OrderFrame& o, const std::string& id) {
  if (id == "L1") {
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y)
        if (o.less(x, y) && o.less(y, x)) return fail({x, y}, "asymmetry fails");
    return ok();
  }
  if (id == "L2") {
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y) {
        if (!o.less(x, y)) continue;
        for (int z = 0; z < o.n; ++z)
          if (o.less(y, z) && !o.less(x, z)) return fail({x, y, z}, "transitivity fails");
      }
    return ok();
  }
  if (id == "L3") {
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y)
        if (x != y && !o.less(x, y) && !o.less(y, x)) return fail({x, y}, "trichotomy fails");
    return ok();
  }
  if (id == "L4") {
    for (int x = 0; x < o.n; ++x) {
      bool below = false, above = false;
      for (int y = 0; y < o.n; ++y) {
        if (o.less(y, x)) below = true;
        if (o.less(x, y)) above = true;
      }
      if (!below || !above) return fail({x}, "unboundedness fails");
    }
    return ok();
  }
  if (id == "L5") {
    for (int x = 0; x < o.n; ++x)
      for (int y = 0; y < o.n; ++y) {
        if (!o.less(x, y)) continue;
        bool mid = false;
        for (int z = 0; z < o.n && !mid; ++z)
          if (o.less(x, z) && o.less(z, y)) mid = true;
        if (!mid) return fail({x, y}, "density fails");
      }
    return ok();
  }
  throw std::invalid_argument("unknown order axiom id: '" + id + "'");
}

}  // namespace betw::fin
