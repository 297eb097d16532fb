#include "betw/linear_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace betw::dense {

int Endpoint::cmp(const Endpoint& o) const {
  if (kind == o.kind) {
    if (kind != Kind::Finite) return 0;
    return value.cmp(o.value);
  }
  auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Finite ? 1 : 2; };
  return rank(kind) < rank(o.kind) ? -1 : 1;
}

std::string Endpoint::str() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return value.str();
  }
}

bool Carrier::member(const Surd& s) const {
  if (base == Base::Z && !s.is_integer()) return false;
  if (base == Base::Q && !s.is_rational()) return false;
  if (lo.finite()) {
    int c = s.cmp(lo.value);
    if (c < 0 || (c == 0 && !lo_closed)) return false;
  }
  if (hi.finite()) {
    int c = s.cmp(hi.value);
    if (c > 0 || (c == 0 && !hi_closed)) return false;
  }
  return true;
}

bool Carrier::bounded_finite() const { return base == Base::Z && lo.finite() && hi.finite(); }

std::string Carrier::str() const {
  std::string b = base == Base::Z ? "Z" : base == Base::Q ? "Q" : "R";
  if (!lo.finite() && !hi.finite()) return b;
  return b + " " + (lo_closed ? "[" : "(") + lo.str() + "," + hi.str() +
         (hi_closed ? "]" : ")");
}

bool Component::operator==(const Component& o) const {
  if (is_point != o.is_point) return false;
  if (is_point) return point == o.point;
  return lo == o.lo && hi == o.hi;
}

namespace {

// position key for sorting disjoint components
Endpoint start_of(const Component& c) { return c.is_point ? Endpoint::fin(c.point) : c.lo; }

bool comp_before(const Component& a, const Component& b) {
  int c = start_of(a).cmp(start_of(b));
  if (c != 0) return c < 0;
  // a point sorts before an interval opening at the same value
  return a.is_point && !b.is_point;
}

// ---------------------------------------------------------------- dense base

LinearSet canonicalize_dense(const std::vector<Component>& raw, const Carrier& c) {
  std::vector<Surd> points;
  std::vector<std::pair<Endpoint, Endpoint>> ivs;

  for (const auto& comp : raw) {
    if (comp.is_point) {
      if (c.member(comp.point)) points.push_back(comp.point);
      continue;
    }
    Endpoint l = comp.lo, u = comp.hi;
    if (!(l < u)) continue;
    // carrier endpoints falling strictly inside the open interval become
    // points when the carrier is closed there
    if (c.lo.finite() && l < c.lo) {
      if (c.lo_closed && c.lo < u && c.member(c.lo.value)) points.push_back(c.lo.value);
      l = c.lo;
    }
    if (c.hi.finite() && c.hi < u) {
      if (c.hi_closed && l < c.hi && c.member(c.hi.value)) points.push_back(c.hi.value);
      u = c.hi;
    }
    if (l < u) ivs.emplace_back(l, u);
  }

  std::sort(ivs.begin(), ivs.end(), [](const auto& a, const auto& b) {
    int cl = a.first.cmp(b.first);
    return cl != 0 ? cl < 0 : a.second.cmp(b.second) < 0;
  });

  // merge overlapping intervals (shared member endpoints are handled via
  // points below; a shared endpoint absent from the carrier leaves no gap)
  std::vector<std::pair<Endpoint, Endpoint>> merged;
  for (auto& iv : ivs) {
    bool joins = !merged.empty() &&
                 (iv.first < merged.back().second ||
                  (iv.first == merged.back().second && iv.first.finite() &&
                   !c.member(iv.first.value)));
    if (joins) {
      if (merged.back().second < iv.second) merged.back().second = iv.second;
    } else {
      merged.push_back(iv);
    }
  }

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // drop interior points; bridge intervals across boundary points
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
      Endpoint p = Endpoint::fin(points[i]);
      bool interior = false, bridged = false;
      for (std::size_t j = 0; j < merged.size(); ++j) {
        if (merged[j].first < p && p < merged[j].second) {
          interior = true;
          break;
        }
        if (merged[j].second == p && j + 1 < merged.size() && merged[j + 1].first == p) {
          merged[j].second = merged[j + 1].second;
          merged.erase(merged.begin() + j + 1);
          bridged = true;
          break;
        }
      }
      if (interior || bridged) {
        if (interior) points.erase(points.begin() + i);
        if (bridged) points.erase(points.begin() + i);
        changed = true;
        break;
      }
    }
  }

  std::vector<Component> out;
  for (auto& p : points) out.push_back(Component::pt(p));
  for (auto& iv : merged) out.push_back(Component::open(iv.first, iv.second));
  std::sort(out.begin(), out.end(), comp_before);
  LinearSet s;
  s.comps = std::move(out);
  return s;
}

// -------------------------------------------------------------------- Z base

struct ZRun {
  // integers strictly between a and b; absent bound = unbounded
  std::optional<mpz_class> a, b;
};

constexpr long kMaxExpandedPoints = 1'000'000;

LinearSet canonicalize_z(const std::vector<Component>& raw, const Carrier& c) {
  // exclusive integer bounds of the carrier
  auto excl_bound = [](const Endpoint& e, bool closed, bool lower) -> std::optional<mpz_class> {
    if (!e.finite()) return std::nullopt;
    const Surd& v = e.value;
    if (lower) {
      if (closed && v.is_integer()) return v.floor() - 1;
      return v.floor();
    }
    if (closed && v.is_integer()) return v.floor() + 1;
    if (v.is_integer()) return v.floor();
    return v.floor() + 1;
  };
  std::optional<mpz_class> L = excl_bound(c.lo, c.lo_closed, true);
  std::optional<mpz_class> H = excl_bound(c.hi, c.hi_closed, false);

  std::vector<ZRun> runs;
  for (const auto& comp : raw) {
    ZRun r;
    if (comp.is_point) {
      if (!comp.point.is_integer()) continue;
      mpz_class p = comp.point.floor();
      r.a = p - 1;
      r.b = p + 1;
    } else {
      if (comp.lo.finite()) {
        const Surd& v = comp.lo.value;
        r.a = v.is_integer() ? v.floor() : v.floor();
      }
      if (comp.hi.finite()) {
        const Surd& v = comp.hi.value;
        r.b = v.is_integer() ? v.floor() : mpz_class(v.floor() + 1);
      }
    }
    if (L && (!r.a || *r.a < *L)) r.a = *L;
    if (H && (!r.b || *H < *r.b)) r.b = *H;
    if (r.a && r.b && *r.b - *r.a <= 1) continue;  // no integer inside
    runs.push_back(std::move(r));
  }

  std::sort(runs.begin(), runs.end(), [](const ZRun& x, const ZRun& y) {
    if (!x.a) return static_cast<bool>(y.a);
    if (!y.a) return false;
    return *x.a < *y.a;
  });
  std::vector<ZRun> merged;
  for (auto& r : runs) {
    if (!merged.empty()) {
      ZRun& m = merged.back();
      bool joins = !m.b || !r.a || *r.a < *m.b;
      if (joins) {
        if (m.b && (!r.b || *m.b < *r.b)) m.b = r.b;
        if (!r.b) m.b.reset();
        continue;
      }
    }
    merged.push_back(r);
  }

  std::vector<Component> out;
  for (auto& r : merged) {
    if (r.a && r.b) {
      if (*r.b - *r.a - 1 > kMaxExpandedPoints)
        throw std::runtime_error("integer set too large to enumerate");
      for (mpz_class v = *r.a + 1; v < *r.b; ++v) out.push_back(Component::pt(Surd(mpq_class(v))));
    } else {
      Endpoint lo = r.a ? Endpoint::fin(Surd(mpq_class(*r.a))) : Endpoint::neg_inf();
      Endpoint hi = r.b ? Endpoint::fin(Surd(mpq_class(*r.b))) : Endpoint::pos_inf();
      out.push_back(Component::open(lo, hi));
    }
  }
  std::sort(out.begin(), out.end(), comp_before);
  LinearSet s;
  s.comps = std::move(out);
  return s;
}

}  // namespace

LinearSet canonicalize(std::vector<Component> raw, const Carrier& c) {
  return c.base == Base::Z ? canonicalize_z(raw, c) : canonicalize_dense(raw, c);
}

LinearSet empty_set() { return {}; }

LinearSet full_set(const Carrier& c) {
  return canonicalize({Component::open(Endpoint::neg_inf(), Endpoint::pos_inf())}, c);
}

bool LinearSet::contains(const Surd& s, const Carrier& c) const {
  if (!c.member(s)) return false;
  Endpoint e = Endpoint::fin(s);
  for (const auto& comp : comps) {
    if (comp.is_point) {
      if (comp.point == s) return true;
    } else if (comp.lo < e && e < comp.hi) {
      return true;
    }
  }
  return false;
}

std::string LinearSet::str() const {
  if (comps.empty()) return "{}";
  std::ostringstream out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out << " ";
    const auto& c = comps[i];
    if (c.is_point)
      out << "{" << c.point.str() << "}";
    else
      out << "(" << c.lo.str() << "," << c.hi.str() << ")";
  }
  return out.str();
}

LinearSet set_union(const LinearSet& x, const LinearSet& y, const Carrier& c) {
  std::vector<Component> raw = x.comps;
  raw.insert(raw.end(), y.comps.begin(), y.comps.end());
  return canonicalize(std::move(raw), c);
}

LinearSet set_complement(const LinearSet& x, const Carrier& c) {
  // contiguous blocks of x: [start, end] with inclusivity flags
  struct Block {
    Endpoint start, end;
    bool start_incl, end_incl;
  };
  std::vector<Block> blocks;
  for (const auto& comp : x.comps) {
    Block b = comp.is_point
                  ? Block{Endpoint::fin(comp.point), Endpoint::fin(comp.point), true, true}
                  : Block{comp.lo, comp.hi, false, false};
    if (!blocks.empty() && blocks.back().end == b.start &&
        (blocks.back().end_incl || b.start_incl)) {
      blocks.back().end = b.end;
      blocks.back().end_incl = b.end_incl;
    } else {
      blocks.push_back(b);
    }
  }

  std::vector<Component> raw;
  if (blocks.empty()) {
    raw.push_back(Component::open(Endpoint::neg_inf(), Endpoint::pos_inf()));
  } else {
    if (blocks.front().start.finite()) {
      raw.push_back(Component::open(Endpoint::neg_inf(), blocks.front().start));
      if (!blocks.front().start_incl) raw.push_back(Component::pt(blocks.front().start.value));
    }
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
      if (!blocks[i].end_incl && blocks[i].end.finite())
        raw.push_back(Component::pt(blocks[i].end.value));
      raw.push_back(Component::open(blocks[i].end, blocks[i + 1].start));
      if (!blocks[i + 1].start_incl && blocks[i + 1].start.finite())
        raw.push_back(Component::pt(blocks[i + 1].start.value));
    }
    if (blocks.back().end.finite()) {
      if (!blocks.back().end_incl) raw.push_back(Component::pt(blocks.back().end.value));
      raw.push_back(Component::open(blocks.back().end, Endpoint::pos_inf()));
    }
  }
  return canonicalize(std::move(raw), c);
}

LinearSet set_intersect(const LinearSet& x, const LinearSet& y, const Carrier& c) {
  return set_complement(
      set_union(set_complement(x, c), set_complement(y, c), c), c);
}

namespace {

// smallest value of the set, as an exclusive lower bound for "there is an
// element below w": w qualifies iff inf < w
Endpoint image_inf(const LinearSet& x, const Carrier& c) {
  const Component& f = x.comps.front();
  if (f.is_point) return Endpoint::fin(f.point);
  if (!f.lo.finite()) return Endpoint::neg_inf();
  if (c.base == Base::Z) return Endpoint::fin(f.lo.value + Surd(mpq_class(1)));
  return f.lo;
}

Endpoint image_sup(const LinearSet& x, const Carrier& c) {
  const Component& f = x.comps.back();
  if (f.is_point) return Endpoint::fin(f.point);
  if (!f.hi.finite()) return Endpoint::pos_inf();
  if (c.base == Base::Z) return Endpoint::fin(f.hi.value - Surd(mpq_class(1)));
  return f.hi;
}

}  // namespace

LinearSet between_image(const LinearSet& x, const LinearSet& y, const Carrier& c) {
  if (x.empty() || y.empty()) return empty_set();
  Endpoint ix = image_inf(x, c), sx = image_sup(x, c);
  Endpoint iy = image_inf(y, c), sy = image_sup(y, c);
  std::vector<Component> raw;
  if (ix < sy) raw.push_back(Component::open(ix, sy));
  if (iy < sx) raw.push_back(Component::open(iy, sx));
  return canonicalize(std::move(raw), c);
}

std::optional<Surd> pick_member(const LinearSet& x, const Carrier& c) {
  if (x.empty()) return std::nullopt;
  const Component& f = x.comps.front();
  if (f.is_point) return f.point;
  const bool lo_fin = f.lo.finite(), hi_fin = f.hi.finite();
  if (c.base == Base::Z) {
    if (lo_fin) return f.lo.value + Surd(mpq_class(1));
    if (hi_fin) return f.hi.value - Surd(mpq_class(1));
    return Surd(mpq_class(0));
  }
  if (lo_fin && hi_fin) {
    Surd mid = midpoint(f.lo.value, f.hi.value);
    if (c.base == Base::R || mid.is_rational()) return mid;
    return Surd(rational_between(f.lo.value, f.hi.value));
  }
  if (lo_fin) {
    const Surd& l = f.lo.value;
    return l.is_rational() ? l + Surd(mpq_class(1)) : Surd(mpq_class(l.floor() + 1));
  }
  if (hi_fin) {
    const Surd& u = f.hi.value;
    return u.is_rational() ? u - Surd(mpq_class(1)) : Surd(mpq_class(u.floor()));
  }
  return Surd(mpq_class(0));
}

}  // namespace betw::dense
