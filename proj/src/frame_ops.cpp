#include "betw/frame_ops.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "betw/frame_axioms.hpp"

namespace betw::fin {

Frame3 order_to_betweenness(const OrderFrame& o) {
  Frame3 f(o.n);
  for (int x = 0; x < o.n; ++x)
    for (int y = 0; y < o.n; ++y)
      for (int z = 0; z < o.n; ++z)
        if ((o.less(x, y) && o.less(y, z)) || (o.less(z, y) && o.less(y, x))) f.add(x, y, z);
  return f;
}

namespace {

std::string witness_text(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

}  // namespace

OrderFrame betweenness_to_order(const Frame3& f, int origin, int positive) {
  if (origin == positive) throw std::invalid_argument("origin and positive must differ");
  if (origin < 0 || origin >= f.n || positive < 0 || positive >= f.n)
    throw std::invalid_argument("reference worlds out of range");
  for (const char* id : {"B1", "B2", "B3", "B4", "B5", "B6"}) {
    auto rep = check_axiom(f, id);
    if (!rep.holds)
      throw std::runtime_error(std::string("precondition violated: axiom ") + id +
                               " fails at " + witness_text(rep.witness));
  }

  // Position class relative to the oriented pair (origin, positive):
  // 0 = left of origin, 1 = origin, 2 = strictly between, 3 = positive,
  // 4 = right of positive.
  auto clazz = [&](int w) -> int {
    if (w == origin) return 1;
    if (w == positive) return 3;
    if (f.b(w, origin, positive)) return 0;
    if (f.b(origin, w, positive)) return 2;
    if (f.b(origin, positive, w)) return 4;
    throw std::runtime_error("world " + std::to_string(w) +
                             " is not linearly related to the reference pair");
  };
  std::vector<int> cls(f.n);
  for (int w = 0; w < f.n; ++w) cls[w] = clazz(w);

  auto before = [&](int a, int b) -> bool {
    if (a == b) return false;
    if (cls[a] != cls[b]) return cls[a] < cls[b];
    switch (cls[a]) {
      case 0:  // both left of the origin: smaller = farther out
        if (f.b(a, b, origin)) return true;
        if (f.b(b, a, origin)) return false;
        break;
      case 2:  // both inside: smaller = closer to the origin
        if (f.b(origin, a, b)) return true;
        if (f.b(origin, b, a)) return false;
        break;
      case 4:  // both right of positive: smaller = closer to positive
        if (f.b(positive, a, b)) return true;
        if (f.b(positive, b, a)) return false;
        break;
      default: break;
    }
    throw std::runtime_error("worlds " + std::to_string(a) + " and " + std::to_string(b) +
                             " are not comparable in this frame");
  };

  OrderFrame o(f.n);
  for (int a = 0; a < f.n; ++a)
    for (int b = 0; b < f.n; ++b)
      if (a != b && before(a, b)) o.add(a, b);

  for (const char* id : {"L1", "L2", "L3"}) {
    auto rep = check_order_axiom(o, id);
    if (!rep.holds)
      throw std::runtime_error(std::string("reconstructed order violates ") + id + " at " +
                               witness_text(rep.witness));
  }
  return o;
}

Frame3 disjoint_union(const std::vector<Frame3>& fs) {
  int total = 0;
  for (auto& f : fs) total += f.n;
  Frame3 u(total);
  int base = 0;
  for (auto& f : fs) {
    for (auto& t : f.triples()) u.add(base + t[0], base + t[1], base + t[2]);
    base += f.n;
  }
  return u;
}

Subframe generated_subframe(const Frame3& f, const std::vector<int>& seeds, Coord coord) {
  std::vector<char> in(f.n, 0);
  std::vector<int> queue;
  for (int s : seeds) {
    if (s < 0 || s >= f.n) throw std::invalid_argument("seed world out of range");
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  auto triples = f.triples();
  while (!queue.empty()) {
    int w = queue.back();
    queue.pop_back();
    for (auto& t : triples) {
      int anchor = coord == Coord::Middle ? t[1] : t[0];
      if (anchor != w) continue;
      for (int other : coord == Coord::Middle ? std::array<int, 2>{t[0], t[2]}
                                              : std::array<int, 2>{t[1], t[2]})
        if (!in[other]) {
          in[other] = 1;
          queue.push_back(other);
        }
    }
  }
  Subframe sub;
  std::vector<int> new_id(f.n, -1);
  for (int w = 0; w < f.n; ++w)
    if (in[w]) {
      new_id[w] = static_cast<int>(sub.worlds.size());
      sub.worlds.push_back(w);
    }
  sub.frame = Frame3(static_cast<int>(sub.worlds.size()));
  for (auto& t : triples)
    if (in[t[0]] && in[t[1]] && in[t[2]])
      sub.frame.add(new_id[t[0]], new_id[t[1]], new_id[t[2]]);
  return sub;
}

namespace {

bool back_holds_at(const MorphismSpec& s, int w, std::vector<int>* witness) {
  const Frame3& tgt = s.target;
  int fw = s.map[w];
  for (auto& t : tgt.triples()) {
    int anchor = s.coord == Coord::Middle ? t[1] : t[0];
    if (anchor != fw) continue;
    int a_img = s.coord == Coord::Middle ? t[0] : t[1];
    int b_img = t[2];
    bool lifted = false;
    for (int a = 0; a < s.source.n && !lifted; ++a) {
      if (s.map[a] != a_img) continue;
      for (int b = 0; b < s.source.n && !lifted; ++b) {
        if (s.map[b] != b_img) continue;
        bool rel = s.coord == Coord::Middle ? s.source.b(a, w, b) : s.source.b(w, a, b);
        if (rel) lifted = true;
      }
    }
    if (!lifted) {
      if (witness) *witness = {w, t[0], t[1], t[2]};
      return false;
    }
  }
  return true;
}

}  // namespace

MorphismReport check_bounded_morphism(const MorphismSpec& spec,
                                      const std::vector<int>& back_exempt) {
  if (static_cast<int>(spec.map.size()) != spec.source.n)
    throw std::invalid_argument("morphism map must be total on source worlds");
  for (int v : spec.map)
    if (v < 0 || v >= spec.target.n) throw std::invalid_argument("map image out of range");

  MorphismReport rep;
  for (auto& t : spec.source.triples())
    if (!spec.target.b(spec.map[t[0]], spec.map[t[1]], spec.map[t[2]])) {
      rep.forth = {false, {t[0], t[1], t[2]}, "source triple is not preserved"};
      break;
    }
  for (int w = 0; w < spec.source.n; ++w) {
    if (std::find(back_exempt.begin(), back_exempt.end(), w) != back_exempt.end()) continue;
    std::vector<int> witness;
    if (!back_holds_at(spec, w, &witness)) {
      rep.back = {false, witness, "target triple has no lifting"};
      break;
    }
  }
  return rep;
}

std::vector<int> back_failure_set(const MorphismSpec& spec) {
  std::vector<int> out;
  for (int w = 0; w < spec.source.n; ++w)
    if (!back_holds_at(spec, w, nullptr)) out.push_back(w);
  return out;
}

UEResult ultrafilter_extension_finite(const Frame3& f) {
  if (f.n > 20) throw std::invalid_argument("finite ultrafilter extension limited to 20 worlds");
  const int n = f.n;

  // m_B(X1, X2) membership: w is in the image iff B(w, w1, w2) for some
  // w1 in X1, w2 in X2.
  auto in_m = [&](int w, std::uint32_t X1, std::uint32_t X2) {
    for (int a = 0; a < n; ++a) {
      if (!((X1 >> a) & 1)) continue;
      for (int c = 0; c < n; ++c)
        if (((X2 >> c) & 1) && f.b(w, a, c)) return true;
    }
    return false;
  };

  UEResult res;
  res.ue = Frame3(n);
  const std::uint32_t sets = 1u << std::min(n, 20);
  for (int u = 0; u < n; ++u)
    for (int v1 = 0; v1 < n; ++v1)
      for (int v2 = 0; v2 < n; ++v2) {
        // The members of principal(v) are exactly the sets containing v.
        bool contained;
        if (n <= 6) {
          // unfold the containment definition over every member-set pair
          contained = true;
          for (std::uint32_t X1 = 0; X1 < sets && contained; ++X1) {
            if (!((X1 >> v1) & 1)) continue;
            for (std::uint32_t X2 = 0; X2 < sets && contained; ++X2)
              if (((X2 >> v2) & 1) && !in_m(u, X1, X2)) contained = false;
          }
        } else {
          // the image operation is monotone, so the singleton pair decides
          contained = in_m(u, 1u << v1, 1u << v2);
        }
        if (contained) res.ue.add(u, v1, v2);
      }

  // The identity on indices realizes w |-> principal(w); isomorphism check is
  // equality of the relation tables.
  if (res.ue == f) {
    res.iso = CheckReport{};
  } else {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (f.b(x, y, z) != res.ue.b(x, y, z)) {
            res.iso = {false, {x, y, z}, "relation tables differ"};
            return res;
          }
  }
  return res;
}

CheckReport check_B9_finite(const Frame3& f, int max_worlds) {
  if (f.n > max_worlds)
    throw std::invalid_argument("completeness check limited to " + std::to_string(max_worlds) +
                                " worlds");
  const int n = f.n;
  const std::uint32_t sets = 1u << n;

  // row_out[w][x] = { y : B(w,x,y) },  row_mid[u][x] = { y : B(x,u,y) }
  std::vector<std::vector<std::uint32_t>> row_out(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::vector<std::uint32_t>> row_mid(n, std::vector<std::uint32_t>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (f.b(x, y, z)) {
          row_out[x][y] |= 1u << z;
          row_mid[y][x] |= 1u << z;
        }

  const std::uint32_t full = sets - 1;
  // M[w][X] = intersection over x in X of row_out[w][x]; N likewise for mid.
  std::vector<std::vector<std::uint32_t>> M(n, std::vector<std::uint32_t>(sets, full));
  std::vector<std::vector<std::uint32_t>> N(n, std::vector<std::uint32_t>(sets, full));
  for (int w = 0; w < n; ++w)
    for (std::uint32_t X = 1; X < sets; ++X) {
      std::uint32_t low = X & (~X + 1);
      int x = std::countr_zero(low);
      M[w][X] = M[w][X ^ low] & row_out[w][x];
      N[w][X] = N[w][X ^ low] & row_mid[w][x];
    }

  for (std::uint32_t X = 0; X < sets; ++X)
    for (std::uint32_t Y = 0; Y < sets; ++Y) {
      bool ante = false;
      for (int w = 0; w < n && !ante; ++w)
        if ((Y & ~M[w][X]) == 0) ante = true;
      if (!ante) continue;
      bool cons = false;
      for (int u = 0; u < n && !cons; ++u)
        if ((Y & ~N[u][X]) == 0) cons = true;
      if (!cons)
        return {false, {static_cast<int>(X), static_cast<int>(Y)},
                "subset pair (as bitmasks) admits an outer point but no separating point"};
    }
  return CheckReport{};
}

}  // namespace betw::fin
