#include "betw/counterexamples.hpp"

#include <sstream>
#include <stdexcept>

#include "betw/frame_axioms.hpp"

namespace betw::fin {

namespace {

CounterexampleBundle morphic(std::string name, std::string axiom, Frame3 src, Frame3 tgt,
                             std::vector<int> map, std::vector<int> exempt = {}) {
  CounterexampleBundle b;
  b.name = std::move(name);
  b.kind = "morphism";
  b.axiom = std::move(axiom);
  b.morphism.source = std::move(src);
  b.morphism.target = std::move(tgt);
  b.morphism.map = std::move(map);
  b.morphism.coord = Coord::Middle;
  b.back_exempt = std::move(exempt);
  return b;
}

}  // namespace

CounterexampleBundle counterexample(const std::string& name, int N) {
  if (name == "B1") {
    Frame3 src(3);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z)
          if (x != y && x != z && y != z) src.add(x, y, z);
    Frame3 tgt(1);
    tgt.add(0, 0, 0);
    return morphic("B1", "B1", std::move(src), std::move(tgt), {0, 0, 0});
  }
  if (name == "B3") {
    Frame3 src(2);
    src.add(0, 0, 1);
    src.add(1, 1, 0);
    Frame3 tgt(1);
    tgt.add(0, 0, 0);
    return morphic("B3", "B3", std::move(src), std::move(tgt), {0, 0});
  }
  if (name == "B4") {
    if (N < 2) throw std::invalid_argument("window parameter must be at least 2");
    // Window of the infinite chain construction: four blocks
    //   x_0..x_N, y_0..y_N, z_0..z_N, u_1..u_N
    // with B(x_n, y_n, z_n) and B(y_{n+1}, z_n, u_{n+1}); no two relation
    // facts chain, so outer transitivity holds vacuously on the source.
    auto xi = [&](int k) { return k; };
    auto yi = [&](int k) { return N + 1 + k; };
    auto zi = [&](int k) { return 2 * (N + 1) + k; };
    auto ui = [&](int k) { return 3 * (N + 1) + (k - 1); };
    Frame3 src(4 * (N + 1) - 1);
    for (int k = 0; k <= N; ++k) src.add(xi(k), yi(k), zi(k));
    for (int k = 0; k + 1 <= N; ++k) src.add(yi(k + 1), zi(k), ui(k + 1));
    Frame3 tgt(4);  // x=0 y=1 z=2 u=3
    tgt.add(0, 1, 2);
    tgt.add(1, 2, 3);
    std::vector<int> map(src.n);
    for (int k = 0; k <= N; ++k) {
      map[xi(k)] = 0;
      map[yi(k)] = 1;
      map[zi(k)] = 2;
    }
    for (int k = 1; k <= N; ++k) map[ui(k)] = 3;
    return morphic("B4", "B4", std::move(src), std::move(tgt), std::move(map), {zi(N)});
  }
  if (name == "B5") {
    // source worlds: x0=0 y0=1 u0=2 z0=3 z1=4; target worlds: x=0 y=1 z=2 u=3
    Frame3 src(5);
    src.add(0, 1, 3);
    src.add(1, 2, 4);
    Frame3 tgt(4);
    tgt.add(0, 1, 2);
    tgt.add(1, 3, 2);
    return morphic("B5", "B5", std::move(src), std::move(tgt), {0, 1, 3, 2, 2});
  }
  if (name == "B6") {
    CounterexampleBundle b;
    b.name = "B6";
    b.kind = "union";
    b.axiom = "B6x";
    b.part = Frame3(3);
    b.part.add(0, 1, 2);
    b.whole = disjoint_union({b.part, b.part});
    return b;
  }
  if (name == "B8") {
    // The two endpoints of the closed rational unit interval form a
    // middle-closed subframe (nothing lies between them and anything else),
    // and density fails on it.  The dense-carrier half of the argument lives
    // in the dense module; here we keep the finite subframe.
    CounterexampleBundle b;
    b.name = "B8";
    b.kind = "subframe";
    b.axiom = "B8";
    b.sub = Frame3(2);
    return b;
  }
  throw std::invalid_argument("unknown counterexample name: '" + name + "'");
}

CheckReport verify_counterexample(const CounterexampleBundle& b) {
  auto fail = [](std::string detail) { return CheckReport{false, {}, std::move(detail)}; };
  if (b.kind == "morphism") {
    if (!check_axiom(b.morphism.source, b.axiom).holds)
      return fail("source frame does not satisfy " + b.axiom);
    if (check_axiom(b.morphism.target, b.axiom).holds)
      return fail("target frame unexpectedly satisfies " + b.axiom);
    auto rep = check_bounded_morphism(b.morphism, b.back_exempt);
    if (!rep.forth.holds) return fail("forth condition fails: " + rep.forth.detail);
    if (!rep.back.holds) return fail("back condition fails off the boundary: " + rep.back.detail);
    if (back_failure_set(b.morphism) != b.back_exempt)
      return fail("back-condition failure set differs from the declared boundary");
    return CheckReport{};
  }
  if (b.kind == "union") {
    if (!check_axiom(b.part, b.axiom).holds)
      return fail("component does not satisfy " + b.axiom);
    if (!(b.whole == disjoint_union({b.part, b.part})))
      return fail("stored union is not the disjoint union of the two copies");
    auto rep = check_axiom(b.whole, b.axiom);
    if (rep.holds) return fail("union unexpectedly satisfies " + b.axiom);
    return CheckReport{};
  }
  if (b.kind == "subframe") {
    if (b.sub.n != 2 || b.sub.triple_count() != 0)
      return fail("expected the empty two-point subframe");
    if (check_axiom(b.sub, b.axiom).holds)
      return fail("subframe unexpectedly satisfies " + b.axiom);
    return CheckReport{};
  }
  return fail("unknown bundle kind '" + b.kind + "'");
}

std::string describe_counterexample(const CounterexampleBundle& b) {
  std::ostringstream out;
  out << "construction " << b.name << " (" << b.kind << "), axiom " << b.axiom << "\n";
  if (b.kind == "morphism") {
    out << "source:\n" << frame_to_text(b.morphism.source);
    out << "target:\n" << frame_to_text(b.morphism.target);
    out << "map:";
    for (int v : b.morphism.map) out << " " << v;
    out << "\n";
    if (!b.back_exempt.empty()) {
      out << "back condition boundary:";
      for (int v : b.back_exempt) out << " " << v;
      out << "\n";
    }
    auto tgt_fail = check_axiom(b.morphism.target, b.axiom);
    out << "target violation witness: (";
    for (std::size_t i = 0; i < tgt_fail.witness.size(); ++i)
      out << (i ? "," : "") << tgt_fail.witness[i];
    out << ")\n";
  } else if (b.kind == "union") {
    out << "component:\n" << frame_to_text(b.part);
    out << "union:\n" << frame_to_text(b.whole);
    auto rep = check_axiom(b.whole, b.axiom);
    out << "violating triple: (";
    for (std::size_t i = 0; i < rep.witness.size(); ++i) out << (i ? "," : "") << rep.witness[i];
    out << ")\n";
  } else {
    out << "carrier: rational interval [0,1], middle-closed point pair {0,1}\n";
    out << "subframe:\n" << frame_to_text(b.sub);
    auto rep = check_axiom(b.sub, b.axiom);
    out << "density violation witness: (";
    for (std::size_t i = 0; i < rep.witness.size(); ++i) out << (i ? "," : "") << rep.witness[i];
    out << ")\n";
  }
  return out.str();
}

}  // namespace betw::fin
