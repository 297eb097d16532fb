#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "betw/builtins.hpp"
#include "betw/counterexamples.hpp"
#include "betw/frame_axioms.hpp"
#include "betw/frame_eval.hpp"
#include "betw/frame_ops.hpp"
#include "betw/parser.hpp"

using namespace betw;
using namespace betw::fin;

namespace {

Frame3 chain_frame(int n) {
  OrderFrame o(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) o.add(a, b);
  return order_to_betweenness(o);
}

Frame3 all_proper_triples(int n) {
  Frame3 f(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (x != y && y != z && x != z) f.add(x, y, z);
  return f;
}

}  // namespace

TEST_CASE("frame text round trip and parsing diagnostics") {
  Frame3 f = chain_frame(3);
  std::istringstream in(frame_to_text(f));
  CHECK(parse_frame(in) == f);
  std::istringstream bad("worlds 2\nB 0 1 5\n");
  CHECK_THROWS(parse_frame(bad));
}

TEST_CASE("check_axiom fixed examples") {
  Frame3 f(2);
  f.add(0, 0, 1);
  f.add(1, 1, 0);
  auto rep = check_axiom(f, "B1");
  CHECK_FALSE(rep.holds);
  CHECK(rep.witness == std::vector<int>{0, 0, 1});
  CHECK(check_axiom(all_proper_triples(3), "B1").holds);
  CHECK(check_axiom(Frame3(1), "B2").holds);  // empty relation, vacuous
  CHECK_THROWS(check_axiom(f, "B99"));
}

TEST_CASE("order_to_betweenness on chains") {
  Frame3 f = chain_frame(3);
  CHECK(f.triples() == std::vector<std::array<int, 3>>{{0, 1, 2}, {2, 1, 0}});
  CHECK(order_to_betweenness(OrderFrame(3)).triple_count() == 0);
  Frame3 g = chain_frame(4);
  CHECK(g.triple_count() == 8);  // 4 ascending middles, both orientations
  CHECK(g.b(0, 2, 3));
  CHECK(g.b(3, 2, 0));
}

TEST_CASE("betweenness_to_order round trip and dual orientation") {
  Frame3 f = chain_frame(3);
  OrderFrame fwd = betweenness_to_order(f, 0, 1);
  CHECK(fwd.less(0, 1));
  CHECK(fwd.less(1, 2));
  CHECK(fwd.less(0, 2));
  OrderFrame dual = betweenness_to_order(f, 1, 0);
  CHECK(dual.less(2, 1));
  CHECK(dual.less(1, 0));
  Frame3 two(2);
  OrderFrame o2 = betweenness_to_order(two, 0, 1);
  CHECK(o2.less(0, 1));
  CHECK_FALSE(o2.less(1, 0));
}

TEST_CASE("order round trip for every chain relabeling up to size 7") {
  for (int n = 2; n <= 7; ++n) {
    // every linear order on n labeled points is a permutation of the chain
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int samples = 0;
    do {
      OrderFrame o(n);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) o.add(perm[a], perm[b]);
      Frame3 f = order_to_betweenness(o);
      OrderFrame back = betweenness_to_order(f, perm[0], perm[1]);
      CHECK(back == o);
      // opposite orientation gives the dual order
      OrderFrame dual = betweenness_to_order(f, perm[1], perm[0]);
      OrderFrame expect(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (o.less(a, b)) expect.add(b, a);
      CHECK(dual == expect);
      if (++samples >= 24) break;  // cap permutations for the larger sizes
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("betweenness_to_order rejects non-linearizable frames") {
  Frame3 f(3);
  f.add(0, 0, 1);  // violates B1
  try {
    betweenness_to_order(f, 0, 1);
    FAIL("expected a precondition error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("B1") != std::string::npos);
  }
}

TEST_CASE("derived properties hold on every chain betweenness frame up to size 7") {
  for (int n = 1; n <= 7; ++n) {
    Frame3 f = chain_frame(n);
    for (const char* id : {"B4p", "B5p", "proj", "dsound", "cc"}) {
      auto rep = check_axiom(f, id);
      INFO("size ", n, " axiom ", id);
      CHECK(rep.holds);
    }
  }
}

TEST_CASE("order axioms L1-L5") {
  OrderFrame o(3);
  o.add(0, 1);
  o.add(1, 2);
  o.add(0, 2);
  CHECK(check_order_axiom(o, "L1").holds);
  CHECK(check_order_axiom(o, "L2").holds);
  CHECK(check_order_axiom(o, "L3").holds);
  CHECK_FALSE(check_order_axiom(o, "L4").holds);  // finite chains have endpoints
  CHECK_FALSE(check_order_axiom(o, "L5").holds);  // and are not dense
}

TEST_CASE("eval_finite fixed examples") {
  FiniteModel m;
  m.frame = chain_frame(3);
  m.nom_val["i"] = 0;
  m.nom_val["j"] = 2;
  m.nom_val["k"] = 1;
  CHECK(eval_finite(m, parse_formula("<B>(i,j)"), 1));
  CHECK_FALSE(eval_finite(m, parse_formula("<B>(i,j)"), 0));
  // @i <B>(j,k) is world-independent
  Formula at_dia = parse_formula("@i <B>(j,k)");
  for (int w = 0; w < 3; ++w) CHECK(eval_finite(m, at_dia, w) == m.frame.b(2, 0, 1));
  for (int w = 0; w < 3; ++w) CHECK(eval_finite(m, Formula::top(), w));
  CHECK_THROWS(eval_finite(m, parse_formula("p"), 0));
}

TEST_CASE("evaluation agrees with the Conv/[B]/A expansion") {
  std::vector<Formula> battery = {
      parse_formula("C p"), parse_formula("[B](p, q)"), parse_formula("A (p -> q)"),
      parse_formula("@i C (p | j)"), parse_formula("E [B](~p, C q)")};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FiniteModel m;
    m.frame = random_frame(3, 1, 2, seed);
    m.prop_val["p"] = {char(seed & 1), 1, 0};
    m.prop_val["q"] = {0, char(seed & 2 ? 1 : 0), 1};
    m.nom_val["i"] = static_cast<int>(seed % 3);
    m.nom_val["j"] = static_cast<int>((seed + 1) % 3);
    for (const auto& f : battery)
      CHECK(extension_finite(m, f) == extension_finite(m, normalize(f)));
  }
}

TEST_CASE("frame_valid_finite fixed examples") {
  Frame3 refl(1);
  refl.add(0, 0, 0);
  CHECK(frame_valid_finite(refl, builtin("HB2m")).holds);

  Frame3 asym(3);
  asym.add(0, 1, 2);
  auto rep = frame_valid_finite(asym, builtin("HB2m"));
  CHECK_FALSE(rep.holds);
  CHECK(rep.world == 1);
  CHECK(rep.countermodel.prop_val.at("p") == std::vector<char>{1, 0, 0});
  CHECK(rep.countermodel.prop_val.at("q") == std::vector<char>{0, 0, 1});

  // HB7 fails exactly where B7 does: no triple around world 0
  auto rep7 = frame_valid_finite(asym, builtin("HB7"));
  CHECK_FALSE(rep7.holds);
  CHECK(rep7.world == 0);
  CHECK(frame_valid_finite(all_proper_triples(3), builtin("HB7")).holds);
}

TEST_CASE("frame validity budget guard") {
  Frame3 f = chain_frame(4);
  CHECK_THROWS_AS(frame_valid_finite(f, parse_formula("((p & q) | (r & s))"), 10),
                  BudgetExceeded);
}

TEST_CASE("HB4 corresponds to B4 together with B4p") {
  // outer transitivity alone does not validate HB4
  Frame3 f(2);
  f.add(0, 1, 0);
  f.add(1, 0, 0);
  CHECK(check_axiom(f, "B4").holds);
  CHECK_FALSE(check_axiom(f, "B4p").holds);
  CHECK_FALSE(frame_valid_finite(f, builtin("HB4")).holds);

  // exhaustively on two-world frames: HB4 <=> B4 & B4p
  for (int mask = 0; mask < 256; ++mask) {
    Frame3 g(2);
    for (int t = 0; t < 8; ++t)
      if (mask & (1 << t)) g.add((t >> 2) & 1, (t >> 1) & 1, t & 1);
    bool both = check_axiom(g, "B4").holds && check_axiom(g, "B4p").holds;
    CHECK(frame_valid_finite(g, builtin("HB4")).holds == both);
  }
}

TEST_CASE("disjoint union") {
  Frame3 part(3);
  part.add(0, 1, 2);
  Frame3 u = disjoint_union({part, part});
  CHECK(u.n == 6);
  CHECK(u.triple_count() == 2);
  CHECK(u.b(0, 1, 2));
  CHECK(u.b(3, 4, 5));
  CHECK_FALSE(u.b(0, 1, 5));
  CHECK(disjoint_union({part}) == part);
  CHECK(disjoint_union({}).n == 0);
}

TEST_CASE("generated subframe") {
  Frame3 f = chain_frame(3);
  auto s0 = generated_subframe(f, {0}, Coord::Middle);
  CHECK(s0.worlds == std::vector<int>{0});
  CHECK(s0.frame.triple_count() == 0);
  auto s1 = generated_subframe(f, {1}, Coord::Middle);
  CHECK(s1.worlds == std::vector<int>{0, 1, 2});
  CHECK(s1.frame == f);
  auto sall = generated_subframe(f, {0, 1, 2}, Coord::First);
  CHECK(sall.frame == f);
}

TEST_CASE("generated subframes preserve validity of the battery") {
  std::vector<Formula> battery = {builtin("HB2m"), builtin("HB7"), builtin("convIdem"),
                                  parse_formula("@i i")};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Frame3 f = random_frame(4, 1, 3, seed);
    auto sub = generated_subframe(f, {static_cast<int>(seed % 4)}, Coord::Middle);
    if (sub.frame.n == 0) continue;
    for (const auto& phi : battery)
      if (frame_valid_finite(f, phi).holds) CHECK(frame_valid_finite(sub.frame, phi).holds);
  }
}

TEST_CASE("bounded morphism checks") {
  // constant map from the all-proper-triples frame onto a reflexive point
  MorphismSpec spec;
  spec.source = all_proper_triples(3);
  spec.target = Frame3(1);
  spec.target.add(0, 0, 0);
  spec.map = {0, 0, 0};
  auto rep = check_bounded_morphism(spec);
  CHECK(rep.forth.holds);
  CHECK(rep.back.holds);

  // identity is always a bounded morphism
  MorphismSpec id;
  id.source = id.target = chain_frame(4);
  id.map = {0, 1, 2, 3};
  auto idrep = check_bounded_morphism(id);
  CHECK(idrep.forth.holds);
  CHECK(idrep.back.holds);
}

TEST_CASE("surjective bounded morphisms preserve nominal-free validity") {
  std::vector<Formula> battery = {builtin("HB2m"), builtin("HB7"), builtin("convIdem"),
                                  builtin("densityTest")};
  for (const char* name : {"B1", "B3", "B5"}) {
    auto b = counterexample(name);
    REQUIRE(verify_counterexample(b).holds);
    for (const auto& phi : battery)
      if (frame_valid_finite(b.morphism.source, phi).holds)
        CHECK(frame_valid_finite(b.morphism.target, phi).holds);
  }
}

TEST_CASE("counterexample bundles verify and hit the advertised axioms") {
  for (const char* name : {"B1", "B3", "B5", "B6", "B8"}) {
    auto b = counterexample(name);
    INFO("bundle ", name);
    CHECK(verify_counterexample(b).holds);
  }
  auto b4 = counterexample("B4", 20);
  CHECK(verify_counterexample(b4).holds);
  CHECK(back_failure_set(b4.morphism) == b4.back_exempt);
  CHECK(b4.back_exempt.size() == 1);
  CHECK_THROWS(counterexample("B2"));
}

TEST_CASE("ultrafilter extension is an isomorphic copy") {
  for (auto f : {chain_frame(3), all_proper_triples(3), Frame3(1), random_frame(5, 1, 4, 9)}) {
    auto res = ultrafilter_extension_finite(f);
    CHECK(res.iso.holds);
    CHECK(res.ue == f);  // principal numbering keeps the relation table
  }
  Frame3 refl(1);
  refl.add(0, 0, 0);
  CHECK(ultrafilter_extension_finite(refl).ue == refl);
}

TEST_CASE("B9 check") {
  CHECK(check_B9_finite(Frame3(3)).holds);               // empty relation, vacuous
  CHECK(check_B9_finite(chain_frame(4)).holds == false);  // X={0},Y={3}: no outer w
  // chain: with X={0},Y={3} the antecedent fails, so that pair contributes holds;
  // the failure comes from pairs that do admit an outer point but no inner one.
  Frame3 f(3);
  f.add(1, 0, 2);
  f.add(2, 0, 1);
  auto rep = check_B9_finite(f);
  CHECK_FALSE(rep.holds);
  CHECK_THROWS(check_B9_finite(Frame3(13)));
}

TEST_CASE("random_frame determinism and densities") {
  CHECK(random_frame(3, 0, 1, 7).triple_count() == 0);
  CHECK(random_frame(3, 1, 1, 7).triple_count() == 27);
  CHECK(random_frame(4, 1, 2, 42) == random_frame(4, 1, 2, 42));
  CHECK(random_frame(4, 1, 2, 42) != random_frame(4, 1, 2, 43));
}

TEST_CASE("model file parsing") {
  std::istringstream in(
      "worlds 3\nB 0 1 2\nB 2 1 0\nV p: 0 2\nV i: 1  # a name\n");
  FiniteModel m = parse_model(in);
  CHECK(m.frame == chain_frame(3));
  CHECK(m.prop_val.at("p") == std::vector<char>{1, 0, 1});
  CHECK(m.nom_val.at("i") == 1);
  std::istringstream bad("worlds 2\nV i: 5\n");
  CHECK_THROWS(parse_model(bad));
}
