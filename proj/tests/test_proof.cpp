#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "betw/builtins.hpp"
#include "betw/parser.hpp"
#include "betw/proof.hpp"

using namespace betw;
using namespace betw::proof;

namespace {

Derivation parse_text(const std::string& text, Logic logic = Logic::Bh) {
  std::istringstream in(text);
  return parse_derivation(in, logic);
}

LineReport check_text(const std::string& text, Logic logic = Logic::Bh) {
  Derivation d = parse_text(text, logic);
  return check_derivation(d);
}

Derivation load_file(const std::string& path, Logic logic = Logic::Bh) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return parse_derivation(in, logic);
}

}  // namespace

TEST_CASE("schema catalog") {
  CHECK(find_schema("K1", Logic::Bh) != nullptr);
  CHECK(find_schema("HB8p", Logic::Bh) != nullptr);
  CHECK(find_schema("D", Logic::Bh) == nullptr);      // D belongs to the extension only
  CHECK(find_schema("D", Logic::BhPlus) != nullptr);
  CHECK(find_schema("CT", Logic::Bh) == nullptr);     // CT is decided, not matched
  CHECK(axiom_schemas(Logic::BhPlus).size() == axiom_schemas(Logic::Bh).size() + 1);
}

TEST_CASE("match_schema binds prop metavariables to formulas") {
  const Schema* dual = find_schema("dual", Logic::Bh);
  REQUIRE(dual != nullptr);
  Formula inst = parse_formula("~<B>(r, (s & r)) <-> [B](~r, ~(s & r))");
  auto sub = match_schema(inst, *dual);
  REQUIRE(sub.has_value());
  CHECK(sub->prop_map.at("p") == parse_formula("r"));
  CHECK(sub->prop_map.at("q") == parse_formula("(s & r)"));
  CHECK_FALSE(match_schema(parse_formula("~<B>(r, s) <-> [B](~r, ~q)"), *dual).has_value());
}

TEST_CASE("match_schema binds nominal metavariables to nominals only") {
  const Schema* ref = find_schema("ref", Logic::Bh);
  REQUIRE(ref != nullptr);
  auto sub = match_schema(parse_formula("@i i"), *ref);
  REQUIRE(sub.has_value());
  CHECK(sub->nom_map.at("i") == "i");
  CHECK(match_schema(parse_formula("@k k"), *ref).has_value());
  CHECK_FALSE(match_schema(parse_formula("@i j"), *ref).has_value());
  CHECK_FALSE(match_schema(parse_formula("@i p"), *ref).has_value());

  const Schema* intro = find_schema("intro", Logic::Bh);
  REQUIRE(intro != nullptr);
  CHECK(match_schema(parse_formula("(j & (q | r)) -> @j (q | r)"), *intro).has_value());
  CHECK_FALSE(match_schema(parse_formula("(j & q) -> @j r"), *intro).has_value());
  // non-injective binding is allowed
  const Schema* nom = find_schema("nom", Logic::Bh);
  REQUIRE(nom != nullptr);
  CHECK(match_schema(parse_formula("(@i i & @i p) -> @i p"), *nom).has_value());
}

TEST_CASE("pure schemas only admit nominal renamings") {
  const Schema* hb1 = find_schema("HB1", Logic::Bh);
  REQUIRE(hb1 != nullptr);
  Formula renamed = apply_substitution(hb1->tmpl, [] {
    Substitution s;
    s.nom_map["i"] = "l";
    s.nom_map["j"] = "i";
    s.nom_map["k"] = "j";
    return s;
  }());
  CHECK(match_schema(renamed, *hb1).has_value());
  CHECK(prop_names(hb1->tmpl).empty());
}

TEST_CASE("classical tautology oracle treats modal subformulas as atoms") {
  CHECK(is_classical_tautology(parse_formula("p -> (q -> p)")));
  CHECK(is_classical_tautology(parse_formula("<B>(p,q) | ~<B>(p,q)")));
  CHECK(is_classical_tautology(parse_formula("(@i p & ~@i p) -> false")));
  CHECK(is_classical_tautology(parse_formula("true")));
  CHECK_FALSE(is_classical_tautology(parse_formula("p -> q")));
  // syntactically distinct modal atoms are independent
  CHECK_FALSE(is_classical_tautology(parse_formula("<B>(p,q) -> <B>(q,p)")));
  CHECK_FALSE(is_classical_tautology(parse_formula("@i p -> p")));
}

TEST_CASE("derivation parsing") {
  Derivation d = parse_text(
      "# comment\n"
      "1. p -> p ; axiom CT\n"
      "2. [B](p -> p, q) ; Nec1 1\n"
      "3. [B](p -> p, r) ; Subst 2 {q := r}\n");
  CHECK(d.lines.size() == 3);
  CHECK(d.lines[1].rule == "Nec1");
  CHECK(d.lines[1].premises == std::vector<int>{1});
  CHECK(d.lines[2].subst.prop_map.at("q") == parse_formula("r"));
  CHECK_THROWS(parse_text("2. p -> p ; axiom CT\n"));          // numbering must start at 1
  CHECK_THROWS(parse_text("1. p -> p ; axiom CT\n3. q ; axiom CT\n"));
  CHECK_THROWS(parse_text("1. p -> p\n"));                      // missing justification
}

TEST_CASE("empty derivation checks") {
  CHECK(check_text("").ok);
  CHECK(check_text("# nothing here\n").ok);
}

TEST_CASE("axiom and rule applications check") {
  CHECK(check_text("1. (p & q) -> p ; axiom CT\n").ok);
  CHECK(check_text("1. @i i ; axiom ref\n").ok);
  CHECK(check_text(
            "1. p -> p ; axiom CT\n"
            "2. @i (p -> p) ; Nec@ 1\n")
            .ok);
  CHECK(check_text(
            "1. p -> p ; axiom CT\n"
            "2. p -> (q -> p) ; axiom CT\n"
            "3. (p -> p) -> ((p -> p) | q) ; axiom CT\n"
            "4. (p -> p) | q ; MP 3 1\n")
            .ok);
  CHECK(check_text(
            "1. p -> p ; axiom CT\n"
            "2. [B](q, p -> p) ; Nec2 1\n"
            "3. [B](r & r, p -> p) ; Subst 2 {q := (r & r)}\n")
            .ok);
}

TEST_CASE("bad applications are rejected with the failing line") {
  auto r = check_text("1. p -> q ; axiom CT\n");
  CHECK_FALSE(r.ok);
  CHECK(r.line == 1);

  r = check_text("1. @i j ; axiom ref\n");
  CHECK_FALSE(r.ok);

  r = check_text(
      "1. p -> p ; axiom CT\n"
      "2. q ; MP 1 1\n");
  CHECK_FALSE(r.ok);
  CHECK(r.line == 2);

  // forward references are rejected
  auto fwd = check_text("1. [B](p -> p, q) ; Nec1 2\n");
  CHECK_FALSE(fwd.ok);
  CHECK(fwd.line == 1);
  // a plus-only axiom is unavailable in the base logic
  std::string d_inst = "1. " + builtin("D").str() + " ; axiom D\n";
  CHECK_FALSE(check_text(d_inst, Logic::Bh).ok);
  CHECK(check_text(d_inst, Logic::BhPlus).ok);
}

TEST_CASE("Name side condition") {
  Derivation good = parse_text(
      "1. i -> (p -> p) ; axiom CT\n"
      "2. p -> p ; Name 1\n");
  CHECK(check_derivation(good).ok);

  Derivation bad = load_file("proofs/bad_name.bh");
  auto r = check_derivation(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.line == 2);
  CHECK(r.message.find("Name") != std::string::npos);
  CHECK(r.message.find("occurs") != std::string::npos);
}

TEST_CASE("Paste side conditions") {
  Derivation bad = load_file("proofs/bad_paste.bh");
  auto r = check_derivation(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.line == 2);
  CHECK(r.message.find("Paste") != std::string::npos);

  // well-shaped Paste whose conclusion follows the required form
  CHECK(check_text(
            "1. ((@i <B>(j, k) & @j p) & @k q) -> true ; axiom CT\n"
            "2. @i <B>(p, q) -> true ; Paste 1\n")
            .ok);
  // i, j, k must be pairwise distinct
  CHECK_FALSE(check_text(
                  "1. ((@i <B>(i, k) & @i p) & @k q) -> true ; axiom CT\n"
                  "2. @i <B>(p, q) -> true ; Paste 1\n")
                  .ok);
}

TEST_CASE("checking is prefix-monotone") {
  Derivation d = load_file("proofs/bridge.bh");
  REQUIRE(check_derivation(d).ok);
  for (std::size_t n = 0; n <= d.lines.size(); n += 17) {
    Derivation prefix{d.logic, {d.lines.begin(), d.lines.begin() + n}};
    CHECK(check_derivation(prefix).ok);
  }
}

TEST_CASE("the bridge derivation checks in the base logic") {
  Derivation d = load_file("proofs/bridge.bh");
  auto r = check_derivation(d);
  CHECK(r.ok);
  CHECK(d.lines.back().formula ==
        parse_formula("((<B>(j,k) & @j i) & @k l) -> <B>(i,l)"));

  // mutate the conclusion: swap the coordinates
  Derivation mutant = d;
  mutant.lines.back().formula = parse_formula("((<B>(j,k) & @j i) & @k l) -> <B>(l,i)");
  auto mr = check_derivation(mutant);
  CHECK_FALSE(mr.ok);
  CHECK(mr.line == static_cast<int>(d.lines.size()));
}

TEST_CASE("soundness probe finds nothing for the base axioms") {
  for (const auto& s : axiom_schemas(Logic::Bh)) {
    auto r = soundness_probe(s.name, Logic::Bh, "Q", 60, 5);
    CHECK(r.ok);
    if (!r.ok) MESSAGE(s.name, ": ", r.counterexample);
  }
}

TEST_CASE("soundness probe separates the density axiom by carrier") {
  auto on_q = soundness_probe("D", Logic::BhPlus, "Q", 60, 5);
  CHECK_FALSE(on_q.ok);
  CHECK(on_q.counterexample.find("sqrt 2") != std::string::npos);
  auto on_r = soundness_probe("D", Logic::BhPlus, "R", 60, 5);
  CHECK(on_r.ok);
}
