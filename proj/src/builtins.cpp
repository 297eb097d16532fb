#include "betw/builtins.hpp"

#include <stdexcept>

namespace betw {

namespace {

Formula nom(const char* n) { return Formula::nominal(n); }
Formula prop(const char* n) { return Formula::prop(n); }
Formula at_dia(const char* a, const char* l, const char* r) {
  return Formula::at(a, Formula::diamond_b(nom(l), nom(r)));
}
Formula at_nom(const char* a, const char* n) { return Formula::at(a, nom(n)); }
Formula land(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
Formula lor(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
Formula lnot(Formula a) { return Formula::negation(std::move(a)); }
Formula imp(Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); }

}  // namespace

Formula builtin(const std::string& name) {
  if (name == "HB1")
    // @i<B>(j,k) -> ~@i j & ~@i k & ~@k j
    return imp(at_dia("i", "j", "k"),
               land(land(lnot(at_nom("i", "j")), lnot(at_nom("i", "k"))), lnot(at_nom("k", "j"))));
  if (name == "HB2") return imp(Formula::diamond_b(nom("i"), nom("j")), Formula::diamond_b(nom("j"), nom("i")));
  if (name == "HB2m") return imp(Formula::diamond_b(prop("p"), prop("q")), Formula::diamond_b(prop("q"), prop("p")));
  if (name == "HB3") return imp(at_dia("j", "i", "k"), lnot(at_dia("k", "i", "j")));
  if (name == "HB4")
    return imp(land(at_dia("j", "i", "k"), at_dia("k", "j", "l")),
               land(at_dia("j", "i", "l"), at_dia("k", "i", "l")));
  if (name == "HB5")
    return imp(land(at_dia("j", "i", "k"), at_dia("l", "i", "j")),
               land(at_dia("l", "i", "k"), at_dia("j", "l", "k")));
  if (name == "HB6")
    return imp(land(land(lnot(at_nom("i", "j")), lnot(at_nom("i", "k"))), lnot(at_nom("k", "j"))),
               lor(lor(at_dia("j", "i", "k"), at_dia("k", "i", "j")), at_dia("i", "j", "k")));
  if (name == "HB7") return Formula::diamond_b(Formula::top(), Formula::top());
  if (name == "HB8")
    return imp(lnot(at_nom("i", "j")), Formula::exists(Formula::diamond_b(nom("i"), nom("j"))));
  if (name == "HB8p")
    return imp(Formula::diamond_b(nom("i"), nom("j")),
               Formula::conv(Formula::conv(lor(nom("i"), nom("j")))));
  if (name == "bridge")
    // pure instance of <B>(j,k) & @j phi & @k psi -> <B>(phi,psi) with
    // phi := i, psi := l
    return imp(land(land(Formula::diamond_b(nom("j"), nom("k")), Formula::at("j", nom("i"))),
                    Formula::at("k", nom("l"))),
               Formula::diamond_b(nom("i"), nom("l")));
  if (name == "D") {
    Formula p = prop("p"), q = prop("q");
    Formula ante = land(
        land(land(land(Formula::exists(Formula::conv(p)), Formula::exists(Formula::conv(q))),
                  Formula::always(imp(Formula::conv(p), p))),
             Formula::always(imp(Formula::conv(q), q))),
        lnot(Formula::exists(land(p, q))));
    Formula cons = Formula::exists(
        land(land(Formula::diamond_b(p, q), lnot(Formula::conv(p))), lnot(Formula::conv(q))));
    return imp(std::move(ante), std::move(cons));
  }
  if (name == "densityTest")
    return imp(Formula::conv(prop("p")), Formula::conv(Formula::conv(prop("p"))));
  if (name == "convIdem")
    return imp(Formula::conv(Formula::conv(prop("p"))), Formula::conv(prop("p")));
  throw std::invalid_argument("unknown builtin formula: '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"HB1", "HB2", "HB2m", "HB3", "HB4",   "HB5",    "HB6",         "HB7",
          "HB8", "HB8p", "bridge", "D",  "densityTest", "convIdem"};
}

Formula e_elimination(const Formula& phi) {
  return Formula::iff(Formula::exists(phi),
                      Formula::disj(Formula::diamond_b(phi, Formula::top()), phi));
}

}  // namespace betw
