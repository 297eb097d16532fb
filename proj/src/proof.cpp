#include "betw/proof.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "betw/builtins.hpp"
#include "betw/dense_model.hpp"
#include "betw/frame.hpp"
#include "betw/frame_eval.hpp"
#include "betw/parser.hpp"

namespace betw::proof {

namespace {

using F = Formula;

std::vector<Schema> build_schemas() {
  F p = F::prop("p"), q = F::prop("q"), r = F::prop("r");
  F i = F::nominal("i"), j = F::nominal("j");
  std::vector<Schema> out;
  auto add = [&](const char* name, Formula tmpl, bool plus_only = false) {
    out.push_back({name, std::move(tmpl), plus_only});
  };
  add("dual", F::iff(F::negation(F::diamond_b(p, q)),
                     F::box_b(F::negation(p), F::negation(q))));
  add("K1", F::implies(F::box_b(F::implies(p, q), r),
                       F::implies(F::box_b(p, r), F::box_b(q, r))));
  add("K2", F::implies(F::box_b(r, F::implies(p, q)),
                       F::implies(F::box_b(r, p), F::box_b(r, q))));
  add("K@", F::implies(F::at("i", F::implies(p, q)),
                       F::implies(F::at("i", p), F::at("i", q))));
  add("selfdual", F::iff(F::negation(F::at("i", p)), F::at("i", F::negation(p))));
  add("ref", F::at("i", i));
  add("intro", F::implies(F::conj(i, p), F::at("i", p)));
  add("back1", F::implies(F::diamond_b(F::at("i", p), q), F::at("i", p)));
  add("back2", F::implies(F::diamond_b(q, F::at("i", p)), F::at("i", p)));
  add("agree", F::implies(F::at("i", F::at("j", p)), F::at("j", p)));
  add("sym", F::implies(F::at("j", i), F::at("i", j)));
  add("nom", F::implies(F::conj(F::at("i", j), F::at("j", p)), F::at("i", p)));
  for (const char* n : {"HB1", "HB2", "HB3", "HB4", "HB5", "HB6", "HB7", "HB8p"})
    add(n, builtin(n));
  add("D", builtin("D"), /*plus_only=*/true);
  return out;
}

bool match(const Formula& tmpl, const Formula& f, Substitution& s) {
  switch (tmpl.kind()) {
    case Kind::Prop: {
      auto [it, fresh] = s.prop_map.emplace(tmpl.name(), f);
      return fresh || it->second == f;
    }
    case Kind::Nominal: {
      if (f.kind() != Kind::Nominal) return false;
      auto [it, fresh] = s.nom_map.emplace(tmpl.name(), f.name());
      return fresh || it->second == f.name();
    }
    case Kind::At: {
      if (f.kind() != Kind::At) return false;
      auto [it, fresh] = s.nom_map.emplace(tmpl.name(), f.name());
      if (!fresh && it->second != f.name()) return false;
      return match(tmpl.lhs(), f.lhs(), s);
    }
    case Kind::Top:
    case Kind::Bottom:
      return f.kind() == tmpl.kind();
    case Kind::Not:
    case Kind::E:
    case Kind::A:
    case Kind::Conv:
      return f.kind() == tmpl.kind() && match(tmpl.lhs(), f.lhs(), s);
    default:
      return f.kind() == tmpl.kind() && match(tmpl.lhs(), f.lhs(), s) &&
             match(tmpl.rhs(), f.rhs(), s);
  }
}

bool is_boolean_connective(Kind k) {
  return k == Kind::Not || k == Kind::And || k == Kind::Or || k == Kind::Implies ||
         k == Kind::Iff;
}

void collect_atoms(const Formula& f, std::vector<Formula>& atoms) {
  Kind k = f.kind();
  if (k == Kind::Top || k == Kind::Bottom) return;
  if (is_boolean_connective(k)) {
    collect_atoms(f.lhs(), atoms);
    if (k != Kind::Not) collect_atoms(f.rhs(), atoms);
    return;
  }
  if (std::find(atoms.begin(), atoms.end(), f) == atoms.end()) atoms.push_back(f);
}

bool truth(const Formula& f, const std::vector<Formula>& atoms, unsigned long mask) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bottom: return false;
    case Kind::Not: return !truth(f.lhs(), atoms, mask);
    case Kind::And: return truth(f.lhs(), atoms, mask) && truth(f.rhs(), atoms, mask);
    case Kind::Or: return truth(f.lhs(), atoms, mask) || truth(f.rhs(), atoms, mask);
    case Kind::Implies: return !truth(f.lhs(), atoms, mask) || truth(f.rhs(), atoms, mask);
    case Kind::Iff: return truth(f.lhs(), atoms, mask) == truth(f.rhs(), atoms, mask);
    default: {
      auto it = std::find(atoms.begin(), atoms.end(), f);
      return (mask >> (it - atoms.begin())) & 1u;
    }
  }
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "p:=<B>(q,r), i:=j" at top-level commas.
std::vector<std::string> split_subst_items(const std::string& body) {
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!strip(cur).empty()) items.push_back(cur);
  return items;
}

Substitution parse_subst(const std::string& body) {
  Substitution s;
  for (const auto& raw : split_subst_items(body)) {
    std::string item = strip(raw);
    std::size_t at = item.find(":=");
    if (at == std::string::npos)
      throw std::runtime_error("substitution item needs ':=' in '" + item + "'");
    std::string sym = strip(item.substr(0, at));
    std::string val = strip(item.substr(at + 2));
    if (is_prop_name(sym)) {
      s.prop_map[sym] = parse_formula(val);
    } else if (is_nominal_name(sym)) {
      if (!is_nominal_name(val))
        throw std::runtime_error("nominal '" + sym + "' may only map to a nominal");
      s.nom_map[sym] = val;
    } else {
      throw std::runtime_error("'" + sym + "' is neither a proposition nor a nominal");
    }
  }
  return s;
}

LineReport fail(int line_no, std::string msg) { return {false, line_no, std::move(msg)}; }

}  // namespace

const std::vector<Schema>& axiom_schemas(Logic logic) {
  static const std::vector<Schema> all = build_schemas();
  static const std::vector<Schema> bh = [] {
    std::vector<Schema> v;
    for (const auto& s : build_schemas())
      if (!s.in_bh_plus_only) v.push_back(s);
    return v;
  }();
  return logic == Logic::BhPlus ? all : bh;
}

const Schema* find_schema(const std::string& name, Logic logic) {
  for (const auto& s : axiom_schemas(logic))
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<Substitution> match_schema(const Formula& f, const Schema& s) {
  Substitution sigma;
  if (!match(s.tmpl, f, sigma)) return std::nullopt;
  return sigma;
}

bool is_classical_tautology(const Formula& f) {
  std::vector<Formula> atoms;
  collect_atoms(f, atoms);
  if (atoms.size() > 20)
    throw std::invalid_argument("tautology check limited to 20 distinct atoms");
  unsigned long total = 1ul << atoms.size();
  for (unsigned long mask = 0; mask < total; ++mask)
    if (!truth(f, atoms, mask)) return false;
  return true;
}

Derivation parse_derivation(std::istream& in, Logic logic) {
  Derivation d;
  d.logic = logic;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = strip(line);
    if (t.empty()) continue;
    auto err = [&](const std::string& msg) {
      throw std::runtime_error("line " + std::to_string(no) + ": " + msg);
    };
    std::size_t dot = t.find('.');
    if (dot == std::string::npos) err("expected 'N. <formula> ; <justification>'");
    int index = 0;
    try {
      index = std::stoi(t.substr(0, dot));
    } catch (...) {
      err("bad line number '" + t.substr(0, dot) + "'");
    }
    std::size_t semi = t.find(';', dot);
    if (semi == std::string::npos) err("missing '; <justification>'");
    ProofLine pl;
    pl.index = index;
    pl.text = t;
    try {
      pl.formula = parse_formula(strip(t.substr(dot + 1, semi - dot - 1)));
    } catch (const std::exception& e) {
      err(e.what());
    }
    std::string just = strip(t.substr(semi + 1));
    std::size_t brace = just.find('{');
    std::string subst_body;
    if (brace != std::string::npos) {
      std::size_t close = just.rfind('}');
      if (close == std::string::npos || close < brace) err("unterminated '{'");
      subst_body = just.substr(brace + 1, close - brace - 1);
      just = strip(just.substr(0, brace));
    }
    std::istringstream js(just);
    std::string head;
    js >> head;
    if (head == "axiom") {
      pl.is_axiom = true;
      js >> pl.rule;
      if (pl.rule.empty()) err("'axiom' needs a schema name");
    } else if (head == "MP" || head == "Nec1" || head == "Nec2" || head == "Nec@" ||
               head == "Subst" || head == "Name" || head == "Paste") {
      pl.rule = head;
      int m;
      while (js >> m) pl.premises.push_back(m);
      if (!subst_body.empty()) {
        try {
          pl.subst = parse_subst(subst_body);
        } catch (const std::exception& e) {
          err(e.what());
        }
      }
    } else {
      err("unknown justification '" + head + "'");
    }
    if (static_cast<int>(d.lines.size()) + 1 != index)
      err("expected line number " + std::to_string(d.lines.size() + 1));
    d.lines.push_back(std::move(pl));
  }
  return d;
}

LineReport check_line(const Derivation& d, int idx) {
  const ProofLine& pl = d.lines.at(static_cast<std::size_t>(idx));
  const int no = pl.index;
  const Formula& f = pl.formula;

  if (pl.is_axiom) {
    if (pl.rule == "CT") {
      if (!is_classical_tautology(f))
        return fail(no, "not a classical tautology over its atoms");
      return {};
    }
    const Schema* s = find_schema(pl.rule, d.logic);
    if (!s) return fail(no, "unknown axiom schema '" + pl.rule + "' in this logic");
    if (!match_schema(f, *s))
      return fail(no, "formula is not an instance of schema " + pl.rule);
    return {};
  }

  auto premise = [&](std::size_t which) -> const Formula& {
    return d.lines[static_cast<std::size_t>(pl.premises[which] - 1)].formula;
  };
  std::size_t need = pl.rule == "MP" ? 2 : 1;
  if (pl.premises.size() != need)
    return fail(no, pl.rule + " needs " + std::to_string(need) + " premise(s)");
  for (int m : pl.premises)
    if (m < 1 || m >= no)
      return fail(no, "premise " + std::to_string(m) + " is not an earlier line");

  if (pl.rule == "MP") {
    const Formula& maj = premise(0);
    if (maj.kind() != Kind::Implies)
      return fail(no, "first MP premise must be an implication");
    if (maj.lhs() != premise(1)) return fail(no, "MP premises do not chain");
    if (maj.rhs() != f) return fail(no, "line is not the consequent of the MP premise");
    return {};
  }
  if (pl.rule == "Nec1" || pl.rule == "Nec2") {
    if (f.kind() != Kind::BoxB) return fail(no, pl.rule + " must conclude a [B] formula");
    const Formula& side = pl.rule == "Nec1" ? f.lhs() : f.rhs();
    if (side != premise(0))
      return fail(no, pl.rule + " premise must fill the " +
                          (pl.rule == "Nec1" ? "first" : "second") + " coordinate");
    return {};
  }
  if (pl.rule == "Nec@") {
    if (f.kind() != Kind::At) return fail(no, "Nec@ must conclude an @ formula");
    if (f.lhs() != premise(0)) return fail(no, "Nec@ body must equal its premise");
    return {};
  }
  if (pl.rule == "Subst") {
    if (apply_substitution(premise(0), pl.subst) != f)
      return fail(no, "line is not the substitution instance of its premise");
    return {};
  }
  if (pl.rule == "Name") {
    const Formula& prem = premise(0);
    if (prem.kind() != Kind::Implies || prem.lhs().kind() != Kind::Nominal)
      return fail(no, "Name premise must have the form i -> theta");
    const std::string& i = prem.lhs().name();
    if (occurs(i, prem.rhs()))
      return fail(no, "Name side condition violated: '" + i + "' occurs in theta");
    if (prem.rhs() != f) return fail(no, "line must equal theta of the Name premise");
    return {};
  }
  if (pl.rule == "Paste") {
    const Formula& prem = premise(0);
    // premise: ((@i<B>(j,k) & @j phi) & @k psi) -> theta
    if (prem.kind() != Kind::Implies || prem.lhs().kind() != Kind::And ||
        prem.lhs().lhs().kind() != Kind::And)
      return fail(no, "Paste premise must have the form ((@i<B>(j,k) & @j phi) & @k psi) -> theta");
    const Formula& c1 = prem.lhs().lhs().lhs();
    const Formula& c2 = prem.lhs().lhs().rhs();
    const Formula& c3 = prem.lhs().rhs();
    const Formula& theta = prem.rhs();
    if (c1.kind() != Kind::At || c1.lhs().kind() != Kind::DiamondB ||
        c1.lhs().lhs().kind() != Kind::Nominal || c1.lhs().rhs().kind() != Kind::Nominal ||
        c2.kind() != Kind::At || c3.kind() != Kind::At)
      return fail(no, "Paste premise must have the form ((@i<B>(j,k) & @j phi) & @k psi) -> theta");
    const std::string& i = c1.name();
    const std::string& j = c1.lhs().lhs().name();
    const std::string& k = c1.lhs().rhs().name();
    if (c2.name() != j || c3.name() != k)
      return fail(no, "Paste premise conjuncts must be labelled by j and k");
    const Formula& phi = c2.lhs();
    const Formula& psi = c3.lhs();
    if (i == j || i == k || j == k)
      return fail(no, "Paste side condition violated: i, j, k must be pairwise different");
    for (const std::string& n : {j, k})
      for (const Formula* g : {&phi, &psi, &theta})
        if (occurs(n, *g))
          return fail(no, "Paste side condition violated: '" + n +
                              "' occurs in phi, psi or theta");
    Formula expected =
        Formula::implies(Formula::at(i, Formula::diamond_b(phi, psi)), theta);
    if (f != expected)
      return fail(no, "line must be @i<B>(phi,psi) -> theta for the Paste premise");
    return {};
  }
  return fail(no, "unknown rule '" + pl.rule + "'");
}

LineReport check_derivation(const Derivation& d) {
  for (std::size_t idx = 0; idx < d.lines.size(); ++idx) {
    LineReport r = check_line(d, static_cast<int>(idx));
    if (!r.ok) return r;
  }
  return {};
}

ProbeReport soundness_probe(const std::string& schema_name, Logic logic,
                            const std::string& carrier_text, int trials,
                            std::uint64_t seed) {
  const Schema* s = find_schema(schema_name, logic);
  if (!s) throw std::invalid_argument("unknown axiom schema '" + schema_name + "'");
  const Formula& f = s->tmpl;  // metavariables read as concrete symbols

  dense::Carrier carrier = dense::parse_carrier(carrier_text);
  auto props = prop_names(f);
  auto noms = nominal_names(f);

  // Designated first attempt: the valuation that cuts the line at sqrt 2,
  // alternating sides per proposition.  Nominals sit at small integers.
  if (!props.empty()) {
    dense::DenseModel cut;
    cut.carrier = carrier;
    dense::Surd root2(0, 1, 2);
    bool left = true;
    for (const auto& p : props) {
      auto side = left ? dense::Component::open(dense::Endpoint::neg_inf(),
                                                dense::Endpoint::fin(root2))
                       : dense::Component::open(dense::Endpoint::fin(root2),
                                                dense::Endpoint::pos_inf());
      cut.prop_val[p] = dense::canonicalize({side}, carrier);
      left = !left;
    }
    bool ok = true;
    long v = 0;
    for (const auto& n : noms) {
      dense::Surd at{mpq_class(v++)};
      if (!carrier.member(at)) {
        ok = false;
        break;
      }
      cut.nom_val[n] = at;
    }
    if (ok) {
      auto rep = dense::holds_everywhere(cut, f);
      if (!rep.holds) {
        ProbeReport out;
        out.ok = false;
        std::string val;
        for (const auto& [name, set] : cut.prop_val)
          val += " " + name + "=" + set.str();
        out.counterexample = "carrier " + carrier.str() + ", valuation" + val +
                             ", fails at " + rep.witness->str();
        return out;
      }
    }
  }

  auto found = dense::search_countermodel(carrier, f, trials, seed);
  if (found.found) {
    ProbeReport out;
    out.ok = false;
    std::string val;
    for (const auto& [name, set] : found.model.prop_val)
      val += " " + name + "=" + set.str();
    for (const auto& [name, pt] : found.model.nom_val)
      val += " " + name + "=" + pt.str();
    out.counterexample = "carrier " + carrier.str() + " trial " +
                         std::to_string(found.trial) + ", valuation" + val +
                         ", fails at " + found.witness.str();
    return out;
  }

  // Finite-frame battery, only for the basic axioms valid on every frame.
  static const std::vector<std::string> frame_free = {
      "dual", "K1", "K2", "K@", "selfdual", "ref",   "intro",
      "back1", "back2", "agree", "sym",      "nom"};
  if (std::find(frame_free.begin(), frame_free.end(), schema_name) != frame_free.end()) {
    for (int t = 0; t < trials; ++t) {
      int n = 2 + static_cast<int>((seed + t) % 3);  // 2..4 worlds
      fin::Frame3 fr = fin::random_frame(n, 1, 3, seed * 1000003 + t);
      auto rep = fin::frame_valid_finite(fr, f);
      if (!rep.holds) {
        ProbeReport out;
        out.ok = false;
        out.counterexample = "finite frame trial " + std::to_string(t) + " (" +
                             std::to_string(n) + " worlds), fails at world " +
                             std::to_string(rep.world);
        return out;
      }
    }
  }
  return {};
}

}  // namespace betw::proof
