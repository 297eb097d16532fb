#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betw/formula.hpp"

namespace betw::proof {

enum class Logic { Bh, BhPlus };

// An axiom schema.  The template is an ordinary formula whose prop names
// act as formula metavariables and whose nominal names act as nominal
// metavariables; instances are checked by uniform matching.  Pure schemas
// contain no prop metavariables, so only nominal renaming can match them.
struct Schema {
  std::string name;
  Formula tmpl;
  bool in_bh_plus_only = false;
};

// All axiom schemas of the logic, excluding CT (which is an infinite schema
// decided by truth tables rather than matching).
const std::vector<Schema>& axiom_schemas(Logic logic);
const Schema* find_schema(const std::string& name, Logic logic);

// Uniform matching of f against the template: prop metavariables bind to
// formulas, nominal metavariables to nominals; bindings must be consistent
// but need not be injective.
std::optional<Substitution> match_schema(const Formula& f, const Schema& s);

// Classical-tautology decision: truth table over the maximal non-Boolean
// subformulas of f, treated as opaque atoms.
bool is_classical_tautology(const Formula& f);

struct ProofLine {
  int index = 0;
  Formula formula;
  bool is_axiom = false;
  std::string rule;            // axiom name or rule name
  std::vector<int> premises;   // rule premises (1-based line numbers)
  Substitution subst;          // only for Subst
  std::string text;            // source line, for diagnostics
};

struct Derivation {
  Logic logic = Logic::Bh;
  std::vector<ProofLine> lines;
};

struct LineReport {
  bool ok = true;
  int line = 0;          // failing line number (0 if ok)
  std::string message;
};

// Parses the line-based format "N. <formula> ; axiom NAME" /
// "N. <formula> ; RULE m [k] {p:=..., i:=j}" with '#' comments.
Derivation parse_derivation(std::istream& in, Logic logic);

LineReport check_line(const Derivation& d, int idx);   // idx is 0-based
LineReport check_derivation(const Derivation& d);

struct ProbeReport {
  bool ok = true;
  std::string counterexample;  // description of the first falsifying instance
};

// Semantic spot check of one axiom schema: evaluates the schema (its
// metavariables read as concrete symbols) over `trials` seeded valuations on
// the given dense carrier ("Q", "R", ...), plus a random finite-frame battery
// for the basic axioms that hold on every frame.
ProbeReport soundness_probe(const std::string& schema_name, Logic logic,
                            const std::string& carrier = "Q", int trials = 1000,
                            std::uint64_t seed = 1);

}  // namespace betw::proof
