#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "betw/formula.hpp"
#include "betw/linear_set.hpp"

namespace betw::dense {

struct DenseModel {
  Carrier carrier;
  std::map<std::string, LinearSet> prop_val;
  std::map<std::string, Surd> nom_val;  // values must be carrier members
};

// Extension of f in m as a canonical set: Booleans via the set algebra,
// <B> via the between image, @/E/A as carrier-or-empty.
LinearSet extension(const DenseModel& m, const Formula& f);

struct DenseReport {
  bool holds = true;
  std::optional<Surd> witness;  // carrier point where the formula fails
};

DenseReport holds_everywhere(const DenseModel& m, const Formula& f);

struct SearchResult {
  bool found = false;
  DenseModel model;
  Surd witness;
  int trial = -1;
};

// Seeded random falsification: draws representable valuations (component
// counts and endpoints from a small lattice) for the symbols of f and
// returns the first failing model.  Deterministic per seed.
SearchResult search_countermodel(const Carrier& carrier, const Formula& f, int trials,
                                 std::uint64_t seed);

// Independent oracle on a finite integer window: direct enumeration of the
// satisfaction clauses over all carrier points.
LinearSet brute_force_extension(const DenseModel& m, const Formula& f);

// --- text formats -----------------------------------------------------------
// number:  p | p/q | inf | -inf | p/q + r/s sqrt d   (also "- r/s sqrt d")
// set:     whitespace-separated components "{a}" and "(l,u)"
// carrier: "Z" | "Q" | "R" optionally followed by "[l,u]" / "(l,u)" / mixed
// model file: "carrier ..." then lines "V p: <set>" and "V i: <number>"
// valuation string (--val): "p=(0,1) {2}; q=...; i=3/2" separated by ';'
Surd parse_number(const std::string& text);
Endpoint parse_endpoint(const std::string& text);
LinearSet parse_set(const std::string& text, const Carrier& c);
Carrier parse_carrier(const std::string& text);
DenseModel parse_dense_model(std::istream& in);
void apply_valuation_string(DenseModel& m, const std::string& text);

}  // namespace betw::dense
