#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace betw {

// Hybrid language with the binary possibility operator <B>, nominals,
// satisfaction operators @i, the existential modality E and the unary
// convexity operator C.  Propositional names start with p/q/r/s, nominal
// names with i/j/k/l, so the two sorts can never collide.

enum class Kind : unsigned char {
  Top,
  Bottom,
  Prop,
  Nominal,
  Not,
  And,
  Or,
  Implies,
  Iff,
  DiamondB,
  BoxB,
  At,
  E,
  A,
  Conv,
};

bool is_prop_name(const std::string& name);
bool is_nominal_name(const std::string& name);

class Formula {
 public:
  Formula() = default;  // empty handle; only for containers

  static Formula top();
  static Formula bottom();
  static Formula prop(const std::string& name);
  static Formula nominal(const std::string& name);
  static Formula negation(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula diamond_b(Formula l, Formula r);
  static Formula box_b(Formula l, Formula r);
  static Formula at(const std::string& nominal, Formula f);
  static Formula exists(Formula f);
  static Formula always(Formula f);
  static Formula conv(Formula f);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  const std::string& name() const;  // Prop, Nominal and the label of At
  const Formula& lhs() const;       // also the sole child of unary nodes
  const Formula& rhs() const;

  bool is_atom() const;  // Top/Bottom/Prop/Nominal
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::string str() const;  // canonical, fully parenthesized text

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend Formula detail_make_formula(Kind kind, std::string name, Formula lhs, Formula rhs);
};

// Uniform simultaneous substitution: props map to formulas, nominals only
// to nominals.
struct Substitution {
  std::map<std::string, Formula> prop_map;
  std::map<std::string, std::string> nom_map;
};

Formula apply_substitution(const Formula& f, const Substitution& s);

// Composition such that apply(f, compose(s1, s2)) == apply(apply(f, s1), s2)
// whenever the domains are disjoint from the symbols s1 introduces.
Substitution compose(const Substitution& first, const Substitution& second);

bool occurs(const std::string& symbol, const Formula& f);
bool is_pure(const Formula& f);

// Expands Conv/[B]/A through their definitions; the result uses only
// Top/Bottom/props/nominals/Booleans/<B>/@/E.
Formula normalize(const Formula& f);

// All prop names / nominal names occurring in f, sorted and deduplicated.
std::vector<std::string> prop_names(const Formula& f);
std::vector<std::string> nominal_names(const Formula& f);

}  // namespace betw
