#include "betw/formula.hpp"

#include <algorithm>
#include <set>

namespace betw {

bool is_prop_name(const std::string& name) {
  if (name.empty()) return false;
  char c = name[0];
  return c == 'p' || c == 'q' || c == 'r' || c == 's';
}

bool is_nominal_name(const std::string& name) {
  if (name.empty()) return false;
  char c = name[0];
  return c == 'i' || c == 'j' || c == 'k' || c == 'l';
}

struct Formula::Node {
  Kind kind;
  std::string name;  // Prop, Nominal, At label
  Formula lhs;
  Formula rhs;
};

Formula detail_make_formula(Kind kind, std::string name, Formula lhs, Formula rhs);

namespace {

Formula make(Kind kind, std::string name, Formula lhs, Formula rhs) {
  return detail_make_formula(kind, std::move(name), std::move(lhs), std::move(rhs));
}

}  // namespace

Formula Formula::top() { return make(Kind::Top, "", {}, {}); }
Formula Formula::bottom() { return make(Kind::Bottom, "", {}, {}); }

Formula Formula::prop(const std::string& name) {
  if (!is_prop_name(name))
    throw std::invalid_argument("not a propositional name: '" + name + "'");
  return make(Kind::Prop, name, {}, {});
}

Formula Formula::nominal(const std::string& name) {
  if (!is_nominal_name(name))
    throw std::invalid_argument("not a nominal name: '" + name + "'");
  return make(Kind::Nominal, name, {}, {});
}

Formula Formula::negation(Formula f) { return make(Kind::Not, "", std::move(f), {}); }
Formula Formula::conj(Formula l, Formula r) { return make(Kind::And, "", std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return make(Kind::Or, "", std::move(l), std::move(r)); }
Formula Formula::implies(Formula l, Formula r) { return make(Kind::Implies, "", std::move(l), std::move(r)); }
Formula Formula::iff(Formula l, Formula r) { return make(Kind::Iff, "", std::move(l), std::move(r)); }
Formula Formula::diamond_b(Formula l, Formula r) { return make(Kind::DiamondB, "", std::move(l), std::move(r)); }
Formula Formula::box_b(Formula l, Formula r) { return make(Kind::BoxB, "", std::move(l), std::move(r)); }

Formula Formula::at(const std::string& nominal, Formula f) {
  if (!is_nominal_name(nominal))
    throw std::invalid_argument("@ takes a nominal, got '" + nominal + "'");
  return make(Kind::At, nominal, std::move(f), {});
}

Formula Formula::exists(Formula f) { return make(Kind::E, "", std::move(f), {}); }
Formula Formula::always(Formula f) { return make(Kind::A, "", std::move(f), {}); }
Formula Formula::conv(Formula f) { return make(Kind::Conv, "", std::move(f), {}); }

Formula detail_make_formula(Kind kind, std::string name, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Formula(std::shared_ptr<const Formula::Node>(std::move(node)));
}

namespace {

int arity(Kind k) {
  switch (k) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Prop:
    case Kind::Nominal:
      return 0;
    case Kind::Not:
    case Kind::At:
    case Kind::E:
    case Kind::A:
    case Kind::Conv:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }

bool Formula::is_atom() const {
  Kind k = kind();
  return k == Kind::Top || k == Kind::Bottom || k == Kind::Prop || k == Kind::Nominal;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind || node_->name != other.node_->name) return false;
  int n = arity(node_->kind);
  if (n >= 1 && !(lhs() == other.lhs())) return false;
  if (n >= 2 && !(rhs() == other.rhs())) return false;
  return true;
}

namespace {

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Top: out += "true"; return;
    case Kind::Bottom: out += "false"; return;
    case Kind::Prop:
    case Kind::Nominal: out += f.name(); return;
    case Kind::Not:
      out += '~';
      print(f.lhs(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff: {
      const char* op = f.kind() == Kind::And       ? " & "
                       : f.kind() == Kind::Or      ? " | "
                       : f.kind() == Kind::Implies ? " -> "
                                                   : " <-> ";
      out += '(';
      print(f.lhs(), out);
      out += op;
      print(f.rhs(), out);
      out += ')';
      return;
    }
    case Kind::DiamondB:
    case Kind::BoxB:
      out += f.kind() == Kind::DiamondB ? "<B>(" : "[B](";
      print(f.lhs(), out);
      out += ',';
      print(f.rhs(), out);
      out += ')';
      return;
    case Kind::At:
      out += '@';
      out += f.name();
      out += ' ';
      print(f.lhs(), out);
      return;
    case Kind::E:
    case Kind::A:
    case Kind::Conv:
      out += f.kind() == Kind::E ? "E " : f.kind() == Kind::A ? "A " : "C ";
      print(f.lhs(), out);
      return;
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print(*this, out);
  return out;
}

Formula apply_substitution(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return f;
    case Kind::Prop: {
      auto it = s.prop_map.find(f.name());
      return it == s.prop_map.end() ? f : it->second;
    }
    case Kind::Nominal: {
      auto it = s.nom_map.find(f.name());
      return it == s.nom_map.end() ? f : Formula::nominal(it->second);
    }
    case Kind::Not: return Formula::negation(apply_substitution(f.lhs(), s));
    case Kind::And: return Formula::conj(apply_substitution(f.lhs(), s), apply_substitution(f.rhs(), s));
    case Kind::Or: return Formula::disj(apply_substitution(f.lhs(), s), apply_substitution(f.rhs(), s));
    case Kind::Implies: return Formula::implies(apply_substitution(f.lhs(), s), apply_substitution(f.rhs(), s));
    case Kind::Iff: return Formula::iff(apply_substitution(f.lhs(), s), apply_substitution(f.rhs(), s));
    case Kind::DiamondB:
      return Formula::diamond_b(apply_substitution(f.lhs(), s), apply_substitution(f.rhs(), s));
    case Kind::BoxB:
      return Formula::box_b(apply_substitution(f.lhs(), s), apply_substitution(f.rhs(), s));
    case Kind::At: {
      auto it = s.nom_map.find(f.name());
      const std::string& label = it == s.nom_map.end() ? f.name() : it->second;
      return Formula::at(label, apply_substitution(f.lhs(), s));
    }
    case Kind::E: return Formula::exists(apply_substitution(f.lhs(), s));
    case Kind::A: return Formula::always(apply_substitution(f.lhs(), s));
    case Kind::Conv: return Formula::conv(apply_substitution(f.lhs(), s));
  }
  throw std::logic_error("unreachable");
}

Substitution compose(const Substitution& first, const Substitution& second) {
  Substitution out = second;
  for (const auto& [name, g] : first.prop_map) out.prop_map[name] = apply_substitution(g, second);
  for (const auto& [name, target] : first.nom_map) {
    auto it = second.nom_map.find(target);
    out.nom_map[name] = it == second.nom_map.end() ? target : it->second;
  }
  return out;
}

bool occurs(const std::string& symbol, const Formula& f) {
  switch (f.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return false;
    case Kind::Prop:
    case Kind::Nominal:
      return f.name() == symbol;
    case Kind::At:
      return f.name() == symbol || occurs(symbol, f.lhs());
    case Kind::Not:
    case Kind::E:
    case Kind::A:
    case Kind::Conv:
      return occurs(symbol, f.lhs());
    default:
      return occurs(symbol, f.lhs()) || occurs(symbol, f.rhs());
  }
}

bool is_pure(const Formula& f) {
  switch (f.kind()) {
    case Kind::Prop:
      return false;
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Nominal:
      return true;
    case Kind::Not:
    case Kind::At:
    case Kind::E:
    case Kind::A:
    case Kind::Conv:
      return is_pure(f.lhs());
    default:
      return is_pure(f.lhs()) && is_pure(f.rhs());
  }
}

Formula normalize(const Formula& f) {
  switch (f.kind()) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Prop:
    case Kind::Nominal:
      return f;
    case Kind::Not: return Formula::negation(normalize(f.lhs()));
    case Kind::And: return Formula::conj(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::Or: return Formula::disj(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::Implies: return Formula::implies(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::Iff: return Formula::iff(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::DiamondB:
      return Formula::diamond_b(normalize(f.lhs()), normalize(f.rhs()));
    case Kind::BoxB: {
      Formula l = normalize(f.lhs()), r = normalize(f.rhs());
      return Formula::negation(
          Formula::diamond_b(Formula::negation(std::move(l)), Formula::negation(std::move(r))));
    }
    case Kind::At: return Formula::at(f.name(), normalize(f.lhs()));
    case Kind::E: return Formula::exists(normalize(f.lhs()));
    case Kind::A:
      return Formula::negation(Formula::exists(Formula::negation(normalize(f.lhs()))));
    case Kind::Conv: {
      Formula body = normalize(f.lhs());
      return Formula::diamond_b(body, body);
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

void collect(const Formula& f, std::set<std::string>& props, std::set<std::string>& noms) {
  switch (f.kind()) {
    case Kind::Top:
    case Kind::Bottom:
      return;
    case Kind::Prop:
      props.insert(f.name());
      return;
    case Kind::Nominal:
      noms.insert(f.name());
      return;
    case Kind::At:
      noms.insert(f.name());
      collect(f.lhs(), props, noms);
      return;
    case Kind::Not:
    case Kind::E:
    case Kind::A:
    case Kind::Conv:
      collect(f.lhs(), props, noms);
      return;
    default:
      collect(f.lhs(), props, noms);
      collect(f.rhs(), props, noms);
      return;
  }
}

}  // namespace

std::vector<std::string> prop_names(const Formula& f) {
  std::set<std::string> props, noms;
  collect(f, props, noms);
  return {props.begin(), props.end()};
}

std::vector<std::string> nominal_names(const Formula& f) {
  std::set<std::string> props, noms;
  collect(f, props, noms);
  return {noms.begin(), noms.end()};
}

}  // namespace betw
