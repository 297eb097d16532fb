#include "betw/translate.hpp"

#include <cctype>
#include <stdexcept>

namespace betw {

namespace {

struct FreshVars {
  int next = 0;
  // y, z, y2, z2, y3, z3, ...
  std::string draw() {
    int idx = next++;
    std::string base = idx % 2 == 0 ? "y" : "z";
    int gen = idx / 2 + 1;
    return gen == 1 ? base : base + std::to_string(gen);
  }
};

std::string st(const Formula& f, const std::string& x, FreshVars& fresh) {
  switch (f.kind()) {
    case Kind::Top: return "true";
    case Kind::Bottom: return "false";
    case Kind::Prop: return "P_" + f.name() + "(" + x + ")";
    case Kind::Nominal: return x + " = x_" + f.name();
    case Kind::Not: return "~" + st(f.lhs(), x, fresh);
    case Kind::And: return "(" + st(f.lhs(), x, fresh) + " & " + st(f.rhs(), x, fresh) + ")";
    case Kind::Or: return "(" + st(f.lhs(), x, fresh) + " | " + st(f.rhs(), x, fresh) + ")";
    case Kind::Implies: return "(" + st(f.lhs(), x, fresh) + " -> " + st(f.rhs(), x, fresh) + ")";
    case Kind::Iff: return "(" + st(f.lhs(), x, fresh) + " <-> " + st(f.rhs(), x, fresh) + ")";
    case Kind::DiamondB: {
      std::string y = fresh.draw();
      std::string z = fresh.draw();
      return "exists " + y + " exists " + z + " ((B(" + y + "," + x + "," + z + ") & " +
             st(f.lhs(), y, fresh) + ") & " + st(f.rhs(), z, fresh) + ")";
    }
    case Kind::BoxB: {
      // [B](a,b) = ~<B>(~a,~b)
      std::string y = fresh.draw();
      std::string z = fresh.draw();
      return "~exists " + y + " exists " + z + " ((B(" + y + "," + x + "," + z + ") & ~" +
             st(f.lhs(), y, fresh) + ") & ~" + st(f.rhs(), z, fresh) + ")";
    }
    case Kind::At: return st(f.lhs(), "x_" + f.name(), fresh);
    case Kind::E: {
      std::string y = fresh.draw();
      return "exists " + y + " " + st(f.lhs(), y, fresh);
    }
    case Kind::A: {
      std::string y = fresh.draw();
      return "~exists " + y + " ~" + st(f.lhs(), y, fresh);
    }
    case Kind::Conv: {
      std::string y = fresh.draw();
      std::string z = fresh.draw();
      return "exists " + y + " exists " + z + " ((B(" + y + "," + x + "," + z + ") & " +
             st(f.lhs(), y, fresh) + ") & " + st(f.lhs(), z, fresh) + ")";
    }
  }
  throw std::logic_error("unreachable");
}

// --- minimal recursive-descent validator for the FO output grammar ---

struct FOParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit FOParser(const std::string& t) : s(t) {}

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool lit(const char* w) {
    skip();
    std::size_t n = std::char_traits<char>::length(w);
    if (s.compare(pos, n, w) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
  bool ident(std::string& out) {
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    out = s.substr(start, pos - start);
    return !out.empty();
  }
  bool var() {
    std::string v;
    return ident(v) && v != "exists" && v != "true" && v != "false" && v.rfind("P_", 0) != 0;
  }
  bool formula() {
    skip();
    if (lit("true") || lit("false")) return true;
    if (lit("~")) return formula();
    if (lit("exists")) return var() && formula();
    if (lit("B(")) return var() && lit(",") && var() && lit(",") && var() && lit(")");
    if (pos < s.size() && s.compare(pos, 2, "P_") == 0) {
      std::string p;
      return ident(p) && lit("(") && var() && lit(")");
    }
    if (lit("(")) {
      if (!formula()) return false;
      if (!(lit("&") || lit("|") || lit("->") || lit("<->"))) return false;
      return formula() && lit(")");
    }
    // atom: v = v
    return var() && lit("=") && var();
  }
};

}  // namespace

std::string standard_translation(const Formula& f, const std::string& free_var) {
  FreshVars fresh;
  return st(f, free_var, fresh);
}

bool fo_wellformed(const std::string& text) {
  FOParser p(text);
  if (!p.formula()) return false;
  p.skip();
  return p.pos == text.size();
}

}  // namespace betw
