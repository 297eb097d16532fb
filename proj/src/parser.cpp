#include "betw/parser.hpp"

#include <cctype>

namespace betw {

namespace {

enum class Tok {
  End, True, False, Ident, Not, And, Or, Implies, Iff,
  DiamondB, BoxB, At, E, A, C, LParen, RParen, Comma,
};

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(tok_pos, what); }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    auto starts_with = [&](const char* s) {
      return text.compare(pos, std::char_traits<char>::length(s), s) == 0;
    };
    if (starts_with("<B>(")) { tok = Tok::DiamondB; pos += 4; return; }
    if (starts_with("[B](")) { tok = Tok::BoxB; pos += 4; return; }
    if (starts_with("<->")) { tok = Tok::Iff; pos += 3; return; }
    if (starts_with("->")) { tok = Tok::Implies; pos += 2; return; }
    switch (c) {
      case '~': tok = Tok::Not; ++pos; return;
      case '&': tok = Tok::And; ++pos; return;
      case '|': tok = Tok::Or; ++pos; return;
      case '@': tok = Tok::At; ++pos; return;
      case '(': tok = Tok::LParen; ++pos; return;
      case ')': tok = Tok::RParen; ++pos; return;
      case ',': tok = Tok::Comma; ++pos; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      ident = text.substr(start, pos - start);
      if (ident == "true") tok = Tok::True;
      else if (ident == "false") tok = Tok::False;
      else if (ident == "E") tok = Tok::E;
      else if (ident == "A") tok = Tok::A;
      else if (ident == "C") tok = Tok::C;
      else tok = Tok::Ident;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(const std::string& t) : lx(t) {}

  void expect(Tok t, const char* what) {
    if (lx.tok != t) lx.fail(std::string("expected ") + what);
    lx.advance();
  }

  Formula atom_from_ident() {
    const std::string name = lx.ident;
    std::size_t at = lx.tok_pos;
    lx.advance();
    if (is_prop_name(name)) return Formula::prop(name);
    if (is_nominal_name(name)) return Formula::nominal(name);
    throw ParseError(at, "identifier '" + name +
                             "' is neither a proposition (p/q/r/s...) nor a nominal (i/j/k/l...)");
  }

  Formula parse_unary() {
    switch (lx.tok) {
      case Tok::True: lx.advance(); return Formula::top();
      case Tok::False: lx.advance(); return Formula::bottom();
      case Tok::Ident: return atom_from_ident();
      case Tok::Not: lx.advance(); return Formula::negation(parse_unary());
      case Tok::E: lx.advance(); return Formula::exists(parse_unary());
      case Tok::A: lx.advance(); return Formula::always(parse_unary());
      case Tok::C: lx.advance(); return Formula::conv(parse_unary());
      case Tok::At: {
        lx.advance();
        if (lx.tok != Tok::Ident || !is_nominal_name(lx.ident))
          lx.fail("expected a nominal after '@'");
        std::string nom = lx.ident;
        lx.advance();
        return Formula::at(nom, parse_unary());
      }
      case Tok::DiamondB:
      case Tok::BoxB: {
        bool diamond = lx.tok == Tok::DiamondB;
        lx.advance();
        Formula l = parse_iff();
        expect(Tok::Comma, "','");
        Formula r = parse_iff();
        expect(Tok::RParen, "')'");
        return diamond ? Formula::diamond_b(std::move(l), std::move(r))
                       : Formula::box_b(std::move(l), std::move(r));
      }
      case Tok::LParen: {
        lx.advance();
        Formula f = parse_iff();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        lx.fail("expected a formula");
    }
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lx.tok == Tok::And) {
      lx.advance();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lx.tok == Tok::Or) {
      lx.advance();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (lx.tok == Tok::Implies) {
      lx.advance();
      return Formula::implies(std::move(f), parse_implies());
    }
    return f;
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (lx.tok == Tok::Iff) {
      lx.advance();
      f = Formula::iff(std::move(f), parse_implies());
    }
    return f;
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.parse_iff();
  if (p.lx.tok != Tok::End) p.lx.fail("trailing input");
  return f;
}

}  // namespace betw
