#include "betw/dense_model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace betw::dense {

LinearSet extension(const DenseModel& m, const Formula& f) {
  const Carrier& c = m.carrier;
  switch (f.kind()) {
    case Kind::Top: return full_set(c);
    case Kind::Bottom: return empty_set();
    case Kind::Prop: {
      auto it = m.prop_val.find(f.name());
      if (it == m.prop_val.end())
        throw std::runtime_error("unbound proposition '" + f.name() + "'");
      return it->second;
    }
    case Kind::Nominal: {
      auto it = m.nom_val.find(f.name());
      if (it == m.nom_val.end()) throw std::runtime_error("unbound nominal '" + f.name() + "'");
      return canonicalize({Component::pt(it->second)}, c);
    }
    case Kind::Not: return set_complement(extension(m, f.lhs()), c);
    case Kind::And: return set_intersect(extension(m, f.lhs()), extension(m, f.rhs()), c);
    case Kind::Or: return set_union(extension(m, f.lhs()), extension(m, f.rhs()), c);
    case Kind::Implies:
      return set_union(set_complement(extension(m, f.lhs()), c), extension(m, f.rhs()), c);
    case Kind::Iff: {
      LinearSet a = extension(m, f.lhs()), b = extension(m, f.rhs());
      return set_union(set_intersect(a, b, c),
                       set_intersect(set_complement(a, c), set_complement(b, c), c), c);
    }
    case Kind::DiamondB:
      return between_image(extension(m, f.lhs()), extension(m, f.rhs()), c);
    case Kind::Conv: {
      LinearSet a = extension(m, f.lhs());
      return between_image(a, a, c);
    }
    case Kind::BoxB:
      return set_complement(between_image(set_complement(extension(m, f.lhs()), c),
                                          set_complement(extension(m, f.rhs()), c), c),
                            c);
    case Kind::At: {
      auto it = m.nom_val.find(f.name());
      if (it == m.nom_val.end()) throw std::runtime_error("unbound nominal '" + f.name() + "'");
      return extension(m, f.lhs()).contains(it->second, c) ? full_set(c) : empty_set();
    }
    case Kind::E: return extension(m, f.lhs()).empty() ? empty_set() : full_set(c);
    case Kind::A:
      return extension(m, f.lhs()) == full_set(c) ? full_set(c) : empty_set();
  }
  throw std::logic_error("unreachable");
}

DenseReport holds_everywhere(const DenseModel& m, const Formula& f) {
  LinearSet gap = set_complement(extension(m, f), m.carrier);
  if (gap.empty()) return {};
  DenseReport r;
  r.holds = false;
  r.witness = pick_member(gap, m.carrier);
  return r;
}

namespace {

mpq_class half(long num) {
  mpq_class q(num, 2);
  q.canonicalize();
  return q;
}

}  // namespace

SearchResult search_countermodel(const Carrier& carrier, const Formula& f, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  auto props = prop_names(f);
  auto noms = nominal_names(f);

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 eng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1)));
    auto lattice = [&]() { return Surd(half(static_cast<long>(eng() % 33) - 16)); };

    DenseModel m;
    m.carrier = carrier;
    bool bad_model = false;
    for (auto& p : props) {
      std::vector<Component> raw;
      int ncomp = static_cast<int>(eng() % 4);
      for (int i = 0; i < ncomp; ++i) {
        switch (eng() % 4) {
          case 0: raw.push_back(Component::pt(lattice())); break;
          case 1: {
            Surd a = lattice(), b = lattice();
            if (b < a) std::swap(a, b);
            if (a != b) raw.push_back(Component::open(Endpoint::fin(a), Endpoint::fin(b)));
            break;
          }
          case 2: raw.push_back(Component::open(Endpoint::neg_inf(), Endpoint::fin(lattice()))); break;
          default: raw.push_back(Component::open(Endpoint::fin(lattice()), Endpoint::pos_inf())); break;
        }
      }
      m.prop_val[p] = canonicalize(std::move(raw), carrier);
    }
    for (auto& i : noms) {
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        Surd v = lattice();
        if (carrier.base == Base::Z) v = Surd(mpq_class(v.floor()));
        if (carrier.member(v)) {
          m.nom_val[i] = v;
          placed = true;
        }
      }
      if (!placed) {
        auto fallback = pick_member(full_set(carrier), carrier);
        if (!fallback) {
          bad_model = true;
          break;
        }
        m.nom_val[i] = *fallback;
      }
    }
    if (bad_model) continue;

    auto rep = holds_everywhere(m, f);
    if (!rep.holds) {
      SearchResult res;
      res.found = true;
      res.model = std::move(m);
      res.witness = *rep.witness;
      res.trial = t;
      return res;
    }
  }
  return {};
}

LinearSet brute_force_extension(const DenseModel& m, const Formula& f) {
  if (!m.carrier.bounded_finite())
    throw std::invalid_argument("brute force needs a bounded integer carrier");
  LinearSet universe = full_set(m.carrier);
  std::vector<Surd> pts;
  for (auto& c : universe.comps) {
    if (!c.is_point) throw std::logic_error("bounded integer carrier must enumerate to points");
    pts.push_back(c.point);
  }
  const int n = static_cast<int>(pts.size());

  std::function<std::vector<char>(const Formula&)> ev = [&](const Formula& g) -> std::vector<char> {
    std::vector<char> s(n, 0);
    switch (g.kind()) {
      case Kind::Top: return std::vector<char>(n, 1);
      case Kind::Bottom: return s;
      case Kind::Prop: {
        auto it = m.prop_val.find(g.name());
        if (it == m.prop_val.end())
          throw std::runtime_error("unbound proposition '" + g.name() + "'");
        for (int w = 0; w < n; ++w) s[w] = it->second.contains(pts[w], m.carrier);
        return s;
      }
      case Kind::Nominal: {
        auto it = m.nom_val.find(g.name());
        if (it == m.nom_val.end()) throw std::runtime_error("unbound nominal '" + g.name() + "'");
        for (int w = 0; w < n; ++w) s[w] = pts[w] == it->second;
        return s;
      }
      case Kind::Not: {
        s = ev(g.lhs());
        for (auto& v : s) v = !v;
        return s;
      }
      case Kind::And: {
        auto a = ev(g.lhs()), b = ev(g.rhs());
        for (int w = 0; w < n; ++w) s[w] = a[w] && b[w];
        return s;
      }
      case Kind::Or: {
        auto a = ev(g.lhs()), b = ev(g.rhs());
        for (int w = 0; w < n; ++w) s[w] = a[w] || b[w];
        return s;
      }
      case Kind::Implies: {
        auto a = ev(g.lhs()), b = ev(g.rhs());
        for (int w = 0; w < n; ++w) s[w] = !a[w] || b[w];
        return s;
      }
      case Kind::Iff: {
        auto a = ev(g.lhs()), b = ev(g.rhs());
        for (int w = 0; w < n; ++w) s[w] = a[w] == b[w];
        return s;
      }
      case Kind::DiamondB:
      case Kind::Conv: {
        auto a = ev(g.lhs());
        auto b = g.kind() == Kind::Conv ? a : ev(g.rhs());
        for (int w = 0; w < n; ++w) {
          bool hit = false;
          for (int i = 0; i < n && !hit; ++i)
            for (int j = 0; j < n && !hit; ++j)
              if (a[i] && b[j] &&
                  ((pts[i] < pts[w] && pts[w] < pts[j]) ||
                   (pts[j] < pts[w] && pts[w] < pts[i])))
                hit = true;
          s[w] = hit;
        }
        return s;
      }
      case Kind::BoxB: {
        auto a = ev(g.lhs()), b = ev(g.rhs());
        for (int w = 0; w < n; ++w) {
          bool hit = false;
          for (int i = 0; i < n && !hit; ++i)
            for (int j = 0; j < n && !hit; ++j)
              if (!a[i] && !b[j] &&
                  ((pts[i] < pts[w] && pts[w] < pts[j]) ||
                   (pts[j] < pts[w] && pts[w] < pts[i])))
                hit = true;
          s[w] = !hit;
        }
        return s;
      }
      case Kind::At: {
        auto it = m.nom_val.find(g.name());
        if (it == m.nom_val.end()) throw std::runtime_error("unbound nominal '" + g.name() + "'");
        auto a = ev(g.lhs());
        int idx = -1;
        for (int w = 0; w < n; ++w)
          if (pts[w] == it->second) idx = w;
        if (idx < 0) throw std::runtime_error("nominal value outside the carrier window");
        return std::vector<char>(n, a[idx]);
      }
      case Kind::E: {
        auto a = ev(g.lhs());
        bool any = std::find(a.begin(), a.end(), char(1)) != a.end();
        return std::vector<char>(n, any);
      }
      case Kind::A: {
        auto a = ev(g.lhs());
        bool all = std::find(a.begin(), a.end(), char(0)) == a.end();
        return std::vector<char>(n, all);
      }
    }
    throw std::logic_error("unreachable");
  };

  auto sat = ev(f);
  std::vector<Component> raw;
  for (int w = 0; w < n; ++w)
    if (sat[w]) raw.push_back(Component::pt(pts[w]));
  return canonicalize(std::move(raw), m.carrier);
}

// ----------------------------------------------------------------- parsing

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::runtime_error(what); }

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

mpq_class parse_rational(std::istringstream& in) {
  in >> std::ws;
  std::string tok;
  while (in.peek() != std::char_traits<char>::eof()) {
    char ch = static_cast<char>(in.peek());
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
        (tok.empty() && ch == '-')) {
      tok.push_back(ch);
      in.get();
    } else {
      break;
    }
  }
  if (tok.empty() || tok == "-") bad("expected a rational number");
  try {
    mpq_class q(tok);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    bad("malformed rational '" + tok + "'");
  }
}

}  // namespace

Surd parse_number(const std::string& text) {
  std::istringstream in(strip(text));
  in >> std::ws;
  mpq_class a = 0, b = 0;
  long d = 2;
  bool saw_any = false;

  auto at_sqrt = [&]() {
    in >> std::ws;
    return in.peek() == 's';
  };

  int sign = 1;
  if (in.peek() == '-') {
    // could open either the rational part or a pure surd term
    std::streampos save = in.tellg();
    in.get();
    if (at_sqrt()) {
      sign = -1;
    } else {
      in.seekg(save);
    }
  }
  if (!at_sqrt()) {
    a = parse_rational(in);
    saw_any = true;
    in >> std::ws;
    if (in.peek() == '+' || in.peek() == '-') {
      sign = in.get() == '-' ? -1 : 1;
      in >> std::ws;
      if (in.peek() == std::char_traits<char>::eof())
        bad("dangling sign in number '" + text + "'");
    } else if (in.peek() != std::char_traits<char>::eof()) {
      if (!std::isdigit(static_cast<unsigned char>(in.peek())) && in.peek() != 's')
        bad("unexpected character in number '" + text + "'");
    } else {
      return Surd(a);
    }
  }
  in >> std::ws;
  if (in.peek() != std::char_traits<char>::eof()) {
    mpq_class mag = 1;
    if (in.peek() != 's') mag = parse_rational(in);
    in >> std::ws;
    std::string kw;
    in >> kw;
    if (kw != "sqrt") bad("expected 'sqrt' in number '" + text + "'");
    if (!(in >> d) || d <= 0) bad("expected a positive square root base");
    b = sign * mag;
    saw_any = true;
  }
  in >> std::ws;
  if (in.peek() != std::char_traits<char>::eof() || !saw_any)
    bad("malformed number '" + text + "'");
  return Surd(a, b, d);
}

Endpoint parse_endpoint(const std::string& text) {
  std::string t = strip(text);
  if (t == "inf" || t == "+inf") return Endpoint::pos_inf();
  if (t == "-inf") return Endpoint::neg_inf();
  return Endpoint::fin(parse_number(t));
}

LinearSet parse_set(const std::string& text, const Carrier& c) {
  std::vector<Component> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '{') {
      std::size_t close = text.find('}', i);
      if (close == std::string::npos) bad("unterminated '{' in set");
      Surd p = parse_number(text.substr(i + 1, close - i - 1));
      if (!c.member(p)) bad("point " + p.str() + " is not in the carrier");
      raw.push_back(Component::pt(std::move(p)));
      i = close + 1;
    } else if (ch == '(') {
      std::size_t close = text.find(')', i);
      if (close == std::string::npos) bad("unterminated '(' in set");
      std::string body = text.substr(i + 1, close - i - 1);
      std::size_t comma = body.find(',');
      if (comma == std::string::npos) bad("interval needs two endpoints");
      Endpoint l = parse_endpoint(body.substr(0, comma));
      Endpoint u = parse_endpoint(body.substr(comma + 1));
      if (!(l < u)) bad("interval endpoints must satisfy l < u");
      raw.push_back(Component::open(std::move(l), std::move(u)));
      i = close + 1;
    } else {
      bad(std::string("unexpected character '") + ch + "' in set");
    }
  }
  return canonicalize(std::move(raw), c);
}

Carrier parse_carrier(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) bad("empty carrier specification");
  Carrier c;
  switch (t[0]) {
    case 'Z': c.base = Base::Z; break;
    case 'Q': c.base = Base::Q; break;
    case 'R': c.base = Base::R; break;
    default: bad("carrier base must be Z, Q or R");
  }
  std::string rest = strip(t.substr(1));
  if (rest.empty()) return c;
  char open = rest.front(), close = rest.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    bad("carrier bounds must look like [l,u] or (l,u)");
  std::string body = rest.substr(1, rest.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string::npos) bad("carrier bounds need two endpoints");
  c.lo = parse_endpoint(body.substr(0, comma));
  c.hi = parse_endpoint(body.substr(comma + 1));
  c.lo_closed = open == '[';
  c.hi_closed = close == ']';
  if (c.lo_closed && !c.lo.finite()) bad("an infinite bound cannot be closed");
  if (c.hi_closed && !c.hi.finite()) bad("an infinite bound cannot be closed");
  if (c.lo.finite() && c.hi.finite() && !(c.lo < c.hi)) bad("carrier bounds must satisfy l < u");
  return c;
}

DenseModel parse_dense_model(std::istream& in) {
  DenseModel m;
  bool have_carrier = false;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    try {
      if (line.rfind("carrier", 0) == 0) {
        m.carrier = parse_carrier(line.substr(7));
        have_carrier = true;
      } else if (line.rfind("V", 0) == 0) {
        if (!have_carrier) bad("'carrier' line must come first");
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) bad("expected 'V name: value'");
        std::string sym = strip(line.substr(1, colon - 1));
        std::string val = line.substr(colon + 1);
        if (is_prop_name(sym)) {
          m.prop_val[sym] = parse_set(val, m.carrier);
        } else if (is_nominal_name(sym)) {
          Surd v = parse_number(val);
          if (!m.carrier.member(v))
            bad("nominal value " + v.str() + " is not in the carrier");
          m.nom_val[sym] = std::move(v);
        } else {
          bad("'" + sym + "' is neither a proposition nor a nominal");
        }
      } else {
        bad("unknown directive");
      }
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(no) + ": " + e.what());
    }
  }
  if (!have_carrier) bad("model file has no carrier line");
  return m;
}

void apply_valuation_string(DenseModel& m, const std::string& text) {
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    item = strip(item);
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) bad("valuation item needs 'name=value': '" + item + "'");
    std::string sym = strip(item.substr(0, eq));
    std::string val = item.substr(eq + 1);
    if (is_prop_name(sym)) {
      m.prop_val[sym] = parse_set(val, m.carrier);
    } else if (is_nominal_name(sym)) {
      Surd v = parse_number(val);
      if (!m.carrier.member(v)) bad("nominal value " + v.str() + " is not in the carrier");
      m.nom_val[sym] = std::move(v);
    } else {
      bad("'" + sym + "' is neither a proposition nor a nominal");
    }
  }
}

}  // namespace betw::dense
