#include "betw/frame_eval.hpp"

#include <map>

namespace betw::fin {

namespace {

std::vector<char> full_set(int n) { return std::vector<char>(n, 1); }
std::vector<char> empty_set(int n) { return std::vector<char>(n, 0); }

bool nonempty(const std::vector<char>& s) {
  for (char c : s)
    if (c) return true;
  return false;
}

std::vector<char> ext(const FiniteModel& m, const Formula& f) {
  const int n = m.frame.n;
  switch (f.kind()) {
    case Kind::Top: return full_set(n);
    case Kind::Bottom: return empty_set(n);
    case Kind::Prop: {
      auto it = m.prop_val.find(f.name());
      if (it == m.prop_val.end())
        throw std::runtime_error("unbound proposition '" + f.name() + "'");
      return it->second;
    }
    case Kind::Nominal: {
      auto it = m.nom_val.find(f.name());
      if (it == m.nom_val.end()) throw std::runtime_error("unbound nominal '" + f.name() + "'");
      auto s = empty_set(n);
      s[it->second] = 1;
      return s;
    }
    case Kind::Not: {
      auto s = ext(m, f.lhs());
      for (char& c : s) c = !c;
      return s;
    }
    case Kind::And: {
      auto a = ext(m, f.lhs()), b = ext(m, f.rhs());
      for (int w = 0; w < n; ++w) a[w] = a[w] && b[w];
      return a;
    }
    case Kind::Or: {
      auto a = ext(m, f.lhs()), b = ext(m, f.rhs());
      for (int w = 0; w < n; ++w) a[w] = a[w] || b[w];
      return a;
    }
    case Kind::Implies: {
      auto a = ext(m, f.lhs()), b = ext(m, f.rhs());
      for (int w = 0; w < n; ++w) a[w] = !a[w] || b[w];
      return a;
    }
    case Kind::Iff: {
      auto a = ext(m, f.lhs()), b = ext(m, f.rhs());
      for (int w = 0; w < n; ++w) a[w] = a[w] == b[w];
      return a;
    }
    case Kind::DiamondB:
    case Kind::Conv: {
      auto a = ext(m, f.lhs());
      auto b = f.kind() == Kind::Conv ? a : ext(m, f.rhs());
      auto s = empty_set(n);
      for (int w = 0; w < n; ++w) {
        bool hit = false;
        for (int x = 0; x < n && !hit; ++x) {
          if (!a[x]) continue;
          for (int z = 0; z < n && !hit; ++z)
            if (b[z] && m.frame.b(x, w, z)) hit = true;
        }
        s[w] = hit;
      }
      return s;
    }
    case Kind::BoxB: {
      // ~<B>(~a, ~b)
      auto a = ext(m, f.lhs()), b = ext(m, f.rhs());
      auto s = full_set(n);
      for (int w = 0; w < n; ++w) {
        bool hit = false;
        for (int x = 0; x < n && !hit; ++x) {
          if (a[x]) continue;
          for (int z = 0; z < n && !hit; ++z)
            if (!b[z] && m.frame.b(x, w, z)) hit = true;
        }
        s[w] = !hit;
      }
      return s;
    }
    case Kind::At: {
      auto it = m.nom_val.find(f.name());
      if (it == m.nom_val.end()) throw std::runtime_error("unbound nominal '" + f.name() + "'");
      auto a = ext(m, f.lhs());
      return a[it->second] ? full_set(n) : empty_set(n);
    }
    case Kind::E: {
      auto a = ext(m, f.lhs());
      return nonempty(a) ? full_set(n) : empty_set(n);
    }
    case Kind::A: {
      auto a = ext(m, f.lhs());
      for (char c : a)
        if (!c) return empty_set(n);
      return full_set(n);
    }
  }
  throw std::logic_error("unreachable");
}

// Fast evaluator for frames with at most 64 worlds: extensions are bitmasks.
struct MaskEval {
  const Frame3& frame;
  int n;
  std::uint64_t full;
  std::vector<std::vector<std::pair<int, int>>> by_middle;  // (x,z) with B(x,w,z)
  std::map<std::string, std::uint64_t> props;
  std::map<std::string, int> noms;

  explicit MaskEval(const Frame3& f)
      : frame(f), n(f.n), full(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) {
    by_middle.resize(n);
    for (int w = 0; w < n; ++w)
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
          if (f.b(x, w, z)) by_middle[w].emplace_back(x, z);
  }

  std::uint64_t diamond(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = 0;
    for (int w = 0; w < n; ++w)
      for (auto& [x, z] : by_middle[w])
        if ((a >> x & 1) && (b >> z & 1)) {
          s |= std::uint64_t{1} << w;
          break;
        }
    return s;
  }

  std::uint64_t ext(const Formula& f) const {
    switch (f.kind()) {
      case Kind::Top: return full;
      case Kind::Bottom: return 0;
      case Kind::Prop: return props.at(f.name());
      case Kind::Nominal: return std::uint64_t{1} << noms.at(f.name());
      case Kind::Not: return full & ~ext(f.lhs());
      case Kind::And: return ext(f.lhs()) & ext(f.rhs());
      case Kind::Or: return ext(f.lhs()) | ext(f.rhs());
      case Kind::Implies: return (full & ~ext(f.lhs())) | ext(f.rhs());
      case Kind::Iff: return full & ~(ext(f.lhs()) ^ ext(f.rhs()));
      case Kind::DiamondB: return diamond(ext(f.lhs()), ext(f.rhs()));
      case Kind::Conv: {
        std::uint64_t a = ext(f.lhs());
        return diamond(a, a);
      }
      case Kind::BoxB: return full & ~diamond(full & ~ext(f.lhs()), full & ~ext(f.rhs()));
      case Kind::At: return (ext(f.lhs()) >> noms.at(f.name()) & 1) ? full : 0;
      case Kind::E: return ext(f.lhs()) ? full : 0;
      case Kind::A: return ext(f.lhs()) == full ? full : 0;
    }
    throw std::logic_error("unreachable");
  }
};

}  // namespace

std::vector<char> extension_finite(const FiniteModel& m, const Formula& f) {
  return ext(m, f);
}

bool eval_finite(const FiniteModel& m, const Formula& f, int world) {
  if (world < 0 || world >= m.frame.n) throw std::out_of_range("world out of range");
  return ext(m, f)[world] != 0;
}

ValidityReport frame_valid_finite(const Frame3& f, const Formula& phi, std::uint64_t budget) {
  if (f.n < 1) throw std::invalid_argument("frame validity needs a nonempty frame");
  if (f.n > 64) throw BudgetExceeded(~std::uint64_t{0}, budget);

  auto props = prop_names(phi);
  auto noms = nominal_names(phi);
  const int n = f.n;

  // Total world evaluations: n^(#nominals) * (2^n)^(#props) * n.
  unsigned __int128 needed = n;
  for (std::size_t i = 0; i < noms.size(); ++i) needed *= n;
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (static_cast<std::size_t>(n) * props.size() > 63) {
      needed = ~static_cast<unsigned __int128>(0);
      break;
    }
    needed *= std::uint64_t{1} << n;
  }
  if (needed > budget)
    throw BudgetExceeded(needed > ~std::uint64_t{0} ? ~std::uint64_t{0}
                                                    : static_cast<std::uint64_t>(needed),
                         budget);

  MaskEval ev(f);

  std::vector<int> nom_assign(noms.size(), 0);
  std::vector<std::uint64_t> prop_assign(props.size(), 0);

  auto make_countermodel = [&](int world) {
    ValidityReport r;
    r.holds = false;
    r.world = world;
    r.countermodel.frame = f;
    for (std::size_t i = 0; i < props.size(); ++i) {
      std::vector<char> s(n, 0);
      for (int w = 0; w < n; ++w) s[w] = (prop_assign[i] >> w) & 1;
      r.countermodel.prop_val[props[i]] = std::move(s);
    }
    for (std::size_t i = 0; i < noms.size(); ++i)
      r.countermodel.nom_val[noms[i]] = nom_assign[i];
    return r;
  };

  while (true) {
    ev.noms.clear();
    for (std::size_t i = 0; i < noms.size(); ++i) ev.noms[noms[i]] = nom_assign[i];

    while (true) {
      ev.props.clear();
      for (std::size_t i = 0; i < props.size(); ++i) ev.props[props[i]] = prop_assign[i];
      std::uint64_t mask = ev.ext(phi);
      if (mask != ev.full) {
        int world = 0;
        while ((mask >> world) & 1) ++world;
        return make_countermodel(world);
      }
      // advance the proposition odometer
      std::size_t i = 0;
      while (i < props.size()) {
        if (++prop_assign[i] <= ev.full) break;
        prop_assign[i] = 0;
        ++i;
      }
      if (i == props.size()) break;
    }

    std::size_t i = 0;
    while (i < noms.size()) {
      if (++nom_assign[i] < n) break;
      nom_assign[i] = 0;
      ++i;
    }
    if (i == noms.size()) break;
  }
  return ValidityReport{};
}

}  // namespace betw::fin
