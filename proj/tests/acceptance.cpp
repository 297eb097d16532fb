// Acceptance gate: one criterion per invocation, selected by argv[1] (1-9).
// Prints exactly one line "criterion N: pass" or "criterion N: FAIL (...)".
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "betw/builtins.hpp"
#include "betw/counterexamples.hpp"
#include "betw/dense_model.hpp"
#include "betw/frame_axioms.hpp"
#include "betw/frame_eval.hpp"
#include "betw/frame_ops.hpp"
#include "betw/parser.hpp"
#include "betw/proof.hpp"
#include "betw/translate.hpp"

using namespace betw;
using namespace betw::fin;
using namespace betw::dense;

namespace {

std::string g_fail;  // first failure description, empty while passing

bool require(bool ok, const std::string& what) {
  if (!ok && g_fail.empty()) g_fail = what;
  return ok;
}

Surd q(long num, long den = 1) { return Surd::rational(num, den); }

// ---------------------------------------------------------------- randomness

// A representable random set over the carrier: 0-3 components with endpoints
// on the half-integer lattice in [-8, 8]; on R an endpoint may be shifted by
// sqrt 2 to exercise irrational cuts.
LinearSet rand_set(std::mt19937_64& eng, const Carrier& c) {
  auto rand_val = [&]() -> Surd {
    long m = static_cast<long>(eng() % 33) - 16;
    Surd v = c.base == Base::Z ? q(m / 2) : q(m, 2);
    if (c.base == Base::R && eng() % 4 == 0) v = v + Surd(0, 1, 2);
    return v;
  };
  std::vector<Component> raw;
  int n = static_cast<int>(eng() % 4);
  for (int i = 0; i < n; ++i) {
    Surd a = rand_val();
    switch (eng() % 4) {
      case 0:
        if (c.member(a)) raw.push_back(Component::pt(a));
        break;
      case 1: {
        Surd b = rand_val();
        if (a < b) raw.push_back(Component::open(Endpoint::fin(a), Endpoint::fin(b)));
        break;
      }
      case 2:
        raw.push_back(Component::open(Endpoint::neg_inf(), Endpoint::fin(a)));
        break;
      default:
        raw.push_back(Component::open(Endpoint::fin(a), Endpoint::pos_inf()));
        break;
    }
  }
  return canonicalize(std::move(raw), c);
}

Surd rand_point(std::mt19937_64& eng, const Carrier& c) {
  long m = static_cast<long>(eng() % 33) - 16;
  Surd v = c.base == Base::Z ? q(m / 2) : q(m, 2);
  if (!c.member(v)) v = q(0);
  return v;
}

// Seeded formula over props p,q and nominal i, depth-bounded.
Formula rand_formula(std::mt19937_64& eng, int depth) {
  if (depth <= 0) {
    switch (eng() % 4) {
      case 0: return Formula::prop("p");
      case 1: return Formula::prop("q");
      case 2: return Formula::nominal("i");
      default: return Formula::top();
    }
  }
  switch (eng() % 10) {
    case 0: return Formula::negation(rand_formula(eng, depth - 1));
    case 1: return Formula::conj(rand_formula(eng, depth - 1), rand_formula(eng, depth - 1));
    case 2: return Formula::disj(rand_formula(eng, depth - 1), rand_formula(eng, depth - 1));
    case 3: return Formula::implies(rand_formula(eng, depth - 1), rand_formula(eng, depth - 1));
    case 4: return Formula::diamond_b(rand_formula(eng, depth - 1), rand_formula(eng, depth - 1));
    case 5: return Formula::box_b(rand_formula(eng, depth - 1), rand_formula(eng, depth - 1));
    case 6: return Formula::conv(rand_formula(eng, depth - 1));
    case 7: return Formula::at("i", rand_formula(eng, depth - 1));
    case 8: return Formula::exists(rand_formula(eng, depth - 1));
    default: return Formula::always(rand_formula(eng, depth - 1));
  }
}

DenseModel rand_model(std::mt19937_64& eng, const Carrier& c, const Formula& f) {
  DenseModel m;
  m.carrier = c;
  for (const auto& p : prop_names(f)) m.prop_val[p] = rand_set(eng, c);
  for (const auto& i : nominal_names(f)) m.nom_val[i] = rand_point(eng, c);
  return m;
}

// ---------------------------------------------------------------- criteria

bool criterion1() {
  for (const std::string name : {"B1", "B3", "B5"}) {
    CounterexampleBundle b = counterexample(name);
    auto v = verify_counterexample(b);
    if (!require(v.holds, name + " bundle: " + v.detail)) return false;
    auto mr = check_bounded_morphism(b.morphism, b.back_exempt);
    require(mr.forth.holds && mr.back.holds, name + " morphism conditions");
    require(check_axiom(b.morphism.source, b.axiom).holds, name + " source axiom");
    require(!check_axiom(b.morphism.target, b.axiom).holds, name + " target must violate");
  }
  {
    CounterexampleBundle b = counterexample("B4", 20);
    auto v = verify_counterexample(b);
    require(v.holds, "B4 bundle: " + v.detail);
    require(check_bounded_morphism(b.morphism, b.back_exempt).forth.holds, "B4 forth");
    auto failures = back_failure_set(b.morphism);
    require(failures.size() == 1 && failures == b.back_exempt,
            "B4 back must fail exactly at the declared boundary world");
    require(!check_axiom(b.morphism.target, "B4").holds, "B4 target must violate");
  }
  {
    CounterexampleBundle b = counterexample("B6");
    auto v = verify_counterexample(b);
    require(v.holds, "B6 bundle: " + v.detail);
    require(check_axiom(b.part, "B6x").holds, "B6 component must satisfy linearity");
    auto r = check_axiom(b.whole, "B6x");
    require(!r.holds && r.witness.size() == 3, "B6 union needs a triple witness");
    if (r.witness.size() == 3) {
      int lo = *std::min_element(r.witness.begin(), r.witness.end());
      int hi = *std::max_element(r.witness.begin(), r.witness.end());
      require(lo < b.part.n && hi >= b.part.n, "B6 witness must mix both copies");
    }
  }
  {
    CounterexampleBundle b = counterexample("B8");
    auto v = verify_counterexample(b);
    require(v.holds, "B8 bundle: " + v.detail);
    Carrier unit = Carrier::bounded(Base::Q, q(0), q(1), true, true);
    LinearSet img = between_image(full_set(unit), full_set(unit), unit);
    LinearSet open01 =
        canonicalize({Component::open(Endpoint::fin(q(0)), Endpoint::fin(q(1)))}, unit);
    require(img == open01, "between_image on the closed unit interval must be (0,1)");
    require(b.sub.n == 2 && !check_axiom(b.sub, "B8").holds,
            "two-point subframe must violate density");
  }
  return g_fail.empty();
}

bool criterion2() {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"HB1", "B1"}, {"HB2", "B2"}, {"HB2m", "B2"}, {"HB3", "B3"},
      {"HB4", "B4"}, {"HB5", "B5"}, {"HB6", "B6"},  {"HB7", "B7"}};
  std::vector<Formula> hb;
  for (const auto& [h, unused] : pairs) hb.push_back(builtin(h));

  auto scan = [&](const Frame3& f, const std::string& where) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      bool modal = frame_valid_finite(f, hb[k]).holds;
      bool fo = check_axiom(f, pairs[k].second).holds;
      if (modal != fo) {
        std::string triples;
        for (const auto& t : f.triples())
          triples += " (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                     std::to_string(t[2]) + ")";
        require(false, pairs[k].first + " and " + pairs[k].second + " disagree on a " + where +
                           " frame with triples" + triples);
        return false;
      }
    }
    return true;
  };

  for (int mask = 0; mask < 256; ++mask) {
    Frame3 f(2);
    for (int t = 0; t < 8; ++t)
      if (mask & (1 << t)) f.add((t >> 2) & 1, (t >> 1) & 1, t & 1);
    if (!scan(f, "two-world")) return false;
  }
  for (int n : {3, 4}) {
    for (std::uint64_t s = 0; s < 5000; ++s) {
      Frame3 f = random_frame(n, 1 + s % 3, 4, 7000 + s * 13 + n);
      if (!scan(f, "seeded")) return false;
    }
  }
  return g_fail.empty();
}

bool criterion3() {
  for (const Carrier& c : {Carrier::Q(), Carrier::Z()}) {
    for (std::uint64_t fs = 0; fs < 50; ++fs) {
      std::mt19937_64 feng(100 + fs);
      Formula phi = rand_formula(feng, 3);
      Formula law = e_elimination(phi);
      for (std::uint64_t vs = 0; vs < 100; ++vs) {
        std::mt19937_64 veng(fs * 1000 + vs);
        DenseModel m = rand_model(veng, c, law);
        auto rep = holds_everywhere(m, law);
        if (!require(rep.holds, "E-elimination fails on " + c.str() + " for " + phi.str() +
                                    " at " + rep.witness->str()))
          return false;
      }
    }
  }
  return true;
}

bool criterion4() {
  Formula density = builtin("densityTest");
  for (std::uint64_t s = 0; s < 1000; ++s) {
    std::mt19937_64 eng(4000 + s);
    DenseModel m = rand_model(eng, Carrier::Q(), density);
    auto rep = holds_everywhere(m, density);
    if (!require(rep.holds, "density law fails on Q with V(p)=" + m.prop_val["p"].str()))
      return false;
  }
  auto search = search_countermodel(Carrier::Z(), density, 100, 11);
  require(search.found, "no Z countermodel to the density law within 100 trials");

  DenseModel two;
  two.carrier = Carrier::Z();
  two.prop_val["p"] = canonicalize({Component::pt(q(0)), Component::pt(q(2))}, two.carrier);
  auto rep = holds_everywhere(two, density);
  require(!rep.holds && rep.witness && *rep.witness == q(1),
          "V(p)={0,2} must fail the density law exactly at 1");
  return g_fail.empty();
}

bool criterion5() {
  Carrier W = Carrier::bounded(Base::Z, q(-8), q(8), true, true);
  auto w_set = [&](std::mt19937_64& eng) {
    std::vector<Component> raw;
    int n = static_cast<int>(eng() % 4);
    for (int i = 0; i < n; ++i) {
      long a = static_cast<long>(eng() % 17) - 8;
      long b = static_cast<long>(eng() % 17) - 8;
      if (eng() % 2)
        raw.push_back(Component::pt(q(a)));
      else if (a < b)
        raw.push_back(Component::open(Endpoint::fin(q(a)), Endpoint::fin(q(b))));
    }
    return canonicalize(std::move(raw), W);
  };

  for (std::uint64_t s = 0; s < 10000; ++s) {
    std::mt19937_64 eng(50000 + s);
    Formula f = rand_formula(eng, 3);
    DenseModel m;
    m.carrier = W;
    for (const auto& p : prop_names(f)) m.prop_val[p] = w_set(eng);
    for (const auto& i : nominal_names(f))
      m.nom_val[i] = q(static_cast<long>(eng() % 17) - 8);
    if (!require(extension(m, f) == brute_force_extension(m, f),
                 "symbolic and brute-force extensions disagree for " + f.str()))
      return false;
  }

  for (std::uint64_t s = 0; s < 10000; ++s) {
    std::mt19937_64 eng(90000 + s);
    LinearSet x = w_set(eng), y = w_set(eng);
    LinearSet fast = between_image(x, y, W);
    bool xin[17], yin[17];
    for (long v = -8; v <= 8; ++v) {
      xin[v + 8] = x.contains(q(v), W);
      yin[v + 8] = y.contains(q(v), W);
    }
    std::vector<Component> pts;
    for (long w = -8; w <= 8; ++w) {
      bool expect = false;
      for (long xa = -8; xa <= 8 && !expect; ++xa)
        for (long yb = -8; yb <= 8 && !expect; ++yb)
          if (xin[xa + 8] && yin[yb + 8] && ((xa < w && w < yb) || (yb < w && w < xa)))
            expect = true;
      if (expect) pts.push_back(Component::pt(q(w)));
    }
    if (!require(fast == canonicalize(std::move(pts), W),
                 "between_image closed form disagrees with pairwise enumeration at seed " +
                     std::to_string(s)))
      return false;
  }
  return true;
}

bool criterion6() {
  Formula d = builtin("D");
  DenseModel cut;
  cut.prop_val["p"] =
      canonicalize({Component::open(Endpoint::neg_inf(), Endpoint::fin(Surd(0, 1, 2)))},
                   Carrier::Q());
  cut.prop_val["q"] =
      canonicalize({Component::open(Endpoint::fin(Surd(0, 1, 2)), Endpoint::pos_inf())},
                   Carrier::Q());
  cut.carrier = Carrier::Q();
  require(extension(cut, d).empty(), "D must be empty on the rational sqrt-2 cut");
  cut.carrier = Carrier::R();
  require(extension(cut, d) == full_set(Carrier::R()), "D must fill R on the sqrt-2 cut");

  for (std::uint64_t s = 0; s < 1000; ++s) {
    std::mt19937_64 eng(60000 + s);
    DenseModel m = rand_model(eng, Carrier::R(), d);
    auto rep = holds_everywhere(m, d);
    if (!require(rep.holds, "D fails on R with V(p)=" + m.prop_val["p"].str() +
                                ", V(q)=" + m.prop_val["q"].str()))
      return false;
  }
  return g_fail.empty();
}

bool criterion7() {
  using namespace betw::proof;
  auto load = [](const char* path, Logic logic) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error(std::string("cannot open ") + path);
    return parse_derivation(in, logic);
  };
  auto bridge = check_derivation(load("proofs/bridge.bh", Logic::Bh));
  require(bridge.ok, "bridge derivation rejected: " + bridge.message);

  auto bad_name = check_derivation(load("proofs/bad_name.bh", Logic::Bh));
  require(!bad_name.ok && bad_name.message.find("Name") != std::string::npos &&
              bad_name.message.find("occurs") != std::string::npos,
          "Name violation must be rejected with the occurs diagnostic");
  auto bad_paste = check_derivation(load("proofs/bad_paste.bh", Logic::Bh));
  require(!bad_paste.ok && bad_paste.message.find("Paste") != std::string::npos &&
              bad_paste.message.find("occurs") != std::string::npos,
          "Paste violation must be rejected with the freshness diagnostic");

  for (const auto& s : axiom_schemas(Logic::Bh)) {
    auto r = soundness_probe(s.name, Logic::Bh, "Q", 300, 3);
    if (!require(r.ok, "probe found a counterexample to " + s.name + ": " + r.counterexample))
      return false;
  }
  auto d_r = soundness_probe("D", Logic::BhPlus, "R", 300, 3);
  require(d_r.ok, "probe found a counterexample to D on R: " + d_r.counterexample);
  auto d_q = soundness_probe("D", Logic::BhPlus, "Q", 300, 3);
  require(!d_q.ok && d_q.counterexample.find("sqrt 2") != std::string::npos,
          "probe must report the sqrt-2 counterexample to D on Q");
  return g_fail.empty();
}

bool criterion8() {
  // every linear order on up to 7 labeled points, as a permutation of a chain
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      OrderFrame o(n);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) o.add(perm[a], perm[b]);
      Frame3 f = order_to_betweenness(o);
      for (const std::string ax : {"B4p", "B5p", "proj", "dsound", "cc"}) {
        auto r = check_axiom(f, ax);
        if (!require(r.holds, ax + " fails on a linear order of size " + std::to_string(n)))
          return false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // distinct points on an endpoint-free carrier have witnesses on both sides
  for (const Carrier& c : {Carrier::Q(), Carrier::Z()}) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      std::mt19937_64 eng(80000 + s);
      Surd x = rand_point(eng, c), w = rand_point(eng, c);
      if (x == w) w = w + q(1);
      LinearSet xs = canonicalize({Component::pt(x)}, c);
      LinearSet ws = canonicalize({Component::pt(w)}, c);
      bool beyond = between_image(xs, full_set(c), c).contains(w, c);
      bool before = between_image(full_set(c), ws, c).contains(x, c);
      if (!require(beyond && before, "side witnesses missing for x=" + x.str() +
                                         ", w=" + w.str() + " on " + c.str()))
        return false;
    }
  }
  return true;
}

bool criterion9() {
  std::uint64_t done = 0;
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t s = 0; s < 250; ++s) {
      Frame3 f = random_frame(n, 1 + s % 3, 4, 90000 + s * 31 + n);
      auto res = ultrafilter_extension_finite(f);
      if (!require(res.iso.holds && res.ue == f,
                   "ultrafilter extension not isomorphic for a frame of size " +
                       std::to_string(n)))
        return false;
      ++done;
    }
  }
  return require(done >= 1000, "sample count below 1000");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <criterion 1-9>\n");
    return 2;
  }
  int which = std::atoi(argv[1]);
  bool ok = false;
  try {
    switch (which) {
      case 1: ok = criterion1(); break;
      case 2: ok = criterion2(); break;
      case 3: ok = criterion3(); break;
      case 4: ok = criterion4(); break;
      case 5: ok = criterion5(); break;
      case 6: ok = criterion6(); break;
      case 7: ok = criterion7(); break;
      case 8: ok = criterion8(); break;
      case 9: ok = criterion9(); break;
      default:
        std::fprintf(stderr, "usage: acceptance <criterion 1-9>\n");
        return 2;
    }
  } catch (const std::exception& e) {
    ok = false;
    if (g_fail.empty()) g_fail = std::string("exception: ") + e.what();
  }
  if (ok)
    std::printf("criterion %d: pass\n", which);
  else
    std::printf("criterion %d: FAIL (%s)\n", which, g_fail.c_str());
  return ok ? 0 : 1;
}
