#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace betw::fin {

// Explicit finite frame with one ternary relation; B(x,y,z) reads "y lies
// between x and z" (the middle coordinate is the second one).
struct Frame3 {
  int n = 0;
  std::vector<char> has;  // n^3 occupancy, index (x*n + y)*n + z

  Frame3() = default;
  explicit Frame3(int worlds) : n(worlds), has(static_cast<std::size_t>(worlds) * worlds * worlds, 0) {}

  bool b(int x, int y, int z) const {
    return has[(static_cast<std::size_t>(x) * n + y) * n + z] != 0;
  }
  void add(int x, int y, int z) {
    has[(static_cast<std::size_t>(x) * n + y) * n + z] = 1;
  }
  std::vector<std::array<int, 3>> triples() const;  // lexicographically sorted
  std::size_t triple_count() const;
  bool operator==(const Frame3& o) const { return n == o.n && has == o.has; }
};

// Strict-order frame; pairs (x, y) mean x < y.  No axioms are imposed at
// construction; L1-L5 are separate queries.
struct OrderFrame {
  int n = 0;
  std::vector<char> lt;  // n^2 occupancy

  OrderFrame() = default;
  explicit OrderFrame(int worlds) : n(worlds), lt(static_cast<std::size_t>(worlds) * worlds, 0) {}

  bool less(int x, int y) const { return lt[static_cast<std::size_t>(x) * n + y] != 0; }
  void add(int x, int y) { lt[static_cast<std::size_t>(x) * n + y] = 1; }
  bool operator==(const OrderFrame& o) const { return n == o.n && lt == o.lt; }
};

struct FiniteModel {
  Frame3 frame;
  std::map<std::string, std::vector<char>> prop_val;  // world membership flags
  std::map<std::string, int> nom_val;                 // single world
};

struct CheckReport {
  bool holds = true;
  std::vector<int> witness;  // counterexample assignment to the axiom's variables
  std::string detail;
};

// --- text formats -----------------------------------------------------------
// Frame file: "worlds N" then lines "B x y z"; model file adds "V p: w1 w2 .."
// and "V i: w"; '#' starts a comment; order of lines is irrelevant.
Frame3 parse_frame(std::istream& in);
FiniteModel parse_model(std::istream& in);
std::string frame_to_text(const Frame3& f);

// Deterministic frame sampler: every triple is included independently with
// probability num/den.
Frame3 random_frame(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

}  // namespace betw::fin
