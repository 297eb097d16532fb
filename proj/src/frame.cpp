#include "betw/frame.hpp"

#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "betw/formula.hpp"

namespace betw::fin {

std::vector<std::array<int, 3>> Frame3::triples() const {
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (b(x, y, z)) out.push_back({x, y, z});
  return out;
}

std::size_t Frame3::triple_count() const {
  std::size_t c = 0;
  for (char v : has) c += v != 0;
  return c;
}

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

// Strips comments and yields non-empty lines with their numbers.
std::vector<std::pair<int, std::string>> logical_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string w;
    if (probe >> w) out.emplace_back(no, line);
  }
  return out;
}

int parse_world(std::istringstream& ss, int n, int lineno) {
  int w;
  if (!(ss >> w)) bad_line(lineno, "expected a world number");
  if (w < 0 || w >= n) bad_line(lineno, "world " + std::to_string(w) + " out of range");
  return w;
}

}  // namespace

Frame3 parse_frame(std::istream& in) {
  auto lines = logical_lines(in);
  Frame3 f;
  bool have_worlds = false;
  for (auto& [no, text] : lines) {
    std::istringstream ss(text);
    std::string head;
    ss >> head;
    if (head == "worlds") {
      int n;
      if (!(ss >> n) || n < 0) bad_line(no, "expected a world count");
      f = Frame3(n);
      have_worlds = true;
    } else if (head == "B") {
      if (!have_worlds) bad_line(no, "'worlds N' must come before relation lines");
      int x = parse_world(ss, f.n, no), y = parse_world(ss, f.n, no), z = parse_world(ss, f.n, no);
      f.add(x, y, z);
    } else {
      bad_line(no, "unknown directive '" + head + "'");
    }
  }
  if (!have_worlds) throw std::runtime_error("frame file has no 'worlds N' line");
  return f;
}

FiniteModel parse_model(std::istream& in) {
  auto lines = logical_lines(in);
  FiniteModel m;
  bool have_worlds = false;
  for (auto& [no, text] : lines) {
    std::istringstream ss(text);
    std::string head;
    ss >> head;
    if (head == "worlds") {
      int n;
      if (!(ss >> n) || n < 0) bad_line(no, "expected a world count");
      m.frame = Frame3(n);
      have_worlds = true;
    } else if (head == "B") {
      if (!have_worlds) bad_line(no, "'worlds N' must come before relation lines");
      int x = parse_world(ss, m.frame.n, no), y = parse_world(ss, m.frame.n, no),
          z = parse_world(ss, m.frame.n, no);
      m.frame.add(x, y, z);
    } else if (head == "V") {
      if (!have_worlds) bad_line(no, "'worlds N' must come before valuation lines");
      std::string sym;
      ss >> sym;
      if (sym.empty() || sym.back() != ':') bad_line(no, "expected 'V name: worlds...'");
      sym.pop_back();
      if (is_prop_name(sym)) {
        std::vector<char> set(m.frame.n, 0);
        int w;
        while (ss >> w) {
          if (w < 0 || w >= m.frame.n) bad_line(no, "world out of range");
          set[w] = 1;
        }
        m.prop_val[sym] = std::move(set);
      } else if (is_nominal_name(sym)) {
        m.nom_val[sym] = parse_world(ss, m.frame.n, no);
      } else {
        bad_line(no, "'" + sym + "' is neither a proposition nor a nominal");
      }
    } else {
      bad_line(no, "unknown directive '" + head + "'");
    }
  }
  if (!have_worlds) throw std::runtime_error("model file has no 'worlds N' line");
  return m;
}

std::string frame_to_text(const Frame3& f) {
  std::ostringstream out;
  out << "worlds " << f.n << "\n";
  for (auto& t : f.triples()) out << "B " << t[0] << " " << t[1] << " " << t[2] << "\n";
  return out.str();
}

Frame3 random_frame(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_frame: need n >= 1");
  if (den == 0 || num > den) throw std::invalid_argument("random_frame: density must be in [0,1]");
  std::mt19937_64 gen(seed);
  Frame3 f(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (gen() % den < num) f.add(x, y, z);
  return f;
}

}  // namespace betw::fin
