#include "nonrat/config.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace nonrat {

void AbstractConfiguration::validate() const {
  for (const auto& line : lines) {
    if (line.size() < 3) throw std::invalid_argument("configuration: line with fewer than 3 points");
    std::set<int> s(line.begin(), line.end());
    if (s.size() != line.size()) throw std::invalid_argument("configuration: repeated point on a line");
    for (int p : line)
      if (p < 1 || p > n) throw std::invalid_argument("configuration: point index out of range");
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::set<int> a(lines[i].begin(), lines[i].end());
      int common = 0;
      for (int p : lines[j]) common += a.count(p);
      if (common > 1) throw std::invalid_argument("configuration: two lines share more than one point");
    }
}

std::vector<std::array<int, 3>> AbstractConfiguration::prescribed_triples() const {
  std::set<std::array<int, 3>> out;
  for (const auto& line : lines) {
    std::vector<int> s(line.begin(), line.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        for (std::size_t k = j + 1; k < s.size(); ++k) out.insert({s[i], s[j], s[k]});
  }
  return {out.begin(), out.end()};
}

bool AbstractConfiguration::triple_prescribed(int i, int j, int k) const {
  for (const auto& line : lines) {
    int hit = 0;
    for (int p : line) hit += (p == i || p == j || p == k);
    if (hit == 3) return true;
  }
  return false;
}

AbstractConfiguration pentagon11() {
  AbstractConfiguration c;
  c.n = 11;
  // Five diagonals (four points) and five symmetry lines through the centre
  // p4 (three points), with the labeling of the derivation script.
  c.lines = {
      {3, 9, 10, 11},  // x-axis of the script frame
      {1, 2, 7, 11},   // y-axis
      {1, 3, 6, 8},
      {2, 5, 8, 9},
      {5, 6, 7, 10},
      {1, 4, 9},
      {2, 4, 10},
      {4, 7, 8},
      {3, 4, 5},
      {4, 6, 11},
  };
  c.labels = {"p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "p10", "p11"};
  c.validate();
  return c;
}

AbstractConfiguration pentagon9() {
  AbstractConfiguration full = pentagon11();
  // delete p6 and p11, renumber 7..10 -> 6..9
  auto remap = [](int p) -> int {
    if (p == 6 || p == 11) return 0;
    return p < 6 ? p : p - 1;
  };
  AbstractConfiguration c;
  c.n = 9;
  for (const auto& line : full.lines) {
    std::vector<int> out;
    for (int p : line)
      if (int q = remap(p)) out.push_back(q);
    if (out.size() >= 3) c.lines.push_back(out);
  }
  c.labels = {"p1", "p2", "p3", "p4", "p5", "p7", "p8", "p9", "p10"};
  c.validate();
  return c;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "collinearity failures: " << collinearity_failures.size()
     << ", collapses: " << collapse_failures.size()
     << ", coincidences: " << coincidence_failures.size()
     << ", stability failures: " << stability_failures.size();
  return os.str();
}

namespace {
std::string var(const char* base, int i) { return std::string(base) + std::to_string(i); }

// "(x_j - x_i)" with pinned coordinates substituted as numbers
std::string diff(int j, int i, const char* base, const std::array<int, 3>& pins,
                 const std::array<std::pair<int, int>, 3>& coords, int which) {
  auto term = [&](int p) -> std::string {
    for (int t = 0; t < 3; ++t)
      if (pins[t] == p) {
        int v = which == 0 ? coords[t].first : coords[t].second;
        return std::to_string(v);
      }
    return var(base, p);
  };
  return "(" + term(j) + " - " + term(i) + ")";
}
}  // namespace

RealizationSystem emit_realization_system(const AbstractConfiguration& c) {
  RealizationSystem sys;
  // pin the first (lexicographic) non-prescribed-collinear triple
  std::array<int, 3> pins = {1, 2, 3};
  bool found = false;
  for (int i = 1; i <= c.n && !found; ++i)
    for (int j = i + 1; j <= c.n && !found; ++j)
      for (int k = j + 1; k <= c.n && !found; ++k)
        if (!c.triple_prescribed(i, j, k)) {
          pins = {i, j, k};
          found = true;
        }
  const std::array<std::pair<int, int>, 3> pin_coords = {{{0, 0}, {1, 0}, {0, 1}}};
  std::ostringstream os;
  os << "# realization space of a " << c.n << "-point configuration\n";
  os << "# affine variables x<i>, y<i> for each point i = 1.." << c.n << "\n";
  if (found)
    os << "# pinned affine basis: p" << pins[0] << " = (0,0), p" << pins[1] << " = (1,0), p"
       << pins[2] << " = (0,1)\n";
  else
    os << "# no non-collinear triple to pin (all triples prescribed)\n";
  os << "# det(i,j,k) := (xj - xi)*(yk - yi) - (xk - xi)*(yj - yi)\n";
  auto det_str = [&](int i, int j, int k) {
    std::array<int, 3> p = found ? pins : std::array<int, 3>{0, 0, 0};
    return diff(j, i, "x", p, pin_coords, 0) + "*" + diff(k, i, "y", p, pin_coords, 1) + " - " +
           diff(k, i, "x", p, pin_coords, 0) + "*" + diff(j, i, "y", p, pin_coords, 1);
  };
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j)
      for (int k = j + 1; k <= c.n; ++k) {
        if (c.triple_prescribed(i, j, k)) {
          ++sys.equations;
          os << "eq: " << det_str(i, j, k) << " = 0\n";
        } else {
          ++sys.inequalities;
          os << "ineq: (" << det_str(i, j, k) << ")^2 > 0\n";
        }
      }
  sys.text = os.str();
  return sys;
}

}  // namespace nonrat
