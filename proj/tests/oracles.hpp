#pragma once

// Reference computations for the tests. They work from the raw PD text or
// from first principles and share no code with the library routines they
// are compared against.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Record = std::array<int, 4>;

inline std::vector<Record> records(const std::string& pd) {
  std::vector<Record> out;
  std::regex re(R"(X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  for (auto it = std::sregex_iterator(pd.begin(), pd.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  return out;
}

// Faces as cycles of the permutation "jump to the other end of the edge,
// then turn to the next slot". Zero-crossing loops are not seen.
struct Walk {
  std::vector<int> crossings;  // record indices, with repeats
  std::vector<int> edges;
};

inline std::vector<Walk> face_walks(const std::string& pd) {
  auto rec = records(pd);
  std::map<int, std::vector<std::pair<int, int>>> at;
  for (int c = 0; c < static_cast<int>(rec.size()); ++c)
    for (int s = 0; s < 4; ++s) at[rec[c][s]].push_back({c, s});
  std::set<std::pair<int, int>> seen;
  std::vector<Walk> out;
  for (int c = 0; c < static_cast<int>(rec.size()); ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen.count({c, s})) continue;
      out.emplace_back();
      std::pair<int, int> h{c, s};
      while (!seen.count(h)) {
        seen.insert(h);
        out.back().crossings.push_back(h.first);
        out.back().edges.push_back(rec[h.first][h.second]);
        const auto& v = at[rec[h.first][h.second]];
        auto p = v[0] == h ? v[1] : v[0];
        h = {p.first, (p.second + 1) % 4};
      }
    }
  return out;
}

// Twist number: crossings joined through bigon faces fall in one region.
inline int twist_number(const std::string& pd) {
  const int n = static_cast<int>(records(pd).size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : face_walks(pd))
    if (f.crossings.size() == 2) parent[find(f.crossings[0])] = find(f.crossings[1]);
  int t = 0;
  for (int i = 0; i < n; ++i) t += find(i) == i;
  return t;
}

inline int face_count(const std::string& pd) { return static_cast<int>(face_walks(pd).size()); }

// Edge ids on the boundary of bigon faces.
inline std::set<int> bigon_edges(const std::string& pd) {
  std::set<int> out;
  for (const auto& f : face_walks(pd))
    if (f.edges.size() == 2) out.insert(f.edges.begin(), f.edges.end());
  return out;
}

// A crossing met twice by one face is a cut vertex of the projection.
inline bool has_nugatory(const std::string& pd) {
  for (const auto& f : face_walks(pd)) {
    std::set<int> s(f.crossings.begin(), f.crossings.end());
    if (s.size() < f.crossings.size()) return true;
  }
  return false;
}


inline int edge_count(const std::string& pd) {
  std::set<int> e;
  for (const auto& r : records(pd)) e.insert(r.begin(), r.end());
  return static_cast<int>(e.size());
}

// Labels straight from the record layout: slots 0 and 2 are under, 1 and 3
// over. An edge is non-alternating when both of its ends carry one label.
inline std::set<int> non_alternating(const std::string& pd) {
  std::map<int, std::vector<int>> lab;
  for (const auto& r : records(pd))
    for (int s = 0; s < 4; ++s) lab[r[s]].push_back(s % 2);
  std::set<int> out;
  for (const auto& [e, l] : lab)
    if (l.size() == 2 && l[0] == l[1]) out.insert(e);
  return out;
}

// A bigon both of whose edges are non-alternating.
inline bool has_r2_bigon(const std::string& pd) {
  auto na = non_alternating(pd);
  for (const auto& f : face_walks(pd))
    if (f.edges.size() == 2 && na.count(f.edges[0]) && na.count(f.edges[1])) return true;
  return false;
}

// Every pair of edges whose removal disconnects the crossing graph into
// parts that both contain crossings.
inline std::vector<std::pair<int, int>> two_edge_cuts(const std::string& pd) {
  auto rec = records(pd);
  std::map<int, std::vector<int>> ends;
  for (int c = 0; c < static_cast<int>(rec.size()); ++c)
    for (int s = 0; s < 4; ++s) ends[rec[c][s]].push_back(c);
  std::vector<int> ids;
  for (const auto& [e, v] : ends) ids.push_back(e);
  const int n = static_cast<int>(rec.size());
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      std::vector<int> comp(n, -1);
      std::vector<int> stack{0};
      comp[0] = 0;
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (const auto& [e, v] : ends) {
          if (e == ids[i] || e == ids[j]) continue;
          if (v[0] == c && comp[v[1]] < 0) comp[v[1]] = 0, stack.push_back(v[1]);
          if (v[1] == c && comp[v[0]] < 0) comp[v[0]] = 0, stack.push_back(v[0]);
        }
      }
      int reached = 0;
      for (int x : comp) reached += x == 0;
      if (reached < n) out.push_back({ids[i], ids[j]});
    }
  return out;
}

// All-pairs distances by Floyd-Warshall on an adjacency list.
inline std::vector<std::vector<int>> distances(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j : adj[i]) d[i][j] = std::min(d[i][j], 1);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// -3 * integral_0^{pi/3} ln(2 sin t) dt. The log singularity at 0 is split
// off as ln t, integrated exactly; the smooth rest goes to composite
// Simpson.
inline double v3_quadrature() {
  using L = long double;
  const L a = std::numbers::pi_v<L> / 3;
  auto smooth = [](L t) { return t == 0 ? std::log(L(2)) : std::log(2 * std::sin(t) / t); };
  const int n = 20000;
  const L h = a / n;
  L s = smooth(0) + smooth(a);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4 : 2) * smooth(k * h);
  L integral = s * h / 3 + (a * std::log(a) - a);
  return static_cast<double>(-3 * integral);
}

// 4G from G = pi/8 ln(2 + sqrt 3) + 3/8 sum 1 / ((2n+1)^2 binom(2n, n)).
inline double four_catalan_series() {
  using L = long double;
  L sum = 0, binom = 1;
  for (int n = 0; n < 60; ++n) {
    if (n > 0) binom = binom * (2 * n) * (2 * n - 1) / (L(n) * n);
    sum += 1 / ((2 * n + 1) * L(2 * n + 1) * binom);
  }
  L g = std::numbers::pi_v<L> / 8 * std::log(2 + std::sqrt(L(3))) + L(3) / 8 * sum;
  return static_cast<double>(4 * g);
}

}  // namespace oracle
