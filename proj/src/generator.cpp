#include "altknot/generator.hpp"

#include <map>
#include <random>

#include "altknot/analysis.hpp"
#include "altknot/error.hpp"
#include "altknot/reduction.hpp"

namespace altknot {

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw precondition_error("BadBraid", "a braid needs at least one strand");
  std::vector<int> cur(strands);
  for (int k = 0; k < strands; ++k) cur[k] = k + 1;
  int next_label = strands + 1;
  std::vector<std::array<int, 4>> records;
  for (int letter : word) {
    int i = (letter < 0 ? -letter : letter) - 1;
    if (letter == 0 || i + 1 >= strands) throw precondition_error("BadBraid", "letter " + std::to_string(letter) + " out of range");
    // Strands run upward; the crossing's neighbours counterclockwise are
    // bottom-left, bottom-right, top-right, top-left.
    int sw = cur[i], se = cur[i + 1], ne = next_label++, nw = next_label++;
    if (letter > 0) records.push_back({sw, se, ne, nw});  // bottom-left strand passes under
    else records.push_back({se, ne, nw, sw});
    cur[i] = nw;
    cur[i + 1] = ne;
  }
  // Closing arcs identify the top label of each position with its bottom label.
  std::map<int, int> rename;
  for (int k = 0; k < strands; ++k) rename[cur[k]] = k + 1;
  std::map<int, int> compact;
  std::string pd;
  auto label = [&](int x) {
    auto it = rename.find(x);
    int y = it == rename.end() ? x : it->second;
    return compact.emplace(y, static_cast<int>(compact.size()) + 1).first->second;
  };
  for (const auto& r : records) {
    pd += "X(";
    for (int s = 0; s < 4; ++s) pd += (s ? "," : "") + std::to_string(label(r[s]));
    pd += ") ";
  }
  for (int k = 0; k < strands; ++k)
    if (cur[k] == k + 1) pd += "O(" + std::to_string(label(k + 1)) + ") ";
  return parse_pd(pd);
}

GeneratedDiagram generate_random_diagram(std::uint64_t seed, int n_letters, int flips) {
  if (n_letters < 1) throw precondition_error("BadBraid", "need at least one letter");
  std::mt19937_64 rng(seed);
  auto below = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    GeneratedDiagram g;
    g.attempts = attempt;
    g.strands = 3 + below(3);
    for (int k = 0; k < n_letters; ++k) {
      int i = 1 + below(g.strands - 1);
      g.word.push_back(below(2) ? i : -i);
    }
    Diagram d = braid_closure(g.strands, g.word);
    if (d.num_components() != 1 || !d.loops().empty()) continue;
    for (int k = 0; k < flips; ++k) {
      int id = d.crossing(below(static_cast<int>(d.num_crossings()))).id;
      g.flipped.push_back(id);
      d = flip_crossing(d, id);
    }
    d = preprocess(d).diagram;
    if (d.num_crossings() == 0 || !d.loops().empty()) continue;
    DiagramFlags fl = diagram_flags(d);
    if (!fl.connected || !fl.prime || !fl.reduced || !fl.r2_reduced) continue;
    if (!classify_edges(d).is_non_alternating) continue;
    g.diagram = std::move(d);
    return g;
  }
  throw precondition_error("RetryExhausted", "no suitable diagram in 1000 draws");
}

}  // namespace altknot
