#pragma once

// Random test diagrams from closed braids.

#include <cstdint>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

// Letters are +i / -i for the generator sigma_i (1 <= i < strands). Strands
// that no letter touches close up into crossing-free loops.
Diagram braid_closure(int strands, const std::vector<int>& word);

struct GeneratedDiagram {
  Diagram diagram;
  int strands = 0;
  std::vector<int> word;
  std::vector<int> flipped;  // crossing ids of the closure flipped before reduction
  int attempts = 0;
};

// Draws braid words on 3-5 strands until the closure is a knot which, after
// `flips` random crossing flips and preprocess, is connected, prime, reduced,
// R2-reduced and non-alternating. Throws RetryExhausted after 1000 draws.
GeneratedDiagram generate_random_diagram(std::uint64_t seed, int n_letters, int flips);

}  // namespace altknot
