#pragma once

#include <utility>
#include <vector>

namespace vmge {

struct LatticeGraph {
  int n_sites = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, no duplicates

  // Uniform nearest-neighbor count; throws for irregular graphs.
  int coordination_number() const;

  void validate() const;
};

// Periodic chain i -- (i+1 mod n); n >= 3 so no edge is duplicated.
LatticeGraph ring_lattice(int n);

// rows x cols grid with right/down neighbors; periodic wraps both
// directions and requires rows, cols >= 3.
LatticeGraph square_lattice(int rows, int cols, bool periodic);

}  // namespace vmge
