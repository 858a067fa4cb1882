#include "vmge/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace vmge {

void LatticeGraph::validate() const {
  if (n_sites < 1) throw std::invalid_argument("lattice: n_sites < 1");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i == j) throw std::invalid_argument("lattice: self-edge");
    if (i < 0 || j < 0 || i >= n_sites || j >= n_sites) {
      throw std::invalid_argument("lattice: edge index out of range");
    }
    auto key = std::minmax(i, j);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("lattice: duplicate edge (" +
                                  std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
  }
}

int LatticeGraph::coordination_number() const {
  std::vector<int> deg(n_sites, 0);
  for (auto [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  for (int d : deg) {
    if (d != deg[0]) {
      throw std::invalid_argument("lattice: coordination number is not "
                                  "uniform");
    }
  }
  return n_sites ? deg[0] : 0;
}

LatticeGraph ring_lattice(int n) {
  if (n < 3) {
    throw std::invalid_argument("ring_lattice: periodic ring needs n >= 3");
  }
  LatticeGraph g;
  g.n_sites = n;
  g.edges.reserve(n);
  for (int i = 0; i < n; ++i) g.edges.emplace_back(i, (i + 1) % n);
  return g;
}

LatticeGraph square_lattice(int rows, int cols, bool periodic) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("square_lattice: dimensions must be >= 1");
  }
  if (periodic && (rows < 3 || cols < 3)) {
    // A periodic dimension of 2 would double-count the wraparound bond.
    throw std::invalid_argument("square_lattice: periodic needs rows, cols "
                                ">= 3");
  }
  LatticeGraph g;
  g.n_sites = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        g.edges.emplace_back(id(r, c), id(r, c + 1));
      } else if (periodic) {
        g.edges.emplace_back(id(r, c), id(r, 0));
      }
      if (r + 1 < rows) {
        g.edges.emplace_back(id(r, c), id(r + 1, c));
      } else if (periodic) {
        g.edges.emplace_back(id(r, c), id(0, c));
      }
    }
  }
  return g;
}

}  // namespace vmge
