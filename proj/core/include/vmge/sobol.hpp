#pragma once

#include <cstdint>
#include <vector>

namespace vmge {

// Maximum dimension of the bundled direction-number table.
int sobol_max_dimension();

// Incremental Sobol sequence generator (Joe-Kuo 2008 direction numbers,
// Gray-code ordering).  The first point is the origin.
class SobolSequence {
 public:
  explicit SobolSequence(int dim);

  int dim() const { return dim_; }

  // Writes the next point into `out` (length dim) and advances.
  void next(double* out);

  // Convenience: the next point as a vector.
  std::vector<double> next_point();

 private:
  int dim_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> state_;       // current integer coordinates
  std::vector<std::uint64_t> directions_;  // [dim][kSobolBits], row-major
};

// First n points of the sequence; points[i*dim + j] is coordinate j of
// point i.  Throws std::invalid_argument for n < 1 and an
// "unsupported dimension" std::invalid_argument when dim exceeds the table.
std::vector<double> sobol_points(int dim, std::int64_t n);

}  // namespace vmge
