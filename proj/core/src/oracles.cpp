#include "vmge/oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "vmge/ansatz.hpp"

namespace vmge {

double schmidt_max_overlap(const StateVector& state,
                           const Partition& bipartition) {
  bipartition.validate();
  if (bipartition.party_count() != 2) {
    throw std::invalid_argument("schmidt_max_overlap: partition must have "
                                "exactly 2 parties");
  }
  if (bipartition.n_qubits != state.n_qubits()) {
    throw std::invalid_argument("schmidt_max_overlap: size mismatch");
  }
  const int n = state.n_qubits();
  const auto& pa = bipartition.parties[0];
  const auto& pb = bipartition.parties[1];
  const std::uint64_t rows = std::uint64_t{1} << pa.size();
  const std::uint64_t cols = std::uint64_t{1} << pb.size();

  Eigen::MatrixXcd mat(rows, cols);
  const auto amps = state.amplitudes();
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    std::uint64_t ra = 0, cb = 0;
    for (int q : pa) ra = (ra << 1) | ((b >> (n - 1 - q)) & 1);
    for (int q : pb) cb = (cb << 1) | ((b >> (n - 1 - q)) & 1);
    mat(ra, cb) = amps[b];
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
  const double smax = svd.singularValues()(0);
  return smax * smax;
}

double brute_force_ge(const StateVector& state, const Partition& partition,
                      const BruteForceOptions& options) {
  partition.validate();
  if (partition.n_qubits != state.n_qubits()) {
    throw std::invalid_argument("brute_force_ge: size mismatch");
  }
  const int n = state.n_qubits();
  int restarts = options.restarts;
  if (restarts == 0) restarts = (n <= 4) ? 50 : 200;
  if (restarts < 1 || options.inner_iterations < 1) {
    throw std::invalid_argument("brute_force_ge: bad options");
  }

  const int M = partition.party_count();
  std::mt19937_64 gen(options.seed);
  std::normal_distribution<double> dist(0.0, 1.0);

  double best_overlap_sq = 0.0;
  for (int rs = 0; rs < restarts; ++rs) {
    // Random unit start vector per party.
    std::vector<std::vector<cdouble>> parties(M);
    for (int p = 0; p < M; ++p) {
      auto& v = parties[p];
      v.resize(std::uint64_t{1} << partition.parties[p].size());
      double nrm = 0.0;
      for (auto& a : v) {
        a = cdouble{dist(gen), dist(gen)};
        nrm += std::norm(a);
      }
      const double inv = 1.0 / std::sqrt(nrm);
      for (auto& a : v) a *= inv;
    }

    double prev = 0.0;
    for (int it = 0; it < options.inner_iterations; ++it) {
      double overlap_sq = 0.0;
      for (int p = 0; p < M; ++p) {
        // Exact argmax for party p: normalized partial overlap.
        std::vector<cdouble> w =
            detail::partial_overlap(state, partition, parties, p);
        double nrm = 0.0;
        for (const auto& a : w) nrm += std::norm(a);
        if (nrm < 1e-300) break;  // orthogonal start; restart will differ
        const double inv = 1.0 / std::sqrt(nrm);
        for (auto& a : w) a *= inv;
        parties[p] = std::move(w);
        overlap_sq = nrm;  // ||w||^2 is the overlap after the update
      }
      if (overlap_sq - prev < 1e-12 && it > 0) {
        prev = overlap_sq;
        break;
      }
      prev = overlap_sq;
    }
    best_overlap_sq = std::max(best_overlap_sq, prev);
  }
  return 1.0 - best_overlap_sq;
}

}  // namespace vmge
