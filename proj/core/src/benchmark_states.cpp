#include "vmge/benchmark_states.hpp"

#include <cmath>
#include <stdexcept>

namespace vmge {

namespace {

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("benchmark state: p must be in [0, 1]");
  }
}

}  // namespace

StateVector w_state(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("w_state: n_qubits >= 2");
  std::vector<cdouble> amps(std::uint64_t{1} << n_qubits, cdouble{0.0, 0.0});
  const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) {
    amps[std::uint64_t{1} << q] = cdouble{a, 0.0};
  }
  return StateVector(n_qubits, std::move(amps));
}

StateVector ghz_state(int n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("ghz_state: n_qubits >= 2");
  std::vector<cdouble> amps(std::uint64_t{1} << n_qubits, cdouble{0.0, 0.0});
  const double a = 1.0 / std::sqrt(2.0);
  amps.front() = cdouble{a, 0.0};
  amps.back() = cdouble{a, 0.0};
  return StateVector(n_qubits, std::move(amps));
}

StateVector bell_state() { return ghz_state(2); }

StateVector make_benchmark_state(const BenchmarkStateSpec& spec) {
  check_p(spec.p);
  const double sp = std::sqrt(spec.p);
  const double sq = std::sqrt(1.0 - spec.p);
  const cdouble phase = std::polar(1.0, spec.phi);

  switch (spec.family) {
    case BenchmarkFamily::PsiP: {
      std::vector<cdouble> amps(4, cdouble{0.0, 0.0});
      amps[0b00] = cdouble{sp, 0.0};
      amps[0b11] = cdouble{sq, 0.0};
      return StateVector(2, std::move(amps));
    }
    case BenchmarkFamily::WPphi: {
      const double w = 1.0 / std::sqrt(3.0);
      std::vector<cdouble> amps(8, cdouble{0.0, 0.0});
      for (std::uint64_t b : {0b001u, 0b010u, 0b100u}) {
        amps[b] = sp * w;
      }
      for (std::uint64_t b : {0b011u, 0b101u, 0b110u}) {
        amps[b] = sq * w * phase;
      }
      return StateVector(3, std::move(amps));
    }
    case BenchmarkFamily::GWPphi: {
      const double g = 1.0 / std::sqrt(2.0);
      const double w = 1.0 / std::sqrt(3.0);
      std::vector<cdouble> amps(8, cdouble{0.0, 0.0});
      amps[0b000] = cdouble{sp * g, 0.0};
      amps[0b111] = cdouble{sp * g, 0.0};
      for (std::uint64_t b : {0b001u, 0b010u, 0b100u}) {
        amps[b] += sq * w * phase;
      }
      return StateVector(3, std::move(amps));
    }
    case BenchmarkFamily::BBP: {
      // sqrt(p)|B+B+> + sqrt(1-p)|B-B->, Bell pairs on qubits (0,2) and
      // (1,3).  Expanding: 1/2 [(sp+sq)(|0000>+|1111>) +
      // (sp-sq)(|0101>+|1010>)].
      std::vector<cdouble> amps(16, cdouble{0.0, 0.0});
      const double plus = 0.5 * (sp + sq);
      const double minus = 0.5 * (sp - sq);
      amps[0b0000] = plus;
      amps[0b1111] = plus;
      amps[0b0101] = minus;
      amps[0b1010] = minus;
      return StateVector(4, std::move(amps));
    }
  }
  throw std::invalid_argument("benchmark state: unknown family");
}

}  // namespace vmge
