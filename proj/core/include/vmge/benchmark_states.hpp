#pragma once

#include "vmge/state_vector.hpp"

namespace vmge {

enum class BenchmarkFamily {
  PsiP,    // sqrt(p)|00> + sqrt(1-p)|11>,            2 qubits
  WPphi,   // sqrt(p)|W> + sqrt(1-p)e^{i phi}|Wbar>,  3 qubits
  GWPphi,  // sqrt(p)|GHZ> + sqrt(1-p)e^{i phi}|W>,   3 qubits
  BBP,     // sqrt(p)|B+_{13}>|B+_{24}> + sqrt(1-p)|B-_{13}>|B-_{24}>, 4 qubits
};

struct BenchmarkStateSpec {
  BenchmarkFamily family = BenchmarkFamily::PsiP;
  double p = 1.0;       // in [0, 1]
  double phi = 0.0;     // only used by the families carrying a phase
};

// |W> = (|001>+|010>+|100>)/sqrt(3), |Wbar> its bit-flip,
// |GHZ> = (|000>+|111>)/sqrt(2), |B+-_{xy}> = (|00> +- |11>)/sqrt(2) on the
// qubit pair (x,y).  The BBP family is built from the Bell-pair form, whose
// signs are unambiguous for all p.
StateVector make_benchmark_state(const BenchmarkStateSpec& spec);

StateVector w_state(int n_qubits = 3);
StateVector ghz_state(int n_qubits);
StateVector bell_state();  // (|00> + |11>)/sqrt(2)

}  // namespace vmge
