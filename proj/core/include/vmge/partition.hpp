#pragma once

#include <string>
#include <vector>

namespace vmge {

// Ordered disjoint grouping of the qubits {0..n_qubits-1} into parties.
// Party-internal ordering matters: entangler chains run along consecutive
// entries of each party's list.
struct Partition {
  std::vector<std::vector<int>> parties;
  int n_qubits = 0;

  int party_count() const { return static_cast<int>(parties.size()); }
  // Total number of intra-party entangler bonds, sum of (m_i - 1).
  int bond_count() const;

  // Throws std::invalid_argument unless parties are nonempty, disjoint and
  // cover {0..n_qubits-1}.
  void validate() const;

  // All-singletons partition {0}|{1}|...|{n-1}.
  static Partition global(int n_qubits);
};

// Grammar: parties separated by '|', qubit indices within a party separated
// by ','; the keyword `global` expands to all singletons.
// Example: "0,1,4,5|2,3,6,7".
Partition parse_partition(const std::string& text, int n_qubits);

std::string format_partition(const Partition& p);

}  // namespace vmge
