#include "vmge/partition.hpp"

#include <charconv>
#include <stdexcept>

namespace vmge {

int Partition::bond_count() const {
  int b = 0;
  for (const auto& p : parties) b += static_cast<int>(p.size()) - 1;
  return b;
}

void Partition::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("partition: n_qubits < 1");
  if (parties.empty()) throw std::invalid_argument("partition: no parties");
  std::vector<int> owner(n_qubits, -1);
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (parties[i].empty()) {
      throw std::invalid_argument("partition: party " + std::to_string(i) +
                                  " is empty");
    }
    for (int q : parties[i]) {
      if (q < 0 || q >= n_qubits) {
        throw std::invalid_argument("partition: qubit " + std::to_string(q) +
                                    " out of range");
      }
      if (owner[q] != -1) {
        throw std::invalid_argument("partition: qubit " + std::to_string(q) +
                                    " appears twice");
      }
      owner[q] = static_cast<int>(i);
    }
  }
  for (int q = 0; q < n_qubits; ++q) {
    if (owner[q] == -1) {
      throw std::invalid_argument("partition: qubit " + std::to_string(q) +
                                  " not covered");
    }
  }
}

Partition Partition::global(int n_qubits) {
  Partition p;
  p.n_qubits = n_qubits;
  p.parties.reserve(n_qubits);
  for (int q = 0; q < n_qubits; ++q) p.parties.push_back({q});
  return p;
}

Partition parse_partition(const std::string& text, int n_qubits) {
  if (text == "global") return Partition::global(n_qubits);

  Partition p;
  p.n_qubits = n_qubits;
  std::vector<int> party;
  std::size_t i = 0;
  auto flush_party = [&] {
    if (party.empty()) {
      throw std::invalid_argument("partition '" + text + "': empty party");
    }
    p.parties.push_back(party);
    party.clear();
  };
  while (i < text.size()) {
    if (text[i] == '|') {
      flush_party();
      ++i;
      continue;
    }
    if (text[i] == ',') {
      if (party.empty()) {
        throw std::invalid_argument("partition '" + text +
                                    "': stray ',' before an index");
      }
      ++i;
      continue;
    }
    int q = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i,
                                     text.data() + text.size(), q);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw std::invalid_argument("partition '" + text +
                                  "': expected a qubit index at position " +
                                  std::to_string(i));
    }
    party.push_back(q);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  flush_party();
  p.validate();
  return p;
}

std::string format_partition(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.parties.size(); ++i) {
    if (i) s += '|';
    for (std::size_t j = 0; j < p.parties[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(p.parties[i][j]);
    }
  }
  return s;
}

}  // namespace vmge
