#include "vmge/state_io.hpp"

#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace vmge {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

void write_state(std::ostream& out, const StateVector& state) {
  out << "vmge-state v1 n_qubits=" << state.n_qubits() << "\n";
  char buf[96];
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == cdouble{0.0, 0.0}) continue;
    std::snprintf(buf, sizeof buf, "%" PRIu64 " %.17g %.17g\n", i,
                  amps[i].real(), amps[i].imag());
    out << buf;
  }
}

void write_state_file(const std::string& path, const StateVector& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_state(out, state);
  if (!out) throw std::runtime_error("write failed: " + path);
}

StateVector read_state(std::istream& in) {
  std::string line;
  int lineno = 0;

  // Header
  if (!std::getline(in, line)) {
    throw StateFormatError("empty input, expected vmge-state v1 header", 1);
  }
  ++lineno;
  int n_qubits = 0;
  {
    std::istringstream hs(line);
    std::string magic, version, field;
    hs >> magic >> version >> field;
    if (magic != "vmge-state" || version != "v1" ||
        field.rfind("n_qubits=", 0) != 0) {
      throw StateFormatError("malformed header, expected "
                             "'vmge-state v1 n_qubits=<N>'",
                             lineno);
    }
    const std::string num = field.substr(9);
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(),
                                   n_qubits);
    if (ec != std::errc{} || p != num.data() + num.size()) {
      throw StateFormatError("bad n_qubits value '" + num + "'", lineno);
    }
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
      throw StateFormatError("n_qubits out of range", lineno);
    }
  }

  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<cdouble> amps(dim, cdouble{0.0, 0.0});
  std::vector<bool> seen(dim, false);

  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    std::istringstream ls(body);
    std::uint64_t index = 0;
    double re = 0.0, im = 0.0;
    if (!(ls >> index >> re >> im)) {
      throw StateFormatError("expected '<index> <re> <im>'", lineno);
    }
    std::string extra;
    if (ls >> extra) {
      throw StateFormatError("trailing content '" + extra + "'", lineno);
    }
    if (index >= dim) {
      throw StateFormatError("index " + std::to_string(index) +
                                 " out of range for " +
                                 std::to_string(n_qubits) + " qubits",
                             lineno);
    }
    if (seen[index]) {
      throw StateFormatError("duplicate index " + std::to_string(index),
                             lineno);
    }
    seen[index] = true;
    amps[index] = cdouble{re, im};
  }

  try {
    return StateVector(n_qubits, std::move(amps));
  } catch (const std::invalid_argument& e) {
    throw StateFormatError(e.what(), 0);
  }
}

StateVector read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_state(in);
}

}  // namespace vmge
