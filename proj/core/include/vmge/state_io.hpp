#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vmge/state_vector.hpp"

namespace vmge {

// Parse/format failure for the "vmge-state v1" text format; `line` is
// 1-based, 0 when the error is not tied to a specific line.
class StateFormatError : public std::runtime_error {
 public:
  StateFormatError(std::string message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Format: header `vmge-state v1 n_qubits=<N>`, then one line per nonzero
// amplitude: `<index> <re> <im>`.  Lines may appear in any order; duplicate
// indices are rejected.  Blank lines and `#` comments are permitted.
void write_state(std::ostream& out, const StateVector& state);
void write_state_file(const std::string& path, const StateVector& state);

StateVector read_state(std::istream& in);
StateVector read_state_file(const std::string& path);

}  // namespace vmge
