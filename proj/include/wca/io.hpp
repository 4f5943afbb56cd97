#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wca/bitmatrix.hpp"

namespace wca::io {

/// Raised on malformed input; line() is the 1-based line the problem was
/// detected on, and what() already includes it as a "line N:" prefix.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

  private:
    int line_;
};

// Matrix file (.wam): a header line "n k" followed by n lines of k
// space-separated 0/1 values. Table file (.wat): a header line "n k"
// followed by n lines "i: c1 c2 ..." with ascending 1-based code numbers
// (an all-zero row is written as "i:"). Writers emit the canonical form, so
// write/read round-trips are byte-exact.

BinaryMatrix read_wam(std::istream& in);
void write_wam(std::ostream& out, const BinaryMatrix& m);
BinaryMatrix load_wam(const std::string& path);
void save_wam(const std::string& path, const BinaryMatrix& m);
std::string wam_string(const BinaryMatrix& m);

AssignmentTable read_wat(std::istream& in);
void write_wat(std::ostream& out, const AssignmentTable& table);
AssignmentTable load_wat(const std::string& path);
void save_wat(const std::string& path, const AssignmentTable& table);
std::string wat_string(const AssignmentTable& table);

}  // namespace wca::io
