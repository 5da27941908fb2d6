#pragma once

// Text format for finitely supported sequences:
//
//   # comment
//   dim 2
//   -1 3 0.5
//   2 0 1.25
//
// One `dim <d>` header, then `<k_1> ... <k_d> <value>` per line. Duplicate
// points are rejected.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "morrey/lattice.hpp"

namespace morrey {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FiniteSequence read_sequence(std::istream& in, std::uint64_t cell_limit = kDefaultCellLimit);
FiniteSequence read_sequence_file(const std::string& path,
                                  std::uint64_t cell_limit = kDefaultCellLimit);

/// Writes nonzero entries in row-major order over the tight hull. With
/// include_zeros every point of x.box() is written (used for fields over a window).
void write_sequence(std::ostream& out, const FiniteSequence& x, bool include_zeros = false);
void write_sequence_file(const std::string& path, const FiniteSequence& x,
                         bool include_zeros = false);

}  // namespace morrey
