#pragma once

#include <stdexcept>
#include <string>

namespace qloci {

// Malformed input: bad dimensions, non-permutations, inconsistent orbit data.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration would exceed its configured size limit.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Size limits for the exponential enumerations.
struct Capacity {
  int free_cells = 26;            // subset enumeration over pipe dream cells
  int ratio_dim = 5;              // full-grid ratio check, d <= ratio_dim
  long long seq_perms = 400000;   // |S_d| for the factorization map
  long long diagrams = 2000000;   // lacing diagrams scanned by filters

  static Capacity defaults() { return {}; }
};

}  // namespace qloci
