#pragma once

#include <stdexcept>
#include <string>

namespace schurvec {

// Thrown when a request exceeds a documented size cap. The message names the
// cap and the offending size so callers can report actionable errors.
class cap_error : public std::runtime_error {
 public:
  explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's stated precondition fails (wrong shapes, a map
// that must be mono/epi and isn't, malformed input values).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown when an internal invariant that must hold by theorem fails. Seeing
// one of these means a bug, never bad user input.
class contract_violation : public std::logic_error {
 public:
  explicit contract_violation(const std::string& what)
      : std::logic_error(what) {}
};

// Size caps for the brute-force layers. Degree 7 keeps the symmetric group
// algebra at 5040 terms; totaldim 4 keeps tensor powers at <= 4^7 basis words.
struct Caps {
  int max_degree = 7;
  int max_space_total_dim = 4;
  // Tensor-power matrices with more entries than this are refused by the
  // brute-force functor-on-maps path.
  long long max_power_matrix_entries = 1 << 21;
  int max_partition_bound = 8;
  int max_lr_size = 8;
  // Brute-force certification sweeps only touch tensor powers whose total
  // basis stays at or under this.
  int max_brute_ambient_total = 100;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace schurvec
