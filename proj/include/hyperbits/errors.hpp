#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperbits {

// A requested object exceeds a configured dimension cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An e-bit protocol branch cannot be realized by discard/flip postprocessing:
// the required slope exceeds 1 - |c|, i.e. the flip probability would leave
// [0, 1]. Carries the offending branch so callers can report it.
class PostprocessingInfeasibleError : public std::runtime_error {
 public:
  PostprocessingInfeasibleError(std::size_t input_b, int message, double c, double c_prime)
      : std::runtime_error("postprocessing infeasible at b=" + std::to_string(input_b) +
                           " A=" + std::to_string(message) + ": |c| + |c'| = " +
                           std::to_string(std::abs(c) + std::abs(c_prime)) + " > 1"),
        input_b(input_b),
        message(message),
        c(c),
        c_prime(c_prime) {}

  std::size_t input_b;
  int message;
  double c;
  double c_prime;
};

}  // namespace hyperbits
