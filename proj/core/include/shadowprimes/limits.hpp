#ifndef SHADOWPRIMES_LIMITS_HPP
#define SHADOWPRIMES_LIMITS_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace shadowprimes {

/// Resource guards for the exponential kernels. Exceeding any bound raises
/// ResourceLimit instead of running away.
struct Limits {
  /// Ceiling on generator counts during ideal arithmetic.
  std::size_t max_generators = 200000;
  /// Subset enumeration (shadows, localization) refuses alphabets above this.
  int max_enum_vertices = 22;
  /// Candidate-monomial cap for the brute-force oracle.
  std::size_t max_witness_candidates = 10000000;
  /// Wall-clock budget for heavy runs; unset means no deadline.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Progress sink for long computations (checkpoint lines).
  std::function<void(const std::string&)> progress;

  /// max_generators from the SHADOWPRIMES_LIMIT environment variable when set.
  static Limits from_env();

  void note(const std::string& msg) const {
    if (progress) progress(msg);
  }
  void check_deadline(const char* where) const;
  void check_generators(std::size_t count, const char* where) const;
};

}  // namespace shadowprimes

#endif
