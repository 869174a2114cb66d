#ifndef SHADOWPRIMES_ORACLE_HPP
#define SHADOWPRIMES_ORACLE_HPP

#include <optional>
#include <vector>

#include "shadowprimes/limits.hpp"
#include "shadowprimes/monomial_ideal.hpp"

namespace shadowprimes {
namespace oracle {

/// A monomial m with (I : m) = p_U, found by exhaustive scan.
struct WitnessRecord {
  VertexSet prime;
  Monomial witness;
  std::vector<Exponent> exponent_bound;
};

/// Scans monomials with per-variable exponents bounded by the componentwise
/// maximum over the generators (scaled by bound_factor); returns the
/// lexicographically first witness for p_U, or nullopt.
std::optional<WitnessRecord> witness_search(const MonomialIdeal& ideal, VertexSet u,
                                            unsigned bound_factor = 1, const Limits& limits = {});

/// All U for which witness_search succeeds; the brute-force counterpart of
/// associated_primes.
std::vector<VertexSet> ass_by_witness(const MonomialIdeal& ideal, unsigned bound_factor = 1,
                                      const Limits& limits = {});

struct CrossValidation {
  bool match = false;
  std::vector<VertexSet> by_witness;
  std::vector<VertexSet> by_decomposition;
  std::vector<VertexSet> only_witness;
  std::vector<VertexSet> only_decomposition;
  /// On mismatch: whether doubling the witness bound resolved it, pointing at
  /// an insufficient bound rather than a decomposition bug.
  std::optional<bool> bound_was_insufficient;
};

CrossValidation cross_validate(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace oracle
}  // namespace shadowprimes

#endif
