#include "shadowprimes/oracle.hpp"

#include <algorithm>

namespace shadowprimes {
namespace oracle {

namespace {

std::vector<Exponent> witness_bound(const MonomialIdeal& ideal, unsigned factor) {
  std::size_t n = static_cast<std::size_t>(ideal.alphabet().size());
  std::vector<Exponent> bound(n, 0);
  for (const Monomial& g : ideal.generators())
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g.exps[i]);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned scaled = static_cast<unsigned>(bound[i]) * factor;
    bound[i] = static_cast<Exponent>(std::min(scaled, kMaxExponent));
  }
  return bound;
}

// Lex-ordered odometer over the exponent box; returns false after the last
// candidate.
bool advance(Monomial& m, const std::vector<Exponent>& bound) {
  for (std::size_t i = m.exps.size(); i-- > 0;) {
    if (m.exps[i] < bound[i]) {
      ++m.exps[i];
      for (std::size_t j = i + 1; j < m.exps.size(); ++j) m.exps[j] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<WitnessRecord> witness_search(const MonomialIdeal& ideal, VertexSet u,
                                            unsigned bound_factor, const Limits& limits) {
  if (!ideal.is_proper()) fail(Errc::PreconditionFailed, "witness_search: ideal must be proper");
  auto bound = witness_bound(ideal, bound_factor);
  std::size_t space = 1;
  for (Exponent b : bound) {
    space *= static_cast<std::size_t>(b) + 1;
    if (space > limits.max_witness_candidates)
      fail(Errc::ResourceLimit, "witness_search: candidate space exceeds cap");
  }
  Monomial m(static_cast<std::size_t>(ideal.alphabet().size()));
  std::size_t ticks = 0;
  do {
    if ((++ticks & 0xfff) == 0) limits.check_deadline("witness_search");
    auto support = prime_support_of(colon(ideal, m));
    if (support && *support == u) {
      WitnessRecord record;
      record.prime = u;
      record.witness = m;
      record.exponent_bound = bound;
      return record;
    }
  } while (advance(m, bound));
  return std::nullopt;
}

std::vector<VertexSet> ass_by_witness(const MonomialIdeal& ideal, unsigned bound_factor,
                                      const Limits& limits) {
  if (!ideal.is_proper()) fail(Errc::PreconditionFailed, "ass_by_witness: ideal must be proper");
  auto bound = witness_bound(ideal, bound_factor);
  std::size_t n = static_cast<std::size_t>(ideal.alphabet().size());
  // One sweep over the box collects every variable-prime colon.
  std::vector<VertexSet> found;
  std::size_t space = 1;
  for (Exponent b : bound) {
    space *= static_cast<std::size_t>(b) + 1;
    if (space > limits.max_witness_candidates)
      fail(Errc::ResourceLimit, "ass_by_witness: candidate space exceeds cap");
  }
  Monomial m(n);
  std::size_t ticks = 0;
  do {
    if ((++ticks & 0xfff) == 0) limits.check_deadline("ass_by_witness");
    auto support = prime_support_of(colon(ideal, m));
    if (support) found.push_back(*support);
  } while (advance(m, bound));
  std::sort(found.begin(), found.end(), SeqLess{});
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

CrossValidation cross_validate(const MonomialIdeal& ideal, const Limits& limits) {
  CrossValidation result;
  result.by_witness = ass_by_witness(ideal, 1, limits);
  result.by_decomposition = associated_primes(ideal, limits);
  for (VertexSet p : result.by_witness)
    if (std::find(result.by_decomposition.begin(), result.by_decomposition.end(), p) ==
        result.by_decomposition.end())
      result.only_witness.push_back(p);
  for (VertexSet p : result.by_decomposition)
    if (std::find(result.by_witness.begin(), result.by_witness.end(), p) ==
        result.by_witness.end())
      result.only_decomposition.push_back(p);
  result.match = result.only_witness.empty() && result.only_decomposition.empty();
  if (!result.match) {
    // Distinguish a decomposition bug from an insufficient exponent bound by
    // re-running the scan with the bound doubled.
    auto doubled = ass_by_witness(ideal, 2, limits);
    result.bound_was_insufficient = doubled != result.by_witness;
  }
  return result;
}

}  // namespace oracle
}  // namespace shadowprimes
