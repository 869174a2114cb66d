#ifndef SHADOWPRIMES_MONOMIAL_IDEAL_HPP
#define SHADOWPRIMES_MONOMIAL_IDEAL_HPP

#include <optional>
#include <vector>

#include "shadowprimes/hypergraph.hpp"
#include "shadowprimes/limits.hpp"
#include "shadowprimes/monomial.hpp"

namespace shadowprimes {

/// A monomial ideal kept as its unique minimal generating set, lex-sorted.
/// The zero ideal is the empty list; the unit ideal is the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes and sorts; throws AlphabetMismatch if lengths disagree.
  MonomialIdeal(Alphabet alphabet, std::vector<Monomial> gens);

  static MonomialIdeal zero(Alphabet alphabet) { return MonomialIdeal(std::move(alphabet), {}); }
  static MonomialIdeal unit(Alphabet alphabet);
  /// The prime ideal generated by the variables in u.
  static MonomialIdeal variable_prime(Alphabet alphabet, VertexSet u);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_zero() && !is_unit(); }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Monomial> gens_;
};

/// Generated by pure powers x_i^{a_i}, a_i = thresholds[i] > 0 on its support.
struct IrreducibleComponent {
  std::vector<Exponent> thresholds;  // 0 = variable absent

  VertexSet support() const;
  bool contains(const Monomial& m) const;
  bool contains_ideal(const IrreducibleComponent& other) const;
  MonomialIdeal to_ideal(const Alphabet& alphabet) const;

  bool operator==(const IrreducibleComponent&) const = default;
};

bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const Limits& limits = {});
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b, const Limits& limits = {});
MonomialIdeal power(const MonomialIdeal& ideal, int s, const Limits& limits = {});
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// U when the generators are exactly the variables of U; nullopt otherwise
/// (in particular for the zero and unit ideals).
std::optional<VertexSet> prime_support_of(const MonomialIdeal& ideal);

/// Irredundant irreducible decomposition by generator splitting. Requires a
/// proper nonzero ideal.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            const Limits& limits = {});

/// Supports of the irredundant decomposition, canonically sorted.
std::vector<VertexSet> associated_primes(const MonomialIdeal& ideal, const Limits& limits = {});

/// J(H), computed both as the intersection of edge primes and from minimal
/// vertex covers; the two routes are asserted equal. Requires an edge.
MonomialIdeal cover_ideal(const Hypergraph& h, const Limits& limits = {});

/// Cone embedding into a larger alphabet, matching variables by name.
MonomialIdeal embed(const MonomialIdeal& ideal, const Alphabet& target);
Monomial embed(const Monomial& m, const Alphabet& source, const Alphabet& target);

}  // namespace shadowprimes

#endif
