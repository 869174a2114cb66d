#ifndef SHADOWPRIMES_MONOMIAL_HPP
#define SHADOWPRIMES_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "shadowprimes/error.hpp"
#include "shadowprimes/vertex_set.hpp"

namespace shadowprimes {

using Exponent = std::uint16_t;
inline constexpr unsigned kMaxExponent = 0xffff;

/// An exponent vector over a fixed alphabet. The coefficient field is never
/// represented; everything in this library is characteristic-independent.
struct Monomial {
  std::vector<Exponent> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, int i) {
    Monomial m(nvars);
    m.exps[static_cast<std::size_t>(i)] = 1;
    return m;
  }
  /// Squarefree product of the variables in s.
  static Monomial of_set(std::size_t nvars, VertexSet s) {
    Monomial m(nvars);
    for (int i : s.indices()) m.exps[static_cast<std::size_t>(i)] = 1;
    return m;
  }

  std::size_t nvars() const { return exps.size(); }
  bool is_one() const;
  unsigned degree() const;
  VertexSet support() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;  // throws ExponentOverflow
  Monomial gcd(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;    // throws ExponentOverflow
  /// this / gcd(this, other): the colon quotient of a generator.
  Monomial quotient_by(const Monomial& other) const;
  /// Exact division; requires other.divides(*this).
  Monomial exact_div(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
};

/// Lexicographic order on exponent vectors.
bool lex_less(const Monomial& a, const Monomial& b);

}  // namespace shadowprimes

#endif
