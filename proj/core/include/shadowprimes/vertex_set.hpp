#ifndef SHADOWPRIMES_VERTEX_SET_HPP
#define SHADOWPRIMES_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "shadowprimes/error.hpp"

namespace shadowprimes {

// One machine word per set keeps every desk-scale instance (at most 14
// vertices in the embedded corpus) in a single register.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices into some alphabet. Doubles as a prime ideal
/// generated by variables, as an edge, and as a vertex cover.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static VertexSet of(std::initializer_list<int> idx) {
    VertexSet s;
    for (int i : idx) s.insert(i);
    return s;
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void insert(int i) {
    if (i < 0 || i >= kMaxVertices) fail(Errc::IndexOutOfRange, "vertex index " + std::to_string(i));
    bits |= std::uint64_t{1} << i;
  }
  void erase(int i) { bits &= ~(std::uint64_t{1} << i); }

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits != o.bits; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }

  bool operator==(const VertexSet&) const = default;

  /// Strictly increasing member indices.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  int min_index() const { return bits == 0 ? -1 : std::countr_zero(bits); }
};

/// Canonical order on vertex sets: lexicographic on the increasing index
/// sequence, so {0,1} < {0,1,2} < {0,2} < {1}.
inline bool seq_less(VertexSet a, VertexSet b) {
  if (a.bits == b.bits) return false;
  std::uint64_t diff = a.bits ^ b.bits;
  int i = std::countr_zero(diff);
  // Members below i agree. A side with no members >= i is a proper prefix of
  // the other; otherwise the owner of i sits first at the first difference.
  if ((a.bits >> i) == 0) return true;
  if ((b.bits >> i) == 0) return false;
  return a.contains(i);
}

struct SeqLess {
  bool operator()(VertexSet a, VertexSet b) const { return seq_less(a, b); }
};

}  // namespace shadowprimes

#endif
