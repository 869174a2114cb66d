#ifndef SHADOWPRIMES_HYPERGRAPH_HPP
#define SHADOWPRIMES_HYPERGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "shadowprimes/error.hpp"
#include "shadowprimes/limits.hpp"
#include "shadowprimes/vertex_set.hpp"

namespace shadowprimes {

/// An ordered list of distinct variable/vertex names. Hypergraphs and
/// monomial ideals over the same alphabet can be combined; everything else is
/// an AlphabetMismatch.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(const std::string& name) const;
  /// Throws UnknownVertex.
  int require(const std::string& name) const;

  VertexSet full_set() const;
  /// Restriction to the members of `keep`, preserving order.
  Alphabet restrict_to(VertexSet keep) const;

  std::vector<std::string> names_of(VertexSet s) const;
  VertexSet set_of(const std::vector<std::string>& names) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* where);

/// Re-index a set between alphabets by name; throws UnknownVertex.
VertexSet embed_indices(VertexSet s, const Alphabet& source, const Alphabet& target);

/// A finite simple hypergraph (clutter): nonempty edges, pairwise
/// incomparable, stored canonically sorted.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates the clutter conditions; throws DuplicateVertex, EmptyEdge,
  /// NestedEdges, DuplicateEdge, UnknownVertex.
  static Hypergraph build(std::vector<std::string> vertex_names,
                          const std::vector<std::vector<std::string>>& edges);
  static Hypergraph from_sets(Alphabet alphabet, std::vector<VertexSet> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  int vertex_count() const { return alphabet_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_graph() const;  // every edge has <= 2 vertices

  bool has_edge(VertexSet e) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<VertexSet> edges_;
};

/// Edge set {e in E : e subset U}, on the restricted alphabet.
Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet u);

/// Inclusion-minimal transversals of the edge set, canonically sorted.
/// An edgeless hypergraph has the single cover {}.
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h);

/// The shadow of h on vp: the hypergraph (vp, {e & vp}) when the traces form
/// a clutter of the same cardinality as E; nullopt otherwise. The result
/// lives on the restricted alphabet.
std::optional<Hypergraph> shadow_on(const Hypergraph& h, VertexSet vp);

/// All vertex subsets carrying a shadow, reported as hypergraphs on their
/// restricted alphabets, sorted by vertex set. Always contains h itself.
std::vector<Hypergraph> enumerate_shadows(const Hypergraph& h, const Limits& limits = {});

/// Union of all edges of h whose trace on vp lies inside u. Requires that h
/// has a shadow on vp and u subset vp; u and the result are index sets over
/// h's alphabet.
VertexSet hat_set(const Hypergraph& h, VertexSet vp, VertexSet u);

/// All chordless odd cycles among the 2-element edges, each in canonical
/// rotation: smallest vertex first, then its smaller cycle-neighbor.
/// Requires every edge of h to have at most 2 vertices.
std::vector<std::vector<int>> chordless_odd_cycles(const Hypergraph& h);

}  // namespace shadowprimes

#endif
