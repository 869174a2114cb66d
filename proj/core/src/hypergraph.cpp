#include "shadowprimes/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace shadowprimes {

namespace {

std::string edge_to_string(VertexSet e, const Alphabet& alphabet) {
  std::string s = "{";
  bool first = true;
  for (int v : e.indices()) {
    if (!first) s += ",";
    s += alphabet.name(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) fail(Errc::ValidationError, "empty vertex name");
    if (!seen.insert(n).second) fail(Errc::DuplicateVertex, n);
  }
  if (size() > kMaxVertices)
    fail(Errc::ResourceLimit, "alphabet has " + std::to_string(size()) +
                                  " vertices, cap is " + std::to_string(kMaxVertices));
}

std::optional<int> Alphabet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int Alphabet::require(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) fail(Errc::UnknownVertex, name);
  return *idx;
}

VertexSet Alphabet::full_set() const {
  VertexSet s;
  for (int i = 0; i < size(); ++i) s.insert(i);
  return s;
}

Alphabet Alphabet::restrict_to(VertexSet keep) const {
  std::vector<std::string> names;
  for (int i : keep.indices()) names.push_back(name(i));
  return Alphabet(std::move(names));
}

std::vector<std::string> Alphabet::names_of(VertexSet s) const {
  std::vector<std::string> out;
  for (int i : s.indices()) out.push_back(name(i));
  return out;
}

VertexSet Alphabet::set_of(const std::vector<std::string>& names) const {
  VertexSet s;
  for (const auto& n : names) s.insert(require(n));
  return s;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* where) {
  if (!(a == b)) fail(Errc::AlphabetMismatch, where);
}

VertexSet embed_indices(VertexSet s, const Alphabet& source, const Alphabet& target) {
  VertexSet out;
  for (int i : s.indices()) out.insert(target.require(source.name(i)));
  return out;
}

Hypergraph Hypergraph::build(std::vector<std::string> vertex_names,
                             const std::vector<std::vector<std::string>>& edges) {
  Alphabet alphabet(std::move(vertex_names));
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& edge : edges) sets.push_back(alphabet.set_of(edge));
  return from_sets(std::move(alphabet), std::move(sets));
}

Hypergraph Hypergraph::from_sets(Alphabet alphabet, std::vector<VertexSet> edges) {
  VertexSet full = alphabet.full_set();
  for (VertexSet e : edges) {
    if (e.empty()) fail(Errc::EmptyEdge, "edges of a hypergraph are nonempty");
    if (!e.subset_of(full)) fail(Errc::IndexOutOfRange, "edge uses an index outside the alphabet");
  }
  std::sort(edges.begin(), edges.end(), SeqLess{});
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i] == edges[i + 1])
      fail(Errc::DuplicateEdge, edge_to_string(edges[i], alphabet));
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && edges[i].proper_subset_of(edges[j]))
        fail(Errc::NestedEdges, edge_to_string(edges[i], alphabet) + " is contained in " +
                                    edge_to_string(edges[j], alphabet));
  Hypergraph h;
  h.alphabet_ = std::move(alphabet);
  h.edges_ = std::move(edges);
  return h;
}

bool Hypergraph::is_graph() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() <= 2; });
}

bool Hypergraph::has_edge(VertexSet e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet u) {
  if (!u.subset_of(h.alphabet().full_set()))
    fail(Errc::UnknownVertex, "induced_subhypergraph: U is not a subset of V");
  Alphabet restricted = h.alphabet().restrict_to(u);
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges())
    if (e.subset_of(u)) edges.push_back(embed_indices(e, h.alphabet(), restricted));
  return Hypergraph::from_sets(std::move(restricted), std::move(edges));
}

namespace {

// Inclusion-minimal members only, deduplicated, canonically sorted.
std::vector<VertexSet> antichain_min(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    bool dominated = false;
    for (VertexSet kept : out)
      if (kept.subset_of(s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), SeqLess{});
  return out;
}

}  // namespace

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h) {
  // Edge-by-edge transversal expansion.
  std::vector<VertexSet> covers{VertexSet{}};
  for (VertexSet e : h.edges()) {
    std::vector<VertexSet> next;
    for (VertexSet c : covers) {
      if (c.intersects(e)) {
        next.push_back(c);
        continue;
      }
      for (int v : e.indices()) {
        VertexSet grown = c;
        grown.insert(v);
        next.push_back(grown);
      }
    }
    covers = antichain_min(std::move(next));
  }
  return covers;
}

std::optional<Hypergraph> shadow_on(const Hypergraph& h, VertexSet vp) {
  if (!vp.subset_of(h.alphabet().full_set()))
    fail(Errc::UnknownVertex, "shadow_on: V' is not a subset of V");
  std::vector<VertexSet> traces;
  traces.reserve(h.edge_count());
  for (VertexSet e : h.edges()) {
    VertexSet t = e & vp;
    if (t.empty()) return std::nullopt;
    traces.push_back(t);
  }
  std::set<std::uint64_t> distinct;
  for (VertexSet t : traces) distinct.insert(t.bits);
  if (distinct.size() != traces.size()) return std::nullopt;
  for (std::size_t i = 0; i < traces.size(); ++i)
    for (std::size_t j = 0; j < traces.size(); ++j)
      if (i != j && traces[i].proper_subset_of(traces[j])) return std::nullopt;
  Alphabet restricted = h.alphabet().restrict_to(vp);
  std::vector<VertexSet> edges;
  edges.reserve(traces.size());
  for (VertexSet t : traces) edges.push_back(embed_indices(t, h.alphabet(), restricted));
  return Hypergraph::from_sets(std::move(restricted), std::move(edges));
}

std::vector<Hypergraph> enumerate_shadows(const Hypergraph& h, const Limits& limits) {
  int n = h.vertex_count();
  if (n > limits.max_enum_vertices)
    fail(Errc::ResourceLimit, "enumerate_shadows: " + std::to_string(n) +
                                  " vertices exceeds the subset-enumeration cap of " +
                                  std::to_string(limits.max_enum_vertices));
  std::vector<std::pair<VertexSet, Hypergraph>> found;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    if ((mask & 0xffff) == 0) limits.check_deadline("enumerate_shadows");
    VertexSet vp{mask};
    if (auto s = shadow_on(h, vp)) found.emplace_back(vp, std::move(*s));
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return seq_less(a.first, b.first); });
  std::vector<Hypergraph> out;
  out.reserve(found.size());
  for (auto& [vp, s] : found) out.push_back(std::move(s));
  return out;
}

VertexSet hat_set(const Hypergraph& h, VertexSet vp, VertexSet u) {
  if (!u.subset_of(vp)) fail(Errc::PreconditionFailed, "hat_set: U is not a subset of V'");
  if (!shadow_on(h, vp)) fail(Errc::NotAShadow, "hat_set: H has no shadow on V'");
  VertexSet hat;
  for (VertexSet e : h.edges())
    if ((e & vp).subset_of(u)) hat = hat | e;
  return hat;
}

namespace {

// Grows induced paths from the smallest cycle vertex; a cycle is recorded in
// canonical rotation exactly once (second vertex smaller than last).
struct CycleSearch {
  const std::vector<VertexSet>* adj = nullptr;
  int start = 0;
  std::vector<int> path;
  VertexSet on_path;
  std::vector<std::vector<int>> out;

  VertexSet nbrs(int v) const { return (*adj)[static_cast<std::size_t>(v)]; }

  void record_closed(int w) {
    std::size_t len = path.size() + 1;
    if (len >= 3 && len % 2 == 1 && path[1] < w) {
      std::vector<int> cycle = path;
      cycle.push_back(w);
      out.push_back(std::move(cycle));
    }
  }

  void extend() {
    int last = path.back();
    for (int w : nbrs(last).indices()) {
      if (w <= start || on_path.contains(w)) continue;
      VertexSet others = nbrs(w) & on_path;
      others.erase(last);
      bool closes = others.contains(start);
      others.erase(start);
      if (!others.empty()) continue;  // chord to a path vertex
      if (closes) {
        if (path.size() >= 2) record_closed(w);
        continue;  // extending past w would leave the chord w-start
      }
      path.push_back(w);
      on_path.insert(w);
      extend();
      on_path.erase(w);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<int>> chordless_odd_cycles(const Hypergraph& h) {
  if (!h.is_graph()) fail(Errc::NotAGraph, "chordless_odd_cycles requires edges of size <= 2");
  int n = h.vertex_count();
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (VertexSet e : h.edges()) {
    if (e.size() != 2) continue;
    auto idx = e.indices();
    adj[static_cast<std::size_t>(idx[0])].insert(idx[1]);
    adj[static_cast<std::size_t>(idx[1])].insert(idx[0]);
  }
  CycleSearch search;
  search.adj = &adj;
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    search.start = start;
    search.path = {start};
    search.on_path = VertexSet::of({start});
    search.out.clear();
    search.extend();
    out.insert(out.end(), search.out.begin(), search.out.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shadowprimes
