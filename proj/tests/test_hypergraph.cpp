#include <doctest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "shadowprimes/hypergraph.hpp"

using namespace shadowprimes;

namespace {

// Exhaustive transversal scan, independent of the library's Berge expansion.
std::vector<VertexSet> brute_covers(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<VertexSet> transversals;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet t{mask};
    bool hits = true;
    for (VertexSet e : h.edges()) hits = hits && t.intersects(e);
    if (hits) transversals.push_back(t);
  }
  std::vector<VertexSet> minimal;
  for (VertexSet t : transversals) {
    bool is_min = true;
    for (VertexSet u : transversals)
      if (u != t && u.subset_of(t)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(t);
  }
  std::sort(minimal.begin(), minimal.end(), SeqLess{});
  return minimal;
}

// Chordless cycle supports: vertex sets whose induced 2-edge graph is
// 2-regular and connected.
std::vector<VertexSet> brute_chordless_odd_supports(const Hypergraph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s{mask};
    if (s.size() < 3 || s.size() % 2 == 0) continue;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    int inside = 0;
    for (VertexSet e : g.edges())
      if (e.size() == 2 && e.subset_of(s)) {
        ++inside;
        for (int v : e.indices()) ++degree[static_cast<std::size_t>(v)];
      }
    if (inside != s.size()) continue;
    bool regular = true;
    for (int v : s.indices()) regular = regular && degree[static_cast<std::size_t>(v)] == 2;
    if (!regular) continue;
    VertexSet reached = VertexSet::of({s.min_index()});
    bool grew = true;
    while (grew) {
      grew = false;
      for (VertexSet e : g.edges())
        if (e.size() == 2 && e.subset_of(s) && e.intersects(reached) && !e.subset_of(reached)) {
          reached = reached | e;
          grew = true;
        }
    }
    if (reached == s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), SeqLess{});
  return out;
}

}  // namespace

TEST_CASE("build validates the clutter conditions") {
  CHECK_THROWS_AS(Hypergraph::build({"a", "a"}, {{"a"}}), Error);
  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{}}), Error);
  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{"a"}, {"a", "b"}}), Error);
  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(Hypergraph::build({"a", "b"}, {{"c"}}), Error);
  Hypergraph h = Hypergraph::build({"a", "b", "c"}, {{"b", "c"}, {"a", "b"}});
  CHECK(h.edge_count() == 2);
  CHECK(h.is_graph());
  CHECK(h.has_edge(VertexSet::of({0, 1})));
  CHECK_FALSE(h.has_edge(VertexSet::of({0, 2})));
}

TEST_CASE("minimal_vertex_covers matches the exhaustive scan on random clutters") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = testgen::random_hypergraph(rng, 10, 8);
    CHECK(minimal_vertex_covers(h) == brute_covers(h));
  }
}

TEST_CASE("covers of an edgeless hypergraph") {
  Hypergraph h = Hypergraph::from_sets(Alphabet({"a", "b"}), {});
  CHECK(minimal_vertex_covers(h) == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("shadow_on requires trace clutters of full cardinality") {
  Hypergraph h = Hypergraph::build(testgen::var_names(5),
                                   {{"x1", "x2", "x3"}, {"x2", "x3", "x4"}, {"x1", "x4", "x5"}});
  CHECK(shadow_on(h, h.alphabet().full_set()).has_value());
  CHECK(shadow_on(h, h.alphabet().set_of({"x1", "x2", "x4"})).has_value());
  // Traces {x1,x2},{x2},{x1} are nested: no shadow.
  CHECK_FALSE(shadow_on(h, h.alphabet().set_of({"x1", "x2"})).has_value());
  CHECK_FALSE(shadow_on(h, VertexSet{}).has_value());
}

TEST_CASE("every enumerated shadow really is one, and the full set always appears") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 100; ++trial) {
    Hypergraph h = testgen::random_hypergraph(rng, 8, 6);
    auto shadows = enumerate_shadows(h);
    bool saw_full = false;
    for (const Hypergraph& s : shadows) {
      VertexSet vp = embed_indices(s.alphabet().full_set(), s.alphabet(), h.alphabet());
      saw_full = saw_full || vp == h.alphabet().full_set();
      auto direct = shadow_on(h, vp);
      REQUIRE(direct.has_value());
      CHECK(*direct == s);
      CHECK(s.edge_count() == h.edge_count());
    }
    CHECK(saw_full);
  }
}

TEST_CASE("hat_set is the union of edges with trace inside u") {
  Hypergraph h = Hypergraph::build(testgen::var_names(8), {{"x1", "x2", "x6"},
                                                           {"x2", "x3", "x6"},
                                                           {"x3", "x4", "x8"},
                                                           {"x4", "x5", "x6"},
                                                           {"x1", "x5", "x7"}});
  VertexSet vp = h.alphabet().set_of({"x1", "x2", "x3", "x4", "x5"});
  CHECK(hat_set(h, vp, vp) == h.alphabet().full_set());
  VertexSet vpp = h.alphabet().set_of({"x1", "x3", "x5", "x6", "x8"});
  VertexSet c3 = h.alphabet().set_of({"x1", "x5", "x6"});
  CHECK(hat_set(h, vpp, c3) == h.alphabet().set_of({"x1", "x2", "x4", "x5", "x6", "x7"}));
}

TEST_CASE("chordless_odd_cycles agrees with the exhaustive search on random graphs") {
  std::mt19937 rng(20240813);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph g = testgen::random_graph(rng, 8);
    auto cycles = chordless_odd_cycles(g);
    std::vector<VertexSet> supports;
    for (const auto& c : cycles) {
      CHECK(c.size() % 2 == 1);
      CHECK(c.size() >= 3);
      VertexSet s;
      for (std::size_t i = 0; i < c.size(); ++i) {
        s.insert(c[i]);
        CHECK(g.has_edge(VertexSet::of({c[i], c[(i + 1) % c.size()]})));
      }
      CHECK(s.size() == static_cast<int>(c.size()));
      supports.push_back(s);
    }
    std::sort(supports.begin(), supports.end(), SeqLess{});
    CHECK(supports == brute_chordless_odd_supports(g));
  }
}

TEST_CASE("induced subhypergraph keeps exactly the inside edges") {
  Hypergraph h = Hypergraph::build(testgen::var_names(5),
                                   {{"x1", "x2", "x3"}, {"x2", "x3", "x4"}, {"x1", "x4", "x5"}});
  Hypergraph sub = induced_subhypergraph(h, h.alphabet().set_of({"x1", "x2", "x3", "x4"}));
  CHECK(sub.edge_count() == 2);
  CHECK(sub.alphabet().names() == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("enumerate_shadows refuses oversized alphabets") {
  std::vector<std::vector<std::string>> edges;
  auto names = testgen::var_names(23);
  for (int i = 0; i + 1 < 23; ++i) edges.push_back({names[i], names[i + 1]});
  Hypergraph big = Hypergraph::build(names, edges);
  CHECK_THROWS_AS(enumerate_shadows(big), Error);
}
