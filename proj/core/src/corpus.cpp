#include "shadowprimes/corpus.hpp"

#include <algorithm>

#include "shadowprimes/shadow_theory.hpp"

namespace shadowprimes {
namespace corpus {

namespace {

using Names = std::vector<std::string>;
using EdgeList = std::vector<std::vector<std::string>>;

Names xnames(int n) {
  Names out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Names with_y(Names names) {
  names.push_back("y");
  return names;
}

VertexSet named(const Alphabet& alphabet, const std::vector<std::string>& names) {
  return alphabet.set_of(names);
}

EdgeList h4_edges() {
  return {{"x1", "x2"},  {"x1", "x5"},  {"x1", "x9"},  {"x1", "x12"}, {"x2", "x3"},
          {"x2", "x6"},  {"x2", "x10"}, {"x3", "x4"},  {"x3", "x7"},  {"x3", "x11"},
          {"x4", "x8"},  {"x4", "x9"},  {"x4", "x12"}, {"x5", "x6"},  {"x5", "x8"},
          {"x5", "x9"},  {"x6", "x7"},  {"x6", "x10"}, {"x7", "x8"},  {"x7", "x11"},
          {"x8", "x12"}, {"x9", "x10"}, {"x10", "x11"}, {"x11", "x12"}};
}

std::vector<ExampleEntry> build_entries() {
  std::vector<ExampleEntry> entries;

  {
    ExampleEntry e;
    e.id = "triangles";
    e.note = "5-vertex hypergraph with five non-trivial shadows, two of them triangles; "
             "the triangle shadow certifies the full prime for the square";
    e.hypergraph =
        Hypergraph::build(xnames(5), {{"x1", "x2", "x3"}, {"x2", "x3", "x4"}, {"x1", "x4", "x5"}});
    const Alphabet& a = e.hypergraph.alphabet();
    e.check_shadows = true;
    e.expected_shadow_sets = {
        named(a, {"x1", "x2", "x3", "x4"}),
        named(a, {"x1", "x2", "x3", "x4", "x5"}),
        named(a, {"x1", "x2", "x4"}),
        named(a, {"x1", "x2", "x4", "x5"}),
        named(a, {"x1", "x3", "x4"}),
        named(a, {"x1", "x3", "x4", "x5"}),
    };
    std::sort(e.expected_shadow_sets.begin(), e.expected_shadow_sets.end(), SeqLess{});
    e.expected_ass.push_back({2, {a.full_set()}, false});
    e.check_certificates = true;
    e.expected_certificate_hats = {a.full_set()};
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "trivial-shadow";
    e.note = "consecutive-triples hypergraph on 5 vertices; its only shadow is itself";
    e.hypergraph = Hypergraph::build(xnames(5), {{"x1", "x2", "x3"},
                                                 {"x2", "x3", "x4"},
                                                 {"x3", "x4", "x5"},
                                                 {"x4", "x5", "x1"},
                                                 {"x5", "x1", "x2"}});
    e.check_shadows = true;
    e.expected_shadow_sets = {e.hypergraph.alphabet().full_set()};
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "shadow";
    e.note = "8-vertex hypergraph whose pentagon shadow and triangle-in-a-shadow both "
             "yield embedded primes of the square";
    e.hypergraph = Hypergraph::build(xnames(8), {{"x1", "x2", "x6"},
                                                 {"x2", "x3", "x6"},
                                                 {"x3", "x4", "x8"},
                                                 {"x4", "x5", "x6"},
                                                 {"x1", "x5", "x7"}});
    const Alphabet& a = e.hypergraph.alphabet();
    e.expected_ass.push_back(
        {2, {a.full_set(), named(a, {"x1", "x2", "x4", "x5", "x6", "x7"})}, false});
    e.check_certificates = true;
    e.expected_certificate_hats = {named(a, {"x1", "x2", "x4", "x5", "x6", "x7"}),
                                   named(a, {"x2", "x3", "x4", "x5", "x6", "x8"}), a.full_set()};
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "nine-vertex";
    e.note = "9-vertex hypergraph whose square has edge primes only, although dropping "
             "the same-cardinality rule would exhibit a pentagon";
    e.hypergraph = Hypergraph::build(xnames(9), {{"x1", "x2", "x6", "x8"},
                                                 {"x2", "x3", "x8", "x6"},
                                                 {"x3", "x4", "x7", "x9"},
                                                 {"x4", "x5", "x6", "x8"},
                                                 {"x1", "x5", "x7", "x9"},
                                                 {"x8", "x9"},
                                                 {"x6", "x7"}});
    std::vector<VertexSet> edge_primes(e.hypergraph.edges().begin(), e.hypergraph.edges().end());
    std::sort(edge_primes.begin(), edge_primes.end(), SeqLess{});
    e.expected_ass.push_back({2, std::move(edge_primes), true});
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "chorded-pentagon";
    e.note = "pentagon plus a chord-edge through a single-edge apex";
    e.hypergraph = Hypergraph::build(with_y(xnames(5)), {{"x1", "x2"},
                                                         {"x2", "x3"},
                                                         {"x3", "x4"},
                                                         {"x4", "x5"},
                                                         {"x1", "x5"},
                                                         {"x1", "x3", "y"}});
    const Alphabet& a = e.hypergraph.alphabet();
    e.expected_ass.push_back({3,
                              {named(a, {"x1", "x2"}), named(a, {"x2", "x3"}),
                               named(a, {"x3", "x4"}), named(a, {"x4", "x5"}),
                               named(a, {"x1", "x5"}),
                               named(a, {"x1", "x2", "x3", "x4", "x5"}),
                               named(a, {"x1", "x3", "y"}), named(a, {"x1", "x2", "x3", "y"})},
                              true});
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "apex-mixed";
    e.note = "mixed 5-vertex hypergraph with a single-edge apex; the full prime plus "
             "apex is not associated at the third power";
    e.hypergraph = Hypergraph::build(with_y(xnames(5)), {{"x1", "x2", "x3"},
                                                         {"x1", "x4"},
                                                         {"x2", "x4"},
                                                         {"x2", "x5"},
                                                         {"x3", "x5"},
                                                         {"x4", "x5", "y"}});
    const Alphabet& a = e.hypergraph.alphabet();
    std::vector<VertexSet> expected = {
        named(a, {"x1", "x2", "x3"}),
        named(a, {"x1", "x4"}),
        named(a, {"x2", "x4"}),
        named(a, {"x2", "x5"}),
        named(a, {"x3", "x5"}),
        named(a, {"x1", "x2", "x3", "x4"}),
        named(a, {"x1", "x2", "x3", "x5"}),
        named(a, {"x1", "x2", "x3", "x4", "x5"}),
        named(a, {"x4", "x5", "y"}),
        named(a, {"x2", "x4", "x5", "y"}),
    };
    e.expected_ass.push_back({2, expected, true});
    e.expected_ass.push_back({3, expected, true});
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "p-and-p+y";
    e.note = "star-plus-big-edge hypergraph where both p and p + (apex) become "
             "associated at the square";
    e.hypergraph = Hypergraph::build(with_y(xnames(5)), {{"x1", "x2"},
                                                         {"x1", "x3"},
                                                         {"x1", "x4"},
                                                         {"x1", "x5", "y"},
                                                         {"x2", "x3", "x4", "x5"}});
    const Alphabet& a = e.hypergraph.alphabet();
    e.expected_ass.push_back({2,
                              {named(a, {"x1", "x2"}), named(a, {"x1", "x3"}),
                               named(a, {"x1", "x4"}), named(a, {"x2", "x3", "x4", "x5"}),
                               named(a, {"x1", "x2", "x3", "x4", "x5"}),
                               named(a, {"x1", "x5", "y"}),
                               named(a, {"x1", "x2", "x3", "x4", "x5", "y"})},
                              true});
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "h4-fails";
    e.note = "the 12-vertex persistence counterexample extended by an apex on one edge; "
             "the full prime is associated at the cube but not the fourth power";
    e.heavy = true;
    EdgeList edges = h4_edges();
    for (auto& edge : edges)
      if (edge == std::vector<std::string>{"x1", "x2"}) edge.push_back("y");
    e.hypergraph = Hypergraph::build(with_y(xnames(12)), edges);
    e.expected_ass.push_back({3, {e.hypergraph.alphabet().full_set()}, false});
    entries.push_back(std::move(e));
  }

  {
    ExampleEntry e;
    e.id = "h4-does-not-fail";
    e.note = "13-variable variant where the transfer condition fails: the full prime is "
             "associated to the fourth power after all";
    e.heavy = true;
    EdgeList edges = h4_edges();
    for (auto& edge : edges)
      if (edge != std::vector<std::string>{"x1", "x5"}) edge.push_back("x13");
    for (auto& edge : edges)
      if (edge == std::vector<std::string>{"x1", "x5"}) edge.push_back("y");
    Names names = xnames(13);
    names.push_back("y");
    e.hypergraph = Hypergraph::build(std::move(names), edges);
    e.expected_ass.push_back({4, {e.hypergraph.alphabet().full_set()}, false});
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<ExampleEntry>& all_entries() {
  static const std::vector<ExampleEntry> entries = build_entries();
  return entries;
}

const ExampleEntry& entry(const std::string& id) {
  for (const auto& e : all_entries())
    if (e.id == id) return e;
  fail(Errc::PreconditionFailed, "no example named " + id);
}

ReplayResult replay(const ExampleEntry& e, bool allow_heavy, const Limits& limits) {
  ReplayResult result;
  result.id = e.id;
  if (e.heavy && !allow_heavy) {
    result.status = ReplayStatus::Skipped;
    result.details.push_back("heavy entry; rerun with --allow-heavy");
    return result;
  }
  bool ok = true;
  try {
    if (e.check_shadows) {
      std::vector<VertexSet> got;
      for (const Hypergraph& s : enumerate_shadows(e.hypergraph, limits))
        got.push_back(
            embed_indices(s.alphabet().full_set(), s.alphabet(), e.hypergraph.alphabet()));
      std::vector<VertexSet> want = e.expected_shadow_sets;
      std::sort(want.begin(), want.end(), SeqLess{});
      if (got == want) {
        result.details.push_back("shadows: ok (" + std::to_string(got.size()) + ")");
      } else {
        ok = false;
        result.details.push_back("shadows: mismatch");
      }
    }
    for (const auto& expectation : e.expected_ass) {
      limits.note("replay " + e.id + ": Ass at power " + std::to_string(expectation.power));
      AssReport report =
          ass_of_power(e.hypergraph, expectation.power, AssMethod::Decomposition, limits);
      bool pass;
      if (expectation.exact) {
        std::vector<VertexSet> want = expectation.primes;
        std::sort(want.begin(), want.end(), SeqLess{});
        pass = report.primes == want;
      } else {
        pass = std::all_of(expectation.primes.begin(), expectation.primes.end(),
                           [&](VertexSet p) { return report.contains(p); });
      }
      ok = ok && pass;
      result.details.push_back("ass power " + std::to_string(expectation.power) + ": " +
                               (pass ? "ok" : "mismatch"));
    }
    if (e.check_certificates) {
      std::vector<VertexSet> hats;
      for (const auto& cert : odd_cycle_certificates(e.hypergraph, limits)) hats.push_back(cert.hat);
      std::vector<VertexSet> want = e.expected_certificate_hats;
      std::sort(want.begin(), want.end(), SeqLess{});
      bool pass = hats == want;
      ok = ok && pass;
      result.details.push_back(std::string("certificates: ") + (pass ? "ok" : "mismatch"));
    }
  } catch (const Error& err) {
    if (err.code() == Errc::ResourceLimit) {
      result.status = ReplayStatus::ResourceLimited;
      result.details.push_back(err.what());
      return result;
    }
    throw;
  }
  result.status = ok ? ReplayStatus::Pass : ReplayStatus::Fail;
  return result;
}

}  // namespace corpus
}  // namespace shadowprimes
