#ifndef SHADOWPRIMES_CORPUS_HPP
#define SHADOWPRIMES_CORPUS_HPP

#include <string>
#include <vector>

#include "shadowprimes/hypergraph.hpp"
#include "shadowprimes/limits.hpp"

namespace shadowprimes {
namespace corpus {

/// A worked example with its frozen expected results, runnable end to end.
struct ExampleEntry {
  std::string id;
  std::string note;
  Hypergraph hypergraph;
  bool heavy = false;  // beyond desk scale; skipped without an explicit opt-in

  /// Expected shadow vertex sets (empty = not checked for this entry).
  std::vector<VertexSet> expected_shadow_sets;
  bool check_shadows = false;

  /// Expected Ass(J^s) per power, as (s, primes) pairs.
  struct AssExpectation {
    int power;
    std::vector<VertexSet> primes;
    bool exact;  // full set equality vs membership-only
  };
  std::vector<AssExpectation> expected_ass;

  /// Hat-sets that odd_cycle_certificates must emit.
  std::vector<VertexSet> expected_certificate_hats;
  bool check_certificates = false;
};

const std::vector<ExampleEntry>& all_entries();
const ExampleEntry& entry(const std::string& id);

enum class ReplayStatus { Pass, Fail, Skipped, ResourceLimited };

struct ReplayResult {
  std::string id;
  ReplayStatus status = ReplayStatus::Skipped;
  std::vector<std::string> details;
};

ReplayResult replay(const ExampleEntry& e, bool allow_heavy, const Limits& limits = {});

}  // namespace corpus
}  // namespace shadowprimes

#endif
