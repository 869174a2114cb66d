#include <doctest.h>

#include <chrono>

#include "shadowprimes/corpus.hpp"

using namespace shadowprimes;

TEST_CASE("every desk-scale corpus entry replays to PASS") {
  for (const auto& e : corpus::all_entries()) {
    if (e.heavy) continue;
    auto r = corpus::replay(e, false);
    INFO(e.id);
    CHECK(r.status == corpus::ReplayStatus::Pass);
  }
}

TEST_CASE("heavy entries are flagged and skip without the opt-in") {
  int heavy = 0;
  for (const auto& e : corpus::all_entries())
    if (e.heavy) {
      ++heavy;
      auto r = corpus::replay(e, false);
      CHECK(r.status == corpus::ReplayStatus::Skipped);
    }
  CHECK(heavy == 2);
}

TEST_CASE("heavy replay under a budget checkpoints and stops at the limit") {
  Limits limits;
  limits.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(20);
  int notes = 0;
  limits.progress = [&notes](const std::string&) { ++notes; };
  auto r = corpus::replay(corpus::entry("h4-fails"), true, limits);
  CHECK((r.status == corpus::ReplayStatus::ResourceLimited ||
         r.status == corpus::ReplayStatus::Pass));
  CHECK(notes > 0);
}

TEST_CASE("entry lookup") {
  CHECK(corpus::entry("triangles").hypergraph.vertex_count() == 5);
  CHECK(corpus::all_entries().size() == 9);
  CHECK_THROWS_AS(corpus::entry("no-such-example"), Error);
}
