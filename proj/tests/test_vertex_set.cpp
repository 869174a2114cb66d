#include <doctest.h>

#include <algorithm>
#include <vector>

#include "shadowprimes/vertex_set.hpp"

using namespace shadowprimes;

TEST_CASE("seq_less is the lexicographic order on index sequences") {
  CHECK(seq_less(VertexSet::of({0, 1}), VertexSet::of({0, 1, 2})));
  CHECK(seq_less(VertexSet::of({0, 1, 2}), VertexSet::of({0, 2})));
  CHECK(seq_less(VertexSet::of({0, 2}), VertexSet::of({1})));
  CHECK(seq_less(VertexSet::of({0}), VertexSet::of({0, 1})));
  CHECK_FALSE(seq_less(VertexSet::of({0, 1}), VertexSet::of({0})));
  CHECK_FALSE(seq_less(VertexSet::of({1}), VertexSet::of({1})));
}

TEST_CASE("seq_less agrees with std::lexicographical_compare on all 6-element universes") {
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      auto ia = VertexSet{a}.indices();
      auto ib = VertexSet{b}.indices();
      bool expect =
          std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
      CHECK(seq_less(VertexSet{a}, VertexSet{b}) == expect);
    }
}

TEST_CASE("set algebra") {
  VertexSet s = VertexSet::of({1, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_index() == 1);
  CHECK(s.indices() == std::vector<int>{1, 3, 5});
  CHECK((s & VertexSet::of({3, 4})) == VertexSet::of({3}));
  CHECK((s | VertexSet::of({0})) == VertexSet::of({0, 1, 3, 5}));
  CHECK((s - VertexSet::of({3})) == VertexSet::of({1, 5}));
  CHECK(VertexSet::of({1, 3}).proper_subset_of(s));
  CHECK_FALSE(s.proper_subset_of(s));
  CHECK_THROWS_AS(s.insert(64), Error);
}
