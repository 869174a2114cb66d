#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "shadowprimes/io.hpp"
#include "shadowprimes/monomial_ideal.hpp"

using namespace shadowprimes;

namespace {

MonomialIdeal ideal(const char* text, const Alphabet& a) { return io::parse_ideal(text, a); }

MonomialIdeal intersection_of_components(const std::vector<IrreducibleComponent>& comps,
                                         const Alphabet& a) {
  MonomialIdeal acc = comps.front().to_ideal(a);
  for (std::size_t i = 1; i < comps.size(); ++i) acc = intersect(acc, comps[i].to_ideal(a));
  return acc;
}

}  // namespace

TEST_CASE("generators form the unique minimal antichain") {
  Alphabet a(testgen::var_names(3));
  MonomialIdeal i = ideal("(x1^2, x1^2*x2, x3, x1*x3)", a);
  CHECK(i == ideal("(x1^2, x3)", a));
  CHECK(MonomialIdeal::unit(a).is_unit());
  CHECK(MonomialIdeal::zero(a).is_zero());
  CHECK(ideal("(x1, 1)", a).is_unit());
}

TEST_CASE("membership by generator divisibility") {
  Alphabet a(testgen::var_names(2));
  MonomialIdeal i = ideal("(x1^2, x1*x2)", a);
  CHECK(contains(i, io::parse_monomial("x1^3", a)));
  CHECK(contains(i, io::parse_monomial("x1*x2^4", a)));
  CHECK_FALSE(contains(i, io::parse_monomial("x2^9", a)));
  CHECK_FALSE(contains(i, io::parse_monomial("1", a)));
}

TEST_CASE("intersection and product memberships on random ideals") {
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal p = testgen::random_proper_ideal(rng, 4, 5, 3);
    MonomialIdeal q(p.alphabet(),
                    {testgen::random_monomial(rng, p.alphabet().names().size(), 3),
                     testgen::random_monomial(rng, p.alphabet().names().size(), 3)});
    if (q.is_zero()) continue;
    for (int probe = 0; probe < 20; ++probe) {
      Monomial m = testgen::random_monomial(rng, p.alphabet().names().size(), 5);
      CHECK(contains(intersect(p, q), m) == (contains(p, m) && contains(q, m)));
      if (contains(multiply(p, q), m)) CHECK(contains(intersect(p, q), m));
    }
  }
}

TEST_CASE("colon membership: n in (I : m) iff n*m in I") {
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal i = testgen::random_proper_ideal(rng, 5, 6, 3);
    std::size_t n = i.alphabet().names().size();
    Monomial m = testgen::random_monomial(rng, n, 3);
    MonomialIdeal quot = colon(i, m);
    for (int probe = 0; probe < 20; ++probe) {
      Monomial t = testgen::random_monomial(rng, n, 4);
      CHECK(contains(quot, t) == contains(i, t.times(m)));
    }
  }
}

TEST_CASE("powers nest and contain all s-fold products") {
  std::mt19937 rng(20240816);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal i = testgen::random_proper_ideal(rng, 4, 4, 2);
    MonomialIdeal i2 = power(i, 2);
    MonomialIdeal i3 = power(i, 3);
    CHECK(i3 == multiply(i2, i));
    for (const Monomial& g : i3.generators()) CHECK(contains(i2, g));
    for (const Monomial& g : i2.generators()) CHECK(contains(i, g));
  }
}

TEST_CASE("irreducible decomposition reconstructs the ideal and is irredundant") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal i = testgen::random_proper_ideal(rng, 4, 5, 3);
    auto comps = irreducible_decomposition(i);
    REQUIRE(!comps.empty());
    CHECK(intersection_of_components(comps, i.alphabet()) == i);
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (comps.size() == 1) break;
      auto rest = comps;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(intersection_of_components(rest, i.alphabet()) != i);
    }
  }
}

TEST_CASE("worked decomposition") {
  Alphabet a(testgen::var_names(2));
  auto comps = irreducible_decomposition(ideal("(x1^2, x1*x2)", a));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].to_ideal(a) == ideal("(x1)", a));
  CHECK(comps[1].to_ideal(a) == ideal("(x1^2, x2)", a));
  auto primes = associated_primes(ideal("(x1^2, x1*x2)", a));
  CHECK(primes == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({0, 1})});
}

TEST_CASE("prime_support_of recognizes variable primes only") {
  Alphabet a(testgen::var_names(3));
  CHECK(prime_support_of(ideal("(x1, x3)", a)) == VertexSet::of({0, 2}));
  CHECK_FALSE(prime_support_of(ideal("(x1, x2*x3)", a)).has_value());
  CHECK_FALSE(prime_support_of(ideal("(x1^2, x2)", a)).has_value());
  CHECK_FALSE(prime_support_of(MonomialIdeal::unit(a)).has_value());
  CHECK_FALSE(prime_support_of(MonomialIdeal::zero(a)).has_value());
}

TEST_CASE("cover ideal: both constructions agree on random clutters") {
  std::mt19937 rng(20240818);
  for (int trial = 0; trial < 200; ++trial) {
    Hypergraph h = testgen::random_hypergraph(rng, 9, 7);
    // cover_ideal throws ValidationError if the edge-prime intersection and
    // the minimal-cover generators ever disagree.
    MonomialIdeal j = cover_ideal(h);
    CHECK(j.is_proper());
    for (const Monomial& g : j.generators())
      for (VertexSet e : h.edges()) CHECK(g.support().intersects(e));
  }
}

TEST_CASE("embed is a cone map by variable name") {
  Alphabet small({"b", "d"});
  Alphabet big({"a", "b", "c", "d"});
  MonomialIdeal i = ideal("(b^2, b*d)", small);
  MonomialIdeal lifted = embed(i, big);
  CHECK(lifted == ideal("(b^2, b*d)", big));
  CHECK_THROWS_AS(embed(ideal("(b)", small), Alphabet({"a"})), Error);
}

TEST_CASE("generator ceiling raises ResourceLimit") {
  std::mt19937 rng(20240819);
  MonomialIdeal i = testgen::random_proper_ideal(rng, 5, 6, 3);
  Limits tight;
  tight.max_generators = 4;
  bool hit = false;
  try {
    power(i, 4, tight);
  } catch (const Error& e) {
    hit = e.code() == Errc::ResourceLimit;
  }
  CHECK(hit);
}
