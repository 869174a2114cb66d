#include "shadowprimes/monomial_ideal.hpp"

#include <algorithm>
#include <map>

namespace shadowprimes {

namespace {

// Divisibility-antichain generating the same ideal, lex-sorted. A unit
// generator collapses everything to {1}.
std::vector<Monomial> minimalize_gens(std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.is_one()) return {Monomial::one(g.nvars())};
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& k : kept)
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(Alphabet alphabet, std::vector<Monomial> gens)
    : alphabet_(std::move(alphabet)) {
  for (const Monomial& g : gens)
    if (g.nvars() != static_cast<std::size_t>(alphabet_.size()))
      fail(Errc::AlphabetMismatch, "generator has wrong exponent-vector length");
  gens_ = minimalize_gens(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(Alphabet alphabet) {
  std::size_t n = static_cast<std::size_t>(alphabet.size());
  return MonomialIdeal(std::move(alphabet), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::variable_prime(Alphabet alphabet, VertexSet u) {
  std::size_t n = static_cast<std::size_t>(alphabet.size());
  std::vector<Monomial> gens;
  for (int i : u.indices()) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(std::move(alphabet), std::move(gens));
}

VertexSet IrreducibleComponent::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    if (thresholds[i] > 0) s.insert(static_cast<int>(i));
  return s;
}

bool IrreducibleComponent::contains(const Monomial& m) const {
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    if (thresholds[i] > 0 && m.exps[i] >= thresholds[i]) return true;
  return false;
}

bool IrreducibleComponent::contains_ideal(const IrreducibleComponent& other) const {
  for (std::size_t i = 0; i < other.thresholds.size(); ++i)
    if (other.thresholds[i] > 0 &&
        (thresholds[i] == 0 || thresholds[i] > other.thresholds[i]))
      return false;
  return true;
}

MonomialIdeal IrreducibleComponent::to_ideal(const Alphabet& alphabet) const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    if (thresholds[i] > 0) {
      Monomial m(thresholds.size());
      m.exps[i] = thresholds[i];
      gens.push_back(std::move(m));
    }
  return MonomialIdeal(alphabet, std::move(gens));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != static_cast<std::size_t>(ideal.alphabet().size()))
    fail(Errc::AlphabetMismatch, "contains");
  for (const Monomial& g : ideal.generators())
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const Limits& limits) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "intersect");
  std::vector<Monomial> gens;
  for (const Monomial& g : a.generators()) {
    limits.check_deadline("intersect");
    limits.check_generators(gens.size(), "intersect");
    for (const Monomial& h : b.generators()) gens.push_back(g.lcm(h));
  }
  return MonomialIdeal(a.alphabet(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b, const Limits& limits) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "multiply");
  std::vector<Monomial> gens;
  for (const Monomial& g : a.generators()) {
    limits.check_deadline("multiply");
    limits.check_generators(gens.size(), "multiply");
    for (const Monomial& h : b.generators()) gens.push_back(g.times(h));
  }
  return MonomialIdeal(a.alphabet(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, int s, const Limits& limits) {
  if (s < 1) fail(Errc::PreconditionFailed, "power: exponent must be >= 1");
  MonomialIdeal acc = ideal;
  for (int k = 2; k <= s; ++k) {
    acc = multiply(acc, ideal, limits);
    limits.note("power: s=" + std::to_string(k) + ", " +
                std::to_string(acc.generators().size()) + " minimal generators");
  }
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != static_cast<std::size_t>(ideal.alphabet().size()))
    fail(Errc::AlphabetMismatch, "colon");
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.quotient_by(m));
  return MonomialIdeal(ideal.alphabet(), std::move(gens));
}

std::optional<VertexSet> prime_support_of(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) return std::nullopt;
  VertexSet u;
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() != 1) return std::nullopt;
    u = u | g.support();
  }
  return u;
}

namespace {

using Components = std::vector<IrreducibleComponent>;

// Exact-duplicate and ideal-containment pruning; a component containing
// another is redundant in the intersection.
void prune_contained(Components& comps) {
  std::vector<bool> drop(comps.size(), false);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (drop[i]) continue;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (comps[i].contains_ideal(comps[j])) {
        // Equal components: keep the lower index.
        if (comps[j].contains_ideal(comps[i]) && i < j) continue;
        drop[i] = true;
        break;
      }
    }
  }
  Components out;
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!drop[i]) out.push_back(comps[i]);
  comps = std::move(out);
}

struct Decomposer {
  const Limits& limits;
  std::size_t nvars;
  std::map<std::vector<Exponent>, Components> memo;

  std::vector<Exponent> key_of(const std::vector<Monomial>& gens) const {
    std::vector<Exponent> key;
    key.reserve(gens.size() * nvars);
    for (const Monomial& g : gens) key.insert(key.end(), g.exps.begin(), g.exps.end());
    return key;
  }

  Components run(const std::vector<Monomial>& gens) {
    limits.check_deadline("irreducible_decomposition");
    auto key = key_of(gens);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    limits.check_generators(memo.size(), "irreducible_decomposition (memo table)");

    const Monomial* mixed = nullptr;
    for (const Monomial& g : gens)
      if (g.support().size() >= 2) {
        mixed = &g;
        break;
      }
    Components result;
    if (!mixed) {
      // Pure powers of distinct variables: irreducible.
      IrreducibleComponent comp;
      comp.thresholds.assign(nvars, 0);
      for (const Monomial& g : gens) {
        int v = g.support().min_index();
        comp.thresholds[static_cast<std::size_t>(v)] = g.exps[static_cast<std::size_t>(v)];
      }
      result.push_back(std::move(comp));
    } else {
      // Split on the variable of largest exponent within the first mixed
      // generator.
      std::size_t v = 0;
      Exponent best = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (mixed->exps[i] > best) {
          best = mixed->exps[i];
          v = i;
        }
      Monomial pure(nvars);
      pure.exps[v] = best;
      Monomial rest = *mixed;
      rest.exps[v] = 0;

      std::vector<Monomial> left = gens;
      left.push_back(pure);
      std::vector<Monomial> right = gens;
      right.push_back(rest);
      result = run(minimalize_gens(std::move(left)));
      Components other = run(minimalize_gens(std::move(right)));
      result.insert(result.end(), other.begin(), other.end());
      prune_contained(result);
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

// Q_k is redundant iff the intersection of the others is contained in Q_k.
// The extremal monomial below is the divisibility-largest monomial outside
// Q_k, so the intersection reaches outside Q_k iff every other component
// contains it.
bool is_redundant(const Components& comps, std::size_t k) {
  if (comps.size() == 1) return false;
  std::size_t nvars = comps[k].thresholds.size();
  Monomial extremal(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    extremal.exps[i] = comps[k].thresholds[i] > 0
                           ? static_cast<Exponent>(comps[k].thresholds[i] - 1)
                           : static_cast<Exponent>(kMaxExponent);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j == k) continue;
    if (!comps[j].contains(extremal)) return true;
  }
  return false;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal,
                                                            const Limits& limits) {
  if (!ideal.is_proper())
    fail(Errc::ZeroOrUnitIdeal, "irreducible_decomposition requires a proper nonzero ideal");
  Decomposer decomposer{limits, static_cast<std::size_t>(ideal.alphabet().size()), {}};
  Components comps = decomposer.run(ideal.generators());
  prune_contained(comps);
  // Irredundancy is enforced exactly, one removal at a time.
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (is_redundant(comps, k)) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(k));
        removed = true;
        break;
      }
  }
  std::sort(comps.begin(), comps.end(), [](const IrreducibleComponent& a,
                                           const IrreducibleComponent& b) {
    if (a.support() != b.support()) return seq_less(a.support(), b.support());
    return a.thresholds < b.thresholds;
  });
  return comps;
}

std::vector<VertexSet> associated_primes(const MonomialIdeal& ideal, const Limits& limits) {
  auto comps = irreducible_decomposition(ideal, limits);
  std::vector<VertexSet> primes;
  primes.reserve(comps.size());
  for (const auto& c : comps) primes.push_back(c.support());
  std::sort(primes.begin(), primes.end(), SeqLess{});
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

MonomialIdeal cover_ideal(const Hypergraph& h, const Limits& limits) {
  if (h.edge_count() == 0) fail(Errc::NoEdges, "cover_ideal requires at least one edge");
  // Route one: intersection of edge primes.
  MonomialIdeal by_primes = MonomialIdeal::variable_prime(h.alphabet(), h.edges().front());
  for (std::size_t i = 1; i < h.edge_count(); ++i)
    by_primes =
        intersect(by_primes, MonomialIdeal::variable_prime(h.alphabet(), h.edges()[i]), limits);
  // Route two: monomials of minimal vertex covers.
  std::vector<Monomial> cover_gens;
  for (VertexSet t : minimal_vertex_covers(h))
    cover_gens.push_back(Monomial::of_set(static_cast<std::size_t>(h.alphabet().size()), t));
  MonomialIdeal by_covers(h.alphabet(), std::move(cover_gens));
  if (!(by_primes == by_covers))
    fail(Errc::ValidationError, "cover_ideal: edge-prime and vertex-cover routes disagree");
  return by_primes;
}

MonomialIdeal embed(const MonomialIdeal& ideal, const Alphabet& target) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(embed(g, ideal.alphabet(), target));
  return MonomialIdeal(target, std::move(gens));
}

Monomial embed(const Monomial& m, const Alphabet& source, const Alphabet& target) {
  Monomial out(static_cast<std::size_t>(target.size()));
  for (std::size_t i = 0; i < m.exps.size(); ++i)
    if (m.exps[i] > 0)
      out.exps[static_cast<std::size_t>(target.require(source.name(static_cast<int>(i))))] =
          m.exps[i];
  return out;
}

}  // namespace shadowprimes
