#include "shadowprimes/shadow_theory.hpp"

#include <algorithm>
#include <map>

#include "shadowprimes/oracle.hpp"

namespace shadowprimes {

const char* ass_method_name(AssMethod m) {
  switch (m) {
    case AssMethod::Localization: return "localization";
    case AssMethod::Decomposition: return "decomposition";
    case AssMethod::Oracle: return "oracle";
    case AssMethod::Both: return "both";
  }
  return "?";
}

bool AssReport::contains(VertexSet p) const {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

namespace {

std::vector<VertexSet> sorted_primes(std::vector<VertexSet> primes) {
  std::sort(primes.begin(), primes.end(), SeqLess{});
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::vector<VertexSet> ass_by_decomposition(const Hypergraph& h, int s, const Limits& limits) {
  return associated_primes(power(cover_ideal(h, limits), s, limits), limits);
}

std::vector<VertexSet> ass_by_localization(const Hypergraph& h, int s, const Limits& limits) {
  int n = h.vertex_count();
  if (n > limits.max_enum_vertices)
    fail(Errc::ResourceLimit, "ass_of_power(localization): " + std::to_string(n) +
                                  " vertices exceeds the subset-enumeration cap");
  std::vector<VertexSet> primes;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    limits.check_deadline("ass_of_power(localization)");
    VertexSet u{mask};
    // p_U needs a witness colon over H_U, so U must be covered by the edges
    // inside it and must contain at least one of them.
    VertexSet covered;
    bool has_edge = false;
    for (VertexSet e : h.edges())
      if (e.subset_of(u)) {
        has_edge = true;
        covered = covered | e;
      }
    if (!has_edge || covered != u) continue;
    Hypergraph local = induced_subhypergraph(h, u);
    auto comps = irreducible_decomposition(power(cover_ideal(local, limits), s, limits), limits);
    VertexSet full = local.alphabet().full_set();
    for (const auto& comp : comps)
      if (comp.support() == full) {
        primes.push_back(u);
        break;
      }
  }
  return sorted_primes(std::move(primes));
}

}  // namespace

AssReport ass_of_power(const Hypergraph& h, int s, AssMethod method, const Limits& limits) {
  if (s < 1) fail(Errc::PreconditionFailed, "ass_of_power: power must be >= 1");
  if (h.edge_count() == 0) fail(Errc::NoEdges, "ass_of_power requires at least one edge");
  AssReport report;
  report.power = s;
  report.method = method;
  switch (method) {
    case AssMethod::Decomposition:
      report.primes = sorted_primes(ass_by_decomposition(h, s, limits));
      break;
    case AssMethod::Localization:
      report.primes = ass_by_localization(h, s, limits);
      break;
    case AssMethod::Oracle:
      report.primes =
          sorted_primes(oracle::ass_by_witness(power(cover_ideal(h, limits), s, limits), 1, limits));
      break;
    case AssMethod::Both: {
      auto loc = ass_by_localization(h, s, limits);
      auto dec = sorted_primes(ass_by_decomposition(h, s, limits));
      if (loc != dec)
        fail(Errc::ValidationError, "ass_of_power: localization and decomposition disagree");
      report.primes = std::move(dec);
      break;
    }
  }
  return report;
}

AssReport classify_ass_square(const Hypergraph& g) {
  if (!g.is_graph()) fail(Errc::NotAGraph, "classify_ass_square requires a graph");
  std::vector<VertexSet> primes(g.edges().begin(), g.edges().end());
  for (const auto& cycle : chordless_odd_cycles(g)) {
    VertexSet support;
    for (int v : cycle) support.insert(v);
    primes.push_back(support);
  }
  AssReport report;
  report.power = 2;
  report.method = AssMethod::Decomposition;
  report.primes = sorted_primes(std::move(primes));
  return report;
}

namespace {

// The odd cycle must be the full induced subhypergraph of the shadow on its
// vertex set: no chord and no larger edge inside.
bool cycle_is_subhypergraph(const Hypergraph& shadow, const std::vector<int>& cycle) {
  VertexSet cycle_set;
  for (int v : cycle) cycle_set.insert(v);
  std::vector<VertexSet> cycle_edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    VertexSet e;
    e.insert(cycle[i]);
    e.insert(cycle[(i + 1) % cycle.size()]);
    cycle_edges.push_back(e);
  }
  std::sort(cycle_edges.begin(), cycle_edges.end(), SeqLess{});
  std::vector<VertexSet> inside;
  for (VertexSet e : shadow.edges())
    if (e.subset_of(cycle_set)) inside.push_back(e);
  return inside == cycle_edges;
}

Hypergraph two_edge_graph(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges())
    if (e.size() == 2) edges.push_back(e);
  return Hypergraph::from_sets(h.alphabet(), std::move(edges));
}

}  // namespace

std::vector<CycleCertificate> odd_cycle_certificates(const Hypergraph& h, const Limits& limits) {
  std::map<std::uint64_t, CycleCertificate> by_hat;
  for (const Hypergraph& shadow : enumerate_shadows(h, limits)) {
    VertexSet vp = embed_indices(shadow.alphabet().full_set(), shadow.alphabet(), h.alphabet());
    for (const auto& cycle : chordless_odd_cycles(two_edge_graph(shadow))) {
      if (!cycle_is_subhypergraph(shadow, cycle)) continue;
      CycleCertificate cert;
      VertexSet cycle_set;
      for (int v : cycle) {
        int parent = h.alphabet().require(shadow.alphabet().name(v));
        cert.cycle.push_back(parent);
        cycle_set.insert(v);
      }
      cert.host = vp;
      cert.hat = hat_set(h, vp, embed_indices(cycle_set, shadow.alphabet(), h.alphabet()));
      auto [it, inserted] = by_hat.emplace(cert.hat.bits, cert);
      if (!inserted) {
        // One entry per hat-support; keep the first in (host, cycle) order.
        CycleCertificate& kept = it->second;
        if (seq_less(cert.host, kept.host) ||
            (cert.host == kept.host && cert.cycle < kept.cycle))
          kept = cert;
      }
    }
  }
  std::vector<CycleCertificate> out;
  out.reserve(by_hat.size());
  for (auto& [bits, cert] : by_hat) out.push_back(std::move(cert));
  std::sort(out.begin(), out.end(), [](const CycleCertificate& a, const CycleCertificate& b) {
    return seq_less(a.hat, b.hat);
  });
  return out;
}

namespace {

bool is_odd_cycle_hypergraph(const Hypergraph& h) {
  if (!h.is_graph()) return false;
  std::size_t n = static_cast<std::size_t>(h.vertex_count());
  if (h.edge_count() != n || n < 3 || n % 2 == 0) return false;
  std::vector<int> degree(n, 0);
  for (VertexSet e : h.edges()) {
    if (e.size() != 2) return false;
    for (int v : e.indices()) ++degree[static_cast<std::size_t>(v)];
  }
  for (int d : degree)
    if (d != 2) return false;
  // Degree-2 everywhere with |E| = |V|: connected iff a single cycle.
  VertexSet reached;
  reached.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet e : h.edges())
      if (e.intersects(reached) && !e.subset_of(reached)) {
        reached = reached | e;
        grew = true;
      }
  }
  return reached == h.alphabet().full_set();
}

}  // namespace

std::vector<VerifiedCertificate> subhypergraph_cycle_certificates(const Hypergraph& h,
                                                                  const Limits& limits) {
  int n = h.vertex_count();
  if (n > limits.max_enum_vertices)
    fail(Errc::ResourceLimit, "subhypergraph_cycle_certificates: vertex count exceeds cap");
  AssReport square = ass_of_power(h, 2, AssMethod::Decomposition, limits);
  std::map<std::uint64_t, VerifiedCertificate> by_hat;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    limits.check_deadline("subhypergraph_cycle_certificates");
    VertexSet u{mask};
    Hypergraph sub = induced_subhypergraph(h, u);
    if (sub.edge_count() == 0) continue;
    for (const Hypergraph& shadow : enumerate_shadows(sub, limits)) {
      if (!is_odd_cycle_hypergraph(shadow)) continue;
      // The hat of the whole cycle relative to the subhypergraph: the union
      // of all its edges.
      VertexSet hat_local;
      for (VertexSet e : sub.edges()) hat_local = hat_local | e;
      VertexSet hat = embed_indices(hat_local, sub.alphabet(), h.alphabet());
      VerifiedCertificate vc;
      for (const auto& cycle : chordless_odd_cycles(shadow))
        if (cycle.size() == static_cast<std::size_t>(shadow.vertex_count())) {
          for (int v : cycle)
            vc.certificate.cycle.push_back(h.alphabet().require(shadow.alphabet().name(v)));
          break;
        }
      vc.certificate.host =
          embed_indices(shadow.alphabet().full_set(), shadow.alphabet(), h.alphabet());
      vc.certificate.hat = hat;
      vc.verified = square.contains(hat);
      by_hat.emplace(hat.bits, std::move(vc));
    }
  }
  std::vector<VerifiedCertificate> out;
  for (auto& [bits, vc] : by_hat) out.push_back(std::move(vc));
  std::sort(out.begin(), out.end(), [](const VerifiedCertificate& a, const VerifiedCertificate& b) {
    return seq_less(a.certificate.hat, b.certificate.hat);
  });
  return out;
}

std::optional<OneVertexConfig> detect_one_vertex_config(const Hypergraph& h,
                                                        const std::string& apex_name) {
  int apex = h.alphabet().require(apex_name);
  std::optional<VertexSet> apex_edge;
  for (VertexSet e : h.edges())
    if (e.contains(apex)) {
      if (apex_edge) return std::nullopt;  // apex in more than one edge
      apex_edge = e;
    }
  if (!apex_edge) return std::nullopt;
  VertexSet x_set = h.alphabet().full_set();
  x_set.erase(apex);
  auto shadow = shadow_on(h, x_set);
  if (!shadow) return std::nullopt;
  OneVertexConfig cfg;
  cfg.h = h;
  cfg.apex = apex;
  cfg.x_set = x_set;
  cfg.apex_edge = *apex_edge;
  cfg.base_edge = *apex_edge - VertexSet::of({apex});
  cfg.shadow = std::move(*shadow);
  cfg.sub = induced_subhypergraph(h, x_set);
  return cfg;
}

OneVertexConfig extend_by_vertex(const Hypergraph& hp, std::size_t edge_index,
                                 const std::string& apex_name) {
  if (edge_index >= hp.edge_count())
    fail(Errc::IndexOutOfRange, "edge index " + std::to_string(edge_index));
  std::vector<std::string> names = hp.alphabet().names();
  names.push_back(apex_name);  // Alphabet rejects a duplicate apex
  Alphabet extended(std::move(names));
  int apex = extended.size() - 1;
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < hp.edge_count(); ++i) {
    VertexSet e = embed_indices(hp.edges()[i], hp.alphabet(), extended);
    if (i == edge_index) e.insert(apex);
    edges.push_back(e);
  }
  Hypergraph h = Hypergraph::from_sets(std::move(extended), std::move(edges));
  auto cfg = detect_one_vertex_config(h, apex_name);
  if (!cfg)
    fail(Errc::ValidationError, "extend_by_vertex: extension did not yield a one-vertex config");
  return std::move(*cfg);
}

namespace {

// Requires (J(H')^s : m) to be a variable prime; returns F.
VertexSet require_shadow_prime(const OneVertexConfig& cfg, const Monomial& m, int s,
                               const Limits& limits) {
  MonomialIdeal shadow_power = power(cover_ideal(cfg.shadow, limits), s, limits);
  auto f = prime_support_of(colon(shadow_power, m));
  if (!f)
    fail(Errc::PreconditionFailed,
         "(J(H')^s : m) is not a prime generated by variables");
  return *f;
}

}  // namespace

ColonDecomposition colon_decomposition(const OneVertexConfig& cfg, const Monomial& m, int s,
                                       const Limits& limits) {
  VertexSet f = require_shadow_prime(cfg, m, s, limits);
  const Alphabet& full = cfg.h.alphabet();
  Monomial m_full = embed(m, cfg.x_alphabet(), full);
  MonomialIdeal full_colon = colon(power(cover_ideal(cfg.h, limits), s, limits), m_full);
  VertexSet f_full = embed_indices(f, cfg.x_alphabet(), full);
  VertexSet prime_seen;
  std::vector<Monomial> residual;
  for (const Monomial& g : full_colon.generators()) {
    if (g.degree() == 1 && g.support().subset_of(f_full)) {
      prime_seen = prime_seen | g.support();
      continue;
    }
    if (g.exps[static_cast<std::size_t>(cfg.apex)] == 0)
      fail(Errc::ValidationError,
           "colon_decomposition: residual generator not divisible by the apex");
    residual.push_back(g);
  }
  if (prime_seen != f_full)
    fail(Errc::ValidationError, "colon_decomposition: variable part differs from F");
  ColonDecomposition out;
  out.prime_part = f;
  out.residual = MonomialIdeal(full, std::move(residual));
  return out;
}

DichotomyResult tildeH_dichotomy(const OneVertexConfig& cfg, const Monomial& m, int s,
                                 const Limits& limits) {
  VertexSet f = require_shadow_prime(cfg, m, s, limits);
  const Alphabet& full = cfg.h.alphabet();
  Monomial m_full = embed(m, cfg.x_alphabet(), full);
  VertexSet f_full = embed_indices(f, cfg.x_alphabet(), full);
  MonomialIdeal full_power = power(cover_ideal(cfg.h, limits), s, limits);

  auto sub_colon = prime_support_of(colon(power(cover_ideal(cfg.sub, limits), s, limits), m));
  DichotomyResult result;
  if (sub_colon && *sub_colon == f) {
    result.tag = DichotomyResult::Case::A;
    result.certified_prime = f_full;
    result.witness = m_full;
    auto direct = prime_support_of(colon(full_power, m_full));
    if (!direct || *direct != f_full)
      fail(Errc::ValidationError, "tildeH_dichotomy: case A certificate failed re-verification");
  } else {
    // Constructive case B: the minimal apex-degree generator of the residual
    // supplies the witness m * T / y.
    ColonDecomposition split = colon_decomposition(cfg, m, s, limits);
    if (split.residual.is_zero())
      fail(Errc::ValidationError, "tildeH_dichotomy: empty residual in case B");
    const Monomial* best = nullptr;
    std::size_t apex = static_cast<std::size_t>(cfg.apex);
    for (const Monomial& t : split.residual.generators()) {
      if (!best || t.exps[apex] < best->exps[apex] ||
          (t.exps[apex] == best->exps[apex] && lex_less(t, *best)))
        best = &t;
    }
    Monomial witness = m_full.times(*best);
    witness.exps[apex] = static_cast<Exponent>(witness.exps[apex] - 1);
    result.tag = DichotomyResult::Case::B;
    result.certified_prime = f_full | VertexSet::of({cfg.apex});
    result.witness = witness;
    auto direct = prime_support_of(colon(full_power, witness));
    if (!direct || *direct != result.certified_prime)
      fail(Errc::ValidationError, "tildeH_dichotomy: case B certificate failed re-verification");
  }
  return result;
}

TransferOutcome transfer_down(const OneVertexConfig& cfg, VertexSet p, int s,
                              const Limits& limits) {
  if (!p.contains(cfg.apex))
    fail(Errc::PreconditionFailed, "transfer_down: prime does not contain the apex");
  AssReport full = ass_of_power(cfg.h, s, AssMethod::Decomposition, limits);
  if (!full.contains(p))
    fail(Errc::PreconditionFailed, "transfer_down: prime is not associated to J(H)^s");
  Monomial y = Monomial::variable(static_cast<std::size_t>(cfg.h.alphabet().size()), cfg.apex);
  MonomialIdeal quotient = colon(power(cover_ideal(cfg.h, limits), s, limits), y);
  std::vector<VertexSet> quotient_ass;
  if (quotient.is_proper()) quotient_ass = associated_primes(quotient, limits);
  if (std::find(quotient_ass.begin(), quotient_ass.end(), p) != quotient_ass.end())
    return TransferOutcome::ConditionFailed;
  VertexSet p_prime = p - VertexSet::of({cfg.apex});
  VertexSet p_prime_x = embed_indices(p_prime, cfg.h.alphabet(), cfg.x_alphabet());
  AssReport shadow_ass = ass_of_power(cfg.shadow, s, AssMethod::Decomposition, limits);
  if (!shadow_ass.contains(p_prime_x))
    fail(Errc::ValidationError, "transfer_down: transferred prime failed re-verification");
  return TransferOutcome::Transferred;
}

bool PersistenceReport::holds() const {
  return std::all_of(losses.begin(), losses.end(),
                     [](const std::vector<VertexSet>& l) { return l.empty(); });
}

PersistenceReport persistence_check(const Hypergraph& h, int s_max, const Limits& limits) {
  if (s_max < 2) fail(Errc::PreconditionFailed, "persistence_check: s_max must be >= 2");
  PersistenceReport report;
  for (int s = 1; s <= s_max; ++s) {
    limits.note("persistence_check: computing Ass(J^" + std::to_string(s) + ")");
    report.per_power.push_back(ass_of_power(h, s, AssMethod::Decomposition, limits));
  }
  for (int s = 0; s + 1 < s_max; ++s) {
    std::vector<VertexSet> lost;
    const auto& now = report.per_power[static_cast<std::size_t>(s)].primes;
    const auto& next = report.per_power[static_cast<std::size_t>(s) + 1];
    for (VertexSet p : now)
      if (!next.contains(p)) lost.push_back(p);
    report.losses.push_back(std::move(lost));
  }
  return report;
}

PersistenceTransferReport persistence_transfer_check(const OneVertexConfig& cfg, int s,
                                                     VertexSet p_prime, bool reverify,
                                                     const Limits& limits) {
  if (!p_prime.subset_of(cfg.x_alphabet().full_set()))
    fail(Errc::PreconditionFailed, "persistence_transfer_check: p' must live over X");
  PersistenceTransferReport report;
  report.apex_in_one_edge = true;  // by construction of the config
  report.shadow_exists = true;

  AssReport shadow_s = ass_of_power(cfg.shadow, s, AssMethod::Decomposition, limits);
  AssReport shadow_s1 = ass_of_power(cfg.shadow, s + 1, AssMethod::Decomposition, limits);
  report.prime_in_shadow_s = shadow_s.contains(p_prime);
  report.prime_out_shadow_s1 = !shadow_s1.contains(p_prime);

  if (cfg.sub.edge_count() == 0) {
    // Edgeless H~: the cover ideal is the unit ideal, so Ass is empty.
    report.cond3_not_in_sub = true;
  } else {
    AssReport sub_s = ass_of_power(cfg.sub, s, AssMethod::Decomposition, limits);
    report.cond3_not_in_sub = !sub_s.contains(p_prime);
  }

  VertexSet p_full =
      embed_indices(p_prime, cfg.x_alphabet(), cfg.h.alphabet()) | VertexSet::of({cfg.apex});
  Monomial y = Monomial::variable(static_cast<std::size_t>(cfg.h.alphabet().size()), cfg.apex);
  MonomialIdeal quotient = colon(power(cover_ideal(cfg.h, limits), s + 1, limits), y);
  std::vector<VertexSet> quotient_ass;
  if (quotient.is_proper()) quotient_ass = associated_primes(quotient, limits);
  report.cond4_not_in_colon =
      std::find(quotient_ass.begin(), quotient_ass.end(), p_full) == quotient_ass.end();

  report.conclusive = report.all_hypotheses();
  if (report.conclusive && reverify) {
    report.verified_in_s = ass_of_power(cfg.h, s, AssMethod::Decomposition, limits).contains(p_full);
    report.verified_out_s1 =
        !ass_of_power(cfg.h, s + 1, AssMethod::Decomposition, limits).contains(p_full);
  }
  return report;
}

}  // namespace shadowprimes
