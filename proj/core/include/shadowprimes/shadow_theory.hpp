#ifndef SHADOWPRIMES_SHADOW_THEORY_HPP
#define SHADOWPRIMES_SHADOW_THEORY_HPP

#include <optional>
#include <string>
#include <vector>

#include "shadowprimes/hypergraph.hpp"
#include "shadowprimes/limits.hpp"
#include "shadowprimes/monomial_ideal.hpp"

namespace shadowprimes {

enum class AssMethod { Localization, Decomposition, Oracle, Both };

const char* ass_method_name(AssMethod m);

/// Associated primes of a cover-ideal power, as index sets over the source
/// hypergraph's alphabet.
struct AssReport {
  int power = 1;
  AssMethod method = AssMethod::Decomposition;
  std::vector<VertexSet> primes;  // canonically sorted

  bool contains(VertexSet p) const;
};

/// Ass(J(H)^s). Localization iterates candidate subsets U and asks whether
/// the decomposition of J(H_U)^s has a full-support component; Decomposition
/// reads Ass off the full decomposition; Oracle uses the witness search.
/// Both runs localization and decomposition and asserts agreement.
AssReport ass_of_power(const Hypergraph& h, int s, AssMethod method = AssMethod::Decomposition,
                       const Limits& limits = {});

/// Ass(J(G)^2) for a graph, with no algebra: edge primes plus the supports of
/// chordless odd cycles.
AssReport classify_ass_square(const Hypergraph& g);

/// An odd-cycle subhypergraph of a shadow, together with the hat-set it
/// certifies as an associated prime of the square.
struct CycleCertificate {
  std::vector<int> cycle;  // indices over the parent alphabet, canonical rotation
  VertexSet host;          // the shadow vertex set
  VertexSet hat;
};

/// Certificates from every shadow of h: each chordless odd cycle that is a
/// subhypergraph of a shadow, reported once per distinct hat-set.
/// Every emitted hat is guaranteed to lie in Ass(J(H)^2).
std::vector<CycleCertificate> odd_cycle_certificates(const Hypergraph& h, const Limits& limits = {});

/// Certificates harvested from odd-cycle shadows of induced subhypergraphs.
/// Soundness is not taken on faith: each hat is re-checked against
/// ass_of_power(h, 2) and the result recorded per certificate.
struct VerifiedCertificate {
  CycleCertificate certificate;
  bool verified = false;
};
std::vector<VerifiedCertificate> subhypergraph_cycle_certificates(const Hypergraph& h,
                                                                  const Limits& limits = {});

/// The one-vertex-extension setup: an apex vertex lying in exactly one edge,
/// whose removal leaves a shadow.
struct OneVertexConfig {
  Hypergraph h;        // V = X + apex
  int apex = -1;       // index over h's alphabet
  VertexSet x_set;     // V minus apex
  VertexSet apex_edge; // e_y, the unique edge containing the apex
  VertexSet base_edge; // e = e_y minus apex
  Hypergraph shadow;   // H' on the X alphabet
  Hypergraph sub;      // H~ = H_X on the X alphabet

  const Alphabet& x_alphabet() const { return shadow.alphabet(); }
};

std::optional<OneVertexConfig> detect_one_vertex_config(const Hypergraph& h,
                                                        const std::string& apex_name);

/// H from H' by adding a fresh apex to one edge; H' becomes the shadow of the
/// result on its own vertex set.
OneVertexConfig extend_by_vertex(const Hypergraph& hp, std::size_t edge_index,
                                 const std::string& apex_name);

/// (J(H)^s : m) split as p_F + q with q inside (apex), valid whenever the
/// colon over the shadow is the variable prime p_F.
struct ColonDecomposition {
  VertexSet prime_part;   // F, over the X alphabet
  MonomialIdeal residual; // q, over the full alphabet; every generator divisible by apex
};

ColonDecomposition colon_decomposition(const OneVertexConfig& cfg, const Monomial& m, int s,
                                       const Limits& limits = {});

/// The two-way split for a witness m of a variable prime over the shadow:
/// either the colon over H stays p, or multiplying by a constructed monomial
/// reaches p + (apex). Certificates are re-verified by direct colons.
struct DichotomyResult {
  enum class Case { A, B };
  Case tag = Case::A;
  VertexSet certified_prime;  // over the full alphabet
  Monomial witness;           // over the full alphabet; m itself in case A
};

DichotomyResult tildeH_dichotomy(const OneVertexConfig& cfg, const Monomial& m, int s,
                                 const Limits& limits = {});

/// From p = p' + (apex) associated to J(H)^s, down to p' associated to
/// J(H')^s, provided p avoids Ass(J(H)^s : y).
enum class TransferOutcome { Transferred, ConditionFailed };

TransferOutcome transfer_down(const OneVertexConfig& cfg, VertexSet p, int s,
                              const Limits& limits = {});

/// Ass(J^s) for s = 1..s_max and the consecutive set differences.
struct PersistenceReport {
  std::vector<AssReport> per_power;            // index 0 = s = 1
  std::vector<std::vector<VertexSet>> losses;  // losses[i] = Ass(J^{i+1}) \ Ass(J^{i+2})
  bool holds() const;
};

PersistenceReport persistence_check(const Hypergraph& h, int s_max, const Limits& limits = {});

/// The four-hypothesis persistence transfer: when the apex setup, the shadow
/// facts and the two non-membership conditions all hold, p' + (apex) is
/// associated to J(H)^s but not to J(H)^{s+1}.
struct PersistenceTransferReport {
  bool apex_in_one_edge = false;       // condition 1
  bool shadow_exists = false;          // condition 2
  bool prime_in_shadow_s = false;      // p' in Ass(J(H')^s)
  bool prime_out_shadow_s1 = false;    // p' not in Ass(J(H')^{s+1})
  bool cond3_not_in_sub = false;       // p' not in Ass(J(H~)^s)
  bool cond4_not_in_colon = false;     // p'+(y) not in Ass(J(H)^{s+1} : y)
  bool conclusive = false;
  // Set only when conclusive: direct re-verification of the two memberships.
  std::optional<bool> verified_in_s;
  std::optional<bool> verified_out_s1;

  bool all_hypotheses() const {
    return apex_in_one_edge && shadow_exists && prime_in_shadow_s && prime_out_shadow_s1 &&
           cond3_not_in_sub && cond4_not_in_colon;
  }
};

PersistenceTransferReport persistence_transfer_check(const OneVertexConfig& cfg, int s,
                                                     VertexSet p_prime, bool reverify = true,
                                                     const Limits& limits = {});

}  // namespace shadowprimes

#endif
