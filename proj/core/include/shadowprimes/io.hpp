#ifndef SHADOWPRIMES_IO_HPP
#define SHADOWPRIMES_IO_HPP

#include <string>
#include <vector>

#include "shadowprimes/hypergraph.hpp"
#include "shadowprimes/monomial_ideal.hpp"
#include "shadowprimes/shadow_theory.hpp"

namespace shadowprimes {
namespace io {

/// Hypergraph document format: {"vertices": [names], "edges": [[names]]}.
/// Names match [A-Za-z_][A-Za-z0-9_]*.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph parse_hypergraph_file(const std::string& path);
/// Canonical emission: vertices as given, edges lexicographically.
std::string emit_hypergraph(const Hypergraph& h);

/// Monomial text syntax: x1^2*x2*x3 (exponent 1 omitted, "1" for the unit).
Monomial parse_monomial(const std::string& text, const Alphabet& alphabet);
std::string emit_monomial(const Monomial& m, const Alphabet& alphabet);

/// Ideal syntax: comma-separated monomials in parentheses; "(0)" is the zero
/// ideal.
MonomialIdeal parse_ideal(const std::string& text, const Alphabet& alphabet);
std::string emit_ideal(const MonomialIdeal& ideal);

std::string emit_vertex_set(VertexSet s, const Alphabet& alphabet);
std::string emit_prime_list(const std::vector<VertexSet>& primes, const Alphabet& alphabet);

enum class Format { Text, Structured };

std::string emit_ass_report(const AssReport& report, const Alphabet& alphabet, Format format);
std::string emit_certificates(const std::vector<CycleCertificate>& certs, const Alphabet& alphabet,
                              Format format);
std::string emit_persistence_report(const PersistenceReport& report, const Alphabet& alphabet,
                                    Format format);

}  // namespace io
}  // namespace shadowprimes

#endif
