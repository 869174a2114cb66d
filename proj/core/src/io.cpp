#include "shadowprimes/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shadowprimes {
namespace io {

using nlohmann::ordered_json;

namespace {

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    fail(Errc::ParseError, "expected an object with \"vertices\" and \"edges\"");
  std::vector<std::string> vertices;
  if (!doc["vertices"].is_array()) fail(Errc::ParseError, "\"vertices\" must be a list of names");
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) fail(Errc::ParseError, "vertex names must be strings");
    std::string name = v.get<std::string>();
    if (!valid_name(name)) fail(Errc::ParseError, "invalid vertex name: " + name);
    vertices.push_back(std::move(name));
  }
  std::vector<std::vector<std::string>> edges;
  if (!doc["edges"].is_array()) fail(Errc::ParseError, "\"edges\" must be a list of name lists");
  for (const auto& e : doc["edges"]) {
    if (!e.is_array()) fail(Errc::ParseError, "each edge must be a list of names");
    std::vector<std::string> edge;
    for (const auto& v : e) {
      if (!v.is_string()) fail(Errc::ParseError, "edge members must be strings");
      edge.push_back(v.get<std::string>());
    }
    edges.push_back(std::move(edge));
  }
  try {
    return Hypergraph::build(std::move(vertices), edges);
  } catch (const Error& e) {
    if (e.code() == Errc::NestedEdges || e.code() == Errc::DuplicateEdge ||
        e.code() == Errc::EmptyEdge)
      fail(Errc::ValidationError, e.what());
    throw;
  }
}

Hypergraph parse_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

std::string emit_hypergraph(const Hypergraph& h) {
  ordered_json doc;
  doc["vertices"] = h.alphabet().names();
  ordered_json edges = ordered_json::array();
  for (VertexSet e : h.edges()) edges.push_back(h.alphabet().names_of(e));
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

Monomial parse_monomial(const std::string& text, const Alphabet& alphabet) {
  Monomial m(static_cast<std::size_t>(alphabet.size()));
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1' && [&] {
        std::size_t look = pos + 1;
        while (look < text.size() && std::isspace(static_cast<unsigned char>(text[look]))) ++look;
        return look == text.size();
      }())
    return m;
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_factor) {
      if (text[pos] != '*') fail(Errc::ParseError, "expected '*' in monomial at position " +
                                                       std::to_string(pos));
      ++pos;
      skip_ws();
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail(Errc::ParseError, "expected a variable name in monomial");
    std::string name = text.substr(start, pos - start);
    auto idx = alphabet.index_of(name);
    if (!idx) fail(Errc::ParseError, "unknown variable: " + name);
    unsigned long exponent = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (dstart == pos) fail(Errc::ParseError, "expected an exponent after '^'");
      exponent = std::stoul(text.substr(dstart, pos - dstart));
      if (exponent == 0 || exponent > kMaxExponent)
        fail(Errc::ParseError, "exponent out of range");
    }
    unsigned long total = m.exps[static_cast<std::size_t>(*idx)] + exponent;
    if (total > kMaxExponent) fail(Errc::ParseError, "exponent out of range");
    m.exps[static_cast<std::size_t>(*idx)] = static_cast<Exponent>(total);
    expect_factor = false;
    skip_ws();
  }
  if (expect_factor) fail(Errc::ParseError, "empty monomial");
  return m;
}

std::string emit_monomial(const Monomial& m, const Alphabet& alphabet) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += alphabet.name(static_cast<int>(i));
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out;
}

MonomialIdeal parse_ideal(const std::string& text, const Alphabet& alphabet) {
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(Errc::ParseError, "ideal syntax is (m1, m2, ...)");
  std::string body = text.substr(open + 1, close - open - 1);
  std::vector<Monomial> gens;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t comma = body.find(',', start);
    std::string part =
        comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
    std::size_t a = part.find_first_not_of(" \t");
    if (a != std::string::npos) {
      std::size_t b = part.find_last_not_of(" \t");
      std::string trimmed = part.substr(a, b - a + 1);
      if (trimmed != "0") gens.push_back(parse_monomial(trimmed, alphabet));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return MonomialIdeal(alphabet, std::move(gens));
}

std::string emit_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) out += ", ";
    out += emit_monomial(ideal.generators()[i], ideal.alphabet());
  }
  return out + ")";
}

std::string emit_vertex_set(VertexSet s, const Alphabet& alphabet) {
  std::string out = "(";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += alphabet.name(i);
    first = false;
  }
  return out + ")";
}

std::string emit_prime_list(const std::vector<VertexSet>& primes, const Alphabet& alphabet) {
  std::string out;
  for (VertexSet p : primes) {
    if (!out.empty()) out += " ";
    out += emit_vertex_set(p, alphabet);
  }
  return out;
}

namespace {

ordered_json prime_to_json(VertexSet p, const Alphabet& alphabet) {
  return ordered_json(alphabet.names_of(p));
}

}  // namespace

std::string emit_ass_report(const AssReport& report, const Alphabet& alphabet, Format format) {
  if (format == Format::Text) {
    std::string out = "method: " + std::string(ass_method_name(report.method)) + "\n";
    out += "power: " + std::to_string(report.power) + "\n";
    out += "primes (" + std::to_string(report.primes.size()) + "):\n";
    for (VertexSet p : report.primes) out += "  " + emit_vertex_set(p, alphabet) + "\n";
    return out;
  }
  ordered_json doc;
  doc["method"] = ass_method_name(report.method);
  doc["power"] = report.power;
  ordered_json primes = ordered_json::array();
  for (VertexSet p : report.primes) primes.push_back(prime_to_json(p, alphabet));
  doc["primes"] = std::move(primes);
  return doc.dump(2) + "\n";
}

std::string emit_certificates(const std::vector<CycleCertificate>& certs, const Alphabet& alphabet,
                              Format format) {
  if (format == Format::Text) {
    std::string out = "certificates (" + std::to_string(certs.size()) + "):\n";
    for (const auto& c : certs) {
      out += "  cycle [";
      for (std::size_t i = 0; i < c.cycle.size(); ++i) {
        if (i) out += " ";
        out += alphabet.name(c.cycle[i]);
      }
      out += "] host " + emit_vertex_set(c.host, alphabet) + " hat " +
             emit_vertex_set(c.hat, alphabet) + "\n";
    }
    return out;
  }
  ordered_json doc;
  ordered_json list = ordered_json::array();
  for (const auto& c : certs) {
    ordered_json entry;
    std::vector<std::string> cycle;
    for (int v : c.cycle) cycle.push_back(alphabet.name(v));
    entry["cycle"] = cycle;
    entry["host"] = prime_to_json(c.host, alphabet);
    entry["hat"] = prime_to_json(c.hat, alphabet);
    list.push_back(std::move(entry));
  }
  doc["certificates"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string emit_persistence_report(const PersistenceReport& report, const Alphabet& alphabet,
                                    Format format) {
  if (format == Format::Text) {
    std::string out;
    for (const auto& r : report.per_power)
      out += "Ass(J^" + std::to_string(r.power) + "): " + emit_prime_list(r.primes, alphabet) +
             "\n";
    for (std::size_t i = 0; i < report.losses.size(); ++i) {
      out += "lost " + std::to_string(i + 1) + "->" + std::to_string(i + 2) + ": ";
      out += report.losses[i].empty() ? "none" : emit_prime_list(report.losses[i], alphabet);
      out += "\n";
    }
    out += std::string("persistence ") + (report.holds() ? "holds" : "fails") + " up to the bound\n";
    return out;
  }
  ordered_json doc;
  ordered_json powers = ordered_json::array();
  for (const auto& r : report.per_power) {
    ordered_json entry;
    entry["power"] = r.power;
    ordered_json primes = ordered_json::array();
    for (VertexSet p : r.primes) primes.push_back(prime_to_json(p, alphabet));
    entry["primes"] = std::move(primes);
    powers.push_back(std::move(entry));
  }
  doc["powers"] = std::move(powers);
  ordered_json losses = ordered_json::array();
  for (const auto& loss : report.losses) {
    ordered_json entry = ordered_json::array();
    for (VertexSet p : loss) entry.push_back(prime_to_json(p, alphabet));
    losses.push_back(std::move(entry));
  }
  doc["losses"] = std::move(losses);
  doc["holds"] = report.holds();
  return doc.dump(2) + "\n";
}

}  // namespace io
}  // namespace shadowprimes
