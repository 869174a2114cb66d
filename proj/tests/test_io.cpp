#include <doctest.h>

#include "generators.hpp"
#include "shadowprimes/io.hpp"

using namespace shadowprimes;

TEST_CASE("hypergraph document round trip") {
  std::string text = R"({"vertices":["x1","x2","x3"],"edges":[["x2","x3"],["x1","x2"]]})";
  Hypergraph h = io::parse_hypergraph(text);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 2);
  std::string emitted = io::emit_hypergraph(h);
  CHECK(io::parse_hypergraph(emitted) == h);
  CHECK(io::emit_hypergraph(io::parse_hypergraph(emitted)) == emitted);
}

TEST_CASE("hypergraph parse errors carry the right code") {
  auto code_of = [](const std::string& text) {
    try {
      io::parse_hypergraph(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ValidationError;
  };
  CHECK(code_of("not json") == Errc::ParseError);
  CHECK(code_of(R"({"vertices":["x1"]})") == Errc::ParseError);
  CHECK(code_of(R"({"vertices":["1bad"],"edges":[]})") == Errc::ParseError);
  CHECK(code_of(R"({"vertices":["a","b"],"edges":[["a"],["a","b"]]})") == Errc::ValidationError);
  CHECK(code_of(R"({"vertices":["a"],"edges":[["zz"]]})") == Errc::UnknownVertex);
  CHECK_THROWS_AS(io::parse_hypergraph_file("/nonexistent/path.json"), Error);
}

TEST_CASE("monomial syntax") {
  Alphabet a(testgen::var_names(3));
  CHECK(io::emit_monomial(io::parse_monomial("x1^2*x2*x3", a), a) == "x1^2*x2*x3");
  CHECK(io::emit_monomial(io::parse_monomial(" x3 * x1 ^ 2 ", a), a) == "x1^2*x3");
  CHECK(io::parse_monomial("1", a).is_one());
  CHECK(io::emit_monomial(Monomial::one(3), a) == "1");
  CHECK_THROWS_AS(io::parse_monomial("", a), Error);
  CHECK_THROWS_AS(io::parse_monomial("x9", a), Error);
  CHECK_THROWS_AS(io::parse_monomial("x1^", a), Error);
  CHECK_THROWS_AS(io::parse_monomial("x1^0", a), Error);
  CHECK_THROWS_AS(io::parse_monomial("x1 x2", a), Error);
}

TEST_CASE("ideal syntax") {
  Alphabet a(testgen::var_names(3));
  MonomialIdeal i = io::parse_ideal("(x1^2, x2*x3)", a);
  // Generators are kept in the canonical exponent-vector order.
  CHECK(io::emit_ideal(i) == "(x2*x3, x1^2)");
  CHECK(io::parse_ideal("(0)", a).is_zero());
  CHECK(io::emit_ideal(MonomialIdeal::zero(a)) == "(0)");
  CHECK(io::parse_ideal(io::emit_ideal(i), a) == i);
  CHECK_THROWS_AS(io::parse_ideal("x1, x2", a), Error);
}

TEST_CASE("structured report emission is stable") {
  Hypergraph h = Hypergraph::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto report = ass_of_power(h, 2);
  std::string once = io::emit_ass_report(report, h.alphabet(), io::Format::Structured);
  std::string twice = io::emit_ass_report(ass_of_power(h, 2), h.alphabet(), io::Format::Structured);
  CHECK(once == twice);
  CHECK(once.find("\"power\": 2") != std::string::npos);
}
