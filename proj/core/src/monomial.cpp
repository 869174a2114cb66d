#include "shadowprimes/monomial.hpp"

#include <algorithm>

namespace shadowprimes {

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](Exponent e) { return e == 0; });
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (Exponent e : exps) d += e;
  return d;
}

VertexSet Monomial::support() const {
  VertexSet s;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) s.insert(static_cast<int>(i));
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    unsigned sum = static_cast<unsigned>(exps[i]) + other.exps[i];
    if (sum > kMaxExponent) fail(Errc::ExponentOverflow, "product exponent exceeds 2^16");
    out.exps[i] = static_cast<Exponent>(sum);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] = std::min(exps[i], other.exps[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] = std::max(exps[i], other.exps[i]);
  return out;
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    out.exps[i] = exps[i] > other.exps[i] ? static_cast<Exponent>(exps[i] - other.exps[i]) : 0;
  return out;
}

Monomial Monomial::exact_div(const Monomial& other) const {
  if (!other.divides(*this)) fail(Errc::PreconditionFailed, "exact_div: not divisible");
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps.size(); ++i)
    out.exps[i] = static_cast<Exponent>(exps[i] - other.exps[i]);
  return out;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
}

}  // namespace shadowprimes
