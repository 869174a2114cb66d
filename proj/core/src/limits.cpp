#include "shadowprimes/limits.hpp"

#include <cstdlib>

#include "shadowprimes/error.hpp"

namespace shadowprimes {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::EmptyEdge: return "EmptyEdge";
    case Errc::NestedEdges: return "NestedEdges";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotAGraph: return "NotAGraph";
    case Errc::NotAShadow: return "NotAShadow";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::ZeroOrUnitIdeal: return "ZeroOrUnitIdeal";
    case Errc::NoEdges: return "NoEdges";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* value = std::getenv("SHADOWPRIMES_LIMIT")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end && *end == '\0' && parsed > 0) limits.max_generators = static_cast<std::size_t>(parsed);
  }
  return limits;
}

void Limits::check_deadline(const char* where) const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    fail(Errc::ResourceLimit, std::string("wall-clock budget exhausted in ") + where);
}

void Limits::check_generators(std::size_t count, const char* where) const {
  if (count > max_generators)
    fail(Errc::ResourceLimit, std::string(where) + ": generator count " + std::to_string(count) +
                                  " exceeds ceiling " + std::to_string(max_generators));
}

}  // namespace shadowprimes
