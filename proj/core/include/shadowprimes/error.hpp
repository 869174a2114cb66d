#ifndef SHADOWPRIMES_ERROR_HPP
#define SHADOWPRIMES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shadowprimes {

enum class Errc {
  DuplicateVertex,
  EmptyEdge,
  NestedEdges,
  DuplicateEdge,
  UnknownVertex,
  NotAGraph,
  NotAShadow,
  AlphabetMismatch,
  ExponentOverflow,
  ZeroOrUnitIdeal,
  NoEdges,
  IndexOutOfRange,
  PreconditionFailed,
  ResourceLimit,
  IoError,
  ParseError,
  ValidationError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace shadowprimes

#endif
