#pragma once

#include <stdexcept>
#include <string>

namespace finejac {

enum class Err {
  Disconnected,
  EmptySubset,
  DisconnectedInducedSubgraph,
  TooLarge,
  UnknownEdge,
  NotInDomain,
  UnstableVertex,
  NotHyperbolic,
  MissingTriple,
  Conflict,
  Incomplete,
  NotMorphismCompatible,
  TypeMismatch,
  IncompatibleDecomposition,
  NonGeneric,
  FiberDisagreement,
  NotRealized,
  ResourceLimit,
  UnsupportedMode,
  ParseError,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

}  // namespace finejac
