#pragma once

#include <stdexcept>
#include <string>

namespace sxcad {

// One exception type for the whole library; `kind` is the machine-readable
// discriminator, `line`/`col` are 1-based and only set by the parsers.
struct CadError : std::runtime_error {
  enum class Kind {
    // cad_dsl
    Syntax,
    UnsupportedConstruct,
    // sketch kernel
    EmptyResult,
    FitFailure,
    IntersectingLoops,
    DegeneratePrimitive,
    ZeroArea,
    BooleanFailure,
    // solid kernel
    Execution,
    DegenerateSurface,
    // synthgen
    GenerationExhausted,
    CollapsedFeature,
    // deepcad import
    Token,
    UnsupportedBoolean,
    MalformedLoop,
    // pointcloud / metrics
    CoordinateOutOfRange,
    Format,
    MissingNormals,
    EmptyUnion,
    AllInvalid,
    Io,
  };

  CadError(Kind k, std::string msg, int line = 0, int col = 0)
      : std::runtime_error(std::move(msg)), kind(k), line(line), col(col) {}

  Kind kind;
  int line;
  int col;
};

}  // namespace sxcad
