#pragma once

#include <stdexcept>
#include <string>

namespace ornlat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation was refused because the instance exceeds a configured bound.
struct SizeGuardError : Error {
  using Error::Error;
};

struct NotATreeError : Error {
  using Error::Error;
};
struct NotAPathError : Error {
  using Error::Error;
};
struct AmbientMismatchError : Error {
  using Error::Error;
};
// Partial-order axiom violated at construction; message names axiom and witness.
struct RelationError : Error {
  using Error::Error;
};
struct NotALatticeError : Error {
  using Error::Error;
};
struct NonUniqueCoverError : Error {
  using Error::Error;
};
struct SemidistributivityError : Error {
  using Error::Error;
};
struct AcyclicityError : Error {
  using Error::Error;
};
// intreeval join/meet formula used without path-intersection-closedness + star-sparsity.
struct HypothesisError : Error {
  using Error::Error;
};
struct DegenerateInputError : Error {
  using Error::Error;
};

}  // namespace ornlat
