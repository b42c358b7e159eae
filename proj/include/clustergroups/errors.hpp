#pragma once

#include <stdexcept>
#include <string>

namespace clustergroups {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// quiver
struct LoopArrow : Error {
  using Error::Error;
};
struct TwoCycle : Error {
  using Error::Error;
};
struct VertexOutOfRange : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};

// triangulation
struct InvalidDiagonal : Error {
  using Error::Error;
};
struct CrossingDiagonals : Error {
  using Error::Error;
};
struct WrongDiagonalCount : Error {
  using Error::Error;
};
struct NotADiagonal : Error {
  using Error::Error;
};
struct NotMutationTypeA : Error {
  using Error::Error;
};
struct SearchExhausted : Error {
  using Error::Error;
};
struct LabelOutOfRange : Error {
  using Error::Error;
};

// groups
struct DegreeMismatch : Error {
  using Error::Error;
};
struct UnknownGenerator : Error {
  using Error::Error;
};
struct DisconnectedPair : Error {
  using Error::Error;
};
struct NotInSubgroup : Error {
  using Error::Error;
};

// io / cli
struct ParseError : Error {
  using Error::Error;
};
struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace clustergroups
