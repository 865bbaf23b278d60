#pragma once

#include <stdexcept>
#include <string>

namespace matroidlab {

struct MatroidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : MatroidError {
  using MatroidError::MatroidError;
};
struct OverlappingSets : MatroidError {
  using MatroidError::MatroidError;
};
struct RankTooLarge : MatroidError {
  using MatroidError::MatroidError;
};
struct DimensionMismatch : MatroidError {
  using MatroidError::MatroidError;
};
struct NoRepresentation : MatroidError {
  using MatroidError::MatroidError;
};
struct DisconnectedGraph : MatroidError {
  using MatroidError::MatroidError;
};
struct SeparatingEdge : MatroidError {
  using MatroidError::MatroidError;
};
struct LoopEdge : MatroidError {
  using MatroidError::MatroidError;
};
struct NotATriangle : MatroidError {
  using MatroidError::MatroidError;
};
struct NotPure : MatroidError {
  using MatroidError::MatroidError;
};
struct BadPermutation : MatroidError {
  using MatroidError::MatroidError;
};
struct Disconnected : MatroidError {
  using MatroidError::MatroidError;
};
struct ActionNotSimplicial : MatroidError {
  using MatroidError::MatroidError;
};
struct BettiMismatch : MatroidError {
  using MatroidError::MatroidError;
};
struct NotInPoset : MatroidError {
  using MatroidError::MatroidError;
};
struct IntersectionDependent : MatroidError {
  using MatroidError::MatroidError;
};

}  // namespace matroidlab
