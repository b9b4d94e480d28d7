#ifndef COHERE_TYPES_HPP_
#define COHERE_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohere {

using Color = std::uint16_t;
using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

inline constexpr std::size_t kMaxRank = 65535;

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (.ccm, edge lists, permutation lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Tri-state flag for properties that are computed lazily.
enum class Tri : std::uint8_t { unchecked, no, yes };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    default: return "unchecked";
  }
}

}  // namespace cohere

#endif  // COHERE_TYPES_HPP_
