#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mc {

#ifdef MC_WIDE_VERTEX_IDS
using vertex_t = std::uint64_t;
#else
using vertex_t = std::uint32_t;
#endif

/// Index into a NeighborhoodSubgraph. Neighborhoods never exceed the max degree + 1.
using local_t = std::uint32_t;
using core_t = std::uint32_t;

/// Malformed or out-of-range input. `line()` is 0 when no line applies.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured memory/size guard was tripped.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A solver invariant was violated. Never expected in a correct build.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mc
