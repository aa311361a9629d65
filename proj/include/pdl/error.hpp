#ifndef PDL_ERROR_HPP
#define PDL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax errors carry the byte offset of the offending token.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Semantic rejection: domain mismatches, cycles, malformed models.
struct ValidationError : Error {
  using Error::Error;
};

// An enumeration guard was exceeded. Guards are configurable via Limits.
struct GuardError : Error {
  using Error::Error;
};

// Desk-scale enumeration guards, overridable from the CLI.
struct Limits {
  int max_enum_vars = 4;    // models_of enumerates 2^(2^n) teams
  int max_cover_team = 16;  // disjunction cover search enumerates 2^|X| subsets
  int max_states = 4096;    // explicit preferential models (closure is quadratic)
  int max_sat_vars = 24;    // SAT oracle search space
};

}  // namespace pdl

#endif
