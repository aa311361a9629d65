#ifndef PDL_TEAM_HPP
#define PDL_TEAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pdl/error.hpp"
#include "pdl/formula.hpp"

namespace pdl {

/// Assignment over an ordered variable list. The bit of the first variable is
/// the most significant one, so the numeric index equals the binary value of
/// the bit-string form v(x1)v(x2)...v(xn).
class Valuation {
 public:
  Valuation(std::vector<std::string> vars, std::uint32_t index);

  const std::vector<std::string>& vars() const { return vars_; }
  std::uint32_t index() const { return index_; }
  bool value(std::size_t var_pos) const;
  bool value(const std::string& var) const;  // throws ValidationError if unbound

  std::string to_string() const;  // bit-string, e.g. "100"

 private:
  std::vector<std::string> vars_;
  std::uint32_t index_;
};

/// Set of valuations over a shared domain, canonically a bitmask indexed by
/// valuation value. Supports up to 6 variables (64 valuations). Duplicate
/// input rows collapse; teams are sets.
class Team {
 public:
  Team() = default;
  Team(std::vector<std::string> vars, std::uint64_t mask);
  Team(std::vector<std::string> vars, const std::vector<Valuation>& members);

  const std::vector<std::string>& vars() const { return vars_; }
  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(std::uint32_t index) const { return (mask_ >> index) & 1u; }

  std::vector<Valuation> members() const;  // ascending index order
  bool subteam_of(const Team& other) const;
  bool operator==(const Team& other) const;

  // Comma-separated bit-strings in ascending order; "-" for the empty team.
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::uint64_t mask_ = 0;
};

// Parses a team literal ("100,010" or "-") over the given domain.
Team team_from_literal(std::vector<std::string> vars, const std::string& literal);

// Classical truth evaluation. The formula must be dependence-free and its
// variables bound by the valuation's domain.
bool eval_classical(const Valuation& v, const Formula& f);

// Exact team-semantics model checking: literals hold when every member
// satisfies them, F holds only in the empty team, & componentwise, | by a
// cover search over subteams, dependence atoms by the pairwise functional
// check. Dep-free subformulas take the flat fast path; split results are
// memoized per call on (subformula, team mask).
bool eval_team(const Team& x, const Formula& f, const Limits& limits = {});

/// Model set of a formula among all teams over a fixed domain, stored as a
/// bitset indexed by team mask.
class TeamSet {
 public:
  TeamSet() = default;
  TeamSet(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t universe_size() const { return std::size_t{1} << (1u << vars_.size()); }

  bool contains(std::uint64_t team_mask) const;
  void insert(std::uint64_t team_mask);
  bool subset_of(const TeamSet& other) const;
  bool operator==(const TeamSet& other) const;
  std::size_t count() const;
  std::vector<std::uint64_t> masks() const;  // ascending

 private:
  std::vector<std::string> vars_;
  std::vector<std::uint64_t> bits_;
};

// Enumerates all 2^(2^|vars|) teams over `vars` and collects those satisfying
// f, in bitmask order. Guarded by limits.max_enum_vars.
TeamSet models_of(const Formula& f, const std::vector<std::string>& vars,
                  const Limits& limits = {});

// Logical entailment for team semantics: models_of(lhs) ⊆ models_of(rhs).
bool entails_logical(const Formula& lhs, const Formula& rhs,
                     const std::vector<std::string>& vars, const Limits& limits = {});

}  // namespace pdl

#endif
