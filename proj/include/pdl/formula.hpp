#ifndef PDL_FORMULA_HPP
#define PDL_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "pdl/error.hpp"

namespace pdl {

class Team;

/// Immutable NNF formula over {T, F, literals, &, |} extended with
/// dependence atoms dep(a1..ak ; b). Negation occurs on variables only.
/// Nodes are shared; copying a Formula is cheap and thread-safe.
class Formula {
 public:
  enum class Kind { Var, NegVar, Top, Bot, And, Or, Dep };

  Formula() : Formula(top()) {}

  static Formula var(std::string name);
  static Formula neg_var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  // Empty determinant list yields the constancy atom dep(b).
  static Formula dep(std::vector<std::string> determinants, std::string determined);

  Kind kind() const { return node_->kind; }
  bool is_literal() const { return kind() == Kind::Var || kind() == Kind::NegVar; }
  // True iff some dependence atom occurs; dep-free formulas are flat.
  bool has_dep() const { return node_->has_dep; }

  const std::string& name() const;            // Var / NegVar
  const Formula& lhs() const;                  // And / Or
  const Formula& rhs() const;                  // And / Or
  const std::vector<std::string>& determinants() const;  // Dep
  const std::string& determined() const;       // Dep

  // Variable names occurring in the formula, sorted, without duplicates.
  std::vector<std::string> vars() const;

  bool operator==(const Formula& other) const { return equal(*this, other); }
  bool operator!=(const Formula& other) const { return !equal(*this, other); }

  // Stable identity of the shared node, used as memoization key.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    bool has_dep = false;
    std::string name;                     // Var/NegVar name, Dep determined
    std::vector<std::string> name_list;   // Dep determinants
    std::shared_ptr<const Node> left, right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Formula& a, const Formula& b);
  static Formula wrap(Node n);

  std::shared_ptr<const Node> node_;
};

// Concrete syntax:
//   formula := disj ; disj := conj ('|' conj)* ; conj := atom ('&' atom)*
//   atom := 'T' | 'F' | ident | '~' ident
//         | 'dep(' identlist? ';' ident ')' | 'dep(' ident ')' | '(' formula ')'
// Idents match [a-zA-Z_][a-zA-Z0-9_]*; whitespace is insignificant;
// '&' binds tighter than '|'. Throws ParseError, including
// "negation not on atom" when '~' precedes a non-variable.
Formula parse_formula(const std::string& text);

// Inverse of parse_formula up to whitespace; parse(to_string(f)) is
// structurally equal to f.
std::string to_string(const Formula& f);

// Replace every dependence atom by T. The result is a plain PL formula.
Formula flatten(const Formula& f);

// The formula whose team models over `vars` are exactly the subteams of X:
// one conjunction of literals per member, disjoined in member order.
// The empty team yields F.
Formula theta_of_team(const Team& x, const std::vector<std::string>& vars);

// dep(p1) & ... & dep(pn); satisfied exactly by teams of cardinality <= 1.
Formula constancy_conjunction(const std::vector<std::string>& vars);

// theta_of_team(X) & (theta | ... | theta) with `bound` disjuncts; its team
// models are exactly the subteams of X of cardinality <= bound.
Formula size_bounded_formula(const Team& x, int bound);

}  // namespace pdl

#endif
