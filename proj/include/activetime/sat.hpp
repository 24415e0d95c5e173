#ifndef ACTIVETIME_SAT_HPP
#define ACTIVETIME_SAT_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace activetime::sat {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Literal {
  int variable = 1;  // 1-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

// CNF formula over variables 1..num_vars. Clauses keep their input literal
// order (after duplicate removal); canonical form additionally means no
// clause repeats a variable, which the DIMACS parser enforces.
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  bool operator==(const CnfFormula&) const = default;
};

// Total truth assignment on [1, num_vars].
struct Assignment {
  std::map<int, bool> values;

  bool value(int variable) const { return values.at(variable); }
  int true_count() const;
};

bool satisfies(const CnfFormula& formula, const Assignment& assignment);
bool balanced(const Assignment& assignment);

// Every variable appears in at least one clause (a precondition of the
// scheduling reduction).
bool all_variables_occur(const CnfFormula& formula);

// Standard DIMACS CNF: `c` comments, `p cnf n m` header, zero-terminated
// clauses. Duplicate literals are dropped; a clause holding both x and ¬x
// is rejected, as are empty clauses, out-of-range variables and clause
// count mismatches.
CnfFormula parse_dimacs(std::istream& input);
CnfFormula parse_dimacs(const std::string& text);

// One clause per line, literals ascending by variable, exact header.
std::string serialize_dimacs(const CnfFormula& formula);

// SAT -> Balanced SAT: doubles the variables (y_i = n + i) and appends the
// pairing clauses (x_i ∨ y_i) and (¬x_i ∨ ¬y_i) for every i, which force
// y_i = ¬x_i, so the new formula is satisfiable iff the input is and every
// satisfying assignment sets exactly half the variables true.
CnfFormula to_balanced(const CnfFormula& formula);

// Exhaustive search, first satisfying assignment in lexicographic order
// (x1 weighs heaviest, true before false). Guard: num_vars <= 24.
std::optional<Assignment> brute_sat(const CnfFormula& formula);

// Same search restricted to assignments with exactly n/2 true variables.
// Requires even num_vars.
std::optional<Assignment> brute_balanced_sat(const CnfFormula& formula);

}  // namespace activetime::sat

#endif  // ACTIVETIME_SAT_HPP
