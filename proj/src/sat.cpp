#include "activetime/sat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace activetime::sat {

int Assignment::true_count() const {
  int count = 0;
  for (const auto& [variable, value] : values) count += value ? 1 : 0;
  return count;
}

bool satisfies(const CnfFormula& formula, const Assignment& assignment) {
  for (const Clause& clause : formula.clauses) {
    bool clause_true = false;
    for (const Literal& literal : clause) {
      if (assignment.value(literal.variable) != literal.negated) {
        clause_true = true;
        break;
      }
    }
    if (!clause_true) return false;
  }
  return true;
}

bool balanced(const Assignment& assignment) {
  int n = static_cast<int>(assignment.values.size());
  return n % 2 == 0 && assignment.true_count() == n / 2;
}

bool all_variables_occur(const CnfFormula& formula) {
  std::vector<bool> seen(formula.num_vars + 1, false);
  for (const Clause& clause : formula.clauses)
    for (const Literal& literal : clause) seen[literal.variable] = true;
  for (int v = 1; v <= formula.num_vars; ++v)
    if (!seen[v]) return false;
  return true;
}

CnfFormula parse_dimacs(std::istream& input) {
  CnfFormula formula;
  int expected_clauses = -1;
  std::string line;
  std::vector<int> pending;  // literals of the clause being read

  auto finish_clause = [&](size_t line_no) {
    Clause clause;
    for (int raw : pending) {
      Literal literal{std::abs(raw), raw < 0};
      if (literal.variable > formula.num_vars)
        throw ParseError("line " + std::to_string(line_no) + ": variable " +
                         std::to_string(literal.variable) + " exceeds declared count");
      bool duplicate = false;
      for (const Literal& existing : clause) {
        if (existing.variable == literal.variable) {
          if (existing.negated != literal.negated)
            throw ParseError("line " + std::to_string(line_no) +
                             ": tautological clause (x and not-x)");
          duplicate = true;
        }
      }
      if (!duplicate) clause.push_back(literal);
    }
    if (clause.empty())
      throw ParseError("line " + std::to_string(line_no) + ": empty clause");
    formula.clauses.push_back(std::move(clause));
    pending.clear();
  };

  size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank line
    if (first == "c") continue;
    if (first == "p") {
      if (expected_clauses >= 0) throw ParseError("duplicate DIMACS header");
      std::string kind;
      int n = -1, m = -1;
      if (!(tokens >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
        throw ParseError("malformed DIMACS header, expected 'p cnf <vars> <clauses>'");
      std::string extra;
      if (tokens >> extra) throw ParseError("malformed DIMACS header: trailing tokens");
      formula.num_vars = n;
      expected_clauses = m;
      continue;
    }
    if (expected_clauses < 0) throw ParseError("clause data before DIMACS header");

    std::istringstream again(line);
    int raw;
    while (again >> raw) {
      if (raw == 0) {
        finish_clause(line_no);
      } else {
        pending.push_back(raw);
      }
    }
    if (!again.eof()) {
      std::string bad;
      again.clear();
      again >> bad;
      throw ParseError("line " + std::to_string(line_no) + ": bad token '" + bad + "'");
    }
  }

  if (expected_clauses < 0) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause at end of input");
  if (static_cast<int>(formula.clauses.size()) != expected_clauses)
    throw ParseError("clause count mismatch: header declares " +
                     std::to_string(expected_clauses) + ", found " +
                     std::to_string(formula.clauses.size()));
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream stream(text);
  return parse_dimacs(stream);
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars << ' ' << formula.clauses.size() << '\n';
  for (const Clause& clause : formula.clauses) {
    Clause sorted = clause;
    std::sort(sorted.begin(), sorted.end(),
              [](const Literal& a, const Literal& b) { return a.variable < b.variable; });
    for (const Literal& literal : sorted)
      out << (literal.negated ? -literal.variable : literal.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula to_balanced(const CnfFormula& formula) {
  const int n = formula.num_vars;
  CnfFormula balanced;
  balanced.num_vars = 2 * n;
  balanced.clauses = formula.clauses;
  for (int i = 1; i <= n; ++i) {
    balanced.clauses.push_back({Literal{i, false}, Literal{n + i, false}});
    balanced.clauses.push_back({Literal{i, true}, Literal{n + i, true}});
  }
  return balanced;
}

namespace {

constexpr int kBruteForceVarLimit = 24;

// Bit (n - i) of the mask holds variable i, so counting the mask down from
// all-ones enumerates assignments lexicographically with x1 most
// significant and true ordered before false.
Assignment from_mask(std::uint32_t mask, int n) {
  Assignment assignment;
  for (int i = 1; i <= n; ++i)
    assignment.values[i] = (mask >> (n - i)) & 1u;
  return assignment;
}

std::optional<Assignment> search_masks(const CnfFormula& formula, bool require_balance) {
  const int n = formula.num_vars;
  if (n > kBruteForceVarLimit)
    throw GuardError("brute-force search limited to " +
                     std::to_string(kBruteForceVarLimit) + " variables");
  const std::uint32_t count = 1u << n;
  for (std::uint32_t step = 0; step < count; ++step) {
    std::uint32_t mask = count - 1 - step;
    if (require_balance && std::popcount(mask) != n / 2) continue;
    Assignment assignment = from_mask(mask, n);
    if (satisfies(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Assignment> brute_sat(const CnfFormula& formula) {
  return search_masks(formula, false);
}

std::optional<Assignment> brute_balanced_sat(const CnfFormula& formula) {
  if (formula.num_vars % 2 != 0)
    throw GuardError("balanced SAT needs an even variable count");
  return search_masks(formula, true);
}

}  // namespace activetime::sat
