#pragma once

// Necessary conditions for a Gram matrix to be diagonalizable over Z_(p)[q, q^-1],
// decided by a finite search over valuation patterns of hypothetical diagonal entries.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "specht/edlist.hpp"

namespace specht::snf {

// Valuation data of a search instance. Every row (hypothetical diagonal entry)
// gets one valuation per Q-irreducible factor f; the multiset of each column must
// equal f_counts[f]. Each derived quantity g is sum_f weights[g][f] * v_f, and its
// multiset must equal g_counts[g] exactly or, with dominance set, be matched
// row by row by values at least as large (extra p-content of a unit).
struct ValuationProblem {
  std::size_t rows = 0;
  std::vector<std::string> f_labels;
  std::vector<std::map<int, int>> f_counts;
  std::vector<std::string> g_labels;
  std::vector<std::vector<int>> weights;
  std::vector<std::map<int, int>> g_counts;
  bool dominance = false;

  friend bool operator==(const ValuationProblem&, const ValuationProblem&) = default;
};

struct ObstructionReport {
  enum class Status { Obstructed, NoObstruction, Inconclusive };

  Status status = Status::Inconclusive;
  std::uint32_t p = 0;
  ValuationProblem problem;
  // One valuation vector (indexed like f_labels) per row; set for NoObstruction.
  std::vector<std::vector<int>> assignment;
  std::string reason;

  std::string status_text() const;
};

struct ObstructionOptions {
  double time_budget_seconds = 10.0;
  std::int64_t max_cyclotomic = 64;
};

enum class SearchOutcome { Feasible, Infeasible, TimedOut };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::TimedOut;
  std::vector<std::vector<int>> assignment;
};

// Exhaustive search for an assignment, grouped by distinct valuation patterns.
SearchResult solve_valuation_problem(const ValuationProblem& problem, double time_budget_seconds);
// Whether an assignment satisfies every constraint of the problem.
bool assignment_satisfies(const ValuationProblem& problem, const std::vector<std::vector<int>>& assignment);

// Compares elementary divisors over Q and over F_p.
ObstructionReport nondiag_obstruction(const EDList& ed_q, const EDList& ed_p, std::uint32_t p,
                                      const ObstructionOptions& opts = {});
// Compares elementary divisors over Q with those of the q = 1 specialization over Z.
ObstructionReport q1_obstruction(const EDList& ed_q, const EDList& ed_z, std::uint32_t p,
                                 const ObstructionOptions& opts = {});

// Re-validates a report from its own data: Obstructed reports must be infeasible
// on a fresh search, NoObstruction reports must carry a valid assignment.
bool recheck_witness(const ObstructionReport& report, double time_budget_seconds = 60.0);

}  // namespace specht::snf
