#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hrcap/engines.hpp"
#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

enum class ProblemKind {
  min_avg_expand,
  min_avg_reduce,
  min_avg_expand_part,
  min_avg_reduce_part,
  max_card_expand_part,
  max_card_reduce_part,
  single_expand,
  min_w_smt,
};

const char* problem_kind_name(ProblemKind kind);
std::optional<ProblemKind> problem_kind_from_name(const std::string& name);

struct SolverOptions {
  long long guard = kDefaultGuard;
  int workers = 1;
  // Cross-check mode: expansion enumerates sum(t) <= B instead of = B, and
  // reduction enumerates sum(t) >= B. Max-card partition kinds always search
  // the full feasible set regardless of this flag.
  bool exhaustive = false;
};

struct ProblemSpec {
  ProblemKind kind = ProblemKind::min_avg_expand;
  long long budget = 0;                     // B for global-budget kinds
  std::optional<PartitionBudgets> parts;    // partition kinds
  std::optional<long long> target;          // K, decision mode
  SolverOptions options;
};

struct SolveResult {
  CapacityDelta delta;
  Matching matching;
  long long objective = 0;
  // objective <= K for min-avg kinds, |M| >= K for max-card kinds.
  std::optional<bool> meets_target;
};

// Tries t = 1_j for every hospital j and returns the minimum average-rank
// outcome; ties between hospitals break toward the lowest index. Requires a
// strict, normalized instance. chosen_hospital() is the argmin j.
struct SingleExpandResult : SolveResult {
  int chosen_hospital = -1;
};
SingleExpandResult solve_expand_single(const Instance& inst,
                                       const SolverOptions& options = {});

// Exact solver: enumerates expansion vectors with sum(t) = B (the optimum is
// preserved; adding seats never hurts residents), runs deferred acceptance on
// each expanded instance and keeps the minimum average rank. Canonical
// tie-break: lexicographically smallest t.
SolveResult solve_min_avg_expand(const Instance& inst, long long budget,
                                 const SolverOptions& options = {});

// Exact solver for seat removal: enumerates t with sum(t) = B and t <= c.
// Requires sum(c) - B >= |R|.
SolveResult solve_min_avg_reduce(const Instance& inst, long long budget,
                                 const SolverOptions& options = {});

// Partition solver for the four per-part-budget kinds. Expansion parts use
// sum(t_k) = B_k for the average-rank objective and the full sum(t_k) <= B_k
// range for the cardinality objective; reduction parts mirror this with
// sum(t_k) = B_k (>= B_k for cardinality), always under t <= c.
SolveResult solve_partition(const Instance& inst, const PartitionBudgets& parts,
                            ProblemKind kind, const SolverOptions& options = {});

// Hospital with the most first-place votes; ties toward the lowest index.
int heuristic_majority(const Instance& inst);

// Hospital minimizing the summed resident rank; ties toward the lowest index.
int heuristic_borda(const Instance& inst);

// Minimum average-rank weakly stable matching, by enumeration. Requires unit
// capacities. The returned delta is the zero expansion.
SolveResult solve_min_w_smt(const Instance& inst, const SolverOptions& options = {});

// Decision wrapper: solves `spec` against `inst` and fills meets_target when
// a target is present.
SolveResult solve(const Instance& inst, const ProblemSpec& spec);

namespace detail {

// Number of ways to write `total` as an ordered sum of `parts` non-negative
// integers, capped at `cap` (returns cap + 1 on overflow/past-cap).
long long count_compositions(long long total, int parts, long long cap);

// Same, with per-position upper bounds.
long long count_bounded_compositions(long long total, const std::vector<int>& bounds,
                                     long long cap);

// Visits compositions of `total` over `parts` slots in lexicographic order.
// `bounds` may be empty (unbounded). Returns false if `fn` stopped the walk.
bool for_each_composition(long long total, int parts, const std::vector<int>& bounds,
                          const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace detail

}  // namespace hrcap
