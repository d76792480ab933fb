#include "hrcap/solvers.hpp"

#include <algorithm>
#include <thread>

#include "hrcap/error.hpp"
#include "hrcap/stability.hpp"

namespace hrcap {

const char* problem_kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::min_avg_expand: return "min-avg-expand";
    case ProblemKind::min_avg_reduce: return "min-avg-reduce";
    case ProblemKind::min_avg_expand_part: return "min-avg-expand-part";
    case ProblemKind::min_avg_reduce_part: return "min-avg-reduce-part";
    case ProblemKind::max_card_expand_part: return "max-card-expand-part";
    case ProblemKind::max_card_reduce_part: return "max-card-reduce-part";
    case ProblemKind::single_expand: return "single-expand";
    case ProblemKind::min_w_smt: return "min-w-smt";
  }
  return "?";
}

std::optional<ProblemKind> problem_kind_from_name(const std::string& name) {
  for (ProblemKind k :
       {ProblemKind::min_avg_expand, ProblemKind::min_avg_reduce,
        ProblemKind::min_avg_expand_part, ProblemKind::min_avg_reduce_part,
        ProblemKind::max_card_expand_part, ProblemKind::max_card_reduce_part,
        ProblemKind::single_expand, ProblemKind::min_w_smt})
    if (name == problem_kind_name(k)) return k;
  return std::nullopt;
}

namespace detail {

long long count_compositions(long long total, int parts, long long cap) {
  if (parts <= 0) return total == 0 ? 1 : 0;
  // C(total + parts - 1, total), multiplicative form with early clamp.
  __int128 c = 1;
  for (long long k = 1; k <= total; ++k) {
    c = c * (parts - 1 + k) / k;  // exact: product of consecutive binomials
    if (c > cap) return cap + 1;
  }
  return static_cast<long long>(c);
}

long long count_bounded_compositions(long long total, const std::vector<int>& bounds,
                                     long long cap) {
  std::vector<long long> dp(total + 1, 0);
  dp[0] = 1;
  for (int b : bounds) {
    std::vector<long long> nx(total + 1, 0);
    for (long long r = 0; r <= total; ++r) {
      if (dp[r] == 0) continue;
      for (long long take = 0; take <= b && r + take <= total; ++take) {
        nx[r + take] = std::min(cap + 1, nx[r + take] + dp[r]);
      }
    }
    dp = std::move(nx);
  }
  return dp[total];
}

// Descending lexicographic order: the first slot is filled greedily, so the
// first composition visited is (total, 0, ..., 0) when feasible. Ties in the
// solvers therefore resolve toward seat changes at low hospital indices.
bool for_each_composition(long long total, int parts, const std::vector<int>& bounds,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> t(parts, 0);
  std::vector<long long> suffix_bound(parts + 1, 0);
  for (int p = parts - 1; p >= 0; --p)
    suffix_bound[p] =
        bounds.empty() ? total : suffix_bound[p + 1] + bounds[static_cast<size_t>(p)];

  std::function<bool(int, long long)> rec = [&](int pos, long long remaining) {
    if (pos == parts) return remaining == 0 ? fn(t) : true;
    if (remaining > suffix_bound[pos]) return true;  // infeasible suffix
    const long long hi =
        bounds.empty() ? remaining : std::min<long long>(remaining, bounds[pos]);
    for (long long v = hi; v >= 0; --v) {
      t[pos] = static_cast<int>(v);
      if (!rec(pos + 1, remaining - v)) return false;
    }
    t[pos] = 0;
    return true;
  };
  return rec(0, total);
}

}  // namespace detail

namespace {

struct Candidate {
  bool set = false;
  long long objective = 0;
  std::vector<int> t;
  Matching m;
};

// better(a, b): a strictly beats b. Objective first, then lexicographically
// larger t (seats at low indices first), then smaller pair set.
bool better(const Candidate& a, const Candidate& b, bool maximize) {
  if (!b.set) return a.set;
  if (!a.set) return false;
  if (a.objective != b.objective)
    return maximize ? a.objective > b.objective : a.objective < b.objective;
  if (a.t != b.t) return a.t > b.t;
  return a.m < b.m;
}

void require_strict(const Instance& inst) {
  if (inst.has_ties())
    throw PreconditionError("solver requires strict preference lists");
}

void require_normalized(const Instance& inst) {
  if (!is_normalized(inst))
    throw PreconditionError(
        "average-rank solving requires a normalized instance "
        "(total capacity >= residents and complete lists or a sink hospital); "
        "run normalize_instance first");
}

// Evaluates every capacity vector produced by `emit` with deferred
// acceptance, in parallel when options.workers > 1. `emit` must be a
// deterministic sequence; workers process it strided, so the merged winner
// is independent of the worker count.
Candidate best_over_allocations(
    const Instance& inst, DeltaDirection dir, bool maximize, const SolverOptions& options,
    const std::function<bool(const std::function<bool(const std::vector<int>&)>&)>& emit) {
  const int workers = std::max(1, options.workers);
  std::vector<Candidate> best(workers);

  auto evaluate = [&](int w) {
    long long idx = 0;
    std::vector<int> caps(inst.capacities());
    emit([&](const std::vector<int>& t) {
      if (idx++ % workers != w) return true;
      for (int j = 0; j < inst.num_hospitals(); ++j)
        caps[j] = dir == DeltaDirection::expand ? inst.capacity(j) + t[j]
                                                : inst.capacity(j) - t[j];
      Matching m = da_resident_proposing(inst, caps);
      Candidate cand{true, 0, t, std::move(m)};
      cand.objective = maximize ? cardinality(cand.m) : avg_rank(inst, cand.m);
      if (better(cand, best[w], maximize)) best[w] = std::move(cand);
      return true;
    });
  };

  if (workers == 1) {
    evaluate(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(evaluate, w);
    for (auto& th : pool) th.join();
  }

  Candidate winner;
  for (auto& c : best)
    if (better(c, winner, maximize)) winner = std::move(c);
  if (!winner.set) throw PreconditionError("no feasible allocation");
  return winner;
}

SolveResult result_from(Candidate&& c, DeltaDirection dir, long long budget) {
  SolveResult r;
  r.delta = CapacityDelta{dir, std::move(c.t), budget};
  r.matching = std::move(c.m);
  r.objective = c.objective;
  return r;
}

}  // namespace

SingleExpandResult solve_expand_single(const Instance& inst, const SolverOptions& options) {
  require_strict(inst);
  require_normalized(inst);
  (void)options;
  const int nh = inst.num_hospitals();
  SingleExpandResult best;
  bool have = false;
  std::vector<int> caps(inst.capacities());
  for (int j = 0; j < nh; ++j) {
    ++caps[j];
    Matching m = da_resident_proposing(inst, caps);
    --caps[j];
    const long long obj = avg_rank(inst, m);
    if (!have || obj < best.objective) {
      have = true;
      best.objective = obj;
      best.matching = std::move(m);
      best.chosen_hospital = j;
    }
  }
  best.delta = CapacityDelta::single_expand(nh, best.chosen_hospital);
  return best;
}

SolveResult solve_min_avg_expand(const Instance& inst, long long budget,
                                 const SolverOptions& options) {
  require_strict(inst);
  require_normalized(inst);
  if (budget < 0) throw PreconditionError("negative budget");
  const int nh = inst.num_hospitals();

  long long count = 0;
  if (options.exhaustive) {
    for (long long b = 0; b <= budget; ++b) {
      count += detail::count_compositions(b, nh, options.guard);
      if (count > options.guard) break;
    }
  } else {
    count = detail::count_compositions(budget, nh, options.guard);
  }
  if (count > options.guard) throw GuardExceeded(count, options.guard);

  auto emit = [&](const std::function<bool(const std::vector<int>&)>& fn) {
    if (options.exhaustive) {
      for (long long b = 0; b <= budget; ++b)
        if (!detail::for_each_composition(b, nh, {}, fn)) return false;
      return true;
    }
    return detail::for_each_composition(budget, nh, {}, fn);
  };
  return result_from(
      best_over_allocations(inst, DeltaDirection::expand, false, options, emit),
      DeltaDirection::expand, budget);
}

SolveResult solve_min_avg_reduce(const Instance& inst, long long budget,
                                 const SolverOptions& options) {
  require_strict(inst);
  require_normalized(inst);
  if (budget < 0) throw PreconditionError("negative budget");
  if (inst.total_capacity() - budget < inst.num_residents())
    throw PreconditionError("reduction budget leaves fewer seats than residents");
  const int nh = inst.num_hospitals();
  const auto& bounds = inst.capacities();

  const long long top = options.exhaustive ? inst.total_capacity() - inst.num_residents() : budget;
  long long count = 0;
  for (long long b = budget; b <= top; ++b) {
    count += detail::count_bounded_compositions(b, bounds, options.guard);
    if (count > options.guard) break;
  }
  if (count > options.guard) throw GuardExceeded(count, options.guard);

  auto emit = [&](const std::function<bool(const std::vector<int>&)>& fn) {
    for (long long b = budget; b <= top; ++b)
      if (!detail::for_each_composition(b, nh, bounds, fn)) return false;
    return true;
  };
  return result_from(
      best_over_allocations(inst, DeltaDirection::reduce, false, options, emit),
      DeltaDirection::reduce, budget);
}

SolveResult solve_partition(const Instance& inst, const PartitionBudgets& parts,
                            ProblemKind kind, const SolverOptions& options) {
  require_strict(inst);
  if (auto reason = parts.invalid_reason(inst.num_hospitals()))
    throw PreconditionError("invalid partition: " + *reason);

  bool expand, maximize;
  switch (kind) {
    case ProblemKind::min_avg_expand_part: expand = true, maximize = false; break;
    case ProblemKind::min_avg_reduce_part: expand = false, maximize = false; break;
    case ProblemKind::max_card_expand_part: expand = true, maximize = true; break;
    case ProblemKind::max_card_reduce_part: expand = false, maximize = true; break;
    default:
      throw PreconditionError("solve_partition expects a partition problem kind");
  }
  if (!maximize) require_normalized(inst);

  long long total_budget = 0;
  for (long long b : parts.budgets) total_budget += b;
  if (!maximize && !expand && inst.total_capacity() - total_budget < inst.num_residents())
    throw PreconditionError("reduction budgets leave fewer seats than residents");

  // Per-part allocation slices. The average-rank objective only needs the
  // extreme sum (adding seats never hurts, removing extra seats never
  // helps); the cardinality kinds search the whole feasible range.
  const bool full_range = maximize || options.exhaustive;
  const int q = parts.num_parts();
  std::vector<std::vector<std::vector<int>>> slices(q);
  long long product = 1;
  for (int k = 0; k < q; ++k) {
    const auto& members = parts.parts[k];
    const int sz = static_cast<int>(members.size());
    std::vector<int> bounds;
    if (!expand) {
      bounds.reserve(members.size());
      for (int j : members) bounds.push_back(inst.capacity(j));
    }
    long long cap_sum = 0;
    for (int j : members) cap_sum += inst.capacity(j);

    long long lo, hi;
    if (expand) {
      lo = full_range ? 0 : parts.budgets[k];
      hi = parts.budgets[k];
    } else {
      lo = parts.budgets[k];
      hi = full_range ? cap_sum : parts.budgets[k];
      if (lo > cap_sum)
        throw PreconditionError("part " + std::to_string(k) +
                                " cannot remove " + std::to_string(lo) + " seats");
    }
    for (long long b = lo; b <= hi; ++b) {
      detail::for_each_composition(b, sz, bounds, [&](const std::vector<int>& t) {
        slices[k].push_back(t);
        return static_cast<long long>(slices[k].size()) <= options.guard;
      });
    }
    if (slices[k].empty())
      throw PreconditionError("part " + std::to_string(k) + " has no feasible allocation");
    if (product > options.guard / static_cast<long long>(slices[k].size()))
      throw GuardExceeded(options.guard + 1, options.guard);
    product *= static_cast<long long>(slices[k].size());
  }
  if (product > options.guard) throw GuardExceeded(product, options.guard);

  // Odometer over per-part slices, assembling the full vector.
  auto emit = [&](const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<size_t> pick(q, 0);
    std::vector<int> t(inst.num_hospitals(), 0);
    for (;;) {
      for (int k = 0; k < q; ++k)
        for (size_t u = 0; u < parts.parts[k].size(); ++u)
          t[parts.parts[k][u]] = slices[k][pick[k]][u];
      if (!fn(t)) return false;
      int k = q - 1;
      while (k >= 0 && ++pick[k] == slices[k].size()) pick[k--] = 0;
      if (k < 0) return true;
    }
  };

  const DeltaDirection dir = expand ? DeltaDirection::expand : DeltaDirection::reduce;
  return result_from(best_over_allocations(inst, dir, maximize, options, emit), dir,
                     total_budget);
}

int heuristic_majority(const Instance& inst) {
  require_strict(inst);
  if (!inst.is_complete()) throw PreconditionError("heuristic requires complete lists");
  const int nh = inst.num_hospitals();
  std::vector<int> votes(nh, 0);
  for (int i = 0; i < inst.num_residents(); ++i)
    for (int j = 0; j < nh; ++j)
      if (inst.resident_rank(i, j) == 1) ++votes[j];
  int best = 0;
  for (int j = 1; j < nh; ++j)
    if (votes[j] > votes[best]) best = j;
  return best;
}

int heuristic_borda(const Instance& inst) {
  require_strict(inst);
  if (!inst.is_complete()) throw PreconditionError("heuristic requires complete lists");
  const int nh = inst.num_hospitals();
  std::vector<long long> score(nh, 0);
  for (int i = 0; i < inst.num_residents(); ++i)
    for (int j = 0; j < nh; ++j) score[j] += inst.resident_rank(i, j);
  int best = 0;
  for (int j = 1; j < nh; ++j)
    if (score[j] < score[best]) best = j;
  return best;
}

SolveResult solve_min_w_smt(const Instance& inst, const SolverOptions& options) {
  for (int j = 0; j < inst.num_hospitals(); ++j)
    if (inst.capacity(j) != 1)
      throw PreconditionError("min-w-smt requires unit capacities");
  const auto all = enumerate_weakly_stable(inst, options.guard);
  if (all.empty()) throw PreconditionError("instance admits no weakly stable matching");
  SolveResult r;
  bool have = false;
  for (const auto& m : all) {
    const long long obj = avg_rank(inst, m);
    if (!have || obj < r.objective || (obj == r.objective && m < r.matching)) {
      have = true;
      r.objective = obj;
      r.matching = m;
    }
  }
  r.delta = CapacityDelta::zero_expand(inst.num_hospitals());
  return r;
}

SolveResult solve(const Instance& inst, const ProblemSpec& spec) {
  SolveResult r;
  switch (spec.kind) {
    case ProblemKind::single_expand:
      r = solve_expand_single(inst, spec.options);
      break;
    case ProblemKind::min_avg_expand:
      r = solve_min_avg_expand(inst, spec.budget, spec.options);
      break;
    case ProblemKind::min_avg_reduce:
      r = solve_min_avg_reduce(inst, spec.budget, spec.options);
      break;
    case ProblemKind::min_w_smt:
      r = solve_min_w_smt(inst, spec.options);
      break;
    default:
      if (!spec.parts) throw PreconditionError("partition problem without a partition");
      r = solve_partition(inst, *spec.parts, spec.kind, spec.options);
      break;
  }
  if (spec.target) {
    const bool maximize = spec.kind == ProblemKind::max_card_expand_part ||
                          spec.kind == ProblemKind::max_card_reduce_part;
    r.meets_target = maximize ? r.objective >= *spec.target : r.objective <= *spec.target;
  }
  return r;
}

}  // namespace hrcap
