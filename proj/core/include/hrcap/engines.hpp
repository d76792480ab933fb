#pragma once

#include <cstdint>
#include <vector>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

inline constexpr long long kDefaultGuard = 10'000'000;

// Resident-proposing deferred acceptance. The lowest-index unassigned
// resident proposes next; a full hospital rejects its worst-ranked resident
// when a strictly better proposer arrives. Requires strict lists; throws
// PreconditionError on ties. The result is stable and resident-optimal.
// The second form runs against an override capacity vector, preferences
// unchanged.
Matching da_resident_proposing(const Instance& inst);
Matching da_resident_proposing(const Instance& inst, const std::vector<int>& capacities);

// All stable matchings, by exhaustive search over capacity-respecting
// assignments with stability filtering. Strict lists only. `limit` bounds the
// number of candidate assignments explored; GuardExceeded beyond it. The
// result is sorted in canonical (pair-list lexicographic) order.
std::vector<Matching> enumerate_stable(const Instance& inst, long long limit = kDefaultGuard);
std::vector<Matching> enumerate_stable(const Instance& inst, const std::vector<int>& capacities,
                                       long long limit);

// All weakly stable matchings of an instance that may contain ties. On
// strict instances this coincides with enumerate_stable.
std::vector<Matching> enumerate_weakly_stable(const Instance& inst,
                                              long long limit = kDefaultGuard);
std::vector<Matching> enumerate_weakly_stable(const Instance& inst,
                                              const std::vector<int>& capacities, long long limit);

// One choice of linear order per tie. Ties are indexed in canonical order:
// resident lists first (by agent, then tier position), then hospital lists.
// Entry k selects the idx-th lexicographic permutation of tie k's members.
struct TieResolution {
  std::vector<long long> perm_index;
};

// Location of every tie in canonical order: (side, agent, tier index, size).
struct TieRef {
  Side side;
  int agent;
  int tier;
  int size;
};
std::vector<TieRef> list_ties(const Instance& inst);

// Number of distinct resolutions (product of tie-size factorials); throws
// GuardExceeded if it exceeds `limit`.
long long count_tie_resolutions(const Instance& inst, long long limit = kDefaultGuard);

// The k-th resolution in lexicographic order over per-tie permutation
// indices, k in [0, count_tie_resolutions).
TieResolution tie_resolution_at(const Instance& inst, long long k);

// Strict instance obtained by replacing each tie with the chosen linear
// order. A strict instance is returned unchanged for the empty resolution.
Instance break_ties(const Instance& inst, const TieResolution& resolution);

}  // namespace hrcap
