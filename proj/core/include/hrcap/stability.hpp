#pragma once

#include <optional>
#include <string>

#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

// Reason the matching is infeasible for the instance (capacity exceeded,
// unacceptable pair, index out of range); nullopt when feasible.
std::optional<std::string> infeasible_reason(const Instance& inst, const Matching& m);

// (i, j) blocks m iff i is unassigned or strictly prefers j to her hospital,
// and j has a free seat or strictly prefers i to one of its residents. With
// ties "prefers" is strict on both sides, so on tied instances the induced
// notion of stability is weak stability. Throws PreconditionError when the
// pair is not mutually acceptable.
bool is_blocking_pair(const Instance& inst, const Matching& m, int i, int j);

// True iff no acceptable pair blocks m. Throws PreconditionError when m is
// infeasible for the instance.
bool is_stable(const Instance& inst, const Matching& m);

// Sum over matched pairs of the resident's rank of her hospital. No
// normalization by the number of hospitals. Unmatched residents contribute
// nothing. Throws PreconditionError if a matched pair is unranked.
long long avg_rank(const Instance& inst, const Matching& m);

// Number of matched pairs.
int cardinality(const Matching& m);

// All blocking pairs, sorted by (resident, hospital).
std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m);

}  // namespace hrcap
