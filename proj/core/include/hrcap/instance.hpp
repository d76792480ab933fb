#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrcap/types.hpp"

namespace hrcap {

// A hospitals/residents instance: capacities on the hospital side plus one
// preference list per agent. Immutable after construction; derived data
// (tie/completeness flags, rank tables) is computed once and shared freely
// across threads.
//
// Construction never throws on semantic defects (non-mutual lists, duplicate
// entries, bad indices); those are reported by validate_instance. Out-of-range
// or duplicate entries are simply skipped when building the rank tables.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<int> capacities,
           std::vector<PreferenceList> resident_prefs,
           std::vector<PreferenceList> hospital_prefs);

  int num_residents() const { return static_cast<int>(resident_prefs_.size()); }
  int num_hospitals() const { return static_cast<int>(hospital_prefs_.size()); }
  const std::vector<int>& capacities() const { return capacities_; }
  int capacity(int j) const { return capacities_[j]; }
  long long total_capacity() const;

  const PreferenceList& resident_pref(int i) const { return resident_prefs_[i]; }
  const PreferenceList& hospital_pref(int j) const { return hospital_prefs_[j]; }
  const std::vector<PreferenceList>& resident_prefs() const { return resident_prefs_; }
  const std::vector<PreferenceList>& hospital_prefs() const { return hospital_prefs_; }

  bool has_ties() const { return has_ties_; }
  bool is_complete() const { return is_complete_; }

  // O(1) rank lookups; kUnranked when absent from the list.
  int resident_rank(int i, int j) const { return resident_rank_[i][j]; }
  int hospital_rank(int j, int i) const { return hospital_rank_[j][i]; }

  // Mutual acceptability: both agents list each other.
  bool acceptable(int i, int j) const {
    return resident_rank_[i][j] != kUnranked && hospital_rank_[j][i] != kUnranked;
  }

  bool operator==(const Instance& o) const {
    return capacities_ == o.capacities_ && resident_prefs_ == o.resident_prefs_ &&
           hospital_prefs_ == o.hospital_prefs_;
  }

 private:
  std::vector<int> capacities_;
  std::vector<PreferenceList> resident_prefs_;
  std::vector<PreferenceList> hospital_prefs_;
  bool has_ties_ = false;
  bool is_complete_ = true;
  std::vector<std::vector<int>> resident_rank_;
  std::vector<std::vector<int>> hospital_rank_;
};

struct Violation {
  Side side;
  int agent;
  std::string rule;  // "bad-index", "duplicate-entry", "mutual-acceptability", "negative-capacity"
  std::string detail;
};

// Empty result iff all type invariants hold. Violations are data, not errors.
std::vector<Violation> validate_instance(const Instance& inst);

// True when every resident can always be assigned: total capacity covers all
// residents and either every list is complete or some hospital acts as a
// universal sink (capacity >= |R|, mutually listed with every resident).
bool is_normalized(const Instance& inst);

// Appends one artificial hospital with capacity |R|, ranked last by every
// resident and ranking residents in ascending index, whenever the instance is
// not already normalized. Idempotent.
Instance normalize_instance(const Instance& inst);

enum class DeltaDirection { expand, reduce };

// Per-hospital non-negative capacity change under a budget B.
// expand: sum(t) <= B.  reduce: sum(t) >= B and c - t >= 0 componentwise.
struct CapacityDelta {
  DeltaDirection direction = DeltaDirection::expand;
  std::vector<int> amounts;  // t, one entry per hospital
  long long budget = 0;      // B

  static CapacityDelta zero_expand(int num_hospitals) {
    return {DeltaDirection::expand, std::vector<int>(num_hospitals, 0), 0};
  }
  static CapacityDelta single_expand(int num_hospitals, int j) {
    CapacityDelta d{DeltaDirection::expand, std::vector<int>(num_hospitals, 0), 1};
    d.amounts[j] = 1;
    return d;
  }

  long long total() const;
  // Reason the delta is infeasible against `inst`, nullopt when fine.
  std::optional<std::string> infeasible_reason(const Instance& inst) const;
};

// Returns the instance with capacities c + t (expand) or c - t (reduce);
// preferences unchanged. Throws PreconditionError when the delta is
// infeasible.
Instance apply_delta(const Instance& inst, const CapacityDelta& delta);

// Partition of the hospital set with one budget per part.
struct PartitionBudgets {
  std::vector<std::vector<int>> parts;  // disjoint, covering, members sorted
  std::vector<long long> budgets;

  int num_parts() const { return static_cast<int>(parts.size()); }
  std::optional<std::string> invalid_reason(int num_hospitals) const;
  bool operator==(const PartitionBudgets&) const = default;
};

}  // namespace hrcap
