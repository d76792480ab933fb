#include "hrcap/instance.hpp"

#include <algorithm>
#include <numeric>

#include "hrcap/error.hpp"

namespace hrcap {

int rank_of(const PreferenceList& list, int who) {
  int before = 0;
  for (const auto& tier : list.tiers) {
    for (int v : tier)
      if (v == who) return before + 1;
    before += static_cast<int>(tier.size());
  }
  return kUnranked;
}

namespace {

// Rank table for one side; skips out-of-range entries and keeps the first
// occurrence of duplicates so that invalid instances stay representable.
std::vector<std::vector<int>> build_ranks(const std::vector<PreferenceList>& prefs,
                                          int opposite_count) {
  std::vector<std::vector<int>> table(prefs.size(),
                                      std::vector<int>(opposite_count, kUnranked));
  for (size_t a = 0; a < prefs.size(); ++a) {
    int before = 0;
    for (const auto& tier : prefs[a].tiers) {
      for (int v : tier) {
        if (v >= 0 && v < opposite_count && table[a][v] == kUnranked)
          table[a][v] = before + 1;
      }
      before += static_cast<int>(tier.size());
    }
  }
  return table;
}

}  // namespace

Instance::Instance(std::vector<int> capacities,
                   std::vector<PreferenceList> resident_prefs,
                   std::vector<PreferenceList> hospital_prefs)
    : capacities_(std::move(capacities)),
      resident_prefs_(std::move(resident_prefs)),
      hospital_prefs_(std::move(hospital_prefs)) {
  if (capacities_.size() != hospital_prefs_.size())
    throw PreconditionError("capacity vector size does not match hospital count");
  const int nr = num_residents();
  const int nh = num_hospitals();
  for (const auto& p : resident_prefs_)
    if (p.has_ties()) has_ties_ = true;
  for (const auto& p : hospital_prefs_)
    if (p.has_ties()) has_ties_ = true;
  for (const auto& p : resident_prefs_)
    if (p.listed_count() < nh) is_complete_ = false;
  for (const auto& p : hospital_prefs_)
    if (p.listed_count() < nr) is_complete_ = false;
  resident_rank_ = build_ranks(resident_prefs_, nh);
  hospital_rank_ = build_ranks(hospital_prefs_, nr);
}

long long Instance::total_capacity() const {
  return std::accumulate(capacities_.begin(), capacities_.end(), 0LL);
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  const int nr = inst.num_residents();
  const int nh = inst.num_hospitals();

  for (int j = 0; j < nh; ++j) {
    if (inst.capacity(j) < 0)
      out.push_back({Side::hospital, j, "negative-capacity",
                     "capacity " + std::to_string(inst.capacity(j))});
  }

  for (int i = 0; i < nr; ++i) {
    std::vector<int> seen(nh, 0);
    for (const auto& tier : inst.resident_pref(i).tiers) {
      for (int v : tier) {
        if (v < 0 || v >= nh)
          out.push_back({Side::resident, i, "bad-index", "lists hospital " + std::to_string(v)});
        else if (++seen[v] == 2)
          out.push_back({Side::resident, i, "duplicate-entry",
                         "hospital " + std::to_string(v) + " appears more than once"});
      }
    }
  }
  for (int j = 0; j < nh; ++j) {
    std::vector<int> seen(nr, 0);
    for (const auto& tier : inst.hospital_pref(j).tiers) {
      for (int v : tier) {
        if (v < 0 || v >= nr)
          out.push_back({Side::hospital, j, "bad-index", "lists resident " + std::to_string(v)});
        else if (++seen[v] == 2)
          out.push_back({Side::hospital, j, "duplicate-entry",
                         "resident " + std::to_string(v) + " appears more than once"});
      }
    }
  }

  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nh; ++j) {
      const bool r_lists = inst.resident_rank(i, j) != kUnranked;
      const bool h_lists = inst.hospital_rank(j, i) != kUnranked;
      if (r_lists != h_lists) {
        if (r_lists)
          out.push_back({Side::resident, i, "mutual-acceptability",
                         "lists hospital " + std::to_string(j) + " which does not list back"});
        else
          out.push_back({Side::hospital, j, "mutual-acceptability",
                         "lists resident " + std::to_string(i) + " which does not list back"});
      }
    }
  }
  return out;
}

bool is_normalized(const Instance& inst) {
  const int nr = inst.num_residents();
  if (inst.total_capacity() < nr) return false;
  if (inst.is_complete()) return true;
  // Universal sink: one hospital that can absorb everybody.
  for (int j = 0; j < inst.num_hospitals(); ++j) {
    if (inst.capacity(j) < nr) continue;
    bool sink = true;
    for (int i = 0; i < nr && sink; ++i)
      if (!inst.acceptable(i, j)) sink = false;
    if (sink) return true;
  }
  return false;
}

Instance normalize_instance(const Instance& inst) {
  if (is_normalized(inst)) return inst;
  const int nr = inst.num_residents();
  const int nh = inst.num_hospitals();

  auto caps = inst.capacities();
  caps.push_back(nr);

  std::vector<PreferenceList> rprefs;
  rprefs.reserve(nr);
  for (int i = 0; i < nr; ++i) {
    PreferenceList p = inst.resident_pref(i);
    p.tiers.push_back({nh});
    rprefs.push_back(std::move(p));
  }

  auto hprefs = inst.hospital_prefs();
  std::vector<int> everyone(nr);
  for (int i = 0; i < nr; ++i) everyone[i] = i;
  hprefs.push_back(PreferenceList::strict(everyone));

  return Instance(std::move(caps), std::move(rprefs), std::move(hprefs));
}

long long CapacityDelta::total() const {
  long long s = 0;
  for (int v : amounts) s += v;
  return s;
}

std::optional<std::string> CapacityDelta::infeasible_reason(const Instance& inst) const {
  if (static_cast<int>(amounts.size()) != inst.num_hospitals())
    return "delta has " + std::to_string(amounts.size()) + " entries for " +
           std::to_string(inst.num_hospitals()) + " hospitals";
  for (int v : amounts)
    if (v < 0) return "negative delta entry";
  const long long sum = total();
  if (direction == DeltaDirection::expand) {
    if (sum > budget)
      return "expansion uses " + std::to_string(sum) + " seats over budget " +
             std::to_string(budget);
  } else {
    if (sum < budget)
      return "reduction removes " + std::to_string(sum) + " seats, below budget " +
             std::to_string(budget);
    for (int j = 0; j < inst.num_hospitals(); ++j)
      if (inst.capacity(j) - amounts[j] < 0)
        return "hospital " + std::to_string(j) + " capacity would drop below zero";
  }
  return std::nullopt;
}

Instance apply_delta(const Instance& inst, const CapacityDelta& delta) {
  if (auto reason = delta.infeasible_reason(inst))
    throw PreconditionError(*reason);
  auto caps = inst.capacities();
  for (int j = 0; j < inst.num_hospitals(); ++j) {
    if (delta.direction == DeltaDirection::expand)
      caps[j] += delta.amounts[j];
    else
      caps[j] -= delta.amounts[j];
  }
  return Instance(std::move(caps), inst.resident_prefs(), inst.hospital_prefs());
}

std::optional<std::string> PartitionBudgets::invalid_reason(int num_hospitals) const {
  if (parts.size() != budgets.size()) return "part/budget count mismatch";
  std::vector<int> owner(num_hospitals, -1);
  for (size_t k = 0; k < parts.size(); ++k) {
    if (budgets[k] < 0) return "negative budget for part " + std::to_string(k);
    if (parts[k].empty()) return "empty part " + std::to_string(k);
    for (int j : parts[k]) {
      if (j < 0 || j >= num_hospitals)
        return "part " + std::to_string(k) + " names hospital " + std::to_string(j);
      if (owner[j] != -1)
        return "hospital " + std::to_string(j) + " appears in two parts";
      owner[j] = static_cast<int>(k);
    }
  }
  for (int j = 0; j < num_hospitals; ++j)
    if (owner[j] == -1) return "hospital " + std::to_string(j) + " not covered";
  return std::nullopt;
}

}  // namespace hrcap
