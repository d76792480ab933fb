#pragma once

#include <limits>
#include <vector>

namespace hrcap {

enum class Side { resident, hospital };

// 0-based index on one side of the bipartition.
struct AgentId {
  Side side;
  int index;
  bool operator==(const AgentId&) const = default;
};

// Rank value: 1 = most preferred. Agents absent from a list are unranked.
inline constexpr int kUnranked = std::numeric_limits<int>::max();

// Preference list as an ordered sequence of tiers. A strict list has all
// tiers of size one; a tie is a tier with two or more members. Members are
// indices on the opposite side, kept sorted ascending within a tier.
struct PreferenceList {
  std::vector<std::vector<int>> tiers;

  static PreferenceList strict(std::vector<int> order) {
    PreferenceList p;
    p.tiers.reserve(order.size());
    for (int v : order) p.tiers.push_back({v});
    return p;
  }

  bool has_ties() const {
    for (const auto& t : tiers)
      if (t.size() > 1) return true;
    return false;
  }

  // Number of listed agents across all tiers.
  int listed_count() const {
    int n = 0;
    for (const auto& t : tiers) n += static_cast<int>(t.size());
    return n;
  }

  bool lists(int who) const {
    for (const auto& t : tiers)
      for (int v : t)
        if (v == who) return true;
    return false;
  }

  // Listed agents in tier order, tie members ascending.
  std::vector<int> flatten() const {
    std::vector<int> out;
    out.reserve(listed_count());
    for (const auto& t : tiers) out.insert(out.end(), t.begin(), t.end());
    return out;
  }

  bool operator==(const PreferenceList&) const = default;
};

// 1 + number of strictly preferred agents, kUnranked if absent. Members of
// the same tier share a rank.
int rank_of(const PreferenceList& list, int who);

}  // namespace hrcap
