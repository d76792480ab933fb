#include "hrcap/engines.hpp"

#include <algorithm>
#include <set>

#include "hrcap/error.hpp"
#include "hrcap/stability.hpp"

namespace hrcap {

Matching da_resident_proposing(const Instance& inst) {
  return da_resident_proposing(inst, inst.capacities());
}

Matching da_resident_proposing(const Instance& inst, const std::vector<int>& caps) {
  if (inst.has_ties())
    throw PreconditionError("deferred acceptance requires strict lists; break ties first");
  if (static_cast<int>(caps.size()) != inst.num_hospitals())
    throw PreconditionError("capacity vector size mismatch");
  const int nr = inst.num_residents();
  const int nh = inst.num_hospitals();

  std::vector<std::vector<int>> order(nr);
  for (int i = 0; i < nr; ++i) order[i] = inst.resident_pref(i).flatten();
  std::vector<size_t> next(nr, 0);

  Matching m(nr, nh);
  std::set<int> free;  // unassigned residents with proposals left
  for (int i = 0; i < nr; ++i)
    if (!order[i].empty()) free.insert(i);

  while (!free.empty()) {
    const int i = *free.begin();
    const int j = order[i][next[i]++];
    const bool exhausted = next[i] == order[i].size();

    bool accepted = false;
    if (caps[j] > 0) {
      if (m.load(j) < caps[j]) {
        m.add(i, j);
        accepted = true;
      } else {
        // Full: evict the worst-ranked resident if the proposer beats it.
        int worst = -1, worst_rank = -1;
        for (int r : m.residents_of(j)) {
          const int rr = inst.hospital_rank(j, r);
          if (rr > worst_rank) {
            worst_rank = rr;
            worst = r;
          }
        }
        if (inst.hospital_rank(j, i) < worst_rank) {
          m.erase_resident(worst);
          if (next[worst] < order[worst].size()) free.insert(worst);
          m.add(i, j);
          accepted = true;
        }
      }
    }
    if (accepted || exhausted) free.erase(i);
  }
  return m;
}

namespace {

// Backtracking enumeration of all weakly stable matchings.
//
// Two sound reductions keep the search tractable:
//  * Forced pairs. When resident i's top tier among hospitals with free
//    seats is the singleton {j} and j's top tier among live residents is the
//    singleton {i}, every weakly stable matching contains (i, j), and
//    removing the pair (one seat of j, resident i) maps the remaining
//    weakly stable matchings one-to-one. Hospitals without free seats can
//    never match or block, so they are invisible to the rule.
//  * Monotone block pruning. Once a processed resident strictly prefers
//    hospital j to her assignment and j holds a member it strictly ranks
//    below her, that blocking pair can never be repaired by later
//    assignments (members are only added, assignments are final), so the
//    branch dies immediately. The only blocks left to check at a leaf are
//    "wanted and underfilled" ones.
struct Enumerator {
  const Instance& inst;
  std::vector<int> full_cap;  // instance capacities, possibly overridden
  long long limit;
  long long nodes = 0;
  bool skip_unmatched;  // complete instance with enough total capacity

  std::vector<int> cap;        // remaining seats (after forced pairs)
  Matching m;                  // includes forced pairs
  std::vector<int> want_best;  // per hospital: best rank of a spurned wanter
  std::vector<int> member_worst;  // per hospital: worst rank among searched members
  std::vector<int> search_order;  // live residents
  std::vector<Matching> out;

  Enumerator(const Instance& inst_, std::vector<int> caps, long long limit_)
      : inst(inst_),
        full_cap(std::move(caps)),
        limit(limit_),
        cap(full_cap),
        m(inst_.num_residents(), inst_.num_hospitals()),
        want_best(inst_.num_hospitals(), kUnranked),
        member_worst(inst_.num_hospitals(), -1) {
    long long total = 0;
    for (int c : full_cap) total += c;
    skip_unmatched = inst.is_complete() && total >= inst.num_residents();
  }

  void reduce_forced_pairs() {
    const int nr = inst.num_residents();
    std::vector<char> live(nr, 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < nr; ++i) {
        if (!live[i]) continue;
        const int j = effective_top_resident(i);
        if (j < 0) continue;
        if (effective_top_hospital(j, live) != i) continue;
        m.add(i, j);
        --cap[j];
        live[i] = 0;
        changed = true;
      }
    }
    for (int i = 0; i < nr; ++i)
      if (live[i] && !inst.resident_pref(i).tiers.empty()) search_order.push_back(i);
  }

  // Sole member of i's first tier containing a hospital with a free seat,
  // -1 when that tier is not a live singleton or no such tier exists.
  int effective_top_resident(int i) const {
    for (const auto& tier : inst.resident_pref(i).tiers) {
      int found = -1, count = 0;
      for (int j : tier)
        if (cap[j] > 0) {
          found = j;
          ++count;
        }
      if (count > 1) return -1;
      if (count == 1) return found;
    }
    return -1;
  }

  int effective_top_hospital(int j, const std::vector<char>& live) const {
    for (const auto& tier : inst.hospital_pref(j).tiers) {
      int found = -1, count = 0;
      for (int i : tier)
        if (live[i]) {
          found = i;
          ++count;
        }
      if (count > 1) return -1;
      if (count == 1) return found;
    }
    return -1;
  }

  void run() {
    reduce_forced_pairs();
    descend(0);
    std::sort(out.begin(), out.end());
  }

  void bump() {
    if (++nodes > limit) throw GuardExceeded(nodes, limit);
  }

  // Records that resident i would take hospital j; returns false when the
  // branch is dead. Equal ranks are hospital-side ties and do not block.
  // `undo` collects want_best rollbacks.
  bool note_wanter(int i, int j, std::vector<std::pair<int, int>>& undo) {
    const int r = inst.hospital_rank(j, i);
    if (r < want_best[j]) {
      undo.emplace_back(j, want_best[j]);
      want_best[j] = r;
    }
    return want_best[j] >= member_worst[j];
  }

  void descend(size_t pos) {
    if (pos == search_order.size()) {
      for (int j = 0; j < inst.num_hospitals(); ++j)
        if (want_best[j] != kUnranked && m.load(j) < full_cap[j]) return;
      out.push_back(m);
      return;
    }
    const int i = search_order[pos];
    const auto& tiers = inst.resident_pref(i).tiers;

    // Try each hospital with a free seat, in preference order.
    std::vector<std::pair<int, int>> undo;
    bool dead = false;
    for (const auto& tier : tiers) {
      if (dead) break;
      for (int j : tier) {
        if (m.load(j) >= full_cap[j]) continue;
        bump();
        const int r = inst.hospital_rank(j, i);
        const size_t undo_mark = undo.size();
        const int old_worst = member_worst[j];
        m.add(i, j);
        member_worst[j] = std::max(member_worst[j], r);
        bool ok = want_best[j] >= member_worst[j];
        if (ok) descend(pos + 1);
        m.erase_resident(i);
        member_worst[j] = old_worst;
        rollback(undo, undo_mark);
      }
      // Passing a tier means every assignment tried below strictly loses to
      // its members, so they become wanted. Dead means an unfixable block
      // already exists.
      for (int j : tier)
        if (!note_wanter(i, j, undo)) dead = true;
    }

    if (!dead && !skip_unmatched) {
      bump();
      descend(pos + 1);  // leave i unmatched; all her hospitals are wanted
    }
    rollback(undo, 0);
  }

  void rollback(std::vector<std::pair<int, int>>& undo, size_t mark) {
    while (undo.size() > mark) {
      want_best[undo.back().first] = undo.back().second;
      undo.pop_back();
    }
  }
};

}  // namespace

std::vector<Matching> enumerate_weakly_stable(const Instance& inst,
                                              const std::vector<int>& capacities,
                                              long long limit) {
  if (static_cast<int>(capacities.size()) != inst.num_hospitals())
    throw PreconditionError("capacity vector size mismatch");
  for (int c : capacities)
    if (c < 0) throw PreconditionError("negative capacity");
  Enumerator e(inst, capacities, limit);
  e.run();
  return std::move(e.out);
}

std::vector<Matching> enumerate_weakly_stable(const Instance& inst, long long limit) {
  return enumerate_weakly_stable(inst, inst.capacities(), limit);
}

std::vector<Matching> enumerate_stable(const Instance& inst, const std::vector<int>& capacities,
                                       long long limit) {
  if (inst.has_ties())
    throw PreconditionError("enumerate_stable requires strict lists; break ties first");
  return enumerate_weakly_stable(inst, capacities, limit);
}

std::vector<Matching> enumerate_stable(const Instance& inst, long long limit) {
  return enumerate_stable(inst, inst.capacities(), limit);
}

std::vector<TieRef> list_ties(const Instance& inst) {
  std::vector<TieRef> out;
  for (int i = 0; i < inst.num_residents(); ++i) {
    const auto& tiers = inst.resident_pref(i).tiers;
    for (size_t t = 0; t < tiers.size(); ++t)
      if (tiers[t].size() > 1)
        out.push_back({Side::resident, i, static_cast<int>(t), static_cast<int>(tiers[t].size())});
  }
  for (int j = 0; j < inst.num_hospitals(); ++j) {
    const auto& tiers = inst.hospital_pref(j).tiers;
    for (size_t t = 0; t < tiers.size(); ++t)
      if (tiers[t].size() > 1)
        out.push_back({Side::hospital, j, static_cast<int>(t), static_cast<int>(tiers[t].size())});
  }
  return out;
}

namespace {

long long factorial_capped(int n, long long cap) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > cap / k) return cap + 1;
    f *= k;
  }
  return f;
}

// k-th lexicographic permutation of sorted `items`, via the factorial number
// system.
std::vector<int> kth_permutation(std::vector<int> items, long long k) {
  std::vector<int> out;
  out.reserve(items.size());
  std::vector<long long> fact(items.size() + 1, 1);
  for (size_t v = 1; v < fact.size(); ++v) fact[v] = fact[v - 1] * static_cast<long long>(v);
  for (size_t left = items.size(); left > 0; --left) {
    const long long block = fact[left - 1];
    const size_t idx = static_cast<size_t>(k / block);
    k %= block;
    out.push_back(items[idx]);
    items.erase(items.begin() + static_cast<long>(idx));
  }
  return out;
}

}  // namespace

long long count_tie_resolutions(const Instance& inst, long long limit) {
  long long total = 1;
  for (const auto& tie : list_ties(inst)) {
    const long long f = factorial_capped(tie.size, limit);
    if (f > limit || total > limit / f) throw GuardExceeded(limit + 1, limit);
    total *= f;
  }
  return total;
}

TieResolution tie_resolution_at(const Instance& inst, long long k) {
  const auto ties = list_ties(inst);
  std::vector<long long> radix(ties.size());
  for (size_t t = 0; t < ties.size(); ++t)
    radix[t] = factorial_capped(ties[t].size, std::numeric_limits<long long>::max() / 2);
  TieResolution res;
  res.perm_index.assign(ties.size(), 0);
  for (size_t t = ties.size(); t > 0; --t) {
    res.perm_index[t - 1] = k % radix[t - 1];
    k /= radix[t - 1];
  }
  if (k != 0) throw PreconditionError("resolution index out of range");
  return res;
}

Instance break_ties(const Instance& inst, const TieResolution& resolution) {
  const auto ties = list_ties(inst);
  if (resolution.perm_index.size() != ties.size())
    throw PreconditionError("resolution has " + std::to_string(resolution.perm_index.size()) +
                            " entries for " + std::to_string(ties.size()) + " ties");
  auto rprefs = inst.resident_prefs();
  auto hprefs = inst.hospital_prefs();
  for (size_t t = 0; t < ties.size(); ++t) {
    const TieRef& tie = ties[t];
    auto& prefs = tie.side == Side::resident ? rprefs : hprefs;
    auto& tiers = prefs[tie.agent].tiers;
    const auto order = kth_permutation(tiers[tie.tier], resolution.perm_index[t]);
    std::vector<std::vector<int>> replaced;
    replaced.reserve(tiers.size() + order.size() - 1);
    for (size_t u = 0; u < tiers.size(); ++u) {
      if (static_cast<int>(u) == tie.tier)
        for (int v : order) replaced.push_back({v});
      else
        replaced.push_back(tiers[u]);
    }
    tiers = std::move(replaced);
  }
  return Instance(inst.capacities(), std::move(rprefs), std::move(hprefs));
}

}  // namespace hrcap
