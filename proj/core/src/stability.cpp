#include "hrcap/stability.hpp"

#include "hrcap/error.hpp"

namespace hrcap {

std::optional<std::string> infeasible_reason(const Instance& inst, const Matching& m) {
  if (m.num_residents() != inst.num_residents() || m.num_hospitals() != inst.num_hospitals())
    return "matching dimensions do not fit the instance";
  for (int j = 0; j < inst.num_hospitals(); ++j)
    if (m.load(j) > inst.capacity(j))
      return "hospital " + std::to_string(j) + " holds " + std::to_string(m.load(j)) +
             " residents with capacity " + std::to_string(inst.capacity(j));
  for (int i = 0; i < inst.num_residents(); ++i) {
    const int j = m.hospital_of(i);
    if (j == kUnmatched) continue;
    if (!inst.acceptable(i, j))
      return "pair (" + std::to_string(i) + ", " + std::to_string(j) +
             ") is not mutually acceptable";
  }
  return std::nullopt;
}

bool is_blocking_pair(const Instance& inst, const Matching& m, int i, int j) {
  if (!inst.acceptable(i, j))
    throw PreconditionError("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") is not mutually acceptable");
  const int mi = m.hospital_of(i);
  const bool resident_side =
      mi == kUnmatched || inst.resident_rank(i, j) < inst.resident_rank(i, mi);
  if (!resident_side) return false;
  if (m.load(j) < inst.capacity(j)) return true;
  const int ri = inst.hospital_rank(j, i);
  for (int r : m.residents_of(j))
    if (ri < inst.hospital_rank(j, r)) return true;
  return false;
}

bool is_stable(const Instance& inst, const Matching& m) {
  if (auto reason = infeasible_reason(inst, m))
    throw PreconditionError("infeasible matching: " + *reason);
  for (int i = 0; i < inst.num_residents(); ++i)
    for (int j = 0; j < inst.num_hospitals(); ++j)
      if (inst.acceptable(i, j) && is_blocking_pair(inst, m, i, j)) return false;
  return true;
}

std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m) {
  if (auto reason = infeasible_reason(inst, m))
    throw PreconditionError("infeasible matching: " + *reason);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < inst.num_residents(); ++i)
    for (int j = 0; j < inst.num_hospitals(); ++j)
      if (inst.acceptable(i, j) && is_blocking_pair(inst, m, i, j)) out.emplace_back(i, j);
  return out;
}

long long avg_rank(const Instance& inst, const Matching& m) {
  long long sum = 0;
  for (int i = 0; i < inst.num_residents(); ++i) {
    const int j = m.hospital_of(i);
    if (j == kUnmatched) continue;
    const int r = inst.resident_rank(i, j);
    if (r == kUnranked)
      throw PreconditionError("matched pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") has an unranked partner");
    sum += r;
  }
  return sum;
}

int cardinality(const Matching& m) { return m.size(); }

}  // namespace hrcap
