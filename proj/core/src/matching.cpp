#include "hrcap/matching.hpp"

#include <algorithm>

#include "hrcap/error.hpp"

namespace hrcap {

void Matching::add(int r, int h) {
  if (resident_to_hospital_[r] != kUnmatched)
    throw PreconditionError("resident " + std::to_string(r) + " is already matched");
  resident_to_hospital_[r] = h;
  auto& rs = hospital_to_residents_[h];
  rs.insert(std::lower_bound(rs.begin(), rs.end(), r), r);
}

void Matching::erase_resident(int r) {
  const int h = resident_to_hospital_[r];
  if (h == kUnmatched) return;
  resident_to_hospital_[r] = kUnmatched;
  auto& rs = hospital_to_residents_[h];
  rs.erase(std::find(rs.begin(), rs.end(), r));
}

int Matching::size() const {
  int n = 0;
  for (int h : resident_to_hospital_)
    if (h != kUnmatched) ++n;
  return n;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(size());
  for (int r = 0; r < num_residents(); ++r)
    if (resident_to_hospital_[r] != kUnmatched) out.emplace_back(r, resident_to_hospital_[r]);
  return out;
}

bool Matching::operator<(const Matching& o) const { return pairs() < o.pairs(); }

}  // namespace hrcap
