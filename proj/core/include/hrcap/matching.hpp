#pragma once

#include <utility>
#include <vector>

namespace hrcap {

inline constexpr int kUnmatched = -1;

// Set of resident-hospital pairs with reverse indices on both sides. Each
// resident appears in at most one pair; capacity limits are checked against
// an instance by check_feasible, not by this container.
class Matching {
 public:
  Matching() = default;
  Matching(int num_residents, int num_hospitals)
      : resident_to_hospital_(num_residents, kUnmatched),
        hospital_to_residents_(num_hospitals) {}

  int num_residents() const { return static_cast<int>(resident_to_hospital_.size()); }
  int num_hospitals() const { return static_cast<int>(hospital_to_residents_.size()); }

  // Adds (r, h). The resident must currently be unmatched.
  void add(int r, int h);
  // Removes the pair of resident r, if any.
  void erase_resident(int r);

  int hospital_of(int r) const { return resident_to_hospital_[r]; }
  const std::vector<int>& residents_of(int h) const { return hospital_to_residents_[h]; }
  bool matched(int r) const { return resident_to_hospital_[r] != kUnmatched; }
  int load(int h) const { return static_cast<int>(hospital_to_residents_[h].size()); }

  // Number of pairs.
  int size() const;

  // Pairs sorted by resident index; the canonical form used for comparison
  // and serialization.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const Matching& o) const {
    return resident_to_hospital_ == o.resident_to_hospital_;
  }
  // Lexicographic order on the canonical pair list.
  bool operator<(const Matching& o) const;

 private:
  std::vector<int> resident_to_hospital_;
  std::vector<std::vector<int>> hospital_to_residents_;  // kept sorted
};

}  // namespace hrcap
