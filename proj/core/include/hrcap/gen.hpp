#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hrcap/instance.hpp"

namespace hrcap {

// 64-bit mix-and-multiply generator (splitmix64). The recurrence is part of
// the corpus contract and must not change:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform draw in [0, bound) by rejection; bound > 0.
  std::uint64_t bounded(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Unbiased in-place shuffle traversing indices in descending order:
// for i = n-1 .. 1: swap(v[i], v[bounded(i + 1)]).
void shuffle_descending(std::vector<int>& v, SplitMix64& rng);

enum class CapacityMode { all_one, uniform, fixed };
enum class TieSide { resident, hospital };

struct GenSpec {
  int num_residents = 0;
  int num_hospitals = 0;
  CapacityMode capacity_mode = CapacityMode::all_one;
  int cap_lo = 1;  // uniform mode bounds, inclusive
  int cap_hi = 1;
  std::vector<int> cap_fixed;
  int ties = 0;  // number of agents given a length-two head tie
  TieSide tie_side = TieSide::resident;
  int list_length = 0;  // 0 = full lists; otherwise target length before repair
  std::uint64_t seed = 0;

  std::optional<std::string> invalid_reason() const;
  bool operator==(const GenSpec&) const = default;
};

// Deterministic for a fixed spec across platforms. Draw order: capacities
// (ascending hospital), resident permutations (ascending), hospital
// permutations (ascending). Incomplete lists are prefixes of the permutation
// with mutual acceptability repaired by intersection; ties merge the top two
// surviving entries of the first `ties` agents on the tie side.
Instance generate(const GenSpec& spec);

// The 6-resident, 4-hospital instance with capacities (1,1,1,3) on which the
// plurality and Borda picks are both suboptimal for a single extra seat.
Instance builtin_counterexample();

// Corpus manifest: one "gen <seed> <fields>" line per instance.
std::string manifest_line(const GenSpec& spec);
GenSpec parse_manifest_line(const std::string& line, int lineno = 0);
std::vector<GenSpec> parse_manifest(std::istream& in);

}  // namespace hrcap
