#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hrcap/engines.hpp"
#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

// True iff ties occur only in resident lists, at most one per list, each of
// length exactly two and positioned at the head, with unit capacities and
// |R| = |H|. Strict unit-capacity square instances qualify with zero ties.
bool check_normal_form(const Instance& inst);

// Agent indexing of a village instance built from an n x n normal-form
// source with L tied residents.
//
// Residents: copies of the strict residents first, then per village ell the
// block w(ell,1..n), y(ell). Hospitals: copies of the source hospitals,
// then the shared pool H0 (n^2, in blocks of n), then per village the blocks
// V0 and V1 (n each), then the pool Z (n^3), then the pool X (n*L) last.
struct VillageLayout {
  int n = 0;
  int L = 0;
  std::vector<int> tied_sources;    // village ell -> source resident index
  std::vector<int> strict_sources;  // copy k -> source resident index

  int rcopy(int k) const { return k; }
  int w(int ell, int h) const { return (n - L) + ell * (n + 1) + (h - 1); }
  int y(int ell) const { return (n - L) + ell * (n + 1) + n; }

  int hcopy(int j) const { return j; }
  int h0(int k) const { return n + k; }
  int v0(int ell, int h) const { return n + n * n + 2 * n * ell + (h - 1); }
  int v1(int ell, int h) const { return n + n * n + 2 * n * ell + n + (h - 1); }
  int z(int k) const { return n + n * n + 2 * n * L + k; }
  int x(int k) const { return n + n * n + 2 * n * L + n * n * n + k; }

  int num_residents() const { return n + n * L; }
  int num_hospitals() const { return n + n * n + 3 * n * L + n * n * n; }

  bool is_hcopy(int hj) const { return hj < n; }
  // Village of a w-resident, or -1.
  int village_of_resident(int r, int* h_out = nullptr) const;
};

enum class GadgetKind { expansion, reduction, t4_split, c2_amplify, t3_amplify };

const char* gadget_kind_name(GadgetKind kind);
std::optional<GadgetKind> gadget_kind_from_name(const std::string& name);

// Source hospital -> gadget hospital indices for the hospital-splitting
// construction. Untied hospitals keep a single copy.
struct SplitLayout {
  std::vector<int> first_copy;   // j' (the plain copy for untied hospitals)
  std::vector<int> second_copy;  // j'', -1 when untied
  std::vector<bool> tied;
};

// Copy-and-pad construction: `copies` replicas of the source plus `padding`
// mutually-first pairs. Copies occupy the low indices, pads the high ones.
struct AmplifierLayout {
  int n = 0;
  int copies = 0;
  int padding = 0;
  int copy_resident(int s, int i) const { return s * n + i; }
  int pad_resident(int k) const { return copies * n + k; }
  int copy_hospital(int s, int j) const { return s * n + j; }
  int pad_hospital(int k) const { return copies * n + k; }
  int side_size() const { return copies * n + padding; }
};

struct GadgetOutput {
  GadgetKind kind = GadgetKind::expansion;
  Instance instance;
  long long budget = 0;                   // global budget (village gadgets)
  std::optional<PartitionBudgets> parts;  // per-part budgets (t4, t3)
  long long target = 0;
  std::optional<VillageLayout> villages;
  std::optional<SplitLayout> split;
  std::optional<AmplifierLayout> amplifier;
};

// Village instance for seat expansion: hospital copies and the X pool have
// capacity one, everything else capacity zero. Budget L*n, target
// n*target_in + 2*n*L. Requires a complete normal-form source.
GadgetOutput build_expansion_gadget(const Instance& smt, long long target);

// Same layout with every village hospital at capacity one; the budget is the
// number of seats to remove.
GadgetOutput build_reduction_gadget(const Instance& smt, long long target);

struct Lift {
  CapacityDelta delta;
  Matching matching;
};

// Transports a complete weakly stable matching of the source into the
// expansion gadget: one extra seat on v0(ell,r) and on each v1(ell,h), h != r,
// where r is the position of the matched hospital in the tied resident's
// list; the lifted matching pairs w(ell,r) with the hospital copy, y(ell)
// with v0(ell,r), the other w's with their v1's, and copies the strict
// residents' pairs. sum(t) = L*n exactly.
Lift lemma1_lift(const Instance& smt, const Matching& m, const GadgetOutput& gadget);

// Reduction counterpart: removes the seat of v1(ell,r) and of every hospital
// in V0 except v0(ell,r); the matching is the same as in lemma1_lift.
Lift theorem2_lift(const Instance& smt, const Matching& m, const GadgetOutput& gadget);

// Splits every hospital with a length-two head tie into two copies: the
// first copy keeps the tie's first resident and the strict tail, the second
// keeps only the tie's second resident (non-mutual tail entries are dropped).
// Residents rewrite their mention of the hospital accordingly. Each split
// pair forms a part with budget c_j; untied hospitals form singleton parts
// with budget zero. With `unit_capacity_variant` every part hospital gets
// capacity one instead of zero (removal-budget flavor). Target unchanged.
GadgetOutput build_t4_split_gadget(const Instance& hrti, long long target,
                                   bool unit_capacity_variant = false);

struct AmplifierParams {
  int copies = 1;
  int padding = 0;
  std::optional<int> exponent;  // record-keeping only
};

// Copy-and-pad amplifier from a unit-capacity square instance with resident
// head ties (incomplete lists allowed) to a complete normal-form instance.
// Emitted target: padding + copies * n^2, the cost bound of lifting a
// complete weakly stable source matching. The yes/no gap is guaranteed once
// padding > n^2 - n.
GadgetOutput build_c2_amplifier(const Instance& hrti, const AmplifierParams& params);

// Amplifier for the partition variant: replicates the source (with its
// partition and budgets) `copies` times, adds `padding` mutually-first pairs
// as singleton parts with budget zero. Same target rule as above.
GadgetOutput build_t3_amplifier(const Instance& hri, const PartitionBudgets& parts,
                                const AmplifierParams& params);

struct TransportReport {
  long long gadget_optimum = 0;  // brute force over (t, stable matching)
  long long min_lift_cost = 0;   // min lift cost over weakly stable matchings
  CapacityDelta best_delta;
  Matching best_matching;
  std::vector<std::pair<int, int>> decoded_pairs;  // source pairs of the argmin
  long long decoded_avg_rank = 0;
  long long source_min_avg = 0;
  bool optimum_matches = false;
  bool argmin_maps_back = false;
  bool ok() const { return optimum_matches && argmin_maps_back; }
};

// Brute-forces every allocation with sum(t) = L*n over the whole gadget
// hospital set and every stable matching of each expanded instance, then
// checks that the optimum equals the minimum lemma1_lift cost and that the
// argmin decodes (via the layout) to a minimum average-rank weakly stable
// matching of the source. Desk scale only.
TransportReport verify_lemma2(const Instance& smt, long long guard = kDefaultGuard,
                              int workers = 1);

// Same protocol for the reduction gadget with removal vectors sum(t) = L*n.
TransportReport verify_theorem2(const Instance& smt, long long guard = kDefaultGuard,
                                int workers = 1);

}  // namespace hrcap
