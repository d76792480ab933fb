#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hrcap/gadgets.hpp"
#include "hrcap/instance.hpp"
#include "hrcap/matching.hpp"

namespace hrcap {

// Line-oriented "hrcap 1" text format, UTF-8, '#' starts a comment:
//
//   hrcap 1
//   residents <nR>
//   hospitals <nH>
//   capacities <c_0> ... <c_{nH-1}>
//   rlist <r>: <tok> <tok> ...     tok = hospital index or ( h h ) for a tie
//   hlist <h>: <tok> <tok> ...
//   partition <k>: <h-indices...> budget <B_k>
//
// Agents are 0-based. A missing list line means an empty list; partition
// lines are optional. The serializer emits the canonical form: every list
// line present in ascending agent order, tie members ascending, single
// spaces, partition parts ascending.

struct ParsedInstance {
  Instance instance;
  std::optional<PartitionBudgets> parts;
};

ParsedInstance parse_instance_text(std::istream& in);
ParsedInstance parse_instance_text(const std::string& text);

// parse + validate_instance; throws ValidationError when violations exist.
ParsedInstance load_instance(std::istream& in);
ParsedInstance load_instance_file(const std::string& path);  // "-" = stdin

std::string serialize_instance(const Instance& inst,
                               const std::optional<PartitionBudgets>& parts = std::nullopt);

// Matching format: one "pair <r> <h>" line per pair, canonical order by
// resident index.
Matching parse_matching(std::istream& in, const Instance& inst);
std::string serialize_matching(const Matching& m);

// Layout map: one "map <agent> <role...>" line per gadget agent, residents
// first. Roles: "src r<i>" / "src h<j>" for copies, "w <ell> <h>", "y <ell>",
// "v0 <ell> <h>", "v1 <ell> <h>", "h0 <k>", "z <k>", "x <k>" for villages,
// "split1 h<j>" / "split2 h<j>" for hospital splits, "copy <s> r<i>" /
// "copy <s> h<j>" and "pad r<k>" / "pad h<k>" for amplifiers.
void write_layout_map(std::ostream& out, const GadgetOutput& gadget);

std::string format_violations(const std::vector<Violation>& violations);

}  // namespace hrcap
