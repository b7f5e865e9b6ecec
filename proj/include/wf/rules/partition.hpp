#pragma once

#include <map>
#include <string>
#include <vector>

#include "wf/rules/ruleset.hpp"

namespace wf::rules {

// Witness points are concrete inputs (one value per required variable)
// demonstrating a violation.
using Witness = std::map<Variable, double>;

struct Overlap {
  std::size_t rule_a;
  std::size_t rule_b;
  Witness witness;
};

struct Gap {
  Witness witness;
};

struct PartitionReport {
  std::vector<Overlap> overlaps;
  std::vector<Gap> gaps;

  bool ok() const { return overlaps.empty() && gaps.empty(); }
  std::string summary(const Ruleset& rs) const;
};

// Exact disjointness/coverage check over the required-variable domain.
// Rule bounds induce a grid of elementary cells; every cell is either
// inside or outside each rule box, so midpoint counting is exact (no
// sampling). Violations are data, not errors.
PartitionReport validate_partition(const Ruleset& rs);

}  // namespace wf::rules
