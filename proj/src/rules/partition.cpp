#include "wf/rules/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace wf::rules {

namespace {

struct Box {
  // Per required variable: [lo, hi] taken from the rule's condition or the
  // full domain when unconstrained.
  std::vector<double> lo;
  std::vector<double> hi;
};

}  // namespace

PartitionReport validate_partition(const Ruleset& rs) {
  PartitionReport report;
  const std::vector<Variable> vars = rs.required_variables();
  if (vars.empty()) return report;

  // Cut points per variable: domain edges plus every rule bound.
  std::vector<std::vector<double>> cuts(vars.size());
  for (std::size_t d = 0; d < vars.size(); ++d) {
    const Domain dom = domain_of(vars[d]);
    std::set<double> set{dom.lo, dom.hi};
    for (const Rule& rule : rs.rules) {
      for (const Condition& c : rule.conditions) {
        if (c.variable == vars[d]) {
          set.insert(c.lo);
          set.insert(c.hi);
        }
      }
    }
    cuts[d].assign(set.begin(), set.end());
  }

  std::vector<Box> boxes(rs.rules.size());
  for (std::size_t r = 0; r < rs.rules.size(); ++r) {
    boxes[r].lo.resize(vars.size());
    boxes[r].hi.resize(vars.size());
    for (std::size_t d = 0; d < vars.size(); ++d) {
      const Domain dom = domain_of(vars[d]);
      boxes[r].lo[d] = dom.lo;
      boxes[r].hi[d] = dom.hi;
      for (const Condition& c : rs.rules[r].conditions) {
        if (c.variable == vars[d]) {
          boxes[r].lo[d] = c.lo;
          boxes[r].hi[d] = c.hi;
        }
      }
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;

  // Odometer over elementary cells; every variable has at least the two
  // domain-edge cuts, so at least one cell exists per dimension.
  std::vector<std::size_t> idx(vars.size(), 0);
  for (;;) {
    Witness witness;
    std::vector<std::size_t> covering;
    for (std::size_t d = 0; d < vars.size(); ++d) {
      const double lo = cuts[d][idx[d]];
      const double hi = cuts[d][idx[d] + 1];
      witness[vars[d]] = (lo + hi) / 2.0;
    }
    for (std::size_t r = 0; r < boxes.size(); ++r) {
      bool inside = true;
      for (std::size_t d = 0; d < vars.size(); ++d) {
        const double lo = cuts[d][idx[d]];
        const double hi = cuts[d][idx[d] + 1];
        if (lo < boxes[r].lo[d] || hi > boxes[r].hi[d]) {
          inside = false;
          break;
        }
      }
      if (inside) covering.push_back(r);
    }

    if (covering.empty()) {
      report.gaps.push_back({witness});
    } else if (covering.size() > 1) {
      for (std::size_t a = 0; a < covering.size(); ++a) {
        for (std::size_t b = a + 1; b < covering.size(); ++b) {
          if (seen_pairs.emplace(covering[a], covering[b]).second) {
            report.overlaps.push_back({covering[a], covering[b], witness});
          }
        }
      }
    }

    // Advance the odometer.
    std::size_t d = 0;
    for (; d < vars.size(); ++d) {
      if (idx[d] + 2 < cuts[d].size()) {
        ++idx[d];
        break;
      }
      idx[d] = 0;
    }
    if (d == vars.size()) break;
  }
  return report;
}

std::string PartitionReport::summary(const Ruleset& rs) const {
  std::ostringstream out;
  auto witness_str = [](const Witness& w) {
    std::ostringstream s;
    bool first = true;
    for (const auto& [var, value] : w) {
      if (!first) s << ", ";
      s << to_string(var) << " = " << value;
      first = false;
    }
    return s.str();
  };
  if (ok()) {
    out << "ruleset '" << rs.name << "': ok (" << rs.rules.size()
        << " rules partition the domain)\n";
    return out.str();
  }
  for (const Overlap& o : overlaps) {
    out << "ruleset '" << rs.name << "': overlap between rule " << o.rule_a
        << " (\"" << rs.rules[o.rule_a].description << "\") and rule "
        << o.rule_b << " (\"" << rs.rules[o.rule_b].description
        << "\") at " << witness_str(o.witness) << "\n";
  }
  for (const Gap& g : gaps) {
    out << "ruleset '" << rs.name << "': no rule covers "
        << witness_str(g.witness) << "\n";
  }
  return out.str();
}

}  // namespace wf::rules
