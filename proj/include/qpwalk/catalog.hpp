#pragma once

#include <string>
#include <vector>

#include "qpwalk/stepset.hpp"

namespace qpwalk {

// One mirror class of nondegenerate small-step models.  Labels follow the
// classification families: IA..IID and III for the 51 infinite-group smooth
// models, F.* for the 23 finite-group models, S.* for the 5 singular-curve
// models.  expected_group_order is the order of the group generated by the
// two kernel involutions (0 when infinite); these columns are expectations
// that the engine re-derives, never inputs to a verdict.
struct catalog_entry {
  std::string label;
  std::string grid;
  bool finite_group;
  bool smooth;
  int expected_group_order;
};

const std::vector<catalog_entry>& catalog();

// nullptr when the label is unknown.
const catalog_entry* catalog_find_label(const std::string& label);

struct grid_match {
  const catalog_entry* entry = nullptr;
  bool mirrored = false;  // the input is the x<->y reflection of the entry
};

// Matches a step set against the catalog directly or through the diagonal
// reflection (classification is invariant under it).
grid_match catalog_find_grid(const step_set& s);

}  // namespace qpwalk
