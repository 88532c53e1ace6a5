#pragma once

#include <cstddef>
#include <vector>

namespace cartsel {

/// How an internal node cuts a new layer out of its generated values.
enum class Mode {
  standard, // exact-size selection to the scheduled layer size
  wobbly,   // value partition at the last popped max tuple
};

inline const char *to_string(Mode mode) {
  return mode == Mode::standard ? "standard" : "wobbly";
}

/// Counters kept by one pairwise selection node.
struct NodeStats {
  std::size_t values_generated = 0;
  std::size_t tuple_pops = 0;
  std::size_t tuple_pushes = 0; // exact min and max tuples
  std::size_t deferred_proposals = 0;
  std::size_t layers_emitted = 0;
};

/// Counters aggregated over a whole tree.
struct SelectionStats {
  std::size_t values_generated = 0;
  std::size_t tuple_pops = 0;
  std::size_t tuple_pushes = 0;
  std::size_t deferred_proposals = 0;
  // One entry per internal node, in construction (post-)order; the root last.
  std::vector<std::size_t> layers_emitted;
  // Values gathered at the root before the final selection.
  std::size_t root_pool_size = 0;
  // Input values exposed by the leaves, summed.
  std::size_t leaf_values_exposed = 0;
};

} // namespace cartsel
