#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cotrans/coalgebra.hpp"
#include "cotrans/grz/rules.hpp"

namespace cotrans::grz {

/// Text form of a proof graph:
///
///   calculus grz+cut
///   root s0
///   state s0 {
///     [box p0 |- box p0] box {
///       [box p0 |- p0, box p0] refl { ... }
///       link s1
///     }
///   }
///
/// `#` starts a comment. Printing renames states s0, s1, ... in breadth-first
/// order of first use from the root, so printed files are canonical.
struct GraphFile {
  std::string calculus;
  Graph graph;
  std::vector<std::string> state_names;  // by state id, as written in the file
};

GraphFile parse_graph_file(std::string_view text);
std::string print_graph_file(const Graph& g, std::string_view calculus, const std::vector<std::string>& comments = {});

// Graphviz digraph: one cluster per state, dashed edges for links.
std::string render_dot(const Graph& g);

// One line per node of an unfolding: word, fragment root, sequent and rule,
// or the state a truncation mark stands for.
std::string print_unfolding(const FFTree<Label>& tree);

}  // namespace cotrans::grz
