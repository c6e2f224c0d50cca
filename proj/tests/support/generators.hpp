#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cotrans/coalgebra.hpp"
#include "cotrans/fftree.hpp"
#include "cotrans/tree_nw.hpp"
#include "cotrans/word.hpp"

namespace testgen {

using cotrans::Coalgebra;
using cotrans::FFTree;
using cotrans::RootPath;
using cotrans::StateId;
using cotrans::TreeNW;
using cotrans::Word;
using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }
inline char letter(Rng& rng) { return static_cast<char>('a' + below(rng, 3)); }

// Random fragment with at most `max_nodes` nodes; each non-root leaf is a star with probability `star`.
TreeNW<char> random_fragment(Rng& rng, std::size_t max_nodes, double star = 0.4);

Coalgebra<char> random_coalgebra(Rng& rng, std::size_t max_states, std::size_t max_fragment_nodes);

// Random labelled tree with a random fragmentation: every non-root node opens a new class or joins its parent's.
FFTree<char> random_fftree(Rng& rng, std::size_t max_nodes);

// Random walk along links from `c`, at most `max_len` steps.
RootPath random_root_path(Rng& rng, const Coalgebra<char>& g, StateId c, std::size_t max_len);
// Random walk through FFTree::destruct.
RootPath random_root_path(Rng& rng, const FFTree<char>& t, std::size_t max_len);

// Every root-path of `c` with fewer than `depth` items.
std::vector<RootPath> root_paths(const Coalgebra<char>& g, StateId c, std::size_t depth);

// Unfolding computed straight from its definition: the nodes word(r) o pn(fragment at r)
// for every root-path r with |r| < depth, plus a truncation mark at each star leaf of the deepest layer.
FFTree<char> unfold_by_definition(const Coalgebra<char>& g, StateId c, std::size_t depth);

}  // namespace testgen
