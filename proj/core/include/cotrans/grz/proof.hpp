#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cotrans/coalgebra.hpp"
#include "cotrans/grz/rules.hpp"

namespace cotrans::grz {

struct PNode;
/// Main fragment of a proof as an immutable shared tree. Premises crossing
/// into another fragment are links to states of a proof graph.
using Proof = std::shared_ptr<const PNode>;

struct Premise {
  Proof node;                   // premise inside the same fragment
  std::optional<StateId> link;  // or: star leaf standing for the proof at this state
  Sequent linked;               // conclusion of the linked state

  const Sequent& sequent() const;
};

struct PNode {
  Sequent seq;
  GrzRule rule;
  std::vector<Premise> premises;
};

Proof make_node(Sequent seq, GrzRule rule, std::vector<Premise> premises = {});
Premise inner(Proof p);
Premise linked(StateId state, Sequent seq);

std::vector<Sequent> premise_sequents(const PNode& n);
std::optional<Formula> principal_of(const PNode& n);

// Height of the main fragment, star leaves included.
std::size_t local_height(const Proof& p);
std::size_t count_cuts(const Proof& p);
// Whether every node of the main fragment is an instance of its rule.
bool locally_valid(const Proof& p);

// Conversion between the tree form and a coalgebra state.
Destructed<Label> to_destructed(const Proof& p);
Proof from_destructed(const Destructed<Label>& d, const GraphCoalgebra& g);

/// Growable proof graph used while transforming proofs: loads main fragments
/// as trees and stores new ones as states.
class ProofStore {
 public:
  ProofStore() = default;
  // The part of `pg` reachable from its root; the root becomes state 0.
  explicit ProofStore(const Graph& pg);

  Proof load(StateId s) const;
  StateId add(const Proof& p);
  // A state whose fragment is filled in later; `seq` is its conclusion meanwhile.
  StateId reserve(const Sequent& seq);
  void set(StateId s, const Proof& p);
  // Copies the states of `pg` reachable from its root; returns the new id of that root.
  StateId import(const Graph& pg);

  const Sequent& conclusion(StateId s) const;
  const GraphCoalgebra& coalgebra() const noexcept { return g_; }
  std::size_t size() const noexcept { return g_.size(); }

  // Immutable snapshot shared by the returned graphs.
  std::shared_ptr<const GraphCoalgebra> snapshot() const;
  Graph graph(StateId root) const;

 private:
  GraphCoalgebra g_;
};

// The main fragment of a graph as a tree.
Proof main_fragment(const Graph& pg);
// A graph whose root state has main fragment `p`; links of `p` refer to states of `base`.
Graph with_main(const Graph& base, const Proof& p);
Graph single_state(const Proof& p);

// Local height of the root state.
std::size_t local_height(const Graph& g);
// Cut nodes over all reachable states.
std::size_t count_cuts(const Graph& g);

}  // namespace cotrans::grz
