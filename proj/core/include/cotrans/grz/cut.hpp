#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "cotrans/grz/proof.hpp"
#include "cotrans/translate.hpp"

namespace cotrans::grz {

/// (rank of the cut formula, sum of local heights), ordered lexicographically.
struct CutMeasure {
  std::size_t rank = 0;
  std::size_t heights = 0;

  friend bool operator==(const CutMeasure&, const CutMeasure&) = default;
  friend auto operator<=>(const CutMeasure&, const CutMeasure&) = default;
};

// Every recursive reduction as (caller measure, callee measure).
struct CutTrace {
  std::vector<std::pair<CutMeasure, CutMeasure>> calls;
};

/// Given pi |- S, phi o and tau |- S, phi* with cut-free main fragments,
/// builds a proof of S with a cut-free main fragment. Residual cuts are
/// placed in new states of `store`, outside the main fragment. Links of pi
/// and tau must refer to states of `store`.
Proof reduce_cut(const Proof& pi, const Proof& tau, ProofStore& store, CutTrace* trace = nullptr);

CutMeasure cut_measure(const Proof& pi, const Proof& tau);

/// Removes every cut from the main fragment, a topmost one at a time
/// (least node address first among topmost cuts).
Proof cuts_up(const Proof& p, ProofStore& store, CutTrace* trace = nullptr);
Graph cuts_up(const Graph& g);

// The step pi |-> destruct(cuts_up(pi)) from grz+cut to grz.
TranslationStep<Sequent> cut_elimination_step();

ExtendResult<Sequent> cut_elim(const Graph& g, const ExtendOptions& options = {});

}  // namespace cotrans::grz
