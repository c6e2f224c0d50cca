#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cotrans/grz/proof.hpp"

namespace cotrans::grz {

struct SearchBudget {
  std::size_t max_fragment_height = 8;
  std::size_t max_states = 8;
  // Cut formulas to try; none means cut-free search.
  std::optional<std::vector<Formula>> cut_formulas;
};

/// Bounded search for a regular proof. Each state is a sequent proved by a
/// finite fragment whose box right premises are again states, so every cycle
/// passes a progress point. States that cannot be closed are discarded until
/// a greatest fixpoint is reached. The result, if any, passes the checker of
/// the calculus searched (grz, or grz+cut with cut formulas).
std::optional<Graph> search(const Sequent& goal, const SearchBudget& budget);

// Subformulas of every formula in the sequent.
std::vector<Formula> subformula_cuts(const Sequent& s);

struct CorpusBounds {
  std::uint32_t atoms = 2;
  std::size_t max_formula_size = 5;
  std::size_t max_fragment_height = 8;
  std::size_t max_states = 6;
  // Probability of planting cuts in a generated proof.
  double cut_rate = 0.7;
};

/// Deterministic pseudo-random grz+cut proofs: searched proofs of random
/// sequents, some with cuts planted in the main fragment or in later states.
std::vector<Graph> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds = {});

// Random formula with at most `max_size` symbols over atoms p0 .. p(atoms-1).
Formula random_formula(std::mt19937_64& rng, std::uint32_t atoms, std::size_t max_size);

}  // namespace cotrans::grz
