#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "cotrans/calculus.hpp"
#include "cotrans/grz/formula.hpp"
#include "cotrans/grz/sequent.hpp"

namespace cotrans::grz {

enum class GrzRule : std::uint8_t { Ax, BotL, ImpL, ImpR, Refl, Box, Cut };

inline constexpr GrzRule kAllRules[] = {GrzRule::Ax,   GrzRule::BotL, GrzRule::ImpL, GrzRule::ImpR,
                                        GrzRule::Refl, GrzRule::Box,  GrzRule::Cut};

// File names: ax botl impl impr refl box cut.
std::string_view rule_name(GrzRule r);
std::optional<GrzRule> rule_from_name(std::string_view name);
RuleId rule_id(GrzRule r);

// Principal formula of the instance (premises => conclusion) of rule `r`, or
// nothing if it is not an instance. For Ax it is the atom, for cut the cut
// formula.
std::optional<Formula> principal(GrzRule r, const std::vector<Sequent>& premises, const Sequent& conclusion);

inline bool matches(GrzRule r, const std::vector<Sequent>& premises, const Sequent& conclusion) {
  return principal(r, premises, conclusion).has_value();
}

// Progress only at the right premise of box.
inline std::set<std::size_t> progress(GrzRule r) {
  if (r == GrzRule::Box) return {1};
  return {};
}

// The weakening part S of a box instance S, []Pi, []phi <= S, []Pi, phi ; []Pi, phi.
Sequent weakening_part(const std::vector<Sequent>& premises, const Sequent& conclusion);

// Ax or botl when the sequent is initial.
std::optional<GrzRule> initial_rule(const Sequent& s);

using Label = ProofLabel<Sequent>;
using Graph = ProofGraph<Sequent>;
using GraphCoalgebra = ProofCoalgebra<Sequent>;
using Fragment = ProofFragment<Sequent>;

const Calculus<Sequent>& grz_calculus();      // "grz"
const Calculus<Sequent>& grz_cut_calculus();  // "grz+cut"
const Calculus<Sequent>* calculus_named(std::string_view name);

}  // namespace cotrans::grz
