#pragma once

#include "cotrans/grz/proof.hpp"

namespace cotrans::grz {

// Admissible transformations of a proof. Each one rewrites the main fragment
// only: at a box node it follows the left premise and keeps the right link,
// so local height never grows and no cut is introduced. Inputs that do not
// prove the required sequent raise FormulaAbsent or NotAProof.

// p |- S  ==>  |- S, extra
Proof weakening(const Proof& p, const Sequent& extra);
// |- S, a*, a*  ==>  |- S, a*  for an atom a
Proof contr_atom_left(const Proof& p, const Formula& atom);
// |- S, a o, a o  ==>  |- S, a o
Proof contr_atom_right(const Proof& p, const Formula& atom);
// |- S, false o  ==>  |- S
Proof inv_bot_right(const Proof& p);
// |- S, (a -> b)*  ==>  |- S, a o
Proof linv_imp_left(const Proof& p, const Formula& imp);
// |- S, (a -> b)*  ==>  |- S, b*
Proof rinv_imp_left(const Proof& p, const Formula& imp);
// |- S, (a -> b) o  ==>  |- S, a*, b o
Proof inv_imp_right(const Proof& p, const Formula& imp);
// |- S, box a o  ==>  |- S, a o
Proof inv_box_right(const Proof& p, const Formula& box);

// Graph-level forms: the result shares the untouched states of the input.
Graph weakening(const Graph& g, const Sequent& extra);
Graph contr_atom_left(const Graph& g, const Formula& atom);
Graph contr_atom_right(const Graph& g, const Formula& atom);
Graph inv_bot_right(const Graph& g);
Graph linv_imp_left(const Graph& g, const Formula& imp);
Graph rinv_imp_left(const Graph& g, const Formula& imp);
Graph inv_imp_right(const Graph& g, const Formula& imp);
Graph inv_box_right(const Graph& g, const Formula& box);

}  // namespace cotrans::grz
