#include "cotrans/grz/auxiliary.hpp"

#include <functional>

namespace cotrans::grz {

namespace {

using PrincipalCase = std::function<std::optional<Proof>(const PNode&)>;

// Replaces `remove` by `add` in every sequent of the main fragment, except
// that a node for which `principal_case` yields a proof is replaced by it.
Proof rewrite(const Proof& p, const Sequent& remove, const Sequent& add, const PrincipalCase& principal_case) {
  if (principal_case)
    if (auto hit = principal_case(*p)) return *hit;
  if (!p->seq.includes(remove))
    throw Error(Errc::FormulaAbsent, to_string(remove) + " is not part of " + to_string(p->seq));
  std::vector<Premise> premises;
  premises.reserve(p->premises.size());
  for (std::size_t i = 0; i < p->premises.size(); ++i) {
    const Premise& q = p->premises[i];
    bool keep = q.link || (p->rule == GrzRule::Box && i == 1);
    premises.push_back(keep ? q : inner(rewrite(q.node, remove, add, principal_case)));
  }
  return make_node(p->seq - remove + add, p->rule, std::move(premises));
}

Proof premise_node(const PNode& n, std::size_t i) {
  const Premise& q = n.premises.at(i);
  if (q.link) throw Error(Errc::NotAProof, "premise " + std::to_string(i) + " of " + std::string(rule_name(n.rule)) + " leaves the fragment");
  return q.node;
}

PrincipalCase principal_at(GrzRule rule, const Formula& f, std::size_t premise) {
  return [rule, f, premise](const PNode& n) -> std::optional<Proof> {
    if (n.rule != rule) return std::nullopt;
    auto pr = principal_of(n);
    if (!pr) throw Error(Errc::NotAProof, "node proving " + to_string(n.seq) + " is not an instance of " + std::string(rule_name(n.rule)));
    if (*pr != f) return std::nullopt;
    return premise_node(n, premise);
  };
}

void require_kind(const Formula& f, Kind k, const char* what) {
  if (!f.is(k)) throw Error(Errc::FormulaAbsent, to_string(f) + " is not " + what);
}

}  // namespace

Proof weakening(const Proof& p, const Sequent& extra) {
  if (extra.empty()) return p;
  return rewrite(p, {}, extra, nullptr);
}

Proof contr_atom_left(const Proof& p, const Formula& atom) {
  require_kind(atom, Kind::Atom, "an atom");
  if (p->seq.ante.count(atom) < 2) throw Error(Errc::FormulaAbsent, "need two copies of " + to_string(atom) + " on the left");
  return rewrite(p, left(atom), {}, nullptr);
}

Proof contr_atom_right(const Proof& p, const Formula& atom) {
  require_kind(atom, Kind::Atom, "an atom");
  if (p->seq.succ.count(atom) < 2) throw Error(Errc::FormulaAbsent, "need two copies of " + to_string(atom) + " on the right");
  return rewrite(p, right(atom), {}, nullptr);
}

Proof inv_bot_right(const Proof& p) { return rewrite(p, right(Formula::bot()), {}, nullptr); }

Proof linv_imp_left(const Proof& p, const Formula& imp) {
  require_kind(imp, Kind::Imp, "an implication");
  return rewrite(p, left(imp), right(imp.lhs()), principal_at(GrzRule::ImpL, imp, 0));
}

Proof rinv_imp_left(const Proof& p, const Formula& imp) {
  require_kind(imp, Kind::Imp, "an implication");
  return rewrite(p, left(imp), left(imp.rhs()), principal_at(GrzRule::ImpL, imp, 1));
}

Proof inv_imp_right(const Proof& p, const Formula& imp) {
  require_kind(imp, Kind::Imp, "an implication");
  return rewrite(p, right(imp), Sequent{Multiset{imp.lhs()}, Multiset{imp.rhs()}}, principal_at(GrzRule::ImpR, imp, 0));
}

Proof inv_box_right(const Proof& p, const Formula& box) {
  require_kind(box, Kind::Box, "a box formula");
  return rewrite(p, right(box), right(box.body()), principal_at(GrzRule::Box, box, 0));
}

namespace {

template <class F>
Graph lift(const Graph& g, F f) {
  return with_main(g, f(main_fragment(g)));
}

}  // namespace

Graph weakening(const Graph& g, const Sequent& extra) {
  return lift(g, [&](const Proof& p) { return weakening(p, extra); });
}
Graph contr_atom_left(const Graph& g, const Formula& atom) {
  return lift(g, [&](const Proof& p) { return contr_atom_left(p, atom); });
}
Graph contr_atom_right(const Graph& g, const Formula& atom) {
  return lift(g, [&](const Proof& p) { return contr_atom_right(p, atom); });
}
Graph inv_bot_right(const Graph& g) {
  return lift(g, [&](const Proof& p) { return inv_bot_right(p); });
}
Graph linv_imp_left(const Graph& g, const Formula& imp) {
  return lift(g, [&](const Proof& p) { return linv_imp_left(p, imp); });
}
Graph rinv_imp_left(const Graph& g, const Formula& imp) {
  return lift(g, [&](const Proof& p) { return rinv_imp_left(p, imp); });
}
Graph inv_imp_right(const Graph& g, const Formula& imp) {
  return lift(g, [&](const Proof& p) { return inv_imp_right(p, imp); });
}
Graph inv_box_right(const Graph& g, const Formula& box) {
  return lift(g, [&](const Proof& p) { return inv_box_right(p, box); });
}

}  // namespace cotrans::grz
