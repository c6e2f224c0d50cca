#include "cotrans/grz/cut.hpp"

#include "cotrans/grz/auxiliary.hpp"

namespace cotrans::grz {

namespace {

Proof premise_proof(const PNode& n, std::size_t i) {
  const Premise& q = n.premises.at(i);
  if (q.link)
    throw Error(Errc::NotAProof, "premise " + std::to_string(i) + " of " + std::string(rule_name(n.rule)) +
                                     " proving " + to_string(n.seq) + " leaves the main fragment");
  return q.node;
}

Formula require_principal(const PNode& n) {
  auto f = principal_of(n);
  if (!f) throw Error(Errc::NotAProof, "node proving " + to_string(n.seq) + " is not an instance of " + std::string(rule_name(n.rule)));
  return *f;
}

bool initial(const PNode& n) { return n.rule == GrzRule::Ax || n.rule == GrzRule::BotL; }

class Reducer {
 public:
  Reducer(ProofStore& store, CutTrace* trace) : store_(store), trace_(trace) {}

  Proof call(const Proof& pi, const Proof& tau, const Formula& phi, const Sequent& s, const CutMeasure& caller) {
    CutMeasure m = cut_measure(pi, tau);
    if (trace_) trace_->calls.emplace_back(caller, m);
    if (!(m < caller))
      throw Error(Errc::MeasureViolation, "cut on " + to_string(phi) + " with measure (" + std::to_string(m.rank) + ", " +
                                              std::to_string(m.heights) + ") called from (" + std::to_string(caller.rank) +
                                              ", " + std::to_string(caller.heights) + ")");
    return reduce(pi, tau, phi, s);
  }

  Proof reduce(const Proof& pi, const Proof& tau, const Formula& phi, const Sequent& s) {
    if (pi->seq != s.with_right(phi) || tau->seq != s.with_left(phi))
      throw Error(Errc::NotAProof, "cut premises " + to_string(pi->seq) + " and " + to_string(tau->seq) +
                                       " do not fit " + to_string(s) + " with " + to_string(phi));
    const CutMeasure here = cut_measure(pi, tau);

    // Case 1: an initial sequent.
    if (initial(*pi) || initial(*tau)) {
      if (auto r = initial_rule(s)) return make_node(s, *r);
      if (initial(*pi)) return contr_atom_left(tau, phi);
      if (phi.is(Kind::Bot)) return inv_bot_right(pi);
      return contr_atom_right(pi, phi);
    }

    const Formula pp = require_principal(*pi);
    const Formula tp = require_principal(*tau);
    if (pi->rule == GrzRule::Cut || tau->rule == GrzRule::Cut)
      throw Error(Errc::NotAProof, "cut in the main fragment of a cut premise");
    const bool pi_on_cut = (pi->rule == GrzRule::ImpR || pi->rule == GrzRule::Box) && pp == phi;
    const bool tau_on_cut = (tau->rule == GrzRule::ImpL || tau->rule == GrzRule::Refl) && tp == phi;

    // Case 2: both principal formulas are the cut formula.
    if (pi_on_cut && tau_on_cut) {
      if (pi->rule == GrzRule::ImpR) {
        const Formula& a = phi.lhs();
        const Formula& b = phi.rhs();
        Proof pi0 = premise_proof(*pi, 0);
        Proof tau0 = premise_proof(*tau, 0);
        Proof tau1 = premise_proof(*tau, 1);
        Proof iota = call(weakening(tau0, right(b)), pi0, a, s.with_right(b), here);
        return call(iota, tau1, b, s, here);
      }
      const Formula& f = phi.body();
      Proof pi0 = premise_proof(*pi, 0);
      Proof tau0 = premise_proof(*tau, 0);
      Proof iota0 = call(weakening(pi, left(f)), tau0, phi, s.with_left(f), here);
      return call(pi0, iota0, f, s, here);
    }

    // Case 3, principal formula of pi is not the cut formula.
    if (!pi_on_cut) {
      switch (pi->rule) {
        case GrzRule::ImpL: {
          Sequent rest = s.without_left(pp);
          Proof l = call(premise_proof(*pi, 0), linv_imp_left(tau, pp), phi, rest.with_right(pp.lhs()), here);
          Proof r = call(premise_proof(*pi, 1), rinv_imp_left(tau, pp), phi, rest.with_left(pp.rhs()), here);
          return make_node(s, GrzRule::ImpL, {inner(l), inner(r)});
        }
        case GrzRule::ImpR: {
          Sequent below = s.without_right(pp).with_left(pp.lhs()).with_right(pp.rhs());
          Proof c = call(premise_proof(*pi, 0), inv_imp_right(tau, pp), phi, below, here);
          return make_node(s, GrzRule::ImpR, {inner(c)});
        }
        case GrzRule::Refl: {
          Proof c = call(premise_proof(*pi, 0), weakening(tau, left(pp.body())), phi, s.with_left(pp.body()), here);
          return make_node(s, GrzRule::Refl, {inner(c)});
        }
        case GrzRule::Box: {
          Sequent below = s.without_right(pp).with_right(pp.body());
          Proof c = call(premise_proof(*pi, 0), inv_box_right(tau, pp), phi, below, here);
          return make_node(s, GrzRule::Box, {inner(c), pi->premises[1]});
        }
        default:
          break;
      }
      throw Error(Errc::NotAProof, "unexpected " + std::string(rule_name(pi->rule)) + " in cut premise");
    }

    // Case 3, principal formula of tau is not the cut formula.
    switch (tau->rule) {
      case GrzRule::ImpL: {
        Sequent rest = s.without_left(tp);
        Proof l = call(linv_imp_left(pi, tp), premise_proof(*tau, 0), phi, rest.with_right(tp.lhs()), here);
        Proof r = call(rinv_imp_left(pi, tp), premise_proof(*tau, 1), phi, rest.with_left(tp.rhs()), here);
        return make_node(s, GrzRule::ImpL, {inner(l), inner(r)});
      }
      case GrzRule::ImpR: {
        Sequent below = s.without_right(tp).with_left(tp.lhs()).with_right(tp.rhs());
        Proof c = call(inv_imp_right(pi, tp), premise_proof(*tau, 0), phi, below, here);
        return make_node(s, GrzRule::ImpR, {inner(c)});
      }
      case GrzRule::Refl: {
        Proof c = call(weakening(pi, left(tp.body())), premise_proof(*tau, 0), phi, s.with_left(tp.body()), here);
        return make_node(s, GrzRule::Refl, {inner(c)});
      }
      case GrzRule::Box:
        return box_side(pi, tau, phi, s, tp, here);
      default:
        break;
    }
    throw Error(Errc::NotAProof, "unexpected " + std::string(rule_name(tau->rule)) + " in cut premise");
  }

 private:
  // tau ends in box on box psi o, and the cut formula is not principal there.
  Proof box_side(const Proof& pi, const Proof& tau, const Formula& phi, const Sequent& s, const Formula& box_psi,
                 const CutMeasure& here) {
    const Formula& psi = box_psi.body();
    Sequent below = s.without_right(box_psi).with_right(psi);
    Proof tau0 = premise_proof(*tau, 0);
    const Premise& tau1 = tau->premises[1];
    Sequent weak = weakening_part(premise_sequents(*tau), tau->seq);

    if (weak.ante.contains(phi)) {
      Proof c = call(inv_box_right(pi, box_psi), tau0, phi, below, here);
      return make_node(s, GrzRule::Box, {inner(c), tau1});
    }

    // The cut formula is boxed and sits among the boxed formulas carried to
    // tau's right premise, so pi must end in box on it as well.
    if (pi->rule != GrzRule::Box || !phi.is(Kind::Box))
      throw Error(Errc::NotAProof, "cut formula " + to_string(phi) + " is boxed context of tau but pi does not end in box on it");
    const Premise& pi1 = pi->premises[1];
    if (!pi1.link || !tau1.link) throw Error(Errc::NotAProof, "box right premise inside the main fragment");

    Multiset pi_boxes = pi1.linked.ante;
    Multiset lam_boxes = tau1.linked.ante;
    if (!lam_boxes.erase(phi)) throw Error(Errc::NotAProof, to_string(phi) + " missing from the right premise of tau");
    Multiset only_lam = lam_boxes - pi_boxes;
    Multiset only_pi = pi_boxes - lam_boxes;
    Multiset boxes = pi_boxes + only_lam;

    Proof iota0 = call(inv_box_right(pi, box_psi), tau0, phi, below, here);

    Proof left_w = weakening(store_.load(*pi1.link), Sequent{only_lam, Multiset{psi}});
    Proof box_node = make_node(Sequent{boxes, Multiset{psi, phi}}, GrzRule::Box, {inner(left_w), pi1});
    Proof right_w = weakening(store_.load(*tau1.link), Sequent{only_pi, {}});
    Proof rho = make_node(Sequent{boxes, Multiset{psi}}, GrzRule::Cut, {inner(box_node), inner(right_w)});
    StateId rho_id = store_.add(rho);
    return make_node(s, GrzRule::Box, {inner(iota0), linked(rho_id, rho->seq)});
  }

  ProofStore& store_;
  CutTrace* trace_;
};

// Words of the cuts with no cut above them in the main fragment, in order.
void topmost_cuts(const Proof& p, const Word& at, std::vector<Word>& out) {
  if (p->rule == GrzRule::Cut && count_cuts(p) == 1) {
    out.push_back(at);
    return;
  }
  for (std::size_t i = 0; i < p->premises.size(); ++i)
    if (!p->premises[i].link) topmost_cuts(p->premises[i].node, at.child(static_cast<Letter>(i)), out);
}

Proof replace_at(const Proof& p, const Word& at, std::size_t depth, const Proof& with) {
  if (depth == at.size()) return with;
  std::vector<Premise> premises = p->premises;
  Premise& q = premises.at(at[depth]);
  q = inner(replace_at(q.node, at, depth + 1, with));
  return make_node(p->seq, p->rule, std::move(premises));
}

Proof subproof_at(const Proof& p, const Word& at) {
  Proof q = p;
  for (Letter i : at.letters()) q = q->premises.at(i).node;
  return q;
}

}  // namespace

CutMeasure cut_measure(const Proof& pi, const Proof& tau) {
  Multiset diff = tau->seq.ante - pi->seq.ante;
  std::size_t r = diff.size() == 1 ? diff.items().front().rank() : 0;
  return {r, local_height(pi) + local_height(tau)};
}

Proof reduce_cut(const Proof& pi, const Proof& tau, ProofStore& store, CutTrace* trace) {
  if (count_cuts(pi) != 0 || count_cuts(tau) != 0)
    throw Error(Errc::NotAProof, "cut premises must have cut-free main fragments");
  if (!tau->seq.ante.includes(pi->seq.ante))
    throw Error(Errc::NotAProof, to_string(pi->seq) + " and " + to_string(tau->seq) + " are not cut premises");
  Multiset diff = tau->seq.ante - pi->seq.ante;
  if (diff.size() != 1) throw Error(Errc::NotAProof, to_string(pi->seq) + " and " + to_string(tau->seq) + " are not cut premises");
  const Formula phi = diff.items().front();
  if (!pi->seq.succ.contains(phi)) throw Error(Errc::NotAProof, "left cut premise lacks " + to_string(phi) + " on the right");
  Sequent s = pi->seq.without_right(phi);
  return Reducer(store, trace).reduce(pi, tau, phi, s);
}

Proof cuts_up(const Proof& p, ProofStore& store, CutTrace* trace) {
  Proof cur = p;
  for (std::size_t n = count_cuts(cur); n > 0;) {
    std::vector<Word> tops;
    topmost_cuts(cur, Word{}, tops);
    const Word& at = tops.front();
    Proof cut = subproof_at(cur, at);
    Proof reduced = reduce_cut(premise_proof(*cut, 0), premise_proof(*cut, 1), store, trace);
    cur = replace_at(cur, at, 0, reduced);
    std::size_t m = count_cuts(cur);
    if (m >= n) throw Error(Errc::MeasureViolation, "cut count did not drop below " + std::to_string(n));
    n = m;
  }
  return cur;
}

Graph cuts_up(const Graph& g) {
  ProofStore store(g);
  Proof p = cuts_up(store.load(0), store);
  StateId root = store.add(p);
  return store.graph(root);
}

TranslationStep<Sequent> cut_elimination_step() {
  return {"cutelim", &grz_cut_calculus(), &grz_calculus(), [](const Graph& g) {
            ProofStore store(g);
            Proof p = cuts_up(store.load(0), store);
            auto d = to_destructed(p);
            auto shared = store.snapshot();
            StepOutput<Sequent> out{std::move(d.fragment), {}};
            for (const auto& [leaf, target] : d.links) out.successors.emplace(leaf, Graph{shared, target});
            return out;
          }};
}

ExtendResult<Sequent> cut_elim(const Graph& g, const ExtendOptions& options) {
  return extend(cut_elimination_step(), g, options);
}

}  // namespace cotrans::grz
