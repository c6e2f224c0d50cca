#include "cotrans/grz/proof.hpp"

#include <algorithm>
#include <functional>

namespace cotrans::grz {

const Sequent& Premise::sequent() const { return link ? linked : node->seq; }

Proof make_node(Sequent seq, GrzRule rule, std::vector<Premise> premises) {
  return std::make_shared<const PNode>(PNode{std::move(seq), rule, std::move(premises)});
}

Premise inner(Proof p) { return {std::move(p), std::nullopt, {}}; }

Premise linked(StateId state, Sequent seq) { return {nullptr, state, std::move(seq)}; }

std::vector<Sequent> premise_sequents(const PNode& n) {
  std::vector<Sequent> out;
  out.reserve(n.premises.size());
  for (const auto& p : n.premises) out.push_back(p.sequent());
  return out;
}

std::optional<Formula> principal_of(const PNode& n) { return principal(n.rule, premise_sequents(n), n.seq); }

std::size_t local_height(const Proof& p) {
  std::size_t h = 0;
  for (const auto& q : p->premises) h = std::max(h, 1 + (q.link ? 0 : local_height(q.node)));
  return h;
}

std::size_t count_cuts(const Proof& p) {
  std::size_t n = p->rule == GrzRule::Cut ? 1 : 0;
  for (const auto& q : p->premises)
    if (!q.link) n += count_cuts(q.node);
  return n;
}

bool locally_valid(const Proof& p) {
  if (!principal_of(*p)) return false;
  for (const auto& q : p->premises)
    if (!q.link && !locally_valid(q.node)) return false;
  return true;
}

Destructed<Label> to_destructed(const Proof& p) {
  std::map<Word, Fragment::Slot> nodes;
  std::map<Word, StateId> links;
  std::function<void(const Proof&, const Word&)> walk = [&](const Proof& q, const Word& w) {
    nodes.emplace(w, Label{q->seq, rule_id(q->rule)});
    for (std::size_t i = 0; i < q->premises.size(); ++i) {
      const Premise& pr = q->premises[i];
      Word c = w.child(static_cast<Letter>(i));
      if (pr.link) {
        nodes.emplace(c, std::nullopt);
        links.emplace(c, *pr.link);
      } else {
        walk(pr.node, c);
      }
    }
  };
  walk(p, Word{});
  return {Fragment::validate(std::move(nodes)), std::move(links)};
}

Proof from_destructed(const Destructed<Label>& d, const GraphCoalgebra& g) {
  std::function<Proof(const Word&)> build = [&](const Word& w) {
    const Label& label = d.fragment.label(w);
    auto rule = rule_from_name(label.rule.name);
    if (!rule) throw Error(Errc::NotAProof, "unknown rule " + label.rule.name + " at " + to_string(w));
    std::vector<Premise> premises;
    std::size_t k = d.fragment.arity(w);
    for (std::size_t i = 0; i < k; ++i) {
      Word c = w.child(static_cast<Letter>(i));
      if (d.fragment.is_star(c)) {
        StateId target = d.links.at(c);
        premises.push_back(linked(target, g.destruct(target).fragment.root_label().sequent));
      } else {
        premises.push_back(inner(build(c)));
      }
    }
    return make_node(label.sequent, *rule, std::move(premises));
  };
  return build(Word{});
}

ProofStore::ProofStore(const Graph& pg) : g_(restrict_to(pg.graph(), pg.root)) {}

Proof ProofStore::load(StateId s) const { return from_destructed(g_.destruct(s), g_); }

StateId ProofStore::add(const Proof& p) {
  auto d = to_destructed(p);
  return g_.add(std::move(d.fragment), std::move(d.links));
}

StateId ProofStore::reserve(const Sequent& seq) { return g_.add(Fragment::single(Label{seq, RuleId{"open"}})); }

void ProofStore::set(StateId s, const Proof& p) {
  auto d = to_destructed(p);
  g_.set(s, std::move(d.fragment), std::move(d.links));
}

StateId ProofStore::import(const Graph& pg) {
  auto order = reachable(pg.graph(), pg.root);
  std::map<StateId, StateId> rename;
  for (StateId s : order) rename.emplace(s, g_.reserve());
  for (StateId s : order) {
    const auto& d = pg.graph().destruct(s);
    std::map<Word, StateId> links;
    for (const auto& [leaf, target] : d.links) links.emplace(leaf, rename.at(target));
    g_.set(rename.at(s), d.fragment, std::move(links));
  }
  return rename.at(pg.root);
}

const Sequent& ProofStore::conclusion(StateId s) const { return g_.destruct(s).fragment.root_label().sequent; }

std::shared_ptr<const GraphCoalgebra> ProofStore::snapshot() const {
  g_.validate();
  return std::make_shared<const GraphCoalgebra>(g_);
}

Graph ProofStore::graph(StateId root) const {
  g_.require(root);
  return {snapshot(), root};
}

Proof main_fragment(const Graph& pg) { return from_destructed(pg.top(), pg.graph()); }

Graph with_main(const Graph& base, const Proof& p) {
  GraphCoalgebra g = base.graph();
  auto d = to_destructed(p);
  StateId root = g.add(std::move(d.fragment), std::move(d.links));
  return make_graph(std::move(g), root);
}

Graph single_state(const Proof& p) {
  GraphCoalgebra g;
  auto d = to_destructed(p);
  g.add(std::move(d.fragment), std::move(d.links));
  return make_graph(std::move(g), 0);
}

std::size_t local_height(const Graph& g) { return g.fragment().height(); }

std::size_t count_cuts(const Graph& g) {
  std::size_t n = 0;
  const std::string cut(rule_name(GrzRule::Cut));
  for (StateId s : reachable(g.graph(), g.root))
    for (const auto& [w, slot] : g.graph().destruct(s).fragment.nodes())
      if (slot && slot->rule.name == cut) ++n;
  return n;
}

}  // namespace cotrans::grz
