#include "cotrans/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cotrans/grz/auxiliary.hpp"

namespace cotrans::grz {

namespace {

class Searcher {
 public:
  explicit Searcher(const SearchBudget& b) : b_(b) {}

  std::optional<Graph> run(const Sequent& goal) {
    for (;;) {
      ok_.clear();
      bad_.clear();
      std::map<Sequent, Proof> chosen;
      std::vector<Sequent> order;
      std::deque<Sequent> queue{goal};
      bool restart = false;
      while (!queue.empty() && !restart) {
        Sequent s = std::move(queue.front());
        queue.pop_front();
        if (chosen.contains(s)) continue;
        Proof p = chosen.size() < b_.max_states ? prove(s) : nullptr;
        if (!p) {
          if (s == goal) return std::nullopt;
          failed_.insert(s);
          restart = true;
          break;
        }
        chosen.emplace(s, p);
        order.push_back(s);
        collect_links(p, queue);
      }
      if (!restart) return assemble(chosen, order);
    }
  }

 private:
  Proof prove(const Sequent& s) {
    // Iterative deepening keeps fragments as shallow as possible.
    for (std::size_t h = 0; h <= b_.max_fragment_height; ++h) {
      std::vector<Sequent> path;
      bool loop = false;
      if (Proof p = fragment(s, h, path, loop)) return p;
    }
    return nullptr;
  }

  // Finite fragment proving `s` within `height`, with box right premises left
  // open as links. `loop` is set when the failure depended on the path.
  Proof fragment(const Sequent& s, std::size_t height, std::vector<Sequent>& path, bool& loop) {
    if (auto r = initial_rule(s)) return make_node(s, *r);
    if (height == 0) return nullptr;
    if (std::find(path.begin(), path.end(), s) != path.end()) {
      loop = true;
      return nullptr;
    }
    auto key = std::pair{s, height};
    if (auto it = ok_.find(key); it != ok_.end()) return it->second;
    if (bad_.contains(key)) return nullptr;

    path.push_back(s);
    bool my_loop = false;
    Proof result = expand(s, height - 1, path, my_loop);
    path.pop_back();
    if (result)
      ok_.emplace(key, result);
    else if (!my_loop)
      bad_.insert(key);
    loop = loop || my_loop;
    return result;
  }

  Proof expand(const Sequent& s, std::size_t h, std::vector<Sequent>& path, bool& loop) {
    // Invertible propositional rules first; refl may still give way to box.
    for (const auto& f : s.succ.distinct()) {
      if (!f.is(Kind::Imp)) continue;
      Proof p = fragment(s.without_right(f).with_left(f.lhs()).with_right(f.rhs()), h, path, loop);
      return p ? make_node(s, GrzRule::ImpR, {inner(p)}) : nullptr;
    }
    for (const auto& f : s.ante.distinct()) {
      if (!f.is(Kind::Imp)) continue;
      Sequent rest = s.without_left(f);
      Proof l = fragment(rest.with_right(f.lhs()), h, path, loop);
      if (!l) return nullptr;
      Proof r = fragment(rest.with_left(f.rhs()), h, path, loop);
      return r ? make_node(s, GrzRule::ImpL, {inner(l), inner(r)}) : nullptr;
    }
    for (const auto& f : s.ante.distinct()) {
      if (!f.is(Kind::Box) || s.ante.contains(f.body())) continue;
      if (Proof p = fragment(s.with_left(f.body()), h, path, loop)) return make_node(s, GrzRule::Refl, {inner(p)});
      break;
    }

    Multiset boxes;
    for (const auto& f : s.ante)
      if (f.is(Kind::Box)) boxes.insert(f);
    for (const auto& f : s.succ.distinct()) {
      if (!f.is(Kind::Box)) continue;
      Sequent right{boxes, Multiset{f.body()}};
      if (failed_.contains(right)) continue;
      Proof l = fragment(s.without_right(f).with_right(f.body()), h, path, loop);
      if (l) return make_node(s, GrzRule::Box, {inner(l), linked(0, right)});
    }
    if (b_.cut_formulas) {
      for (const auto& f : *b_.cut_formulas) {
        if (s.ante.contains(f) || s.succ.contains(f)) continue;
        Proof l = fragment(s.with_right(f), h, path, loop);
        if (!l) continue;
        Proof r = fragment(s.with_left(f), h, path, loop);
        if (r) return make_node(s, GrzRule::Cut, {inner(l), inner(r)});
      }
    }
    return nullptr;
  }

  static void collect_links(const Proof& p, std::deque<Sequent>& queue) {
    for (const auto& q : p->premises) {
      if (q.link)
        queue.push_back(q.linked);
      else
        collect_links(q.node, queue);
    }
  }

  static Proof relink(const Proof& p, const std::map<Sequent, StateId>& ids) {
    std::vector<Premise> premises;
    for (const auto& q : p->premises)
      premises.push_back(q.link ? linked(ids.at(q.linked), q.linked) : inner(relink(q.node, ids)));
    return make_node(p->seq, p->rule, std::move(premises));
  }

  static Graph assemble(const std::map<Sequent, Proof>& chosen, const std::vector<Sequent>& order) {
    std::map<Sequent, StateId> ids;
    for (StateId i = 0; i < order.size(); ++i) ids.emplace(order[i], i);
    GraphCoalgebra g;
    for (const auto& s : order) {
      auto d = to_destructed(relink(chosen.at(s), ids));
      g.add(std::move(d.fragment), std::move(d.links));
    }
    return make_graph(std::move(g), 0);
  }

  SearchBudget b_;
  std::set<Sequent> failed_;
  std::map<std::pair<Sequent, std::size_t>, Proof> ok_;
  std::set<std::pair<Sequent, std::size_t>> bad_;
};

// Nodes of the main fragment in preorder.
void nodes_of(const Proof& p, const Word& at, std::vector<std::pair<Word, Proof>>& out) {
  out.emplace_back(at, p);
  for (std::size_t i = 0; i < p->premises.size(); ++i)
    if (!p->premises[i].link) nodes_of(p->premises[i].node, at.child(static_cast<Letter>(i)), out);
}

Proof replace_at(const Proof& p, const Word& at, std::size_t depth, const Proof& with) {
  if (depth == at.size()) return with;
  std::vector<Premise> premises = p->premises;
  premises.at(at[depth]) = inner(replace_at(premises.at(at[depth]).node, at, depth + 1, with));
  return make_node(p->seq, p->rule, std::move(premises));
}

bool chance(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Formula random_sized(std::mt19937_64& rng, std::uint32_t atoms, std::size_t size) {
  if (size <= 1) {
    if (chance(rng, 0.12)) return Formula::bot();
    return Formula::atom(static_cast<std::uint32_t>(pick(rng, atoms)));
  }
  if (size == 2 || chance(rng, 0.35)) return Formula::box(random_sized(rng, atoms, size - 1));
  std::size_t l = 1 + pick(rng, size - 2);
  Formula lhs = random_sized(rng, atoms, l);
  return Formula::imp(std::move(lhs), random_sized(rng, atoms, size - 1 - l));
}

Sequent random_goal(std::mt19937_64& rng, const CorpusBounds& b) {
  auto f = [&] { return random_formula(rng, b.atoms, b.max_formula_size); };
  switch (pick(rng, 4)) {
    case 0:
      return right(f());
    case 1: {
      Formula a = f();
      return Sequent{Multiset{a, f()}, Multiset{a}};
    }
    case 2: {
      Formula a = random_formula(rng, b.atoms, 3);
      Formula b2 = random_formula(rng, b.atoms, 3);
      switch (pick(rng, 3)) {
        case 0: return right(Formula::imp(Formula::box(a), a));
        case 1: return right(Formula::imp(Formula::box(a), Formula::box(Formula::box(a))));
        default:
          return right(Formula::imp(Formula::box(Formula::imp(a, b2)), Formula::imp(Formula::box(a), Formula::box(b2))));
      }
    }
    default: {
      // An instance of the Grz axiom.
      Formula a = random_formula(rng, b.atoms, 2);
      Formula inner_imp = Formula::imp(Formula::box(Formula::imp(a, Formula::box(a))), a);
      return right(Formula::imp(Formula::box(inner_imp), a));
    }
  }
}

// Replaces a random node of a random state by a cut whose premises are either
// searched proofs or weakenings of the replaced subproof.
Graph plant_cut(const Graph& g, std::mt19937_64& rng, const CorpusBounds& b) {
  ProofStore store(g);
  std::size_t states = store.size();
  StateId state = chance(rng, 0.6) ? 0 : static_cast<StateId>(pick(rng, states));
  Proof main = store.load(state);
  std::vector<std::pair<Word, Proof>> nodes;
  nodes_of(main, Word{}, nodes);
  const auto& [at, sub] = nodes[pick(rng, nodes.size())];
  const Sequent& t = sub->seq;

  std::vector<Formula> pool = subformula_cuts(t);
  for (std::uint32_t i = 0; i < b.atoms; ++i) pool.push_back(Formula::atom(i));
  Formula phi = pool[pick(rng, pool.size())];

  SearchBudget small{6, 4, std::nullopt};
  auto side = [&](const Sequent& goal, const Sequent& extra) {
    if (chance(rng, 0.6))
      if (auto found = search(goal, small)) return store.load(store.import(*found));
    return weakening(sub, extra);
  };
  Proof l = side(t.with_right(phi), right(phi));
  Proof r = side(t.with_left(phi), left(phi));
  Proof cut = make_node(t, GrzRule::Cut, {inner(l), inner(r)});
  store.set(state, replace_at(main, at, 0, cut));
  return store.graph(0);
}

}  // namespace

std::optional<Graph> search(const Sequent& goal, const SearchBudget& budget) { return Searcher(budget).run(goal); }

std::vector<Formula> subformula_cuts(const Sequent& s) {
  std::set<Formula> all;
  for (const auto* side : {&s.ante, &s.succ})
    for (const auto& f : *side) all.merge(subformulas(f));
  return {all.begin(), all.end()};
}

Formula random_formula(std::mt19937_64& rng, std::uint32_t atoms, std::size_t max_size) {
  return random_sized(rng, std::max<std::uint32_t>(atoms, 1), 1 + pick(rng, std::max<std::size_t>(max_size, 1)));
}

std::vector<Graph> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  SearchBudget budget{bounds.max_fragment_height, bounds.max_states, std::nullopt};
  for (std::size_t attempts = 0; out.size() < count && attempts < 400 * (count + 1); ++attempts) {
    Sequent goal = random_goal(rng, bounds);
    auto g = search(goal, budget);
    if (!g) continue;
    Graph proof = *g;
    if (chance(rng, bounds.cut_rate)) {
      proof = plant_cut(proof, rng, bounds);
      if (chance(rng, 0.4)) proof = plant_cut(proof, rng, bounds);
    }
    out.push_back(std::move(proof));
  }
  return out;
}

}  // namespace cotrans::grz
