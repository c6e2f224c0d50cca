#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cotrans/error.hpp"
#include "cotrans/fftree.hpp"
#include "cotrans/tree_nw.hpp"
#include "cotrans/word.hpp"

namespace cotrans {

/// One application of the destructor: a fragment and where its star leaves lead.
template <class L>
struct Destructed {
  TreeNW<L> fragment;
  std::map<Word, StateId> links;

  friend bool operator==(const Destructed&, const Destructed&) = default;
  friend bool operator<(const Destructed& a, const Destructed& b) {
    if (a.fragment == b.fragment) return a.links < b.links;
    return a.fragment < b.fragment;
  }
};

/// Finite coalgebra for the fragment functor. States are dense indices; the
/// infinite tree a state denotes is only ever materialized through `unfold`.
template <class L>
class Coalgebra {
 public:
  using Label = L;

  StateId add(TreeNW<L> fragment, std::map<Word, StateId> links = {}) {
    states_.push_back({std::move(fragment), std::move(links)});
    return static_cast<StateId>(states_.size() - 1);
  }

  StateId reserve() {
    states_.emplace_back();
    return static_cast<StateId>(states_.size() - 1);
  }

  void set(StateId c, TreeNW<L> fragment, std::map<Word, StateId> links) {
    require(c);
    states_[c] = {std::move(fragment), std::move(links)};
  }

  const Destructed<L>& destruct(StateId c) const {
    require(c);
    return states_[c];
  }

  bool contains(StateId c) const noexcept { return c < states_.size(); }
  std::size_t size() const noexcept { return states_.size(); }

  // Links total on star leaves, defined nowhere else, and landing in states.
  void validate() const {
    for (StateId c = 0; c < states_.size(); ++c) {
      const auto& [frag, links] = states_[c];
      auto leaves = frag.nw_leaves();
      for (const auto& leaf : leaves) {
        auto it = links.find(leaf);
        if (it == links.end())
          throw Error(Errc::MalformedGraph, "state " + std::to_string(c) + " has no link at " + to_string(leaf));
        if (!contains(it->second))
          throw Error(Errc::UnknownState, "state " + std::to_string(c) + " links to " + std::to_string(it->second));
      }
      for (const auto& [w, target] : links)
        if (!leaves.contains(w))
          throw Error(Errc::MalformedGraph, "state " + std::to_string(c) + " links from non-star node " + to_string(w));
    }
  }

  void require(StateId c) const {
    if (!contains(c)) throw Error(Errc::UnknownState, "no state " + std::to_string(c));
  }

 private:
  std::vector<Destructed<L>> states_;
};

// ---------------------------------------------------------------------------
// Root-paths, subelements and fragments of a finite coalgebra.

template <class L>
bool is_root_path(const Coalgebra<L>& g, StateId c, const RootPath& r) {
  g.require(c);
  for (const auto& w : r.items()) {
    const auto& d = g.destruct(c);
    auto it = d.links.find(w);
    if (it == d.links.end()) return false;
    c = it->second;
  }
  return true;
}

template <class L>
StateId subelement(const Coalgebra<L>& g, StateId c, const RootPath& r) {
  g.require(c);
  for (const auto& w : r.items()) {
    const auto& d = g.destruct(c);
    auto it = d.links.find(w);
    if (it == d.links.end()) throw Error(Errc::NotARootPath, to_string(r) + " leaves the fragment at " + to_string(w));
    c = it->second;
  }
  return c;
}

template <class L>
const TreeNW<L>& fragment_at(const Coalgebra<L>& g, StateId c, const RootPath& r) {
  return g.destruct(subelement(g, c, r)).fragment;
}

// The same three operations on the final coalgebra, driven by FFTree::destruct
// rather than by roots, so they can be compared with the representation side.

template <class L>
bool is_root_path(const FFTree<L>& pi, const RootPath& r) {
  if (r.empty()) return true;
  auto [top, below] = pi.destruct();
  auto it = below.find(r.front());
  if (it == below.end()) return false;
  return is_root_path(it->second, r.tail());
}

template <class L>
FFTree<L> subelement(const FFTree<L>& pi, const RootPath& r) {
  if (r.empty()) return pi;
  auto [top, below] = pi.destruct();
  auto it = below.find(r.front());
  if (it == below.end()) throw Error(Errc::NotARootPath, to_string(r.front()) + " is not a star leaf");
  return subelement(it->second, r.tail());
}

template <class L>
TreeNW<L> fragment_at(const FFTree<L>& pi, const RootPath& r) {
  return subelement(pi, r).destruct().first;
}

// ---------------------------------------------------------------------------
// Unfolding into the final coalgebra.

struct UnfoldBudget {
  std::size_t max_depth = 1;  // fragments along a root-path, i.e. |r| < max_depth
  std::size_t max_nodes = 100000;

  void validate() const {
    if (max_depth < 1 || max_nodes < 1) throw Error(Errc::BudgetExceeded, "unfold budget bounds must be >= 1");
  }
};

template <class L>
struct UnfoldResult {
  FFTree<L> tree;
  std::vector<std::pair<Word, StateId>> truncations;
};

namespace detail {

template <class L>
const L& peek(const Coalgebra<L>& g, StateId c) {
  return g.destruct(c).fragment.root_label();
}

}  // namespace detail

/// Finite-fragmented tree of state `c`: node set and fragmentation are
/// word(r) o pn(fragment at r) over root-paths r with |r| < max_depth. Star
/// leaves at the frontier, and states listed in `open`, become truncation
/// marks.
template <class L>
UnfoldResult<L> unfold(const Coalgebra<L>& g, StateId c, const UnfoldBudget& budget,
                       const std::set<StateId>* open = nullptr) {
  budget.validate();
  g.require(c);
  auto is_open = [&](StateId s) { return open && open->contains(s); };

  std::map<Word, FFNode<L>> nodes;
  std::vector<std::set<Word>> classes;
  UnfoldResult<L> result;
  auto mark = [&](const Word& at, StateId target) {
    nodes.emplace(at, FFNode<L>{detail::peek(g, target), target});
    classes.push_back({at});
    result.truncations.emplace_back(at, target);
  };

  struct Pending {
    Word at;
    StateId state;
    std::size_t depth;
  };
  std::deque<Pending> queue;
  if (is_open(c))
    mark(Word{}, c);
  else
    queue.push_back({Word{}, c, 0});

  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    const auto& [frag, links] = g.destruct(p.state);
    std::set<Word> cls;
    for (const auto& [u, slot] : frag.nodes()) {
      if (slot) {
        nodes.emplace(p.at + u, FFNode<L>{*slot, std::nullopt});
        cls.insert(p.at + u);
        continue;
      }
      StateId target = links.at(u);
      if (p.depth + 1 < budget.max_depth && !is_open(target))
        queue.push_back({p.at + u, target, p.depth + 1});
      else
        mark(p.at + u, target);
    }
    classes.push_back(std::move(cls));
    if (nodes.size() > budget.max_nodes)
      throw Error(Errc::BudgetExceeded, "unfolding exceeds " + std::to_string(budget.max_nodes) + " nodes");
  }
  result.tree = FFTree<L>::validate(std::move(nodes), classes, /*allow_truncation=*/true);
  std::sort(result.truncations.begin(), result.truncations.end());
  return result;
}

/// Second route to the same tree: recursive gluing with FFTree::construct,
/// i.e. the morphism equation unfold = construct . T(unfold) . destruct.
template <class L>
FFTree<L> unfold_by_gluing(const Coalgebra<L>& g, StateId c, std::size_t depth) {
  if (depth == 0) return FFTree<L>::truncation(detail::peek(g, c), c);
  const auto& [frag, links] = g.destruct(c);
  std::map<Word, FFTree<L>> mu;
  for (const auto& [leaf, target] : links) mu.emplace(leaf, unfold_by_gluing(g, target, depth - 1));
  return FFTree<L>::construct(frag, mu);
}

// ---------------------------------------------------------------------------
// Reachability, bisimulation quotient, canonical keys.

template <class L>
std::vector<StateId> reachable(const Coalgebra<L>& g, StateId root) {
  g.require(root);
  std::vector<StateId> order{root};
  std::set<StateId> seen{root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [leaf, target] : g.destruct(order[i]).links)
      if (seen.insert(target).second) order.push_back(target);
  return order;
}

// Sub-coalgebra reachable from `root`, renumbered in discovery order (root becomes 0).
template <class L>
Coalgebra<L> restrict_to(const Coalgebra<L>& g, StateId root) {
  auto order = reachable(g, root);
  std::map<StateId, StateId> rename;
  for (StateId i = 0; i < order.size(); ++i) rename.emplace(order[i], i);
  Coalgebra<L> out;
  for (StateId s : order) {
    const auto& d = g.destruct(s);
    std::map<Word, StateId> links;
    for (const auto& [leaf, target] : d.links) links.emplace(leaf, rename.at(target));
    out.add(d.fragment, std::move(links));
  }
  return out;
}

template <class L>
struct Minimized {
  Coalgebra<L> quotient;
  std::vector<StateId> renaming;  // state of the input -> state of the quotient
};

/// Quotient by the coarsest bisimulation: partition refinement starting from
/// "same fragment" and splitting on the classes reached through each star leaf.
template <class L>
Minimized<L> bisim_minimize(const Coalgebra<L>& g) {
  const std::size_t n = g.size();
  std::vector<StateId> block(n);
  std::size_t blocks = 0;
  {
    std::map<TreeNW<L>, StateId> by_fragment;
    for (StateId s = 0; s < n; ++s) by_fragment.emplace(g.destruct(s).fragment, 0);
    StateId next = 0;
    for (auto& entry : by_fragment) entry.second = next++;
    for (StateId s = 0; s < n; ++s) block[s] = by_fragment.at(g.destruct(s).fragment);
    blocks = by_fragment.size();
  }
  for (;;) {
    using Signature = std::pair<StateId, std::vector<StateId>>;
    std::map<Signature, StateId> by_signature;
    std::vector<Signature> sig(n);
    for (StateId s = 0; s < n; ++s) {
      sig[s].first = block[s];
      for (const auto& [leaf, target] : g.destruct(s).links) sig[s].second.push_back(block[target]);
      by_signature.emplace(sig[s], 0);
    }
    StateId next = 0;
    for (auto& entry : by_signature) entry.second = next++;
    for (StateId s = 0; s < n; ++s) block[s] = by_signature.at(sig[s]);
    if (by_signature.size() == blocks) break;
    blocks = by_signature.size();
  }

  Minimized<L> out;
  out.renaming = block;
  std::vector<bool> placed(blocks, false);
  std::vector<Destructed<L>> rep(blocks);
  for (StateId s = 0; s < n; ++s) {
    if (placed[block[s]]) continue;
    placed[block[s]] = true;
    const auto& d = g.destruct(s);
    std::map<Word, StateId> links;
    for (const auto& [leaf, target] : d.links) links.emplace(leaf, block[target]);
    rep[block[s]] = {d.fragment, std::move(links)};
  }
  for (auto& d : rep) out.quotient.add(std::move(d.fragment), std::move(d.links));
  return out;
}

/// Canonical form of the tree denoted by `root`: the minimized reachable
/// sub-coalgebra, states numbered in breadth-first discovery order. Two states
/// (of any coalgebras) have equal keys iff they are bisimilar.
template <class L>
using CanonicalKey = std::vector<Destructed<L>>;

template <class L>
CanonicalKey<L> canonical_key(const Coalgebra<L>& g, StateId root) {
  Coalgebra<L> sub = restrict_to(g, root);
  Minimized<L> m = bisim_minimize(sub);
  Coalgebra<L> canon = restrict_to(m.quotient, m.renaming[0]);
  CanonicalKey<L> key;
  key.reserve(canon.size());
  for (StateId s = 0; s < canon.size(); ++s) key.push_back(canon.destruct(s));
  return key;
}

}  // namespace cotrans
