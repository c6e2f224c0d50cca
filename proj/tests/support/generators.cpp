#include "generators.hpp"

namespace testgen {

using cotrans::FFNode;
using cotrans::Letter;

TreeNW<char> random_fragment(Rng& rng, std::size_t max_nodes, double star) {
  std::map<Word, TreeNW<char>::Slot> nodes{{Word{}, letter(rng)}};
  std::vector<Word> open{Word{}};
  std::size_t budget = 1 + below(rng, max_nodes);
  while (nodes.size() < budget && !open.empty()) {
    std::size_t i = below(rng, open.size());
    Word parent = open[i];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
    std::size_t k = 1 + below(rng, 3);
    for (std::size_t j = 0; j < k && nodes.size() < budget; ++j) {
      Word child = parent.child(static_cast<Letter>(j));
      nodes.emplace(child, letter(rng));
      open.push_back(child);
    }
  }
  for (auto& [w, slot] : nodes) {
    if (w.empty() || nodes.contains(w.child(0))) continue;
    if (coin(rng, star)) slot.reset();
  }
  return TreeNW<char>::validate(std::move(nodes));
}

Coalgebra<char> random_coalgebra(Rng& rng, std::size_t max_states, std::size_t max_fragment_nodes) {
  std::size_t n = 1 + below(rng, max_states);
  Coalgebra<char> g;
  std::vector<TreeNW<char>> frags;
  for (std::size_t i = 0; i < n; ++i) frags.push_back(random_fragment(rng, max_fragment_nodes));
  for (auto& f : frags) {
    std::map<Word, StateId> links;
    for (const auto& leaf : f.nw_leaves()) links.emplace(leaf, static_cast<StateId>(below(rng, n)));
    g.add(std::move(f), std::move(links));
  }
  return g;
}

FFTree<char> random_fftree(Rng& rng, std::size_t max_nodes) {
  std::map<Word, FFNode<char>> nodes{{Word{}, {letter(rng), std::nullopt}}};
  std::map<Word, Word> root_of{{Word{}, Word{}}};
  std::vector<Word> open{Word{}};
  std::size_t budget = 1 + below(rng, max_nodes);
  double fresh = 0.2 + 0.6 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  while (nodes.size() < budget && !open.empty()) {
    std::size_t i = below(rng, open.size());
    Word parent = open[i];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
    std::size_t k = 1 + below(rng, 3);
    for (std::size_t j = 0; j < k && nodes.size() < budget; ++j) {
      Word child = parent.child(static_cast<Letter>(j));
      nodes.emplace(child, FFNode<char>{letter(rng), std::nullopt});
      root_of.emplace(child, coin(rng, fresh) ? child : root_of.at(parent));
      open.push_back(child);
    }
  }
  std::map<Word, std::set<Word>> classes;
  for (const auto& [w, r] : root_of) classes[r].insert(w);
  std::vector<std::set<Word>> partition;
  for (auto& entry : classes) partition.push_back(std::move(entry.second));
  return FFTree<char>::validate(std::move(nodes), partition);
}

RootPath random_root_path(Rng& rng, const Coalgebra<char>& g, StateId c, std::size_t max_len) {
  RootPath r;
  std::size_t len = below(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const auto& links = g.destruct(c).links;
    if (links.empty()) break;
    auto it = links.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(below(rng, links.size())));
    r.push_back(it->first);
    c = it->second;
  }
  return r;
}

RootPath random_root_path(Rng& rng, const FFTree<char>& t, std::size_t max_len) {
  RootPath r;
  FFTree<char> cur = t;
  std::size_t len = below(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    auto [top, below_] = cur.destruct();
    if (below_.empty()) break;
    auto it = below_.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(below(rng, below_.size())));
    r.push_back(it->first);
    cur = it->second;
  }
  return r;
}

std::vector<RootPath> root_paths(const Coalgebra<char>& g, StateId c, std::size_t depth) {
  std::vector<RootPath> out;
  if (depth == 0) return out;
  std::vector<std::pair<RootPath, StateId>> layer{{RootPath{}, c}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::pair<RootPath, StateId>> next;
    for (const auto& [r, s] : layer) {
      out.push_back(r);
      for (const auto& [leaf, target] : g.destruct(s).links) next.emplace_back(r.then(leaf), target);
    }
    layer = std::move(next);
  }
  return out;
}

FFTree<char> unfold_by_definition(const Coalgebra<char>& g, StateId c, std::size_t depth) {
  std::map<Word, FFNode<char>> nodes;
  std::vector<std::set<Word>> classes;
  for (const auto& r : root_paths(g, c, depth)) {
    Word base = cotrans::word_of(r);
    const auto& frag = cotrans::fragment_at(g, c, r);
    std::set<Word> cls;
    for (const auto& u : frag.proper_nodes()) {
      nodes.emplace(base + u, FFNode<char>{frag.label(u), std::nullopt});
      cls.insert(base + u);
    }
    classes.push_back(std::move(cls));
    if (r.size() + 1 < depth) continue;
    StateId here = cotrans::subelement(g, c, r);
    for (const auto& [leaf, target] : g.destruct(here).links) {
      nodes.emplace(base + leaf, FFNode<char>{g.destruct(target).fragment.root_label(), target});
      classes.push_back({base + leaf});
    }
  }
  return FFTree<char>::validate(std::move(nodes), classes, true);
}

}  // namespace testgen
