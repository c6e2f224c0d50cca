#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cotrans/error.hpp"
#include "cotrans/word.hpp"

namespace cotrans {

/// Finite tree whose leaves may carry the star label, marking the places
/// where another tree is glued in. Nodes are stored by address, so two trees
/// compare equal exactly when they have the same nodes and labels.
template <class L>
class TreeNW {
 public:
  using Label = L;
  using Slot = std::optional<L>;  // std::nullopt is the star

  // Empty placeholder, not a valid tree. Only `single` and `validate` make trees.
  TreeNW() = default;

  static TreeNW single(L label) {
    TreeNW t;
    t.nodes_ = {{Word{}, Slot(std::move(label))}};
    return t;
  }

  static TreeNW validate(std::map<Word, Slot> candidate) {
    auto root = candidate.find(Word{});
    if (root == candidate.end()) throw Error(Errc::NotPrefixClosed, "missing root node e");
    if (!root->second) throw Error(Errc::ViolatedRootLabel, "root node e is labelled star");
    for (const auto& [w, slot] : candidate) {
      if (w.empty()) continue;
      Word parent = w.parent();
      if (!candidate.contains(parent))
        throw Error(Errc::NotPrefixClosed, "node " + to_string(w) + " has no parent");
      if (w.back() > 0 && !candidate.contains(parent.child(w.back() - 1)))
        throw Error(Errc::GappedChildren, "node " + to_string(w) + " has a missing left sibling");
      if (!candidate.at(parent))
        throw Error(Errc::StarNotLeaf, "star node " + to_string(parent) + " has a child");
    }
    TreeNW t;
    t.nodes_ = std::move(candidate);
    return t;
  }

  const std::map<Word, Slot>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(const Word& w) const { return nodes_.contains(w); }

  bool is_star(const Word& w) const { return !slot(w).has_value(); }

  const L& label(const Word& w) const {
    const Slot& s = slot(w);
    if (!s) throw Error(Errc::UnknownNode, "node " + to_string(w) + " is a star leaf");
    return *s;
  }

  const L& root_label() const { return *nodes_.begin()->second; }

  const Slot& slot(const Word& w) const {
    auto it = nodes_.find(w);
    if (it == nodes_.end()) throw Error(Errc::UnknownNode, "no node " + to_string(w));
    return it->second;
  }

  std::size_t arity(const Word& w) const {
    std::size_t k = 0;
    while (nodes_.contains(w.child(static_cast<Letter>(k)))) ++k;
    return k;
  }

  std::set<Word> nw_leaves() const {
    std::set<Word> out;
    for (const auto& [w, s] : nodes_)
      if (!s) out.insert(out.end(), w);
    return out;
  }

  std::set<Word> proper_nodes() const {
    std::set<Word> out;
    for (const auto& [w, s] : nodes_)
      if (s) out.insert(out.end(), w);
    return out;
  }

  // Edges from the root to the deepest node, star leaves included.
  std::size_t height() const {
    std::size_t h = 0;
    for (const auto& entry : nodes_) h = std::max(h, entry.first.size());
    return h;
  }

  friend bool operator==(const TreeNW&, const TreeNW&) = default;
  friend bool operator<(const TreeNW& a, const TreeNW& b) { return a.nodes_ < b.nodes_; }

 private:
  std::map<Word, Slot> nodes_;
};

template <class L>
std::set<Word> nw_leaves(const TreeNW<L>& t) {
  return t.nw_leaves();
}

template <class L>
std::set<Word> proper_nodes(const TreeNW<L>& t) {
  return t.proper_nodes();
}

}  // namespace cotrans
