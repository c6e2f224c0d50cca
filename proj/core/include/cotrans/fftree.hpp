#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cotrans/error.hpp"
#include "cotrans/tree_nw.hpp"
#include "cotrans/word.hpp"

namespace cotrans {

using StateId = std::uint32_t;

namespace detail {

// Prefix closure and contiguous child indices for any word-keyed node table.
template <class Map>
void check_tree_shape(const Map& nodes) {
  if (!nodes.contains(Word{})) throw Error(Errc::NotPrefixClosed, "missing root node e");
  for (const auto& entry : nodes) {
    const Word& w = entry.first;
    if (w.empty()) continue;
    Word parent = w.parent();
    if (!nodes.contains(parent)) throw Error(Errc::NotPrefixClosed, "node " + to_string(w) + " has no parent");
    if (w.back() > 0 && !nodes.contains(parent.child(w.back() - 1)))
      throw Error(Errc::GappedChildren, "node " + to_string(w) + " has a missing left sibling");
  }
}

}  // namespace detail

/// Node of a finite-fragmented tree. A truncation mark stands for a subtree
/// that was not expanded; it records the state it would have unfolded and
/// carries that state's root label so the mark can still be matched against
/// its parent's rule.
template <class L>
struct FFNode {
  L label;
  std::optional<StateId> truncated;

  friend bool operator==(const FFNode&, const FFNode&) = default;
};

/// Finite-fragmented tree: a labelled tree plus a partition of its nodes into
/// finite, rooted, convex classes. The partition is kept as a node -> class
/// root map, which is canonical, so `==` is equality of finite-fragmented
/// trees.
template <class L>
class FFTree {
 public:
  using Node = FFNode<L>;

  FFTree() = default;

  static FFTree validate(std::map<Word, Node> nodes, const std::vector<std::set<Word>>& classes,
                         bool allow_truncation = false) {
    detail::check_tree_shape(nodes);
    std::map<Word, Word> root_of;
    for (const auto& cls : classes) {
      if (cls.empty()) throw Error(Errc::NotAPartition, "empty class");
      for (const auto& w : cls) {
        if (!nodes.contains(w)) throw Error(Errc::NotAPartition, "class member " + to_string(w) + " is not a node");
        if (root_of.contains(w)) throw Error(Errc::NotAPartition, "node " + to_string(w) + " is in two classes");
        root_of.emplace(w, Word{});
      }
      // The minimum under the prefix order, if any, is the shortest member.
      const Word* root = &*cls.begin();
      for (const auto& w : cls)
        if (w.size() < root->size()) root = &w;
      for (const auto& w : cls)
        if (!prefix_le(*root, w))
          throw Error(Errc::NoRoot, "class containing " + to_string(w) + " has no least element");
      for (const auto& w : cls) {
        if (w == *root) continue;
        if (!cls.contains(w.parent()))
          throw Error(Errc::NotConvex, "class rooted at " + to_string(*root) + " misses " + to_string(w.parent()));
        root_of[w] = *root;
      }
      root_of[*root] = *root;
    }
    if (root_of.size() != nodes.size()) {
      for (const auto& entry : nodes)
        if (!root_of.contains(entry.first))
          throw Error(Errc::NotAPartition, "node " + to_string(entry.first) + " is in no class");
    }
    for (const auto& [w, node] : nodes) {
      if (!node.truncated) continue;
      if (!allow_truncation) throw Error(Errc::TruncatedNode, "truncation mark at " + to_string(w));
      if (nodes.contains(w.child(0)) || root_of.at(w) != w)
        throw Error(Errc::TruncatedNode, "truncation mark at " + to_string(w) + " is not an isolated leaf");
    }
    FFTree t;
    t.nodes_ = std::move(nodes);
    t.root_of_ = std::move(root_of);
    t.index_roots();
    return t;
  }

  const std::map<Word, Node>& nodes() const noexcept { return nodes_; }
  const std::map<Word, Word>& class_roots() const noexcept { return root_of_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(const Word& w) const { return nodes_.contains(w); }

  const Node& node(const Word& w) const {
    auto it = nodes_.find(w);
    if (it == nodes_.end()) throw Error(Errc::UnknownNode, "no node " + to_string(w));
    return it->second;
  }
  const L& label(const Word& w) const { return node(w).label; }
  bool is_truncated(const Word& w) const { return node(w).truncated.has_value(); }

  std::vector<std::pair<Word, StateId>> truncations() const {
    std::vector<std::pair<Word, StateId>> out;
    for (const auto& [w, n] : nodes_)
      if (n.truncated) out.emplace_back(w, *n.truncated);
    return out;
  }

  const std::set<Word>& roots() const noexcept { return roots_; }

  const Word& frag_root(const Word& w) const {
    auto it = root_of_.find(w);
    if (it == root_of_.end()) throw Error(Errc::UnknownNode, "no node " + to_string(w));
    return it->second;
  }

  std::set<Word> class_of(const Word& w) const {
    const Word& r = frag_root(w);
    std::set<Word> out;
    for (auto it = root_of_.lower_bound(r); it != root_of_.end() && prefix_le(r, it->first); ++it)
      if (it->second == r) out.insert(out.end(), it->first);
    return out;
  }

  // Number of roots strictly below w.
  std::size_t fheight(const Word& w) const {
    require(w);
    std::size_t n = 0;
    Word prefix;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (roots_.contains(prefix)) ++n;
      prefix = prefix.child(w[k]);
    }
    return n;
  }

  bool imm_succ(const Word& w, const Word& v) const {
    require(w);
    require(v);
    if (!roots_.contains(w) || !roots_.contains(v) || !prefix_lt(w, v)) return false;
    Word between = w;
    for (std::size_t k = w.size(); k + 1 < v.size(); ++k) {
      between = between.child(v[k]);
      if (roots_.contains(between)) return false;
    }
    return true;
  }

  TreeNW<L> tree_fragment(const Word& w) const {
    require_root(w);
    if (nodes_.at(w).truncated) throw Error(Errc::TruncatedNode, "fragment at " + to_string(w) + " was not expanded");
    std::map<Word, typename TreeNW<L>::Slot> out;
    for (auto it = nodes_.lower_bound(w); it != nodes_.end() && prefix_le(w, it->first); ++it) {
      const Word& x = it->first;
      if (root_of_.at(x) == w)
        out.emplace(x.drop(w), it->second.label);
      else if (roots_.contains(x) && imm_succ(w, x))
        out.emplace(x.drop(w), std::nullopt);
    }
    return TreeNW<L>::validate(std::move(out));
  }

  FFTree subtree(const Word& w) const {
    require_root(w);
    FFTree t;
    for (auto it = nodes_.lower_bound(w); it != nodes_.end() && prefix_le(w, it->first); ++it) {
      Word x = it->first.drop(w);
      t.nodes_.emplace(x, it->second);
      t.root_of_.emplace(x, root_of_.at(it->first).drop(w));
    }
    t.index_roots();
    return t;
  }

  RootPath root_path_of(const Word& w) const {
    require_root(w);
    RootPath r;
    Word last;
    Word prefix;
    for (std::size_t k = 0; k < w.size(); ++k) {
      prefix = prefix.child(w[k]);
      if (roots_.contains(prefix)) {
        r.push_back(prefix.drop(last));
        last = prefix;
      }
    }
    return r;
  }

  using Destructed = std::pair<TreeNW<L>, std::map<Word, FFTree>>;

  Destructed destruct() const {
    TreeNW<L> top = tree_fragment(Word{});
    std::map<Word, FFTree> below;
    for (const auto& leaf : top.nw_leaves()) below.emplace(leaf, subtree(leaf));
    return {std::move(top), std::move(below)};
  }

  // Glues mu(w) at every star leaf w of iota.
  static FFTree construct(const TreeNW<L>& iota, const std::map<Word, FFTree>& mu) {
    FFTree t;
    for (const auto& [w, slot] : iota.nodes()) {
      if (slot) {
        t.nodes_.emplace(w, Node{*slot, std::nullopt});
        t.root_of_.emplace(w, Word{});
        continue;
      }
      auto it = mu.find(w);
      if (it == mu.end()) throw Error(Errc::UnknownNode, "no tree glued at star leaf " + to_string(w));
      for (const auto& [x, n] : it->second.nodes_) t.nodes_.emplace(w + x, n);
      for (const auto& [x, r] : it->second.root_of_) t.root_of_.emplace(w + x, w + r);
    }
    t.index_roots();
    return t;
  }

  // A single truncation mark: the unexpanded state `target` whose root is labelled `peek`.
  static FFTree truncation(L peek, StateId target) {
    FFTree t;
    t.nodes_.emplace(Word{}, Node{std::move(peek), target});
    t.root_of_.emplace(Word{}, Word{});
    t.index_roots();
    return t;
  }

  friend bool operator==(const FFTree& a, const FFTree& b) {
    return a.nodes_ == b.nodes_ && a.root_of_ == b.root_of_;
  }

 private:
  void require(const Word& w) const {
    if (!nodes_.contains(w)) throw Error(Errc::UnknownNode, "no node " + to_string(w));
  }
  void require_root(const Word& w) const {
    require(w);
    if (!roots_.contains(w)) throw Error(Errc::NotARoot, "node " + to_string(w) + " is not a fragment root");
  }
  void index_roots() {
    roots_.clear();
    for (const auto& entry : root_of_)
      if (entry.first == entry.second) roots_.insert(roots_.end(), entry.first);
  }

  std::map<Word, Node> nodes_;
  std::map<Word, Word> root_of_;
  std::set<Word> roots_;
};

}  // namespace cotrans
