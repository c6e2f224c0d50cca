#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cotrans/coalgebra.hpp"
#include "cotrans/error.hpp"
#include "cotrans/fftree.hpp"
#include "cotrans/tree_nw.hpp"
#include "cotrans/word.hpp"

namespace cotrans {

struct RuleId {
  std::string name;

  friend bool operator==(const RuleId&, const RuleId&) = default;
  friend auto operator<=>(const RuleId&, const RuleId&) = default;
};

/// Node label of a proof: the sequent proved there and the rule applied.
template <class Seq>
struct ProofLabel {
  Seq sequent;
  RuleId rule;

  friend bool operator==(const ProofLabel&, const ProofLabel&) = default;
  friend bool operator<(const ProofLabel& a, const ProofLabel& b) {
    if (a.sequent == b.sequent) return a.rule < b.rule;
    return a.sequent < b.sequent;
  }
};

/// A rule is a membership test on candidate instances plus its local progress
/// function. Both see the premises in order and the conclusion.
template <class Seq>
struct Rule {
  RuleId id;
  std::function<bool(const std::vector<Seq>& premises, const Seq& conclusion)> matches;
  std::function<std::set<std::size_t>(const std::vector<Seq>& premises, const Seq& conclusion)> progress;
};

template <class Seq>
class Calculus {
 public:
  Calculus(std::string name, std::vector<Rule<Seq>> rules) : name_(std::move(name)), rules_(std::move(rules)) {
    std::set<RuleId> seen;
    for (const auto& r : rules_)
      if (!seen.insert(r.id).second) throw Error(Errc::MalformedGraph, "duplicate rule " + r.id.name);
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<Rule<Seq>>& rules() const noexcept { return rules_; }

  const Rule<Seq>* find(const RuleId& id) const {
    for (const auto& r : rules_)
      if (r.id == id) return &r;
    return nullptr;
  }

 private:
  std::string name_;
  std::vector<Rule<Seq>> rules_;
};

template <class Seq>
using ProofFragment = TreeNW<ProofLabel<Seq>>;
template <class Seq>
using ProofCoalgebra = Coalgebra<ProofLabel<Seq>>;

/// A regular proof: a shared, immutable coalgebra and the state it starts from.
template <class Seq>
struct ProofGraph {
  std::shared_ptr<const ProofCoalgebra<Seq>> coalgebra;
  StateId root = 0;

  const ProofCoalgebra<Seq>& graph() const { return *coalgebra; }
  const Destructed<ProofLabel<Seq>>& top() const { return coalgebra->destruct(root); }
  const ProofFragment<Seq>& fragment() const { return top().fragment; }
  const Seq& conclusion() const { return fragment().root_label().sequent; }
  ProofGraph at(StateId s) const {
    coalgebra->require(s);
    return {coalgebra, s};
  }
};

template <class Seq>
ProofGraph<Seq> make_graph(ProofCoalgebra<Seq> g, StateId root = 0) {
  g.require(root);
  g.validate();
  return {std::make_shared<const ProofCoalgebra<Seq>>(std::move(g)), root};
}

// ---------------------------------------------------------------------------
// Reports.

enum class Condition { Instance, Progress };

inline const char* condition_name(Condition c) { return c == Condition::Instance ? "instance" : "progress"; }

struct Violation {
  Word node;
  Condition condition;
  std::optional<std::size_t> child;  // set for progress violations
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FragmentReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

struct Finding {
  StateId state;
  Violation violation;
};

struct GraphReport {
  std::vector<Finding> findings;
  std::size_t states_checked = 0;
  bool ok() const noexcept { return findings.empty(); }
};

// "state 3 node 0.1 condition progress child 1"
inline std::string to_string(const Finding& f) {
  std::string out = "state s" + std::to_string(f.state) + " node " + to_string(f.violation.node) + " condition " +
                    condition_name(f.violation.condition);
  if (f.violation.child) out += " child " + std::to_string(*f.violation.child);
  if (!f.violation.detail.empty()) out += " (" + f.violation.detail + ")";
  return out;
}

namespace detail {

template <class Seq>
std::vector<Seq> premises_at(const ProofFragment<Seq>& frag, const std::map<Word, Seq>& s, const Word& w) {
  std::vector<Seq> out;
  std::size_t k = frag.arity(w);
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Word c = w.child(static_cast<Letter>(i));
    const auto& slot = frag.slot(c);
    if (slot) {
      out.push_back(slot->sequent);
    } else {
      auto it = s.find(c);
      if (it == s.end()) throw Error(Errc::MalformedGraph, "no sequent for star leaf " + to_string(c));
      out.push_back(it->second);
    }
  }
  return out;
}

}  // namespace detail

/// Checks the two proof-fragment conditions at every proper node: the node is
/// an instance of its rule, and a child is a star leaf exactly when its index
/// is in the rule's progress set. `s` gives the sequent at each star leaf.
template <class Seq>
FragmentReport check_proof_fragment(const Calculus<Seq>& calc, const ProofFragment<Seq>& frag,
                                    const std::map<Word, Seq>& s, bool progress_condition = true) {
  FragmentReport report;
  for (const auto& [w, slot] : frag.nodes()) {
    if (!slot) continue;
    const auto* rule = calc.find(slot->rule);
    if (!rule) {
      report.violations.push_back({w, Condition::Instance, std::nullopt, "unknown rule " + slot->rule.name});
      continue;
    }
    auto premises = detail::premises_at(frag, s, w);
    if (!rule->matches(premises, slot->sequent))
      report.violations.push_back({w, Condition::Instance, std::nullopt, "not an instance of " + rule->id.name});
    if (!progress_condition) continue;
    auto progress = rule->progress(premises, slot->sequent);
    for (std::size_t i = 0; i < premises.size(); ++i) {
      bool star = frag.is_star(w.child(static_cast<Letter>(i)));
      if (star != progress.contains(i))
        report.violations.push_back(
            {w, Condition::Progress, i, star ? "star leaf at a non-progress premise" : "progress premise is not a star leaf"});
    }
  }
  return report;
}

template <class Seq>
std::map<Word, Seq> leaf_sequents(const ProofCoalgebra<Seq>& g, StateId c) {
  std::map<Word, Seq> s;
  for (const auto& [leaf, target] : g.destruct(c).links) s.emplace(leaf, g.destruct(target).fragment.root_label().sequent);
  return s;
}

namespace detail {

template <class Seq>
GraphReport check_states(const Calculus<Seq>& calc, const ProofGraph<Seq>& pg, bool progress_condition) {
  GraphReport report;
  for (StateId c : reachable(pg.graph(), pg.root)) {
    auto r = check_proof_fragment(calc, pg.graph().destruct(c).fragment, leaf_sequents(pg.graph(), c), progress_condition);
    for (auto& v : r.violations) report.findings.push_back({c, std::move(v)});
    ++report.states_checked;
  }
  return report;
}

}  // namespace detail

/// Every reachable state is a proof fragment. Since every state boundary is a
/// progress point and the graph is finite, this certifies the whole
/// non-wellfounded proof.
template <class Seq>
GraphReport check_proof_graph(const Calculus<Seq>& calc, const ProofGraph<Seq>& pg) {
  return detail::check_states(calc, pg, true);
}

template <class Seq>
GraphReport check_pre_proof(const Calculus<Seq>& calc, const ProofGraph<Seq>& pg) {
  return detail::check_states(calc, pg, false);
}

template <class Seq>
bool progressing(const Calculus<Seq>& calc, const ProofGraph<Seq>& pg, StateId state, const Word& node) {
  const auto& frag = pg.graph().destruct(state).fragment;
  if (!frag.contains(node)) throw Error(Errc::UnknownNode, "no node " + to_string(node) + " in state " + std::to_string(state));
  if (node.empty()) return false;
  Word parent = node.parent();
  const auto& label = frag.label(parent);
  const auto* rule = calc.find(label.rule);
  if (!rule) throw Error(Errc::NotAPreProof, "unknown rule " + label.rule.name + " at " + to_string(parent));
  auto premises = detail::premises_at(frag, leaf_sequents(pg.graph(), state), parent);
  return rule->progress(premises, label.sequent).contains(node.back());
}

/// The partition of a (possibly truncated) pre-proof tree into regions joined
/// by non-progressing parent-child edges. Truncation marks are leaves whose
/// labels stand in for the unexpanded subtree root.
template <class Seq>
std::vector<std::set<Word>> compute_fragmentation(const Calculus<Seq>& calc,
                                                  const std::map<Word, FFNode<ProofLabel<Seq>>>& nodes) {
  detail::check_tree_shape(nodes);
  std::map<Word, Word> root_of;
  for (const auto& [w, n] : nodes) {
    if (w.empty()) root_of.emplace(w, w);
    if (n.truncated) continue;
    std::vector<Seq> premises;
    for (Letter i = 0;; ++i) {
      auto it = nodes.find(w.child(i));
      if (it == nodes.end()) break;
      premises.push_back(it->second.label.sequent);
    }
    const auto* rule = calc.find(n.label.rule);
    if (!rule) throw Error(Errc::NotAPreProof, "unknown rule " + n.label.rule.name + " at " + to_string(w));
    if (!rule->matches(premises, n.label.sequent))
      throw Error(Errc::NotAPreProof, "node " + to_string(w) + " is not an instance of " + rule->id.name);
    auto progress = rule->progress(premises, n.label.sequent);
    const Word& mine = root_of.at(w);
    for (std::size_t i = 0; i < premises.size(); ++i) {
      Word c = w.child(static_cast<Letter>(i));
      root_of.emplace(c, progress.contains(i) ? c : mine);
    }
  }
  std::map<Word, std::set<Word>> classes;
  for (const auto& [w, r] : root_of) classes[r].insert(w);
  std::vector<std::set<Word>> out;
  for (auto& entry : classes) out.push_back(std::move(entry.second));
  return out;
}

template <class Seq>
std::vector<std::set<Word>> compute_fragmentation(const Calculus<Seq>& calc, const FFTree<ProofLabel<Seq>>& tree) {
  return compute_fragmentation(calc, tree.nodes());
}

template <class Seq>
std::vector<std::set<Word>> classes_of(const FFTree<ProofLabel<Seq>>& tree) {
  std::map<Word, std::set<Word>> classes;
  for (const auto& [w, r] : tree.class_roots()) classes[r].insert(w);
  std::vector<std::set<Word>> out;
  for (auto& entry : classes) out.push_back(std::move(entry.second));
  return out;
}

}  // namespace cotrans
