#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cotrans/calculus.hpp"
#include "cotrans/coalgebra.hpp"
#include "cotrans/error.hpp"

namespace cotrans {

/// One step of a proof translation: a target fragment and, for each of its
/// star leaves, the source proof that continues the translation there.
template <class Seq>
struct StepOutput {
  ProofFragment<Seq> fragment;
  std::map<Word, ProofGraph<Seq>> successors;
};

template <class Seq>
struct TranslationStep {
  std::string name;
  const Calculus<Seq>* source = nullptr;
  const Calculus<Seq>* target = nullptr;
  std::function<StepOutput<Seq>(const ProofGraph<Seq>&)> apply;
};

// step = destruct: translates a proof into itself.
template <class Seq>
TranslationStep<Seq> identity_step(const Calculus<Seq>& calc) {
  return {"identity", &calc, &calc, [](const ProofGraph<Seq>& pg) {
            StepOutput<Seq> out{pg.fragment(), {}};
            for (const auto& [leaf, target] : pg.top().links) out.successors.emplace(leaf, pg.at(target));
            return out;
          }};
}

/// Result of checking one application of a step against its two contract
/// conditions: the output fragment is a target proof fragment (1), and every
/// successor is a source proof (2).
struct StepReport {
  FragmentReport fragment;
  std::vector<std::pair<Word, GraphReport>> successors;
  std::string shape;  // star leaves and successors disagree

  bool ok() const {
    if (!fragment.ok() || !shape.empty()) return false;
    for (const auto& entry : successors)
      if (!entry.second.ok()) return false;
    return true;
  }

  std::string describe() const {
    if (!shape.empty()) return shape;
    for (const auto& v : fragment.violations) return "condition 1 at node " + to_string(v.node) + ": " + v.detail;
    for (const auto& [leaf, r] : successors)
      if (!r.ok()) return "condition 2 at leaf " + to_string(leaf) + ": " + to_string(r.findings.front());
    return "ok";
  }
};

namespace detail {

template <class Seq>
std::string shape_mismatch(const ProofFragment<Seq>& frag, const std::map<Word, ProofGraph<Seq>>& successors) {
  auto leaves = frag.nw_leaves();
  for (const auto& leaf : leaves)
    if (!successors.contains(leaf)) return "no successor at star leaf " + to_string(leaf);
  for (const auto& entry : successors)
    if (!leaves.contains(entry.first)) return "successor at non-star node " + to_string(entry.first);
  return {};
}

template <class Seq>
std::map<Word, Seq> successor_sequents(const std::map<Word, ProofGraph<Seq>>& successors) {
  std::map<Word, Seq> s;
  for (const auto& [leaf, pg] : successors) s.emplace(leaf, pg.conclusion());
  return s;
}

}  // namespace detail

template <class Seq>
StepReport check_step(const TranslationStep<Seq>& step, const StepOutput<Seq>& out, bool check_successors = true) {
  StepReport report;
  report.shape = detail::shape_mismatch(out.fragment, out.successors);
  if (!report.shape.empty()) return report;
  report.fragment = check_proof_fragment(*step.target, out.fragment, detail::successor_sequents(out.successors));
  if (check_successors)
    for (const auto& [leaf, pg] : out.successors) report.successors.emplace_back(leaf, check_proof_graph(*step.source, pg));
  return report;
}

template <class Seq>
std::vector<StepReport> validate_step(const TranslationStep<Seq>& step, const std::vector<ProofGraph<Seq>>& corpus) {
  std::vector<StepReport> out;
  out.reserve(corpus.size());
  for (const auto& pg : corpus) out.push_back(check_step(step, step.apply(pg)));
  return out;
}

// ---------------------------------------------------------------------------
// Corecursive extension.

struct ExtendOptions {
  bool memo = true;
  std::size_t max_states = 10000;
  std::optional<std::size_t> max_depth;  // fragments along a root-path; deeper states stay open
  bool validate = true;
};

/// The translated proof as a coalgebra. Open states were not expanded: each
/// holds a one-node placeholder carrying the sequent it would prove, so
/// unfolding can mark it as a truncation.
template <class Seq>
struct ExtendResult {
  ProofGraph<Seq> graph;
  std::set<StateId> open;

  bool closed() const noexcept { return open.empty(); }
  std::size_t states() const { return graph.graph().size(); }
};

inline const RuleId kOpenRule{"open"};

namespace detail {

// Generic corecursion over values of type X. `step` returns the fragment and
// successor values, `key` identifies values for back-links (memo), `peek`
// gives the sequent an unexpanded value would prove.
template <class Seq, class X, class Key>
ExtendResult<Seq> corecurse(X start, const ExtendOptions& opt,
                            const std::function<std::pair<ProofFragment<Seq>, std::map<Word, X>>(const X&)>& step,
                            const std::function<Key(const X&)>& key, const std::function<Seq(const X&)>& peek) {
  ProofCoalgebra<Seq> out;
  std::map<Key, StateId> memo;
  struct Pending {
    StateId id;
    X value;
    std::size_t depth;
  };
  std::deque<Pending> queue;
  auto enqueue = [&](X value, std::size_t depth) -> StateId {
    if (opt.memo) {
      Key k = key(value);
      auto it = memo.find(k);
      if (it != memo.end()) return it->second;
      StateId id = out.reserve();
      memo.emplace(std::move(k), id);
      queue.push_back({id, std::move(value), depth});
      return id;
    }
    StateId id = out.reserve();
    queue.push_back({id, std::move(value), depth});
    return id;
  };
  enqueue(std::move(start), 0);

  std::set<StateId> open;
  std::size_t expanded = 0;
  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    if (expanded >= opt.max_states || (opt.max_depth && p.depth >= *opt.max_depth)) {
      out.set(p.id, ProofFragment<Seq>::single({peek(p.value), kOpenRule}), {});
      open.insert(p.id);
      continue;
    }
    ++expanded;
    auto [frag, successors] = step(p.value);
    std::map<Word, StateId> links;
    for (auto& [leaf, value] : successors) links.emplace(leaf, enqueue(std::move(value), p.depth + 1));
    out.set(p.id, std::move(frag), std::move(links));
  }
  out.validate();
  return {make_graph(std::move(out), 0), std::move(open)};
}

}  // namespace detail

/// Extends a translation step to whole proofs. With memo on, successor proofs
/// are identified up to bisimulation and repeats become back-links, so regular
/// outputs come back as closed finite graphs. Every application is checked
/// against the step contract when `validate` is set.
template <class Seq>
ExtendResult<Seq> extend(const TranslationStep<Seq>& step, const ProofGraph<Seq>& input, const ExtendOptions& opt = {}) {
  using Key = CanonicalKey<ProofLabel<Seq>>;
  std::function<std::pair<ProofFragment<Seq>, std::map<Word, ProofGraph<Seq>>>(const ProofGraph<Seq>&)> apply =
      [&](const ProofGraph<Seq>& pg) {
        StepOutput<Seq> o = step.apply(pg);
        if (opt.validate) {
          // Successors reached again through the memo were already certified as inputs.
          StepReport r = check_step(step, o, true);
          if (!r.ok())
            throw Error(Errc::StepContractViolation, step.name + " on a proof of " + to_string(pg.conclusion()) + ": " + r.describe());
        }
        return std::pair{std::move(o.fragment), std::move(o.successors)};
      };
  std::function<Key(const ProofGraph<Seq>&)> key = [](const ProofGraph<Seq>& pg) {
    return canonical_key(pg.graph(), pg.root);
  };
  std::function<Seq(const ProofGraph<Seq>&)> peek = [](const ProofGraph<Seq>& pg) { return pg.conclusion(); };
  return detail::corecurse<Seq, ProofGraph<Seq>, Key>(input, opt, apply, key, peek);
}

/// Checks the expanded part of an extension result: every reachable state
/// that is not open must be a target proof fragment.
template <class Seq>
GraphReport check_expanded(const Calculus<Seq>& calc, const ExtendResult<Seq>& result) {
  GraphReport report;
  const auto& g = result.graph.graph();
  for (StateId c : reachable(g, result.graph.root)) {
    if (result.open.contains(c)) continue;
    auto r = check_proof_fragment(calc, g.destruct(c).fragment, leaf_sequents(g, c));
    for (auto& v : r.violations) report.findings.push_back({c, std::move(v)});
    ++report.states_checked;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Staged corecursion: follow `first` until `switch_now` holds, then `second`.

template <class Seq>
struct StagedStep {
  TranslationStep<Seq> first;
  TranslationStep<Seq> second;
  std::function<bool(const ProofGraph<Seq>&)> switch_now;
};

/// Runs the product step over (proof, stage) pairs. When the switch fires at
/// stage 0, the first step's fragment is paired with the sequents the second
/// step will produce at each successor; that mixed pairing must be a target
/// proof fragment, otherwise CompatibilityViolation.
template <class Seq>
ExtendResult<Seq> extend_staged(const StagedStep<Seq>& gamma, const ProofGraph<Seq>& input, const ExtendOptions& opt = {}) {
  using X = std::pair<ProofGraph<Seq>, int>;
  using Key = std::pair<CanonicalKey<ProofLabel<Seq>>, int>;
  auto run = [&](const TranslationStep<Seq>& step, const ProofGraph<Seq>& pg) {
    StepOutput<Seq> o = step.apply(pg);
    if (opt.validate) {
      StepReport r = check_step(step, o, true);
      if (!r.ok())
        throw Error(Errc::StepContractViolation, step.name + " on a proof of " + to_string(pg.conclusion()) + ": " + r.describe());
    }
    return o;
  };
  std::function<std::pair<ProofFragment<Seq>, std::map<Word, X>>(const X&)> apply = [&](const X& x) {
    const auto& [pg, stage] = x;
    std::map<Word, X> next;
    if (stage == 1) {
      StepOutput<Seq> o = run(gamma.second, pg);
      for (auto& [leaf, succ] : o.successors) next.emplace(leaf, X{std::move(succ), 1});
      return std::pair{std::move(o.fragment), std::move(next)};
    }
    StepOutput<Seq> o = run(gamma.first, pg);
    bool switching = gamma.switch_now(pg);
    if (switching) {
      std::map<Word, Seq> s;
      for (const auto& [leaf, succ] : o.successors) {
        StepOutput<Seq> b = gamma.second.apply(succ);
        s.emplace(leaf, b.fragment.root_label().sequent);
      }
      auto r = check_proof_fragment(*gamma.first.target, o.fragment, s);
      if (!r.ok())
        throw Error(Errc::CompatibilityViolation,
                    "switch at a proof of " + to_string(pg.conclusion()) + ", node " + to_string(r.violations.front().node));
    }
    for (auto& [leaf, succ] : o.successors) next.emplace(leaf, X{std::move(succ), switching ? 1 : 0});
    return std::pair{std::move(o.fragment), std::move(next)};
  };
  std::function<Key(const X&)> key = [](const X& x) {
    return Key{canonical_key(x.first.graph(), x.first.root), x.second};
  };
  std::function<Seq(const X&)> peek = [](const X& x) { return x.first.conclusion(); };
  return detail::corecurse<Seq, X, Key>(X{input, 0}, opt, apply, key, peek);
}

}  // namespace cotrans
