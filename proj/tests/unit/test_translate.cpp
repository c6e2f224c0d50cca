#include "cotrans/grz/cut.hpp"
#include "cotrans/grz/io.hpp"
#include "cotrans/oracle.hpp"
#include "cotrans/translate.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cotrans;
using namespace cotrans::grz;

namespace {

auto key_of(const Graph& g) { return canonical_key(g.graph(), g.root); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::MalformedGraph;
}

// Identity, except that every ax node is relabelled as refl.
TranslationStep<Sequent> mislabelling_step() {
  auto step = identity_step(grz_calculus());
  step.name = "mislabel";
  auto inner_apply = step.apply;
  step.apply = [inner_apply](const Graph& pg) {
    auto out = inner_apply(pg);
    std::map<Word, Fragment::Slot> nodes = out.fragment.nodes();
    for (auto& [w, slot] : nodes)
      if (slot && slot->rule == rule_id(GrzRule::Ax)) slot->rule = rule_id(GrzRule::Refl);
    out.fragment = Fragment::validate(std::move(nodes));
    return out;
  };
  return step;
}

// Hands the root itself back as the successor of every star leaf whose target differs:
// the fragment still checks, but a successor may prove the wrong sequent.
TranslationStep<Sequent> wrong_successor_step() {
  auto step = identity_step(grz_cut_calculus());
  step.name = "wrong-successor";
  step.apply = [](const Graph& pg) {
    StepOutput<Sequent> out{pg.fragment(), {}};
    Graph broken = fixtures::load("golden/progress_violation.proof").graph;
    for (const auto& entry : pg.top().links) out.successors.emplace(entry.first, broken);
    return out;
  };
  return step;
}

}  // namespace

TEST_CASE("identity step gives a bisimilar proof") {
  for (const char* name : {"golden/box_loop.proof", "golden/grz_axiom.proof", "golden/boxed_context_cut.proof"}) {
    auto in = fixtures::load(name);
    const auto& calc = *calculus_named(in.calculus);
    auto out = extend(identity_step(calc), in.graph);
    CHECK(out.closed());
    CHECK(out.graph.conclusion() == in.graph.conclusion());
    CHECK(key_of(out.graph) == key_of(in.graph));
    CHECK(check_proof_graph(calc, out.graph).ok());
  }
}

TEST_CASE("step validation over a corpus") {
  auto corpus = generate_corpus(1, 10);
  for (const auto& r : validate_step(identity_step(grz_cut_calculus()), corpus)) CHECK(r.ok());
  for (const auto& r : validate_step(cut_elimination_step(), corpus)) {
    CHECK_MESSAGE(r.ok(), r.describe());
  }

  std::vector<Graph> one{fixtures::load("golden/box_loop.proof").graph};
  auto reports = validate_step(mislabelling_step(), one);
  REQUIRE(reports.size() == 1);
  CHECK_FALSE(reports[0].ok());
  CHECK(reports[0].describe().find("condition 1") != std::string::npos);
}

TEST_CASE("contract violations stop the extension") {
  auto loop = fixtures::load("golden/box_loop.proof").graph;
  CHECK(code_of([&] { extend(mislabelling_step(), loop); }) == Errc::StepContractViolation);
  CHECK(code_of([&] { extend(wrong_successor_step(), loop); }) == Errc::StepContractViolation);
}

TEST_CASE("memo on and off agree on unfoldings") {
  auto in = fixtures::load("golden/grz_axiom.proof").graph;
  auto memo = extend(identity_step(grz_calculus()), in);
  ExtendOptions off;
  off.memo = false;
  off.max_depth = 4;
  auto plain = extend(identity_step(grz_calculus()), in, off);
  CHECK(memo.closed());
  CHECK_FALSE(plain.closed());
  for (std::size_t d = 1; d <= 4; ++d) {
    auto a = unfold(memo.graph.graph(), memo.graph.root, UnfoldBudget{d, 100000});
    auto b = unfold(plain.graph.graph(), plain.graph.root, UnfoldBudget{d, 100000}, &plain.open);
    CHECK(a.tree.nodes().size() == b.tree.nodes().size());
    for (const auto& [w, n] : a.tree.nodes()) {
      REQUIRE(b.tree.contains(w));
      // Open placeholders keep the sequent but not the rule.
      CHECK(b.tree.label(w).sequent == n.label.sequent);
      if (!b.tree.is_truncated(w)) CHECK(b.tree.label(w) == n.label);
    }
  }
}

TEST_CASE("state budget leaves states open") {
  auto in = fixtures::load("golden/grz_axiom.proof").graph;
  ExtendOptions opt;
  opt.max_states = 1;
  auto out = extend(identity_step(grz_calculus()), in, opt);
  CHECK_FALSE(out.closed());
  CHECK(out.states() == 2);
  CHECK(check_expanded(grz_calculus(), out).ok());
  CHECK(out.graph.at(*out.open.begin()).fragment().root_label().rule == kOpenRule);
}

TEST_CASE("staged extension") {
  auto in = fixtures::load("golden/boxed_context_cut.proof").graph;
  const auto& c = grz_cut_calculus();
  auto id = identity_step(c);

  StagedStep<Sequent> never{id, cut_elimination_step(), [](const Graph&) { return false; }};
  CHECK(key_of(extend_staged(never, in).graph) == key_of(extend(id, in).graph));

  StagedStep<Sequent> same{id, id, [](const Graph&) { return true; }};
  CHECK(key_of(extend_staged(same, in).graph) == key_of(extend(id, in).graph));

  StagedStep<Sequent> delayed{id, cut_elimination_step(), [](const Graph&) { return true; }};
  auto out = extend_staged(delayed, in);
  REQUIRE(out.closed());
  CHECK(out.graph.conclusion() == in.conclusion());
  CHECK(check_proof_graph(c, out.graph).ok());
  CHECK(count_cuts(main_fragment(out.graph)) == 1);
  std::size_t elsewhere = 0;
  for (StateId s : reachable(out.graph.graph(), out.graph.root))
    if (s != out.graph.root) elsewhere += count_cuts(main_fragment(out.graph.at(s)));
  CHECK(elsewhere == 0);
}

TEST_CASE("staged switch with an incompatible second step") {
  auto in = fixtures::load("golden/box_loop.proof").graph;
  auto id = identity_step(grz_calculus());
  auto swap = id;
  swap.name = "swap";
  // proves something else at every state
  swap.apply = [](const Graph&) {
    return StepOutput<Sequent>{Fragment::single({parse_sequent("p1 |- p1"), rule_id(GrzRule::Ax)}), {}};
  };
  StagedStep<Sequent> gamma{id, swap, [](const Graph&) { return true; }};
  ExtendOptions opt;
  opt.validate = false;
  CHECK(code_of([&] { extend_staged(gamma, in, opt); }) == Errc::CompatibilityViolation);
}
