#include "cotrans/grz/cut.hpp"
#include "cotrans/grz/io.hpp"
#include "cotrans/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cotrans;
using namespace cotrans::grz;

namespace {

Sequent sq(std::string_view s) { return parse_sequent(s); }

struct Reduced {
  Proof proof;
  Graph graph;
  CutTrace trace;
  std::size_t states_before = 0;
  std::size_t states_after = 0;
};

// Reduces the cut at the root of the main fragment of a golden file.
Reduced reduce_root_cut(const std::string& file) {
  Graph g = fixtures::load(file).graph;
  ProofStore store(g);
  Proof main = store.load(0);
  REQUIRE(main->rule == GrzRule::Cut);
  Reduced r;
  r.states_before = store.size();
  r.proof = reduce_cut(main->premises[0].node, main->premises[1].node, store, &r.trace);
  r.states_after = store.size();
  store.set(0, r.proof);
  r.graph = store.graph(0);
  return r;
}

void require_valid(const Graph& g, const Calculus<Sequent>& c) {
  auto report = check_proof_graph(c, g);
  for (const auto& finding : report.findings) MESSAGE(to_string(finding));
  CHECK(report.ok());
}

void require_descent(const CutTrace& t) {
  for (const auto& [caller, callee] : t.calls) CHECK(callee < caller);
}

}  // namespace

TEST_CASE("atomic cut between initial sequents") {
  ProofStore store;
  Proof pi = make_node(sq("p0 |- p0, p0"), GrzRule::Ax);
  Proof tau = make_node(sq("p0, p0 |- p0"), GrzRule::Ax);
  Proof out = reduce_cut(pi, tau, store);
  CHECK(out->seq == sq("p0 |- p0"));
  CHECK(out->rule == GrzRule::Ax);
  CHECK(cut_measure(pi, tau) == CutMeasure{0, 0});
}

TEST_CASE("cut on a principal box formula") {
  auto r = reduce_root_cut("golden/box_principal_cut.proof");
  CHECK(r.proof->seq == sq("box p0 |- p0"));
  CHECK(count_cuts(r.proof) == 0);
  require_valid(r.graph, grz_cut_calculus());
  require_descent(r.trace);
  CHECK(r.trace.calls.size() >= 2);
}

TEST_CASE("cut formula in the weakening part of a box") {
  auto r = reduce_root_cut("golden/weakening_part_cut.proof");
  CHECK(r.proof->rule == GrzRule::Box);
  CHECK(count_cuts(r.proof) == 0);
  require_valid(r.graph, grz_cut_calculus());
  require_descent(r.trace);
  CHECK(r.states_after == r.states_before);
}

TEST_CASE("cut formula among the boxed context leaves a residual cut outside the main fragment") {
  auto r = reduce_root_cut("golden/boxed_context_cut.proof");
  REQUIRE(r.proof->rule == GrzRule::Box);
  CHECK(count_cuts(r.proof) == 0);
  require_valid(r.graph, grz_cut_calculus());
  require_descent(r.trace);
  CHECK(r.states_after == r.states_before + 1);
  const Premise& right = r.proof->premises[1];
  REQUIRE(right.link);
  CHECK(right.linked == sq("box p0 |- p1 -> p0"));
  CHECK(count_cuts(r.graph.at(*right.link)) > 0);
}

TEST_CASE("measure strictly decreases on random cut pairs") {
  auto corpus = generate_corpus(3, 30);
  for (const auto& g : corpus) {
    ProofStore store(g);
    CutTrace trace;
    Proof out = cuts_up(store.load(0), store, &trace);
    CHECK(count_cuts(out) == 0);
    require_descent(trace);
  }
}

TEST_CASE("cuts_up") {
  auto loop = fixtures::load("golden/box_loop.proof").graph;
  CHECK(print_graph_file(cuts_up(loop), "grz") == print_graph_file(loop, "grz"));

  auto atomic = cuts_up(fixtures::load("golden/atomic_cut.proof").graph);
  CHECK(main_fragment(atomic)->rule == GrzRule::Ax);
  CHECK(atomic.conclusion() == sq("p0 |- p0"));

  auto stacked = parse_graph_file(R"(calculus grz+cut
root a
state a {
  [p0 |- p0] cut {
    [p0 |- p0, p1] cut {
      [p0 |- p0, p1, p0] ax
      [p0, p0 |- p0, p1] ax
    }
    [p1, p0 |- p0] cut {
      [p1, p0 |- p0, p0] ax
      [p0, p1, p0 |- p0] ax
    }
  }
}
)").graph;
  require_valid(stacked, grz_cut_calculus());
  auto out = cuts_up(stacked);
  CHECK(count_cuts(main_fragment(out)) == 0);
  CHECK(out.conclusion() == sq("p0 |- p0"));
  require_valid(out, grz_cut_calculus());
}

TEST_CASE("cut elimination") {
  auto loop = fixtures::load("golden/box_loop.proof").graph;
  auto same = cut_elim(loop);
  CHECK(same.closed());
  CHECK(canonical_key(same.graph.graph(), same.graph.root) == canonical_key(loop.graph(), loop.root));

  for (const char* name : {"golden/atomic_cut.proof", "golden/box_principal_cut.proof", "golden/weakening_part_cut.proof",
                           "golden/boxed_context_cut.proof"}) {
    CAPTURE(name);
    auto in = fixtures::load(name).graph;
    auto out = cut_elim(in);
    REQUIRE(out.closed());
    CHECK(out.graph.conclusion() == in.conclusion());
    CHECK(count_cuts(out.graph) == 0);
    require_valid(out.graph, grz_calculus());
  }
  auto atomic = cut_elim(fixtures::load("golden/atomic_cut.proof").graph);
  CHECK(atomic.states() == 1);
  CHECK(main_fragment(atomic.graph)->rule == GrzRule::Ax);
}

TEST_CASE("cut elimination without memo stays open at the depth bound") {
  auto in = fixtures::load("golden/grz_axiom.proof").graph;
  ExtendOptions opt;
  opt.memo = false;
  opt.max_depth = 3;
  auto out = cut_elim(in, opt);
  CHECK_FALSE(out.closed());
  CHECK(check_expanded(grz_calculus(), out).ok());
}
