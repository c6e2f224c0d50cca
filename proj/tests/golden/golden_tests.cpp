#include "cotrans/grz/cut.hpp"
#include "cotrans/grz/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cotrans;
using namespace cotrans::grz;

namespace {

std::string cutelim_text(const std::string& name) {
  auto in = fixtures::load("golden/" + name + ".proof");
  ExtendOptions opt;
  opt.max_states = 200;
  auto out = cut_elim(in.graph, opt);
  REQUIRE(out.closed());
  return print_graph_file(out.graph, "grz",
                          {"closed: yes", "states: " + std::to_string(out.states()), "cuts: " + std::to_string(count_cuts(out.graph))});
}

}  // namespace

TEST_CASE("cut elimination outputs match the golden files") {
  for (const char* name : {"atomic_cut", "box_principal_cut", "weakening_part_cut", "boxed_context_cut"}) {
    CAPTURE(name);
    CHECK(cutelim_text(name) == fixtures::read_text(fixtures::data_path(std::string("golden/") + name + ".cutelim")));
  }
}

TEST_CASE("unfoldings match the golden files") {
  for (const char* name : {"box_loop", "grz_axiom"}) {
    CAPTURE(name);
    auto f = fixtures::load(std::string("golden/") + name + ".proof");
    Graph g = make_graph(restrict_to(f.graph.graph(), f.graph.root), 0);
    auto u = unfold(g.graph(), g.root, UnfoldBudget{3, 100000});
    CHECK(print_unfolding(u.tree) == fixtures::read_text(fixtures::data_path(std::string("golden/") + name + ".unfold3")));
  }
}

TEST_CASE("dot rendering matches the golden file") {
  auto f = fixtures::load("golden/box_loop.proof");
  CHECK(render_dot(f.graph) == fixtures::read_text(fixtures::data_path("golden/box_loop.dot")));
}

TEST_CASE("oracle golden files are canonical") {
  for (const char* name : {"box_loop", "grz_axiom"}) {
    CAPTURE(name);
    std::string text = fixtures::read_text(fixtures::data_path(std::string("golden/") + name + ".proof"));
    auto f = parse_graph_file(text);
    std::string body = text.substr(text.find("calculus"));
    CHECK(print_graph_file(f.graph, f.calculus) == body);
  }
}
