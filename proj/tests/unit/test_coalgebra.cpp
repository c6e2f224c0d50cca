#include <random>

#include "cotrans/coalgebra.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cotrans;

namespace {

Word w(std::string_view s) { return parse_word(s); }

TreeNW<char> looped(char label) { return TreeNW<char>::validate({{Word{}, label}, {w("0"), std::nullopt}}); }

// One state whose fragment is a single node with a star leaf linking back to itself.
Coalgebra<char> self_loop() {
  Coalgebra<char> g;
  g.add(looped('a'), {{w("0"), 0}});
  return g;
}

}  // namespace

TEST_CASE("root-paths of a self-loop") {
  auto g = self_loop();
  CHECK(is_root_path(g, 0, RootPath{}));
  CHECK(is_root_path(g, 0, RootPath{w("0"), w("0")}));
  CHECK_FALSE(is_root_path(g, 0, RootPath{w("1")}));
  CHECK_THROWS_AS(is_root_path(g, 7, RootPath{}), Error);
}

TEST_CASE("subelements and fragments") {
  auto g = self_loop();
  CHECK(subelement(g, 0, RootPath{}) == 0);
  CHECK(subelement(g, 0, RootPath{w("0")}) == 0);
  CHECK(fragment_at(g, 0, RootPath{}) == looped('a'));
  CHECK(fragment_at(g, 0, RootPath{w("0")}) == looped('a'));

  Coalgebra<char> chain;
  chain.add(looped('a'), {{w("0"), 1}});
  chain.add(TreeNW<char>::single('b'));
  CHECK(subelement(chain, 0, RootPath{w("0")}) == 1);
  CHECK(fragment_at(chain, 0, RootPath{w("0")}) == TreeNW<char>::single('b'));
  try {
    subelement(chain, 0, RootPath{w("0"), w("0")});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotARootPath);
  }
}

TEST_CASE("links must be total on star leaves") {
  Coalgebra<char> g;
  g.add(looped('a'));
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("unfolding a self-loop") {
  auto g = self_loop();
  auto two = unfold(g, 0, UnfoldBudget{2, 100});
  CHECK(two.tree.size() == 3);
  CHECK(two.tree.contains(w("0.0")));
  CHECK(two.tree.is_truncated(w("0.0")));
  CHECK(two.truncations == std::vector<std::pair<Word, StateId>>{{w("0.0"), 0}});
  CHECK(two.tree.frag_root(w("0")) == w("0"));

  auto one = unfold(g, 0, UnfoldBudget{1, 100});
  CHECK(one.tree.size() == 2);
  CHECK(one.truncations == std::vector<std::pair<Word, StateId>>{{w("0"), 0}});

  CHECK_THROWS_AS(unfold(g, 0, UnfoldBudget{50, 10}), Error);
  CHECK_THROWS_AS(unfold(g, 0, UnfoldBudget{0, 10}), Error);
}

TEST_CASE("unfolding a state without star leaves gives its fragment") {
  Coalgebra<char> g;
  auto t = TreeNW<char>::validate({{Word{}, 'a'}, {w("0"), 'b'}, {w("1"), 'c'}});
  g.add(t);
  for (std::size_t d = 1; d < 4; ++d) {
    auto u = unfold(g, 0, UnfoldBudget{d, 100});
    CHECK(u.tree.size() == 3);
    CHECK(u.truncations.empty());
    CHECK(u.tree.destruct().first == t);
  }
}

TEST_CASE("bisimulation quotient") {
  Coalgebra<char> twins;
  twins.add(looped('a'), {{w("0"), 0}});
  twins.add(looped('a'), {{w("0"), 1}});
  CHECK(bisim_minimize(twins).quotient.size() == 1);

  auto g = self_loop();
  CHECK(bisim_minimize(g).quotient.size() == 1);

  Coalgebra<char> chain;
  chain.add(looped('a'), {{w("0"), 1}});
  chain.add(looped('a'), {{w("0"), 1}});
  auto m = bisim_minimize(chain);
  CHECK(m.quotient.size() == 1);
  CHECK(m.renaming == std::vector<StateId>{0, 0});

  Coalgebra<char> distinct;
  distinct.add(looped('a'), {{w("0"), 1}});
  distinct.add(looped('b'), {{w("0"), 0}});
  CHECK(bisim_minimize(distinct).quotient.size() == 2);
}

TEST_CASE("canonical keys identify exactly the bisimilar states") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto g = testgen::random_coalgebra(rng, 5, 4);
    auto m = bisim_minimize(g);
    for (StateId a = 0; a < g.size(); ++a)
      for (StateId b = 0; b < g.size(); ++b) {
        bool same = m.renaming[a] == m.renaming[b];
        CHECK((canonical_key(g, a) == canonical_key(g, b)) == same);
        if (same) CHECK(unfold(g, a, UnfoldBudget{3, 100000}).tree == unfold(g, b, UnfoldBudget{3, 100000}).tree);
      }
  }
}

TEST_CASE("restriction renumbers reachable states from the root") {
  Coalgebra<char> g;
  g.add(TreeNW<char>::single('x'));
  g.add(looped('a'), {{w("0"), 2}});
  g.add(TreeNW<char>::single('b'));
  auto r = restrict_to(g, 1);
  CHECK(r.size() == 2);
  CHECK(r.destruct(0).links.at(w("0")) == 1);
  CHECK(reachable(g, 1) == std::vector<StateId>{1, 2});
}
