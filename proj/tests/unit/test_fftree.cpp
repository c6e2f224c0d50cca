#include <random>

#include "cotrans/coalgebra.hpp"
#include "cotrans/fftree.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cotrans;

namespace {

Word w(std::string_view s) { return parse_word(s); }

using Nodes = std::map<Word, FFNode<char>>;

Nodes chain3() { return {{Word{}, {'a', {}}}, {w("0"), {'b', {}}}, {w("0.0"), {'c', {}}}}; }

// Three nodes in a line, each its own class.
FFTree<char> pi2() { return FFTree<char>::validate(chain3(), {{Word{}}, {w("0")}, {w("0.0")}}); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::MalformedGraph;
}

}  // namespace

TEST_CASE("fragmentation validation") {
  CHECK_NOTHROW(FFTree<char>::validate({{Word{}, {'a', {}}}, {w("0"), {'b', {}}}}, {{Word{}}, {w("0")}}));
  CHECK(code_of([] { FFTree<char>::validate(chain3(), {{Word{}, w("0.0")}, {w("0")}}); }) == Errc::NotConvex);
  CHECK(code_of([] { FFTree<char>::validate(chain3(), {{Word{}, w("0")}, {w("0"), w("0.0")}}); }) == Errc::NotAPartition);
  CHECK(code_of([] { FFTree<char>::validate(chain3(), {{Word{}, w("0")}}); }) == Errc::NotAPartition);
  Nodes fork{{Word{}, {'a', {}}}, {w("0"), {'b', {}}}, {w("1"), {'c', {}}}};
  CHECK(code_of([&] { FFTree<char>::validate(fork, {{Word{}}, {w("0"), w("1")}}); }) == Errc::NoRoot);
  Nodes marked{{Word{}, {'a', 0}}};
  CHECK(code_of([&] { FFTree<char>::validate(marked, {{Word{}}}); }) == Errc::TruncatedNode);
  CHECK_NOTHROW(FFTree<char>::validate(marked, {{Word{}}}, true));
}

TEST_CASE("roots, fragment roots, heights and immediate successors") {
  auto t = pi2();
  CHECK(t.roots() == std::set<Word>{Word{}, w("0"), w("0.0")});
  CHECK(t.frag_root(w("0.0")) == w("0.0"));
  CHECK(t.fheight(w("0.0")) == 2);
  CHECK_FALSE(t.imm_succ(Word{}, w("0.0")));
  CHECK(t.imm_succ(Word{}, w("0")));
  CHECK_THROWS_AS(t.fheight(w("1")), Error);
}

TEST_CASE("tree fragments and subtrees") {
  auto t = pi2();
  CHECK(t.tree_fragment(w("0")) == TreeNW<char>::validate({{Word{}, 'b'}, {w("0"), std::nullopt}}));
  CHECK(t.tree_fragment(w("0.0")) == TreeNW<char>::single('c'));
  auto whole = FFTree<char>::validate(chain3(), {{Word{}, w("0"), w("0.0")}});
  CHECK(whole.tree_fragment(Word{}) ==
        TreeNW<char>::validate({{Word{}, 'a'}, {w("0"), 'b'}, {w("0.0"), 'c'}}));

  auto sub = t.subtree(w("0"));
  CHECK(sub == FFTree<char>::validate({{Word{}, {'b', {}}}, {w("0"), {'c', {}}}}, {{Word{}}, {w("0")}}));
  CHECK(t.subtree(Word{}) == t);
  CHECK(t.subtree(w("0.0")).size() == 1);
  CHECK(code_of([&] { whole.subtree(w("0")); }) == Errc::NotARoot);
}

TEST_CASE("destruct and construct") {
  auto whole = FFTree<char>::validate(chain3(), {{Word{}, w("0"), w("0.0")}});
  auto [top, below] = whole.destruct();
  CHECK(top.size() == 3);
  CHECK(below.empty());

  auto t = pi2();
  auto [t_top, t_below] = t.destruct();
  CHECK(t_top == TreeNW<char>::validate({{Word{}, 'a'}, {w("0"), std::nullopt}}));
  CHECK(t_below.size() == 1);
  CHECK(t_below.at(w("0")) == t.subtree(w("0")));
  CHECK(FFTree<char>::construct(t_top, t_below) == t);

  auto single = FFTree<char>::construct(TreeNW<char>::single('a'), {});
  CHECK(single.size() == 1);

  auto glued = FFTree<char>::construct(TreeNW<char>::validate({{Word{}, 'a'}, {w("0"), std::nullopt}}),
                                       {{w("0"), FFTree<char>::construct(TreeNW<char>::single('b'), {})}});
  CHECK(glued.roots() == std::set<Word>{Word{}, w("0")});
  CHECK_THROWS_AS(FFTree<char>::construct(t_top, {}), Error);
}

TEST_CASE("root-path of a root") {
  auto t = pi2();
  CHECK(t.root_path_of(Word{}).empty());
  CHECK(t.root_path_of(w("0.0")) == RootPath{w("0"), w("0")});
}

TEST_CASE("destruct and construct are inverse on random trees") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    auto t = testgen::random_fftree(rng, 30);
    auto [top, below] = t.destruct();
    auto back = FFTree<char>::construct(top, below);
    CHECK(back == t);
    auto [top2, below2] = back.destruct();
    CHECK(top2 == top);
    CHECK(below2 == below);
    for (const auto& r : t.roots()) CHECK(word_of(t.root_path_of(r)) == r);
  }
}

TEST_CASE("trees with the same fragments at every root are equal") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto a = testgen::random_fftree(rng, 12);
    auto b = testgen::random_fftree(rng, 12);
    bool same_fragments = a.roots() == b.roots();
    if (same_fragments)
      for (const auto& r : a.roots()) same_fragments = same_fragments && a.tree_fragment(r) == b.tree_fragment(r);
    CHECK(same_fragments == (a == b));
  }
}

TEST_CASE("roots of a subtree") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    auto t = testgen::random_fftree(rng, 25);
    for (const auto& root : t.roots()) {
      auto sub = t.subtree(root);
      for (const auto& [v, n] : sub.nodes()) CHECK(sub.roots().contains(v) == t.roots().contains(root + v));
      for (const auto& v : sub.roots()) {
        CHECK(sub.tree_fragment(v) == t.tree_fragment(root + v));
        CHECK(sub.subtree(v) == t.subtree(root + v));
      }
    }
  }
}

TEST_CASE("a root has at most one immediate predecessor") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto t = testgen::random_fftree(rng, 25);
    for (const auto& u : t.roots()) {
      int preds = 0;
      for (const auto& v : t.roots()) preds += t.imm_succ(v, u) ? 1 : 0;
      CHECK(preds == (u.empty() ? 0 : 1));
    }
  }
}
