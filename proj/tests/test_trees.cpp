#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "shellab/descent_order.hpp"
#include "shellab/trees.hpp"
#include "test_util.hpp"

using namespace shellab;

namespace {

// The worked example: 7(3,6(2,5(1,4))) with leaves 1..4.
Forest example_tree() {
  Forest f;
  f.n = 3;
  f.k = 3;
  f.children.assign(8, {0, 0});
  f.children[5] = {1, 4};
  f.children[6] = {2, 5};
  f.children[7] = {3, 6};
  f.roots = {7};
  return f;
}

}  // namespace

TEST_CASE("enumeration of decreasing forests") {
  CHECK(enumerate_trees(3).size() == 18);
  CHECK(enumerate_forests(3, 0).size() == 1);
  auto f0 = enumerate_forests(3, 0)[0];
  CHECK(f0.roots == std::vector<int>{1, 2, 3, 4});

  // FPT(n,n) is PT(n); sizes match the product of pair counts.
  for (int n = 2; n <= 4; ++n) {
    auto trees = enumerate_trees(n);
    uint64_t expect = 1;
    for (int i = 1; i <= n; ++i) expect *= static_cast<uint64_t>(n + 2 - i) * (n + 1 - i) / 2;
    CHECK(trees.size() == expect);
    std::set<std::string> ids;
    for (auto& t : trees) ids.insert(t.id());
    CHECK(ids.size() == trees.size());  // canonical forms are distinct
  }

  // Tree counts match maximal chain counts of the partition lattice.
  for (int n = 2; n <= 4; ++n)
    CHECK(enumerate_trees(n).size() == partition_lattice(n + 1).poset.maximal_chains().size());
}

TEST_CASE("trees to chains and back") {
  auto pl = partition_lattice(4);
  Forest t = example_tree();
  Chain c = forest_to_chain(t, pl);
  std::vector<std::string> names;
  for (int v : c) names.push_back(pl.poset.name(v));
  CHECK(names == std::vector<std::string>{"1.2.3.4", "14.2.3", "124.3", "1234"});

  Forest back = chain_to_forest(c, pl);
  CHECK(back == t);

  auto f0 = enumerate_forests(3, 0)[0];
  CHECK(forest_to_chain(f0, pl) == Chain{pl.poset.bottom()});

  // Round trip across all of PT(3); chains hit every maximal chain once.
  std::set<Chain> seen;
  for (auto& tree : enumerate_trees(3)) {
    Chain ch = forest_to_chain(tree, pl);
    CHECK(chain_to_forest(ch, pl) == tree);
    seen.insert(ch);
  }
  CHECK(seen.size() == 18);

  Chain not_bottom{pl.poset.top()};
  CHECK_THROWS_AS(chain_to_forest(not_bottom, pl), Error);

  // Partial chains correspond to forests with fewer merges.
  for (auto& forest : enumerate_forests(3, 2)) {
    Chain ch = forest_to_chain(forest, pl);
    CHECK(ch.size() == 3);
    CHECK(chain_to_forest(ch, pl) == forest);
  }
}

TEST_CASE("tree labels agree with the max-min labels of the chain") {
  auto pl = partition_lattice(4);
  auto mm = max_min_labeling(pl);
  Forest t = example_tree();
  CHECK(tree_label(t, 1) == 4);  // merge {1},{4}
  CHECK(tree_label(t, 2) == 2);  // merge {2},{14}
  CHECK(tree_label(t, 3) == 3);  // merge {3},{124}

  for (auto& tree : enumerate_trees(3)) {
    Chain c = forest_to_chain(tree, pl);
    LabelSeq seq = label_sequence(pl.poset, *mm, c);
    for (int i = 1; i <= 3; ++i) CHECK(tree_label(tree, i) == seq[i - 1]);
  }
}

TEST_CASE("tree poset is the descent order of the partition lattice") {
  TreePoset tp = tree_poset(3);
  CHECK(tp.poset.size() == 18);

  auto pl = partition_lattice(4);
  auto mm = max_min_labeling(pl);
  MCDOrder mcd = build_mcd(pl.poset, *mm);
  Poset view = mcd.to_poset();

  // c maps trees to chains; verify it as an isomorphism of the two orders.
  std::vector<int> map(tp.poset.size());
  for (int i = 0; i < tp.poset.size(); ++i) {
    int idx = mcd.index_of(forest_to_chain(tp.trees[i], pl));
    REQUIRE(idx >= 0);
    map[i] = idx;
  }
  CHECK(verify_map_isomorphism(tp.poset, view, map));

  // Tree moves are exactly the polygon moves, and both are cover relations.
  std::set<std::pair<int, int>> tree_moves;
  for (auto& [a, b] : tp.moves) tree_moves.insert({map[a], map[b]});
  std::set<std::pair<int, int>> polygon_moves;
  for (auto& mv : mcd.moves) polygon_moves.insert({mv.src, mv.dst});
  CHECK(tree_moves == polygon_moves);
  std::set<std::pair<int, int>> covers(mcd.covers.begin(), mcd.covers.end());
  CHECK(polygon_moves == covers);
}

TEST_CASE("polygons correspond to label swaps and subtree swaps") {
  // Chains differ by a polygon at rank i exactly when the trees are related
  // by the position-i label swap or subtree swap, label condition aside.
  auto pl = partition_lattice(4);
  auto trees = enumerate_trees(3);
  std::map<std::string, Chain> chain_of;
  for (auto& t : trees) chain_of[t.id()] = forest_to_chain(t, pl);

  std::set<std::pair<std::string, std::string>> neighbors;
  for (auto& t : trees)
    for (int i = 1; i < 3; ++i)
      for (auto& s : tree_polygon_neighbors(t, i)) neighbors.insert({t.id(), s.id()});
  // The operations are involutions, so the relation is symmetric.
  for (auto& [a, b] : neighbors) CHECK(neighbors.count({b, a}) == 1);

  for (auto& t : trees) {
    for (auto& s : trees) {
      if (t.id() == s.id()) continue;
      auto w = differ_by_polygon(chain_of[t.id()], chain_of[s.id()]);
      CHECK(w.has_value() == (neighbors.count({t.id(), s.id()}) == 1));
    }
  }
}

TEST_CASE("predecessors and lifting in the partition lattice") {
  auto pl = partition_lattice(4);
  auto mm = max_min_labeling(pl);

  // m1324 has exactly one descent; its predecessor is m1234.
  Chain m1324{pl.poset.bottom(), pl.poset.index_of("13.2.4"), pl.poset.index_of("123.4"),
              pl.poset.top()};
  auto descents = descent_elements(pl.poset, *mm, m1324);
  REQUIRE(descents.size() == 1);
  Chain pred = polygon_predecessor(pl.poset, *mm, m1324, descents[0]);
  Chain m1234{pl.poset.bottom(), pl.poset.index_of("12.3.4"), pl.poset.index_of("123.4"),
              pl.poset.top()};
  CHECK(pred == m1234);

  // Relations in the descent order of [bottom, 123|4] lift to the full order.
  CHECK(verify_lifting(pl.poset, mm, pl.poset.bottom(), pl.poset.index_of("123.4")));
}

TEST_CASE("homology facets of the partition lattice") {
  auto pl = partition_lattice(4);
  auto mm = max_min_labeling(pl);
  MCDOrder mcd = build_mcd(pl.poset, *mm);
  // Exactly the chains with strictly descending labels (4,3,2); they are the
  // maximal elements of the descent order and sit at rank 3 = C(3,2).
  std::vector<int> descending;
  for (size_t i = 0; i < mcd.chains.size(); ++i)
    if (is_descending(mm->lambda(), mcd.labels[i])) descending.push_back(static_cast<int>(i));
  CHECK(descending.size() == 6);
  Poset view = mcd.to_poset();
  auto maxima = view.maximal_elements();
  CHECK(std::set<int>(descending.begin(), descending.end()) ==
        std::set<int>(maxima.begin(), maxima.end()));
  auto rep = mcd_rank_report(pl.poset, *mm, mcd);
  CHECK(rep.applicable);
  CHECK(rep.homology_match);
  CHECK(rep.full_rank == 3);
}

TEST_CASE("intervals of the descent order embed by label sequences") {
  // For the max-min labeling, every closed interval maps onto a weak order
  // interval by taking label sequences (standardized to 1..3).
  auto pl = partition_lattice(4);
  auto mm = max_min_labeling(pl);
  MCDOrder mcd = build_mcd(pl.poset, *mm);
  Poset wk = weak_order(3);
  auto word = [&](int i) {
    std::string s;
    for (Label l : mcd.labels[i]) s += std::to_string(l - 1);
    return s;
  };
  for (size_t a = 0; a < mcd.chains.size(); ++a) {
    for (size_t b = 0; b < mcd.chains.size(); ++b) {
      if (!mcd.leq(static_cast<int>(a), static_cast<int>(b))) continue;
      std::vector<int> members;
      for (size_t c = 0; c < mcd.chains.size(); ++c)
        if (mcd.leq(static_cast<int>(a), static_cast<int>(c)) &&
            mcd.leq(static_cast<int>(c), static_cast<int>(b)))
          members.push_back(static_cast<int>(c));
      // Injective on the interval, and lands exactly on the weak interval.
      std::set<std::string> image;
      for (int c : members) image.insert(word(c));
      CHECK(image.size() == members.size());
      std::set<std::string> target;
      int wa = wk.index_of(word(static_cast<int>(a))), wb = wk.index_of(word(static_cast<int>(b)));
      REQUIRE(wa >= 0);
      REQUIRE(wb >= 0);
      for (int u = 0; u < wk.size(); ++u)
        if (wk.leq(wa, u) && wk.leq(u, wb)) target.insert(wk.name(u));
      CHECK(image == target);
      // Order preserved in both directions.
      for (int c : members)
        for (int d : members)
          CHECK(mcd.leq(c, d) == wk.leq(wk.index_of(word(c)), wk.index_of(word(d))));
    }
  }
}

TEST_CASE("intervals of the tree poset embed in the weak order") {
  TreePoset tp = tree_poset(3);
  Poset wk = weak_order(3);
  // Collect all weak order intervals once.
  std::vector<Poset> weak_intervals;
  for (int a = 0; a < wk.size(); ++a)
    for (int b = 0; b < wk.size(); ++b)
      if (wk.leq(a, b)) weak_intervals.push_back(wk.closed_interval(a, b));
  for (int a = 0; a < tp.poset.size(); ++a) {
    for (int b = 0; b < tp.poset.size(); ++b) {
      if (!tp.poset.leq(a, b)) continue;
      Poset iv = tp.poset.closed_interval(a, b);
      bool matched = false;
      for (auto& wiv : weak_intervals)
        if (find_isomorphism(iv, wiv).has_value()) {
          matched = true;
          break;
        }
      CHECK(matched);
    }
  }
}
