#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shellab/families.hpp"
#include "shellab/fixtures.hpp"
#include "shellab/labeling.hpp"
#include "test_util.hpp"

using namespace shellab;

namespace {

Chain chain_of(const Poset& p, std::initializer_list<const char*> names) {
  Chain c;
  for (const char* n : names) c.push_back(p.index_of(n));
  return c;
}

}  // namespace

TEST_CASE("label sequences") {
  auto b3 = boolean_lattice(3);
  Chain m = chain_of(b3.poset, {"-", "1", "12", "123"});
  CHECK(label_sequence(b3.poset, *b3.labeling, m) == LabelSeq{1, 2, 3});

  // Chain-edge labels follow the chain's own prefix.
  auto f5 = fixture("fig5_cl").bundle;
  Chain red = chain_of(f5.poset, {"0", "z1", "x1", "1"});
  CHECK(label_sequence(f5.poset, *f5.labeling, red) == LabelSeq{3, 2, 1});
  Chain blue = chain_of(f5.poset, {"0", "z2", "x1", "1"});
  CHECK(label_sequence(f5.poset, *f5.labeling, blue) == LabelSeq{1, 2, 3});

  Chain trivial{b3.poset.bottom()};
  CHECK(label_sequence(b3.poset, *b3.labeling, trivial).empty());
}

TEST_CASE("descents") {
  LabelPoset ints = LabelPoset::integers();
  CHECK(descent_positions(ints, {1, 2, 3}).empty());
  CHECK(descent_positions(ints, {3, 2, 1}) == std::vector<int>{1, 2});

  // Non-total label poset: (1,5,1,4) has its only descent at position 2,
  // because 1 <= 4 and 1 <= 5 but 5 and 1 are incomparable-or-worse.
  auto f6 = fixture("fig6_lambda").bundle;
  Chain m2 = chain_of(f6.poset, {"0", "a", "c", "d", "1"});
  auto descents = descent_elements(f6.poset, *f6.labeling, m2);
  CHECK(descents == std::vector<int>{f6.poset.index_of("c")});
}

TEST_CASE("lexicographic comparison") {
  LabelPoset ints = LabelPoset::integers();
  CHECK(lex_compare({1, 2, 3}, {1, 3, 2}, ints) == Lex::Less);
  CHECK(lex_compare({1, 2, 3}, {1, 2, 3}, ints) == Lex::Equal);
  CHECK(lex_compare({1, 2}, {1, 2, 3}, ints) == Lex::Less);  // proper prefix

  auto f6 = fixture("fig6_lambda").bundle;
  const LabelPoset& lp = f6.labeling->lambda();
  Label l5 = lp.parse("5"), l3 = lp.parse("3"), l1 = lp.parse("1");
  CHECK(lex_compare({l5, l1}, {l3, l1}, lp) == Lex::Incomparable);
}

TEST_CASE("EL and CL validation") {
  auto b3 = boolean_lattice(3);
  CHECK(validate_labeling(b3.poset, *b3.labeling, LabelKind::EL).valid);

  auto f5 = fixture("fig5_cl").bundle;
  CHECK(validate_labeling(f5.poset, *f5.labeling, LabelKind::CL).valid);

  // Two ascending chains in one interval is invalid.
  Poset b2 = tu::diamond(2);
  auto bad = tu::label_edges(b2, {{{"bot", "m0"}, 1}, {{"m0", "top"}, 1},
                                  {{"bot", "m1"}, 1}, {{"m1", "top"}, 1}});
  auto rep = validate_labeling(b2, *bad, LabelKind::EL);
  CHECK(!rep.valid);
  CHECK(!rep.failures.empty());
  CHECK(rep.failures.front().ascending_count == 2);

  for (auto& name : fixture_names()) {
    auto f = fixture(name).bundle;
    CHECK(validate_labeling(f.poset, *f.labeling, f.kind).valid);
  }
}

TEST_CASE("restriction of labelings") {
  auto b3 = boolean_lattice(3);
  std::vector<int> back;
  Poset iv = b3.poset.closed_interval(b3.poset.index_of("1"), b3.poset.index_of("123"), &back);
  auto sub = restrict_labeling(b3.poset, b3.labeling, iv, back);
  CHECK(validate_labeling(iv, *sub, LabelKind::EL).valid);
  // Two-step interval keeps labels {2,3}.
  auto chains = iv.saturated_chains(iv.bottom(), iv.top());
  std::set<Label> used;
  for (auto& c : chains)
    for (Label l : label_sequence(iv, *sub, c)) used.insert(l);
  CHECK(used == std::set<Label>{2, 3});

  // Restricting to the whole poset changes nothing.
  std::vector<int> back_full;
  Poset full = b3.poset.closed_interval(b3.poset.bottom(), b3.poset.top(), &back_full);
  auto same = restrict_labeling(b3.poset, b3.labeling, full, back_full);
  for (auto& [x, y] : full.cover_pairs()) {
    Chain root{x};
    CHECK(same->label(full, root, x, y) ==
          b3.labeling->label(b3.poset, {}, back_full[x], back_full[y]));
  }

  // Rooted restriction of the chain-edge fixture: labels on [z1,1] depend on
  // the root through z1.
  auto f5 = fixture("fig5_cl").bundle;
  std::vector<int> b5;
  Poset iv5 = f5.poset.closed_interval(f5.poset.index_of("z1"), f5.poset.index_of("1"), &b5);
  Chain root{f5.poset.index_of("0"), f5.poset.index_of("z1")};
  auto sub5 = restrict_labeling(f5.poset, f5.labeling, iv5, b5, root);
  CHECK(validate_labeling(iv5, *sub5, LabelKind::CL).valid);
  Chain via_x1 = chain_of(iv5, {"z1", "x1", "1"});
  CHECK(label_sequence(iv5, *sub5, via_x1) == LabelSeq{2, 1});

  // Restrict-then-validate never fails across the fixtures.
  for (auto& name : fixture_names()) {
    auto f = fixture(name).bundle;
    for (int x = 0; x < f.poset.size(); ++x) {
      for (int y = 0; y < f.poset.size(); ++y) {
        if (!f.poset.lt(x, y)) continue;
        for (auto& r : f.poset.saturated_chains(f.poset.bottom(), x)) {
          std::vector<int> bm;
          Poset sub_p = f.poset.closed_interval(x, y, &bm);
          auto sub_l = restrict_labeling(f.poset, f.labeling, sub_p, bm, r);
          CHECK(validate_labeling(sub_p, *sub_l, f.kind).valid);
        }
      }
    }
  }
}

TEST_CASE("permutation-label detection") {
  auto b4 = boolean_lattice(4);
  CHECK(is_sn_el(b4.poset, *b4.labeling).is_sn);

  // Max-min labels of the partition lattice live in {2..n}; the check works
  // up to order isomorphism of the label set.
  auto pl = partition_lattice(4);
  auto mm = max_min_labeling(pl);
  auto rep = is_sn_el(pl.poset, *mm);
  CHECK(rep.is_sn);
  CHECK(rep.rank == 3);
  CHECK(rep.sorted_labels == std::vector<Label>{2, 3, 4});

  auto f3 = fixture("fig3").bundle;
  CHECK(!is_sn_el(f3.poset, *f3.labeling).is_sn);
}

TEST_CASE("polygon strong condition") {
  // Three chains through a rank-two poset.
  Poset p = tu::diamond(3);
  auto el = tu::label_edges(p, {{{"bot", "m0"}, 1}, {{"m0", "top"}, 2},
                                {{"bot", "m1"}, 2}, {{"m1", "top"}, 1},
                                {{"bot", "m2"}, 3}, {{"m2", "top"}, 1}});
  REQUIRE(validate_labeling(p, *el, LabelKind::EL).valid);
  CHECK(is_polygon_strong(p, *el).strong);

  auto prop = fixture("prop_inv_vs_strong").bundle;
  auto rep = is_polygon_strong(prop.poset, *prop.labeling);
  CHECK(!rep.strong);
  REQUIRE(rep.counterexample.has_value());
  CHECK((*rep.counterexample)[0] == prop.poset.index_of("a"));
  CHECK((*rep.counterexample)[1] == prop.poset.index_of("c"));
  CHECK((*rep.counterexample)[2] == prop.poset.index_of("d"));

  // Rank one: no descents at all.
  Poset two = tu::chain_poset(2);
  auto triv = tu::label_edges(two, {{{"c0", "c1"}, 1}});
  CHECK(is_polygon_strong(two, *triv).strong);

  // Invariant under order-isomorphic relabeling.
  auto b3 = boolean_lattice(3);
  auto doubled = std::make_shared<CallbackLabeling>(
      LabelPoset::integers(),
      [lab = b3.labeling](const Poset& q, ChainView, int x, int y) {
        return 2 * lab->label(q, {}, x, y);
      },
      /*root_free=*/true);
  CHECK(is_polygon_strong(b3.poset, *b3.labeling).strong ==
        is_polygon_strong(b3.poset, *doubled).strong);
}

TEST_CASE("every validated interval has a unique lex-first ascending chain") {
  for (auto& name : fixture_names()) {
    auto f = fixture(name).bundle;
    auto rep = validate_labeling(f.poset, *f.labeling, f.kind);
    CHECK(rep.valid);
    CHECK(rep.intervals_checked > 0);
  }
  auto b4 = boolean_lattice(4);
  CHECK(validate_labeling(b4.poset, *b4.labeling, LabelKind::EL).valid);
}

TEST_CASE("descent set is empty exactly for ascending chains") {
  auto f7 = fixture("fig7").bundle;
  for (auto& m : f7.poset.maximal_chains()) {
    LabelSeq seq = label_sequence(f7.poset, *f7.labeling, m);
    CHECK(descent_positions(f7.labeling->lambda(), seq).empty() ==
          is_ascending(f7.labeling->lambda(), seq));
  }
}

TEST_CASE("missing labels are reported") {
  Poset two = tu::chain_poset(2);
  auto el = tu::label_edges(two, {});
  CHECK_THROWS_AS(label_sequence(two, *el, Chain{0, 1}), Error);
}
