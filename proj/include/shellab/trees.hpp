#pragma once

#include "shellab/families.hpp"

namespace shellab {

// Rooted, unordered, decreasing, full binary forest with leaves 1..n+1 and
// internal vertices n+2..n+1+k. Children are kept smaller-root-first; that
// canonical form is what equality and identifiers use.
struct Forest {
  int n = 0, k = 0;
  std::vector<std::array<int, 2>> children;  // by label; {0,0} for leaves
  std::vector<int> roots;                    // sorted root labels

  bool is_leaf(int label) const { return children[label][0] == 0; }
  std::vector<int> leaf_set(int label) const;  // leaves of the subtree at `label`
  std::string id() const;
  bool operator==(const Forest&) const = default;
};

// All members of FPT(n,k); FPT(n,n) is PT(n). Deterministic order.
std::vector<Forest> enumerate_forests(int n, int k);
std::vector<Forest> enumerate_trees(int n);

// Saturated chain of the partition lattice on [n+1] from the bottom: rank i
// merges the leaf sets of the two subtrees under node n+1+i.
Chain forest_to_chain(const Forest& f, const PartitionLattice& pl);
Forest chain_to_forest(ChainView chain, const PartitionLattice& pl);

// max of the two subtree leaf-minima under node n+1+i (1 <= i <= k).
int tree_label(const Forest& f, int i);

struct TreePoset {
  Poset poset;                 // elements are canonical tree ids, PT(n) order
  std::vector<Forest> trees;   // aligned with poset indices
  std::vector<std::pair<int, int>> moves;
};

// Order generated by label swaps and subtree swaps that raise the max-min
// label at position i.
TreePoset tree_poset(int n);

// All results of the label-swap or subtree-swap operation at position i,
// with no condition on labels: exactly the trees whose chains differ from
// f's by a polygon at rank i.
std::vector<Forest> tree_polygon_neighbors(const Forest& f, int i);

}  // namespace shellab
