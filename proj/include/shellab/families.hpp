#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "shellab/labeling.hpp"
#include "shellab/poset.hpp"

namespace shellab {

// Permutations are one-line words on [n], values 1-based.
using Perm = std::vector<int>;

std::vector<Perm> all_permutations(int n);            // lexicographic order
std::string perm_string(const Perm&);
std::vector<std::pair<int, int>> perm_inversions(const Perm&);  // value pairs (a,b), a<b, out of order
int perm_length(const Perm&);
Perm perm_inverse(const Perm&);
Perm perm_compose(const Perm& w, const Perm& v);  // (w∘v)(i) = w(v(i))
bool left_weak_leq(const Perm& u, const Perm& w);
bool right_weak_leq(const Perm& u, const Perm& w);

struct FamilyInstance {
  Poset poset;
  std::shared_ptr<Labeling> labeling;
};

// Subsets of [n] by inclusion, cover B < B+{i} labeled i.
FamilyInstance boolean_lattice(int n);

// Right weak order on S_n: covers transpose an ascent of the one-line word.
Poset weak_order(int n);

struct PartitionLattice {
  Poset poset;
  // blocks sorted by minimum, each block ascending; aligned with poset indices
  std::vector<std::vector<std::vector<int>>> partitions;
  int ground = 0;
};

// Set partitions of [n] ordered by refinement.
PartitionLattice partition_lattice(int n);

// Label a merge of blocks B1, B2 by max(min B1, min B2).
std::shared_ptr<Labeling> max_min_labeling(const PartitionLattice& pl);

// Minimal labeling of a bounded lattice: label of x < y is the position in
// `atom_order` of the least new atom below y. atom_order lists atom indices.
std::shared_ptr<Labeling> minimal_labeling(const Poset& lattice, const std::vector<int>& atom_order);

// Order ideals of q under inclusion, cover I < I+{x} labeled e-position of x.
// `ext` is a linear extension of q given as element indices.
FamilyInstance distributive_lattice(const Poset& q, const std::vector<int>& ext);

// The permutations occurring as label sequences of maximal ideal chains.
std::vector<Perm> lin_labels(const Poset& j, const Labeling& lab);

struct YoungShape {
  std::vector<int> outer;
  std::vector<int> inner;  // may be empty
  int boxes() const;
  bool has_box(int r, int c) const;  // 0-based
  void check() const;
};

struct StandardTableau {
  YoungShape shape;
  std::vector<std::vector<int>> rows;  // value per box; inner boxes hold 0
  int at(int r, int c) const { return rows[r][c]; }
  std::pair<int, int> box_of(int value) const;
  std::string id() const;  // rows joined by '/', values by ','
};

std::vector<StandardTableau> standard_tableaux(const YoungShape& shape);
StandardTableau row_tableau(const YoungShape& shape);
Perm row_word(const StandardTableau& t);

// The interval of Young's lattice below `outer` (above `inner`), realized as
// order ideals of the box poset, with the labeling induced by T.
FamilyInstance young_interval(const YoungShape& shape, const StandardTableau& t);

// Closure of the adjacent tableau swaps Q -> (i,i+1)Q allowed by T.
Poset tableau_swap_poset(const YoungShape& shape, const StandardTableau& t,
                         std::vector<std::pair<std::string, std::string>>* moves = nullptr);

// Closure of the swaps moving i down a row past i+1.
Poset left_order(const YoungShape& shape);

// {w : l(wv) = l(w) + l(v) for all v in V} under restricted left weak order.
Poset generalized_quotient(int n, const std::vector<Perm>& v);

// Left weak order restricted to an arbitrary set of permutations.
Poset restricted_left_weak_order(int n, const std::vector<Perm>& set);

}  // namespace shellab
