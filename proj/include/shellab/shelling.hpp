#pragma once

#include <cstdint>

#include "shellab/descent_order.hpp"

namespace shellab {

// Order complex of a bounded poset: facets are the maximal chains, aligned
// index-for-index with the canonical maximal chain order. With drop_bounds
// the cone points (bottom and top) are removed from every facet.
struct OrderComplex {
  int vertex_count = 0;
  std::vector<Bitset> facets;
  std::vector<Chain> facet_chains;
};

OrderComplex order_complex(const Poset& p, bool drop_bounds);

// Each facet must meet the union of the earlier facet closures
// in a pure subcomplex of codimension one (non-pure shellings allowed).
bool is_shelling_codim1(const OrderComplex& cx, std::span<const int> order);

// R(F_j) = minimal new face of F_j = {x in F_j : F_j \ {x} seen earlier}.
std::vector<Bitset> restriction_map(const OrderComplex& cx, std::span<const int> order);

// R(m) = descent elements of m (intersected with the complex's vertex set).
std::vector<Bitset> descent_restriction(const Poset& p, const Labeling& lab,
                                        const OrderComplex& cx);

struct PartitionReport {
  bool partition_ok = false;    // the intervals [R(F_i), F_i] partition the faces
  bool containment_ok = false;  // R(F_i) inside F_j forces i <= j
};

// Reformulation of shelling-with-restriction-map as a face partition plus a
// containment condition.
PartitionReport partition_characterization(const OrderComplex& cx, std::span<const int> order,
                                           const std::vector<Bitset>& restriction);
bool verify_partition_characterization(const OrderComplex& cx, std::span<const int> order,
                                       const std::vector<Bitset>& restriction);

struct EquivalenceResult {
  bool lin_ext = false;
  bool shelling_with_descents = false;
  bool agree = false;
};

// Both sides of the main equivalence for one total order of the maximal
// chains (given as a permutation of facet indices).
EquivalenceResult shelling_equivalence_check(const Poset& p, const Labeling& lab,
                                             const MCDOrder& mcd, const OrderComplex& cx,
                                             std::span<const int> order);

// Chains whose every interior element is a descent.
std::vector<int> homology_facets(const Poset& p, const Labeling& lab, const MCDOrder& mcd);

// A total order of the facets refining the lexicographic order of label
// sequences; ties and incomparabilities broken by canonical chain index.
std::vector<int> lex_shelling_order(const Labeling& lab, const MCDOrder& mcd);

struct AuditReport {
  uint64_t orders_checked = 0;
  uint64_t mismatches = 0;
  uint64_t lin_ext_orders = 0;  // how many checked orders were linear extensions
  bool exhaustive = false;
};

// Runs shelling_equivalence_check over total orders: exhaustively when the
// chain count is at most `exhaustive_threshold`, otherwise over `samples`
// seeded shuffles plus every linear extension of the descent order when they
// number at most `lin_ext_cap`.
AuditReport equivalence_audit(const Poset& p, const Labeling& lab, const MCDOrder& mcd,
                              uint64_t seed, int exhaustive_threshold = 7,
                              uint64_t samples = 500, uint64_t lin_ext_cap = 10000);

}  // namespace shellab
