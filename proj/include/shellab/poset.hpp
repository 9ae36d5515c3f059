#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shellab/bitset.hpp"
#include "shellab/error.hpp"

namespace shellab {

// A chain is a sequence of element indices, bottom first. Saturated chains
// step through cover relations only.
using Chain = std::vector<int>;
using ChainView = std::span<const int>;

// Finite poset stored by its Hasse diagram with cached reachability.
// Elements are opaque string identifiers; the position in the element list is
// the canonical total index used by every "deterministic order" guarantee.
class Poset {
 public:
  Poset() = default;

  // Validates that the cover digraph is acyclic, that no cover pair is
  // implied by the others, and (when required) that there is a unique bottom
  // and top.
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers,
                           bool require_bounded = true);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(std::string_view name) const;

  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  const std::vector<int>& up(int i) const { return up_[i]; }
  const std::vector<int>& down(int i) const { return down_[i]; }

  bool leq(int a, int b) const { return reach_[a].test(b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool is_cover(int a, int b) const;

  bool bounded() const { return bottom_ >= 0 && top_ >= 0; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int height() const;  // length (edge count) of the longest chain

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::vector<int> atoms() const;

  // Induced subposet on {z : x <= z <= y}. Covers are inherited. back_map, if
  // given, receives the original index of each interval element.
  Poset closed_interval(int x, int y, std::vector<int>* back_map = nullptr) const;

  // All saturated chains from bottom to top, in index-lexicographic order.
  std::vector<Chain> maximal_chains() const;
  // All saturated chains from `from` to `to`, in index-lexicographic order.
  std::vector<Chain> saturated_chains(int from, int to) const;

  // The unique rank function (rk = 0 on minimal elements, +1 across covers)
  // when one exists.
  std::optional<std::vector<int>> rank_function() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<Bitset> reach_;  // reach_[i].test(j)  <=>  i <= j
  int bottom_ = -1, top_ = -1;
};

// Unique minimal generating set of the transitive closure of an acyclic
// relation on {0..n-1}.
std::vector<std::pair<int, int>> transitive_reduction(int n,
                                                      const std::vector<std::pair<int, int>>& relation);

// Cover-preserving bijection with cover-preserving inverse, if any. The
// result maps P-indices to Q-indices and is deterministic for fixed inputs.
std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q);

// True iff `map` (P-index -> Q-index) is a bijection preserving order in both
// directions.
bool verify_map_isomorphism(const Poset& p, const Poset& q, std::span<const int> map);

// Linear extensions (topological sorts). The callback returns false to stop
// early; for_each returns false iff it was stopped.
bool for_each_linear_extension(const Poset& p, const std::function<bool(ChainView)>& fn);
uint64_t count_linear_extensions(const Poset& p, uint64_t cap = UINT64_MAX);
std::vector<int> random_linear_extension(const Poset& p, std::mt19937_64& rng);

}  // namespace shellab
