#pragma once

#include <map>
#include <string>
#include <vector>

#include "shellab/labeling.hpp"
#include "shellab/poset.hpp"

namespace tu {

using namespace shellab;

inline Poset chain_poset(int n) {  // n elements
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(names[i], names[i + 1]);
  return Poset::from_covers(std::move(names), covers, n > 0);
}

inline Poset antichain(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return Poset::from_covers(std::move(names), {}, /*require_bounded=*/false);
}

// Bounded poset with k incomparable middle elements.
inline Poset diamond(int k) {
  std::vector<std::string> names{"bot"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < k; ++i) names.push_back("m" + std::to_string(i));
  names.push_back("top");
  for (int i = 0; i < k; ++i) {
    covers.emplace_back("bot", "m" + std::to_string(i));
    covers.emplace_back("m" + std::to_string(i), "top");
  }
  return Poset::from_covers(std::move(names), covers);
}

inline std::shared_ptr<EdgeLabeling> label_edges(
    const Poset& p, const std::vector<std::pair<std::pair<std::string, std::string>, int>>& labels) {
  std::map<std::pair<int, int>, Label> edges;
  for (auto& [edge, l] : labels)
    edges[{p.index_of(edge.first), p.index_of(edge.second)}] = l;
  return std::make_shared<EdgeLabeling>(LabelPoset::integers(), std::move(edges));
}

}  // namespace tu
