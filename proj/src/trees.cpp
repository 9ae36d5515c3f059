#include "shellab/trees.hpp"

#include <algorithm>
#include <map>

namespace shellab {

std::vector<int> Forest::leaf_set(int label) const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    if (is_leaf(v)) {
      out.push_back(v);
      return;
    }
    walk(children[v][0]);
    walk(children[v][1]);
  };
  walk(label);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string serialize(const Forest& f, int v) {
  if (f.is_leaf(v)) return std::to_string(v);
  return std::to_string(v) + "(" + serialize(f, f.children[v][0]) + "," +
         serialize(f, f.children[v][1]) + ")";
}

}  // namespace

std::string Forest::id() const {
  std::string s;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i) s += ";";
    s += serialize(*this, roots[i]);
  }
  return s;
}

std::vector<Forest> enumerate_forests(int n, int k) {
  if (n < 1 || n > 5 || k < 0 || k > n) fail(Errc::BadInput, "forests supported for 1 <= n <= 5");
  Forest base;
  base.n = n;
  base.k = 0;
  base.children.assign(n + 2, {0, 0});
  for (int v = 1; v <= n + 1; ++v) base.roots.push_back(v);
  std::vector<Forest> level{base};
  for (int step = 1; step <= k; ++step) {
    int label = n + 1 + step;
    std::vector<Forest> next;
    for (const Forest& f : level) {
      for (size_t a = 0; a < f.roots.size(); ++a) {
        for (size_t b = a + 1; b < f.roots.size(); ++b) {
          Forest g = f;
          g.k = step;
          g.children.push_back({f.roots[a], f.roots[b]});
          g.roots.erase(std::remove_if(g.roots.begin(), g.roots.end(),
                                       [&](int r) { return r == f.roots[a] || r == f.roots[b]; }),
                        g.roots.end());
          g.roots.push_back(label);
          std::sort(g.roots.begin(), g.roots.end());
          next.push_back(std::move(g));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Forest> enumerate_trees(int n) { return enumerate_forests(n, n); }

namespace {

std::string partition_id(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ".";
    for (int v : blocks[i]) s += std::to_string(v);
  }
  return s;
}

}  // namespace

Chain forest_to_chain(const Forest& f, const PartitionLattice& pl) {
  if (pl.ground != f.n + 1) fail(Errc::BadInput, "forest and lattice sizes disagree");
  Chain chain;
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= f.n + 1; ++v) blocks.push_back({v});
  auto push = [&]() {
    int idx = pl.poset.index_of(partition_id(blocks));
    if (idx < 0) fail(Errc::BadInput, "partition missing from the lattice");
    chain.push_back(idx);
  };
  push();
  for (int i = 1; i <= f.k; ++i) {
    int node = f.n + 1 + i;
    auto l1 = f.leaf_set(f.children[node][0]);
    auto l2 = f.leaf_set(f.children[node][1]);
    auto find_block = [&](const std::vector<int>& leaves) {
      for (size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b] == leaves) return b;
      fail(Errc::BadInput, "merge does not match current blocks");
    };
    size_t b1 = find_block(l1), b2 = find_block(l2);
    std::vector<int> merged = blocks[b1];
    merged.insert(merged.end(), blocks[b2].begin(), blocks[b2].end());
    std::sort(merged.begin(), merged.end());
    std::vector<std::vector<int>> nb;
    for (size_t b = 0; b < blocks.size(); ++b)
      if (b != b1 && b != b2) nb.push_back(blocks[b]);
    nb.push_back(merged);
    blocks = std::move(nb);
    push();
  }
  return chain;
}

Forest chain_to_forest(ChainView chain, const PartitionLattice& pl) {
  if (chain.empty() || chain.front() != pl.poset.bottom())
    fail(Errc::NotFromBottom, "chain must start at the all-singletons partition");
  int n = pl.ground - 1;
  Forest f;
  f.n = n;
  f.k = static_cast<int>(chain.size()) - 1;
  f.children.assign(n + 2 + f.k, {0, 0});
  std::map<std::vector<int>, int> root_of;  // block -> component root label
  for (int v = 1; v <= n + 1; ++v) root_of[{v}] = v;
  for (int i = 1; i <= f.k; ++i) {
    const auto& prev = pl.partitions[chain[i - 1]];
    const auto& cur = pl.partitions[chain[i]];
    // The new block of cur is the union of two blocks of prev.
    std::vector<int> merged;
    std::vector<std::vector<int>> parts;
    for (const auto& blk : cur) {
      if (std::find(prev.begin(), prev.end(), blk) == prev.end()) {
        merged = blk;
        for (const auto& sub : prev)
          if (std::includes(blk.begin(), blk.end(), sub.begin(), sub.end())) parts.push_back(sub);
      }
    }
    if (parts.size() != 2) fail(Errc::BadInput, "consecutive elements are not a block merge");
    int node = n + 1 + i;
    int r1 = root_of[parts[0]], r2 = root_of[parts[1]];
    f.children[node] = {std::min(r1, r2), std::max(r1, r2)};
    root_of.erase(parts[0]);
    root_of.erase(parts[1]);
    root_of[merged] = node;
  }
  for (auto& [blk, r] : root_of) f.roots.push_back(r);
  std::sort(f.roots.begin(), f.roots.end());
  return f;
}

int tree_label(const Forest& f, int i) {
  int node = f.n + 1 + i;
  auto l1 = f.leaf_set(f.children[node][0]);
  auto l2 = f.leaf_set(f.children[node][1]);
  return std::max(l1.front(), l2.front());
}

namespace {

void canonicalize(Forest& f) {
  for (auto& c : f.children)
    if (c[0] > c[1]) std::swap(c[0], c[1]);
  std::sort(f.roots.begin(), f.roots.end());
}

// Swap the labels u and u+1 (both internal). Valid only when u is not a
// child of u+1; returns the relabeled forest.
std::optional<Forest> label_swap(const Forest& f, int u) {
  int v = u + 1;
  if (f.children[v][0] == u || f.children[v][1] == u) return std::nullopt;
  Forest g = f;
  std::swap(g.children[u], g.children[v]);
  for (auto& c : g.children)
    for (int& x : c) {
      if (x == u)
        x = v;
      else if (x == v)
        x = u;
    }
  for (int& r : g.roots) {
    if (r == u)
      r = v;
    else if (r == v)
      r = u;
  }
  canonicalize(g);
  return g;
}

// When u is a child of v = u+1: exchange v's other child subtree with either
// child subtree of u.
std::vector<Forest> subtree_swaps(const Forest& f, int u) {
  int v = u + 1;
  std::vector<Forest> out;
  if (f.children[v][0] != u && f.children[v][1] != u) return out;
  int w = f.children[v][0] == u ? f.children[v][1] : f.children[v][0];
  for (int pick = 0; pick < 2; ++pick) {
    int a = f.children[u][pick];
    Forest g = f;
    g.children[v] = {u, a};
    g.children[u] = {w, pick == 0 ? f.children[u][1] : f.children[u][0]};
    canonicalize(g);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Forest> tree_polygon_neighbors(const Forest& f, int i) {
  std::vector<Forest> out;
  int u = f.n + 1 + i;
  if (auto g = label_swap(f, u)) out.push_back(*g);
  for (auto& g : subtree_swaps(f, u)) out.push_back(g);
  return out;
}

TreePoset tree_poset(int n) {
  TreePoset tp;
  tp.trees = enumerate_trees(n);
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (auto& t : tp.trees) {
    index[t.id()] = static_cast<int>(names.size());
    names.push_back(t.id());
  }
  for (auto& t : tp.trees) {
    int ti = index.at(t.id());
    for (int i = 1; i < n; ++i) {
      if (tree_label(t, i) >= tree_label(t, i + 1)) continue;
      for (auto& g : tree_polygon_neighbors(t, i)) tp.moves.emplace_back(ti, index.at(g.id()));
    }
  }
  auto covers = transitive_reduction(static_cast<int>(names.size()), tp.moves);
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [a, b] : covers) cov.emplace_back(names[a], names[b]);
  tp.poset = Poset::from_covers(names, cov, /*require_bounded=*/false);
  return tp;
}

}  // namespace shellab
