#include "shellab/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace shellab {

int Poset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

bool Poset::is_cover(int a, int b) const {
  return std::find(up_[a].begin(), up_[a].end(), b) != up_[a].end();
}

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers,
                         bool require_bounded) {
  Poset p;
  p.names_ = std::move(elements);
  for (int i = 0; i < p.size(); ++i) {
    if (!p.index_.emplace(p.names_[i], i).second)
      fail(Errc::BadInput, "duplicate element '" + p.names_[i] + "'");
  }
  p.up_.assign(p.size(), {});
  p.down_.assign(p.size(), {});
  for (const auto& [a, b] : covers) {
    int x = p.index_of(a), y = p.index_of(b);
    if (x < 0) fail(Errc::UnknownElement, "unknown element '" + a + "'");
    if (y < 0) fail(Errc::UnknownElement, "unknown element '" + b + "'");
    if (x == y) fail(Errc::CycleDetected, "self-loop on '" + a + "'");
    p.covers_.emplace_back(x, y);
    p.up_[x].push_back(y);
    p.down_[y].push_back(x);
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  for (auto& v : p.down_) std::sort(v.begin(), v.end());
  std::sort(p.covers_.begin(), p.covers_.end());
  if (std::adjacent_find(p.covers_.begin(), p.covers_.end()) != p.covers_.end())
    fail(Errc::BadInput, "duplicate cover pair");

  // Topological order; absence proves a cycle.
  std::vector<int> indeg(p.size(), 0), topo;
  for (auto& [x, y] : p.covers_) indeg[y]++;
  std::queue<int> q;
  for (int i = 0; i < p.size(); ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int u : p.up_[v])
      if (--indeg[u] == 0) q.push(u);
  }
  if (static_cast<int>(topo.size()) != p.size()) fail(Errc::CycleDetected, "cover digraph has a cycle");

  p.reach_.assign(p.size(), Bitset(p.size()));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    p.reach_[v].set(v);
    for (int u : p.up_[v]) p.reach_[v] |= p.reach_[u];
  }

  // A cover (x,y) implied by transitivity of the others is rejected, so that
  // stored Hasse data is audited exactly as given.
  for (auto& [x, y] : p.covers_) {
    for (int z : p.up_[x]) {
      if (z != y && p.reach_[z].test(y))
        fail(Errc::RedundantCover,
             "cover (" + p.names_[x] + "," + p.names_[y] + ") is implied by transitivity");
    }
  }

  auto mins = p.minimal_elements();
  auto maxs = p.maximal_elements();
  if (mins.size() == 1) p.bottom_ = mins[0];
  if (maxs.size() == 1) p.top_ = maxs[0];
  if (require_bounded && !p.bounded())
    fail(Errc::NotBounded, "poset is not bounded (sources=" + std::to_string(mins.size()) +
                               ", sinks=" + std::to_string(maxs.size()) + ")");
  return p;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[i].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::atoms() const {
  if (bottom_ < 0) fail(Errc::NotBounded, "atoms need a bottom element");
  return up_[bottom_];
}

int Poset::height() const {
  std::vector<int> h(size(), 0);
  // covers_ is sorted but not topological; do a DP over a topological order.
  std::vector<int> indeg(size(), 0), topo;
  for (auto& [x, y] : covers_) indeg[y]++;
  std::queue<int> q;
  for (int i = 0; i < size(); ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int u : up_[v])
      if (--indeg[u] == 0) q.push(u);
  }
  int best = 0;
  for (int v : topo)
    for (int u : up_[v]) {
      h[u] = std::max(h[u], h[v] + 1);
      best = std::max(best, h[u]);
    }
  return best;
}

Poset Poset::closed_interval(int x, int y, std::vector<int>* back_map) const {
  if (!leq(x, y)) fail(Errc::NotComparable, name(x) + " and " + name(y) + " are not comparable");
  std::vector<int> members;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) members.push_back(z);
  std::vector<std::string> names;
  std::vector<int> pos(size(), -1);
  for (size_t i = 0; i < members.size(); ++i) {
    names.push_back(names_[members[i]]);
    pos[members[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& [a, b] : covers_)
    if (pos[a] >= 0 && pos[b] >= 0) covers.emplace_back(names_[a], names_[b]);
  if (back_map) *back_map = members;
  return from_covers(std::move(names), covers, /*require_bounded=*/true);
}

std::vector<Chain> Poset::saturated_chains(int from, int to) const {
  std::vector<Chain> out;
  if (!leq(from, to)) return out;
  Chain cur{from};
  std::function<void(int)> dfs = [&](int v) {
    if (v == to) {
      out.push_back(cur);
      return;
    }
    for (int u : up_[v]) {
      if (!leq(u, to)) continue;
      cur.push_back(u);
      dfs(u);
      cur.pop_back();
    }
  };
  dfs(from);
  return out;
}

std::vector<Chain> Poset::maximal_chains() const {
  if (!bounded()) fail(Errc::NotBounded, "maximal chains need a bounded poset");
  return saturated_chains(bottom_, top_);
}

std::optional<std::vector<int>> Poset::rank_function() const {
  std::vector<int> rk(size(), -1);
  std::queue<int> q;
  for (int m : minimal_elements()) {
    rk[m] = 0;
    q.push(m);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : up_[v]) {
      if (rk[u] == -1) {
        rk[u] = rk[v] + 1;
        q.push(u);
      } else if (rk[u] != rk[v] + 1) {
        return std::nullopt;
      }
    }
  }
  // Every cover must step by exactly one.
  for (auto& [x, y] : covers_)
    if (rk[y] != rk[x] + 1) return std::nullopt;
  return rk;
}

std::vector<std::pair<int, int>> transitive_reduction(int n,
                                                      const std::vector<std::pair<int, int>>& relation) {
  std::vector<std::vector<int>> up(n);
  for (auto& [a, b] : relation) {
    if (a == b) fail(Errc::CycleDetected, "reflexive pair in relation");
    up[a].push_back(b);
  }
  std::vector<int> indeg(n, 0), topo;
  for (auto& [a, b] : relation) indeg[b]++;
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int u : up[v])
      if (--indeg[u] == 0) q.push(u);
  }
  if (static_cast<int>(topo.size()) != n) fail(Errc::CycleDetected, "relation has a cycle");

  std::vector<Bitset> reach(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    reach[v].set(v);
    for (int u : up[v]) reach[v] |= reach[u];
  }
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !reach[a].test(b)) continue;
      bool redundant = false;
      for (int z = 0; z < n && !redundant; ++z)
        if (z != a && z != b && reach[a].test(z) && reach[z].test(b)) redundant = true;
      if (!redundant) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

namespace {

// Iterated neighbourhood refinement; classes enough to prune the search hard
// on anything we meet here.
std::vector<uint64_t> wl_signatures(const Poset& p) {
  std::vector<uint64_t> sig(p.size());
  for (int i = 0; i < p.size(); ++i)
    sig[i] = (uint64_t(p.up(i).size()) << 32) | uint64_t(p.down(i).size());
  for (int round = 0; round < 4; ++round) {
    std::vector<uint64_t> next(p.size());
    for (int i = 0; i < p.size(); ++i) {
      std::vector<uint64_t> ups, downs;
      for (int u : p.up(i)) ups.push_back(sig[u]);
      for (int d : p.down(i)) downs.push_back(sig[d]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      uint64_t h = sig[i] * 1000003007ULL + 17;
      for (uint64_t v : ups) h = h * 1099511628211ULL + v;
      h = h * 1000000007ULL + 5;
      for (uint64_t v : downs) h = h * 1099511628211ULL + v;
      next[i] = h;
    }
    sig = next;
  }
  return sig;
}

bool extend(const Poset& p, const Poset& q, const std::vector<std::vector<int>>& candidates,
            const std::vector<int>& order, size_t k, std::vector<int>& map, std::vector<bool>& used) {
  if (k == order.size()) return true;
  int v = order[k];
  for (int w : candidates[v]) {
    if (used[w]) continue;
    bool ok = true;
    // Consistency against already-mapped vertices: covers must correspond.
    for (size_t j = 0; j < k && ok; ++j) {
      int v2 = order[j];
      if (p.is_cover(v, v2) != q.is_cover(w, map[v2])) ok = false;
      if (ok && p.is_cover(v2, v) != q.is_cover(map[v2], w)) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(p, q, candidates, order, k + 1, map, used)) return true;
    used[w] = false;
    map[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.cover_pairs().size() != q.cover_pairs().size()) return std::nullopt;
  auto sp = wl_signatures(p), sq = wl_signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      if (sp[i] == sq[j]) candidates[i].push_back(j);
  std::vector<int> order(p.size());
  for (int i = 0; i < p.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return candidates[a].size() < candidates[b].size(); });
  std::vector<int> map(p.size(), -1);
  std::vector<bool> used(q.size(), false);
  if (!extend(p, q, candidates, order, 0, map, used)) return std::nullopt;
  if (!verify_map_isomorphism(p, q, map)) return std::nullopt;  // covers matched; order must too
  return map;
}

bool verify_map_isomorphism(const Poset& p, const Poset& q, std::span<const int> map) {
  if (p.size() != q.size() || static_cast<int>(map.size()) != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (int i = 0; i < p.size(); ++i) {
    if (map[i] < 0 || map[i] >= q.size() || hit[map[i]]) return false;
    hit[map[i]] = true;
  }
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
  return true;
}

namespace {

bool lin_ext_rec(const Poset& p, std::vector<int>& indeg, Chain& acc,
                 const std::function<bool(ChainView)>& fn) {
  if (acc.size() == static_cast<size_t>(p.size())) return fn(acc);
  for (int v = 0; v < p.size(); ++v) {
    if (indeg[v] != 0) continue;
    indeg[v] = -1;
    for (int u : p.up(v)) indeg[u]--;
    acc.push_back(v);
    bool keep = lin_ext_rec(p, indeg, acc, fn);
    acc.pop_back();
    for (int u : p.up(v)) indeg[u]++;
    indeg[v] = 0;
    if (!keep) return false;
  }
  return true;
}

}  // namespace

bool for_each_linear_extension(const Poset& p, const std::function<bool(ChainView)>& fn) {
  std::vector<int> indeg(p.size(), 0);
  for (auto& [x, y] : p.cover_pairs()) indeg[y]++;
  Chain acc;
  acc.reserve(p.size());
  return lin_ext_rec(p, indeg, acc, fn);
}

uint64_t count_linear_extensions(const Poset& p, uint64_t cap) {
  // Memoized over down-sets. Fine for the sizes we ever count.
  std::map<Bitset, uint64_t> memo;
  std::vector<Bitset> downs(p.size(), Bitset(p.size()));
  for (int v = 0; v < p.size(); ++v)
    for (int w = 0; w < p.size(); ++w)
      if (w != v && p.leq(w, v)) downs[v].set(w);
  std::function<uint64_t(const Bitset&, int)> go = [&](const Bitset& taken, int ntaken) -> uint64_t {
    if (ntaken == p.size()) return 1;
    auto it = memo.find(taken);
    if (it != memo.end()) return it->second;
    uint64_t total = 0;
    for (int v = 0; v < p.size(); ++v) {
      if (taken.test(v)) continue;
      if (!downs[v].subset_of(taken)) continue;
      Bitset next = taken;
      next.set(v);
      total += go(next, ntaken + 1);
      if (total >= cap) {
        total = cap;
        break;
      }
    }
    memo.emplace(taken, total);
    return total;
  };
  return go(Bitset(p.size()), 0);
}

std::vector<int> random_linear_extension(const Poset& p, std::mt19937_64& rng) {
  std::vector<int> indeg(p.size(), 0), out;
  for (auto& [x, y] : p.cover_pairs()) indeg[y]++;
  std::vector<int> ready;
  for (int i = 0; i < p.size(); ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::uniform_int_distribution<size_t> pick(0, ready.size() - 1);
    size_t k = pick(rng);
    int v = ready[k];
    ready.erase(ready.begin() + k);
    out.push_back(v);
    for (int u : p.up(v))
      if (--indeg[u] == 0) ready.push_back(u);
  }
  return out;
}

}  // namespace shellab
