#include "shellab/descent_order.hpp"

#include <algorithm>
#include <deque>

namespace shellab {

std::optional<PolygonWitness> differ_by_polygon(ChainView m, ChainView m2) {
  int r = static_cast<int>(m.size()) - 1, r2 = static_cast<int>(m2.size()) - 1;
  if (r2 > r || r2 < 2) return std::nullopt;
  // First disagreement; m2's single private element must sit there.
  int i = 0;
  while (i <= std::min(r, r2) && m[i] == m2[i]) ++i;
  if (i < 1 || i > r2 - 1) return std::nullopt;  // identical chains or disagreement at an end
  // x2_{i+1} must reappear in m as x_{i+l}.
  int l = -1;
  for (int k = i + 1; k <= r; ++k)
    if (m[k] == m2[i + 1]) {
      l = k - i;
      break;
    }
  if (l < 1) return std::nullopt;
  for (int k = 0; k <= l; ++k)
    if (m2[i] == m[i + k]) return std::nullopt;
  // Tails coincide and lengths match up.
  if (r - (i + l) != r2 - (i + 1)) return std::nullopt;
  for (int t = 0; i + 1 + t <= r2; ++t)
    if (m2[i + 1 + t] != m[i + l + t]) return std::nullopt;
  PolygonWitness w;
  w.i = i;
  w.l = l;
  w.bottom = m[i - 1];
  w.top = m[i + l];
  return w;
}

namespace {

// Unique ascending saturated chain of [w,z] under the labels fixed by
// `prefix` (a saturated chain from the bottom to w, inclusive).
Chain ascending_chain_of(const Poset& p, const Labeling& lab, int w, int z, const Chain& prefix) {
  for (auto& c : p.saturated_chains(w, z)) {
    if (is_ascending(lab.lambda(), label_sequence(p, lab, c, prefix))) return c;
  }
  fail(Errc::BadInput, "no ascending chain in [" + p.name(w) + "," + p.name(z) + "]");
}

}  // namespace

Chain polygon_predecessor(const Poset& p, const Labeling& lab, ChainView m2, int x) {
  auto pos = std::find(m2.begin(), m2.end(), x);
  if (pos == m2.end() || pos == m2.begin() || pos + 1 == m2.end())
    fail(Errc::NotADescent, "element is not interior to the chain");
  size_t idx = pos - m2.begin();
  auto descents = descent_elements(p, lab, m2);
  if (std::find(descents.begin(), descents.end(), x) == descents.end())
    fail(Errc::NotADescent, p.name(x) + " is not a descent of the chain");
  int w = m2[idx - 1], z = m2[idx + 1];
  Chain prefix(m2.begin(), m2.begin() + idx);  // bottom..w inclusive
  Chain c = ascending_chain_of(p, lab, w, z, prefix);
  Chain m(m2.begin(), m2.begin() + idx - 1);
  m.insert(m.end(), c.begin(), c.end());
  m.insert(m.end(), m2.begin() + idx + 2, m2.end());
  return m;
}

int MCDOrder::index_of(ChainView m) const {
  for (size_t i = 0; i < chains.size(); ++i)
    if (chains[i].size() == m.size() && std::equal(m.begin(), m.end(), chains[i].begin()))
      return static_cast<int>(i);
  return -1;
}

bool MCDOrder::is_cover(int i, int j) const {
  return std::find(covers.begin(), covers.end(), std::make_pair(i, j)) != covers.end();
}

std::string MCDOrder::seq_string(int i, const LabelPoset& lp) const {
  std::string out;
  bool wide = false;
  for (Label l : labels[i])
    if (lp.display(l).size() > 1) wide = true;
  for (size_t k = 0; k < labels[i].size(); ++k) {
    if (k && wide) out += ",";
    out += lp.display(labels[i][k]);
  }
  return out;
}

Poset MCDOrder::to_poset(const std::function<std::string(int)>& namer) const {
  std::vector<std::string> names;
  for (size_t i = 0; i < chains.size(); ++i)
    names.push_back(namer ? namer(static_cast<int>(i)) : "m" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [a, b] : covers) cov.emplace_back(names[a], names[b]);
  return Poset::from_covers(std::move(names), cov, /*require_bounded=*/false);
}

MCDOrder build_mcd(const Poset& p, const Labeling& lab) {
  MCDOrder mcd;
  mcd.chains = p.maximal_chains();
  int n = static_cast<int>(mcd.chains.size());
  std::map<Chain, int> index;
  for (int i = 0; i < n; ++i) index[mcd.chains[i]] = i;
  for (int i = 0; i < n; ++i) mcd.labels.push_back(label_sequence(p, lab, mcd.chains[i]));

  for (int j = 0; j < n; ++j) {
    const Chain& m2 = mcd.chains[j];
    for (int x : descent_elements(p, lab, m2)) {
      Chain m = polygon_predecessor(p, lab, m2, x);
      auto it = index.find(m);
      if (it == index.end()) fail(Errc::BadInput, "predecessor chain is not maximal");
      auto w = differ_by_polygon(m, m2);
      PolygonMove mv;
      mv.src = it->second;
      mv.dst = j;
      mv.bottom = w->bottom;
      mv.top = w->top;
      mv.position = w->i;
      mv.inserted = x;
      mcd.moves.push_back(mv);
    }
  }

  // Reachability over the move digraph (acyclic: moves strictly increase the
  // lexicographic order).
  std::vector<std::vector<int>> out(n);
  for (auto& mv : mcd.moves) out[mv.src].push_back(mv.dst);
  mcd.above.assign(n, Bitset(n));
  std::vector<int> state(n, 0);
  std::function<void(int)> dfs = [&](int v) {
    state[v] = 1;
    mcd.above[v].set(v);
    for (int u : out[v]) {
      if (state[u] == 0) dfs(u);
      mcd.above[v] |= mcd.above[u];
    }
    state[v] = 2;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0) dfs(v);

  // Covers: moves with no two-step path around them. Every cover of the
  // descent order arises from a move.
  for (auto& mv : mcd.moves) {
    bool redundant = false;
    for (int k : out[mv.src]) {
      if (k != mv.dst && mcd.above[k].test(mv.dst)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) mcd.covers.emplace_back(mv.src, mv.dst);
  }
  std::sort(mcd.covers.begin(), mcd.covers.end());
  mcd.covers.erase(std::unique(mcd.covers.begin(), mcd.covers.end()), mcd.covers.end());

  for (int i = 0; i < n; ++i) {
    if (is_ascending(lab.lambda(), mcd.labels[i])) {
      mcd.minimum = i;
      break;
    }
  }
  return mcd;
}

CompletenessReport is_polygon_complete(const MCDOrder& mcd) {
  CompletenessReport rep;
  for (size_t k = 0; k < mcd.moves.size(); ++k) {
    if (!mcd.is_cover(mcd.moves[k].src, mcd.moves[k].dst))
      rep.noncover_moves.push_back(static_cast<int>(k));
  }
  rep.complete = rep.noncover_moves.empty();
  return rep;
}

std::vector<Inversion> inversion_set(const LabelPoset& lp, const LabelSeq& seq) {
  std::vector<Inversion> out;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (!lp.leq(seq[i], seq[j]))
        out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, seq[i], seq[j]});
  return out;
}

InversionRankedReport is_inversion_ranked(const Poset& p, const Labeling& lab, const MCDOrder& mcd) {
  InversionRankedReport rep;
  if (!p.rank_function()) return rep;  // requires a ranked poset
  std::vector<int> inv(mcd.chains.size());
  for (size_t i = 0; i < mcd.chains.size(); ++i)
    inv[i] = static_cast<int>(inversion_set(lab.lambda(), mcd.labels[i]).size());
  for (auto& mv : mcd.moves) {
    if (inv[mv.dst] != inv[mv.src] + 1) {
      rep.counterexample = mv;
      rep.inv_src = inv[mv.src];
      rep.inv_dst = inv[mv.dst];
      return rep;
    }
  }
  rep.inversion_ranked = true;
  return rep;
}

std::vector<std::pair<int, int>> downward_cover_counts(const Poset&, const Labeling& lab,
                                                       const MCDOrder& mcd) {
  std::vector<std::pair<int, int>> out(mcd.chains.size(), {0, 0});
  for (auto& [a, b] : mcd.covers) out[b].first++;
  for (size_t i = 0; i < mcd.chains.size(); ++i)
    out[i].second = static_cast<int>(descent_positions(lab.lambda(), mcd.labels[i]).size());
  return out;
}

MCDRankReport mcd_rank_report(const Poset& p, const Labeling& lab, const MCDOrder& mcd) {
  MCDRankReport rep;
  auto ir = is_inversion_ranked(p, lab, mcd);
  if (!ir.inversion_ranked) return rep;
  rep.applicable = true;
  auto rk = p.rank_function();
  int n = (*rk)[p.top()];
  rep.full_rank = n * (n - 1) / 2;

  Poset view = mcd.to_poset();
  auto mcd_rk = view.rank_function();
  rep.ranked_by_inv = mcd_rk.has_value();
  if (rep.ranked_by_inv) {
    for (size_t i = 0; i < mcd.chains.size(); ++i) {
      int inv = static_cast<int>(inversion_set(lab.lambda(), mcd.labels[i]).size());
      if ((*mcd_rk)[i] != inv) rep.ranked_by_inv = false;
    }
  }
  // Homology facets (all interior elements descents) vs chains at full rank.
  bool match = true;
  for (size_t i = 0; i < mcd.chains.size(); ++i) {
    bool descending = is_descending(lab.lambda(), mcd.labels[i]);
    int inv = static_cast<int>(inversion_set(lab.lambda(), mcd.labels[i]).size());
    if (descending != (inv == rep.full_rank)) match = false;
  }
  rep.homology_match = match;
  return rep;
}

std::optional<EasyWitness> find_easy_noncover_witness(const Poset& p, const Labeling& lab) {
  // Scan segments of maximal chains: the segment provides both the ascending
  // chain c and the root below it.
  for (auto& m : p.maximal_chains()) {
    int len = static_cast<int>(m.size());
    for (int a = 0; a < len; ++a) {       // position of x_1
      for (int b = a + 3; b < len; ++b) {  // position of x_{k+1}; k >= 3
        Chain root(m.begin(), m.begin() + a + 1);
        Chain c(m.begin() + a, m.begin() + b + 1);
        if (!is_ascending(lab.lambda(), label_sequence(p, lab, c, root))) continue;
        int x1 = m[a], xk = m[b - 1], xk1 = m[b];
        for (int x2p : p.up(x1)) {
          if (x2p == m[a + 1] || !p.is_cover(x2p, xk)) continue;
          Chain detour{x1, x2p, xk};
          LabelSeq dseq = label_sequence(p, lab, detour, root);
          if (lab.lambda().leq(dseq[0], dseq[1])) continue;  // must be a descent
          // Label of (xk, xk1) along the detour's root.
          Chain droot = root;
          droot.push_back(x2p);
          droot.push_back(xk);
          Label topl = lab.label(p, droot, xk, xk1);
          if (lab.lambda().less(topl, dseq[1])) {
            EasyWitness w;
            w.root = root;
            w.ascending = c;
            w.detour = detour;
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Any move path src -> ... -> dst with at least two edges, preferring short
// ones, ties broken by canonical chain order.
std::vector<int> move_path(const MCDOrder& mcd, int src, int dst) {
  int n = static_cast<int>(mcd.chains.size());
  std::vector<std::vector<int>> out(n);
  for (auto& mv : mcd.moves) out[mv.src].push_back(mv.dst);
  for (auto& v : out) std::sort(v.begin(), v.end());
  // BFS from src among chains <= dst, ignoring the direct edge src->dst.
  std::vector<int> prev(n, -2);
  std::deque<int> q;
  for (int u : out[src])
    if (u != dst && mcd.above[u].test(dst)) {
      if (prev[u] == -2) {
        prev[u] = src;
        q.push_back(u);
      }
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == dst) break;
    for (int u : out[v]) {
      if (!mcd.above[u].test(dst)) continue;
      if (prev[u] == -2) {
        prev[u] = v;
        q.push_back(u);
      }
    }
  }
  if (prev[dst] == -2) return {};
  std::vector<int> path{dst};
  int v = dst;
  while (v != src) {
    v = prev[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int coatom_of(const Chain& m) { return m[m.size() - 2]; }

}  // namespace

CharacterizationWitness find_characterization_witness(const Poset& p,
                                                      std::shared_ptr<const Labeling> lab,
                                                      const MCDOrder& mcd, int move_index) {
  const PolygonMove& mv = mcd.moves[move_index];
  if (mcd.is_cover(mv.src, mv.dst)) fail(Errc::NotANonCover, "move is a cover relation");

  std::vector<int> path = move_path(mcd, mv.src, mv.dst);
  if (path.size() < 3) fail(Errc::NotANonCover, "no intermediate chain between the ends");

  // If no polygon along the path reaches the top, every chain keeps the same
  // coatom; recurse into the interval below it.
  std::vector<Chain> d;
  for (int idx : path) d.push_back(mcd.chains[idx]);
  bool top_hit = false;
  for (size_t j = 0; j + 1 < d.size(); ++j) {
    auto w = differ_by_polygon(d[j], d[j + 1]);
    if (w && w->top == p.top()) {
      top_hit = true;
      break;
    }
  }

  if (!top_hit) {
    int coat = coatom_of(d.front());
    std::vector<int> back;
    Poset interval = p.closed_interval(p.bottom(), coat, &back);
    auto rl = restrict_labeling(p, lab, interval, back);
    MCDOrder sub = build_mcd(interval, *rl);
    std::vector<int> fwd(p.size(), -1);
    for (size_t i = 0; i < back.size(); ++i) fwd[back[i]] = static_cast<int>(i);
    auto truncate = [&](const Chain& m) {
      Chain t;
      for (int v : m) {
        if (fwd[v] < 0) break;
        t.push_back(fwd[v]);
      }
      return t;
    };
    int s = sub.index_of(truncate(d.front())), t = sub.index_of(truncate(d.back()));
    int sub_move = -1;
    for (size_t k = 0; k < sub.moves.size(); ++k)
      if (sub.moves[k].src == s && sub.moves[k].dst == t) sub_move = static_cast<int>(k);
    if (sub_move < 0) fail(Errc::NotANonCover, "lost the move in the interval");
    CharacterizationWitness w = find_characterization_witness(interval, rl, sub, sub_move);
    // Map everything back to the ambient poset.
    w.y = back[w.y];
    for (auto& v : w.xs) v = back[v];
    for (auto& v : w.zs) v = back[v];
    auto lift = [&](Chain& c) {
      for (auto& v : c) v = back[v];
    };
    lift(w.m);
    lift(w.m2);
    for (auto& c : w.mi) lift(c);
    for (auto& c : w.ci) lift(c);
    return w;
  }

  // The top edge changes along the path; record every change. Elements may
  // repeat among the x_i; the cycle closes at the final return to x_1.
  CharacterizationWitness w;
  w.y = p.top();
  int x1 = coatom_of(d.front());
  w.xs.push_back(x1);
  size_t r = 0;
  auto holds = [](const Chain& c, int v) { return std::find(c.begin(), c.end(), v) != c.end(); };
  while (true) {
    int xc = w.xs.back();
    // First chain from position r onward that still holds xc while its
    // successor does not. xc stays the coatom until that drop.
    size_t rr = r;
    while (rr + 1 < d.size() && !(holds(d[rr], xc) && !holds(d[rr + 1], xc))) ++rr;
    if (rr + 1 >= d.size()) fail(Errc::NotANonCover, "top edge never leaves " + p.name(xc));
    const Chain& next = d[rr + 1];
    int xnew = coatom_of(next);
    int znew = next[next.size() - 3];
    // Ascending chain c_i: the suffix of d[rr] from znew.
    auto zpos = std::find(d[rr].begin(), d[rr].end(), znew);
    if (zpos == d[rr].end()) fail(Errc::NotANonCover, "polygon bottom missing from the source chain");
    w.zs.push_back(znew);
    w.ci.emplace_back(zpos, d[rr].end());
    w.mi.emplace_back(d[rr].begin(), zpos + 1);
    if (xnew == x1) {
      bool stays = true;
      for (size_t j = rr + 1; j < d.size(); ++j)
        if (!holds(d[j], x1)) stays = false;
      if (stays) break;  // by convention x_{n+1} = x_1
    }
    w.xs.push_back(xnew);
    r = rr + 1;
  }

  const Chain& m = mcd.chains[mv.src];
  const Chain& m2 = mcd.chains[mv.dst];
  auto cut = [&](const Chain& c) {
    auto it = std::find(c.begin(), c.end(), x1);
    return Chain(c.begin(), it + 1);
  };
  w.m = cut(m);
  w.m2 = cut(m2);
  return w;
}

namespace {

// Relation c <= c' in the descent order of [bottom(p), x] restricted from
// lab, with both chains given in ambient coordinates.
bool interval_mcd_leq(const Poset& p, std::shared_ptr<const Labeling> lab, int x, const Chain& a,
                      const Chain& b) {
  std::vector<int> back;
  Poset interval = p.closed_interval(p.bottom(), x, &back);
  auto rl = restrict_labeling(p, lab, interval, back);
  MCDOrder sub = build_mcd(interval, *rl);
  std::vector<int> fwd(p.size(), -1);
  for (size_t i = 0; i < back.size(); ++i) fwd[back[i]] = static_cast<int>(i);
  auto conv = [&](const Chain& c) {
    Chain t;
    for (int v : c) t.push_back(fwd[v]);
    return t;
  };
  int ia = sub.index_of(conv(a)), ib = sub.index_of(conv(b));
  if (ia < 0 || ib < 0) return false;
  return sub.leq(ia, ib);
}

}  // namespace

bool verify_characterization_witness(const Poset& p, std::shared_ptr<const Labeling> lab,
                                     const CharacterizationWitness& w) {
  size_t n = w.xs.size();
  if (n < 2 || w.zs.size() != n || w.ci.size() != n || w.mi.size() != n) return false;
  auto x_at = [&](size_t i) { return w.xs[i % n]; };  // x_{n+1} = x_1

  // Condition (i): z_i < x_{i+1} < y is a descent and x_i < y lies on the
  // unique ascending chain c_i of [z_i, y].
  for (size_t i = 0; i < n; ++i) {
    int zi = w.zs[i], xip1 = x_at(i + 1), xi = w.xs[i];
    if (!p.is_cover(zi, xip1) || !p.is_cover(xip1, w.y)) return false;
    const Chain& root = w.mi[i];
    if (root.empty() || root.back() != zi) return false;
    LabelSeq dd = label_sequence(p, *lab, Chain{zi, xip1, w.y}, root);
    if (lab->lambda().leq(dd[0], dd[1])) return false;  // must be a descent
    // c_i ascending, from z_i to y, passing through x_i at the coatom step.
    if (w.ci[i].front() != zi || w.ci[i].back() != w.y) return false;
    if (w.ci[i][w.ci[i].size() - 2] != xi) return false;
    if (!is_ascending(lab->lambda(), label_sequence(p, *lab, w.ci[i], root))) return false;
    // Uniqueness of the ascending chain in the rooted interval.
    int asc = 0;
    for (auto& c : p.saturated_chains(zi, w.y))
      if (is_ascending(lab->lambda(), label_sequence(p, *lab, c, root))) asc++;
    if (asc != 1) return false;
  }

  // Condition (ii): the chains below tie together inside interval descent
  // orders.
  {
    // m -> m2 in [bottom, x_1].
    auto pw = differ_by_polygon(w.m, w.m2);
    if (!pw) return false;
    Chain prefix(w.m.begin(), w.m.begin() + pw->i);
    Chain seg(w.m.begin() + pw->i - 1, w.m.begin() + pw->i + pw->l + 1);
    if (!is_ascending(lab->lambda(), label_sequence(p, *lab, seg, prefix))) return false;
  }
  Chain m1c1 = w.mi[0];
  m1c1.insert(m1c1.end(), w.ci[0].begin() + 1, w.ci[0].end() - 1);
  if (m1c1.back() != w.xs[0])
    return false;  // c_1^{x_1}: everything of c_1 up to the coatom x_1
  if (!interval_mcd_leq(p, lab, w.xs[0], w.m, m1c1)) return false;
  for (size_t i = 0; i < n; ++i) {
    int xip1 = x_at(i + 1);
    Chain lhs = w.mi[i];
    lhs.push_back(xip1);
    Chain rhs;
    if (i + 1 < n) {
      rhs = w.mi[i + 1];
      rhs.insert(rhs.end(), w.ci[i + 1].begin() + 1, w.ci[i + 1].end() - 1);
      if (rhs.back() != xip1) return false;
      if (!(interval_mcd_leq(p, lab, xip1, lhs, rhs) && lhs != rhs)) return false;
    } else {
      rhs = w.m2;
      if (!interval_mcd_leq(p, lab, xip1, lhs, rhs)) return false;
    }
  }
  return true;
}

bool verify_lifting(const Poset& p, std::shared_ptr<const Labeling> lab, int x, int y, Chain root) {
  if (!p.leq(x, y)) fail(Errc::NotComparable, "interval is empty");
  if (root.empty()) root = p.saturated_chains(p.bottom(), x).front();
  std::vector<int> back;
  Poset interval = p.closed_interval(x, y, &back);
  auto rl = restrict_labeling(p, lab, interval, back, root);
  MCDOrder sub = build_mcd(interval, *rl);
  MCDOrder full = build_mcd(p, *lab);

  auto to_ambient = [&](const Chain& c) {
    Chain out;
    for (int v : c) out.push_back(back[v]);
    return out;
  };
  // Every maximal chain through the interval whose prefix is the root.
  for (auto& m : p.maximal_chains()) {
    auto xp = std::find(m.begin(), m.end(), x);
    auto yp = std::find(m.begin(), m.end(), y);
    if (xp == m.end() || yp == m.end()) continue;
    if (!std::equal(root.begin(), root.end(), m.begin())) continue;
    Chain suffix(yp, m.end());
    for (size_t a = 0; a < sub.chains.size(); ++a) {
      for (size_t b = 0; b < sub.chains.size(); ++b) {
        if (!sub.leq(static_cast<int>(a), static_cast<int>(b))) continue;
        Chain ca = to_ambient(sub.chains[a]), cb = to_ambient(sub.chains[b]);
        Chain ma(root.begin(), root.end() - 1), mb = ma;
        ma.insert(ma.end(), ca.begin(), ca.end());
        ma.insert(ma.end(), suffix.begin() + 1, suffix.end());
        mb.insert(mb.end(), cb.begin(), cb.end());
        mb.insert(mb.end(), suffix.begin() + 1, suffix.end());
        int ia = full.index_of(ma), ib = full.index_of(mb);
        if (ia < 0 || ib < 0) return false;
        if (!full.leq(ia, ib)) return false;
      }
    }
  }
  return true;
}

}  // namespace shellab
