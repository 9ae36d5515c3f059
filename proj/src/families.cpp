#include "shellab/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shellab {

std::vector<Perm> all_permutations(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string perm_string(const Perm& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && w.size() > 9) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

std::vector<std::pair<int, int>> perm_inversions(const Perm& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[w[i]] = i;
  std::vector<std::pair<int, int>> inv;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (pos[a] > pos[b]) inv.emplace_back(a, b);
  return inv;
}

int perm_length(const Perm& w) { return static_cast<int>(perm_inversions(w).size()); }

Perm perm_inverse(const Perm& w) {
  Perm inv(w.size());
  for (size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Perm perm_compose(const Perm& w, const Perm& v) {
  Perm out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = w[v[i] - 1];
  return out;
}

bool right_weak_leq(const Perm& u, const Perm& w) {
  auto a = perm_inversions(u), b = perm_inversions(w);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool left_weak_leq(const Perm& u, const Perm& w) {
  return right_weak_leq(perm_inverse(u), perm_inverse(w));
}

namespace {

std::shared_ptr<EdgeLabeling> int_labeling(std::map<std::pair<int, int>, Label> edges) {
  return std::make_shared<EdgeLabeling>(LabelPoset::integers(), std::move(edges));
}

std::string subset_name(unsigned mask) {
  if (!mask) return "-";
  std::string s;
  for (int i = 0; i < 16; ++i)
    if (mask & (1u << i)) s += std::to_string(i + 1);
  return s;
}

}  // namespace

FamilyInstance boolean_lattice(int n) {
  if (n < 1 || n > 7) fail(Errc::BadInput, "boolean lattice supported for 1 <= n <= 7");
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::string> names;
  std::map<unsigned, int> index;
  for (unsigned m : masks) {
    index[m] = static_cast<int>(names.size());
    names.push_back(subset_name(m));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::pair<int, int>, Label> labels;
  for (unsigned m : masks)
    for (int i = 0; i < n; ++i)
      if (!(m & (1u << i))) {
        covers.emplace_back(subset_name(m), subset_name(m | (1u << i)));
        labels[{index[m], index[m | (1u << i)]}] = i + 1;
      }
  FamilyInstance fi;
  fi.poset = Poset::from_covers(std::move(names), covers);
  fi.labeling = int_labeling(std::move(labels));
  return fi;
}

Poset weak_order(int n) {
  if (n < 1 || n > 6) fail(Errc::BadInput, "weak order supported for 1 <= n <= 6");
  auto perms = all_permutations(n);
  std::map<Perm, int> index;
  std::vector<std::string> names;
  for (auto& w : perms) {
    index[w] = static_cast<int>(names.size());
    names.push_back(perm_string(w));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& w : perms)
    for (int i = 0; i + 1 < n; ++i)
      if (w[i] < w[i + 1]) {
        Perm v = w;
        std::swap(v[i], v[i + 1]);
        covers.emplace_back(perm_string(w), perm_string(v));
      }
  return Poset::from_covers(std::move(names), covers);
}

namespace {

std::string partition_name(const std::vector<std::vector<int>>& blocks) {
  std::string s;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ".";
    for (int v : blocks[b]) s += std::to_string(v);
  }
  return s;
}

std::vector<std::vector<int>> canonical_blocks(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return blocks;
}

}  // namespace

PartitionLattice partition_lattice(int n) {
  if (n < 1 || n > 6) fail(Errc::BadInput, "partition lattice supported for 1 <= n <= 6");
  // Enumerate by restricted growth strings, then sort by rank (n - #blocks).
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> gen = [&](int i, int maxv) {
    if (i == n) {
      int nb = maxv + 1;
      std::vector<std::vector<int>> blocks(nb);
      for (int j = 0; j < n; ++j) blocks[rgs[j]].push_back(j + 1);
      parts.push_back(canonical_blocks(blocks));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      gen(i + 1, std::max(maxv, v));
    }
  };
  gen(0, -1);
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  PartitionLattice pl;
  pl.ground = n;
  pl.partitions = parts;
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (auto& blocks : parts) {
    index[partition_name(blocks)] = static_cast<int>(names.size());
    names.push_back(partition_name(blocks));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& blocks : parts) {
    for (size_t a = 0; a < blocks.size(); ++a)
      for (size_t b = a + 1; b < blocks.size(); ++b) {
        std::vector<std::vector<int>> merged;
        std::vector<int> uni = blocks[a];
        uni.insert(uni.end(), blocks[b].begin(), blocks[b].end());
        merged.push_back(uni);
        for (size_t c = 0; c < blocks.size(); ++c)
          if (c != a && c != b) merged.push_back(blocks[c]);
        covers.emplace_back(partition_name(blocks), partition_name(canonical_blocks(merged)));
      }
  }
  pl.poset = Poset::from_covers(std::move(names), covers);
  return pl;
}

std::shared_ptr<Labeling> max_min_labeling(const PartitionLattice& pl) {
  std::map<std::pair<int, int>, Label> labels;
  for (auto& [x, y] : pl.poset.cover_pairs()) {
    // The block of y absent from x is a union of two blocks of x.
    const auto& bx = pl.partitions[x];
    const auto& by = pl.partitions[y];
    for (const auto& blk : by) {
      bool in_x = std::find(bx.begin(), bx.end(), blk) != bx.end();
      if (in_x) continue;
      std::vector<int> mins;
      for (const auto& sub : bx)
        if (std::includes(blk.begin(), blk.end(), sub.begin(), sub.end())) mins.push_back(sub[0]);
      labels[{x, y}] = *std::max_element(mins.begin(), mins.end());
      break;
    }
  }
  return int_labeling(std::move(labels));
}

namespace {

void require_lattice(const Poset& p) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      // join: unique minimal common upper bound; meet dually
      std::vector<int> ub, lb;
      for (int z = 0; z < p.size(); ++z) {
        if (p.leq(a, z) && p.leq(b, z)) ub.push_back(z);
        if (p.leq(z, a) && p.leq(z, b)) lb.push_back(z);
      }
      int minimal = 0, maximal = 0;
      for (int z : ub) {
        bool is_min = true;
        for (int z2 : ub)
          if (z2 != z && p.leq(z2, z)) is_min = false;
        if (is_min) minimal++;
      }
      for (int z : lb) {
        bool is_max = true;
        for (int z2 : lb)
          if (z2 != z && p.leq(z, z2)) is_max = false;
        if (is_max) maximal++;
      }
      if (minimal != 1 || maximal != 1)
        fail(Errc::NotALattice, "join or meet missing for " + p.name(a) + ", " + p.name(b));
    }
  }
}

}  // namespace

std::shared_ptr<Labeling> minimal_labeling(const Poset& lattice, const std::vector<int>& atom_order) {
  if (!lattice.bounded()) fail(Errc::NotBounded, "minimal labeling needs a bounded lattice");
  require_lattice(lattice);
  auto atoms = lattice.atoms();
  if (atom_order.size() != atoms.size()) fail(Errc::BadInput, "atom order must list every atom");
  std::vector<int> rank_of(lattice.size(), -1);  // atom element -> 1-based position
  for (size_t i = 0; i < atom_order.size(); ++i) {
    if (std::find(atoms.begin(), atoms.end(), atom_order[i]) == atoms.end())
      fail(Errc::BadInput, "atom order entry is not an atom");
    rank_of[atom_order[i]] = static_cast<int>(i) + 1;
  }
  std::map<std::pair<int, int>, Label> labels;
  for (auto& [x, y] : lattice.cover_pairs()) {
    int best = INT32_MAX;
    for (int a : atoms)
      if (lattice.leq(a, y) && !lattice.leq(a, x)) best = std::min(best, rank_of[a]);
    if (best == INT32_MAX) fail(Errc::BadInput, "cover adds no atom; not atomic");
    labels[{x, y}] = best;
  }
  return int_labeling(std::move(labels));
}

namespace {

std::string ideal_name(const Poset& q, unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < q.size(); ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += q.name(i);
      first = false;
    }
  return s + "}";
}

}  // namespace

FamilyInstance distributive_lattice(const Poset& q, const std::vector<int>& ext) {
  if (q.size() > 8) fail(Errc::BadInput, "ground poset too large");
  if (static_cast<int>(ext.size()) != q.size()) fail(Errc::NotALinearExtension, "wrong length");
  {
    std::vector<int> seen(q.size(), 0);
    for (int v : ext) {
      if (v < 0 || v >= q.size() || seen[v]++) fail(Errc::NotALinearExtension, "not a permutation");
    }
    std::vector<int> pos(q.size());
    for (size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
    for (auto& [x, y] : q.cover_pairs())
      if (pos[x] > pos[y]) fail(Errc::NotALinearExtension, "order not respected");
  }
  // All down-closed subsets.
  std::vector<unsigned> ideals;
  for (unsigned mask = 0; mask < (1u << q.size()); ++mask) {
    bool ok = true;
    for (auto& [x, y] : q.cover_pairs())
      if ((mask & (1u << y)) && !(mask & (1u << x))) ok = false;
    if (ok) ideals.push_back(mask);
  }
  std::sort(ideals.begin(), ideals.end(), [](unsigned a, unsigned b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::map<unsigned, int> index;
  std::vector<std::string> names;
  for (unsigned m : ideals) {
    index[m] = static_cast<int>(names.size());
    names.push_back(ideal_name(q, m));
  }
  std::vector<int> pos(q.size());
  for (size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::pair<int, int>, Label> labels;
  for (unsigned m : ideals) {
    for (int x = 0; x < q.size(); ++x) {
      if (m & (1u << x)) continue;
      bool addable = true;
      for (int d : q.down(x))
        if (!(m & (1u << d))) addable = false;
      if (!addable) continue;
      unsigned m2 = m | (1u << x);
      covers.emplace_back(ideal_name(q, m), ideal_name(q, m2));
      labels[{index[m], index[m2]}] = pos[x] + 1;
    }
  }
  FamilyInstance fi;
  fi.poset = Poset::from_covers(std::move(names), covers);
  fi.labeling = int_labeling(std::move(labels));
  return fi;
}

std::vector<Perm> lin_labels(const Poset& j, const Labeling& lab) {
  std::vector<Perm> out;
  for (auto& m : j.maximal_chains()) {
    LabelSeq seq = label_sequence(j, lab, m);
    out.emplace_back(seq.begin(), seq.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int YoungShape::boxes() const {
  int total = 0;
  for (size_t r = 0; r < outer.size(); ++r) {
    int in = r < inner.size() ? inner[r] : 0;
    total += outer[r] - in;
  }
  return total;
}

bool YoungShape::has_box(int r, int c) const {
  if (r < 0 || r >= static_cast<int>(outer.size())) return false;
  int in = r < static_cast<int>(inner.size()) ? inner[r] : 0;
  return c >= in && c < outer[r];
}

void YoungShape::check() const {
  for (size_t r = 0; r + 1 < outer.size(); ++r)
    if (outer[r] < outer[r + 1]) fail(Errc::ShapeMismatch, "outer shape not weakly decreasing");
  for (size_t r = 0; r + 1 < inner.size(); ++r)
    if (inner[r] < inner[r + 1]) fail(Errc::ShapeMismatch, "inner shape not weakly decreasing");
  for (size_t r = 0; r < inner.size(); ++r) {
    if (r >= outer.size() && inner[r] > 0) fail(Errc::ShapeMismatch, "inner shape exceeds outer");
    if (r < outer.size() && inner[r] > outer[r]) fail(Errc::ShapeMismatch, "inner shape exceeds outer");
  }
  if (!outer.empty() && outer.back() == 0) fail(Errc::ShapeMismatch, "trailing zero row");
}

std::pair<int, int> StandardTableau::box_of(int value) const {
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
  fail(Errc::BadInput, "value " + std::to_string(value) + " not in tableau");
}

std::string StandardTableau::id() const {
  std::string s;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (r) s += "/";
    bool first = true;
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (!shape.has_box(static_cast<int>(r), static_cast<int>(c))) continue;
      if (!first) s += ",";
      s += std::to_string(rows[r][c]);
      first = false;
    }
  }
  return s;
}

namespace {

struct BoxPoset {
  Poset poset;
  std::vector<std::pair<int, int>> boxes;  // row-major, aligned with poset indices
};

std::string box_name(int r, int c) {
  return "b" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
}

BoxPoset box_poset(const YoungShape& shape) {
  shape.check();
  BoxPoset bp;
  std::vector<std::string> names;
  for (int r = 0; r < static_cast<int>(shape.outer.size()); ++r)
    for (int c = 0; c < shape.outer[r]; ++c)
      if (shape.has_box(r, c)) {
        bp.boxes.emplace_back(r, c);
        names.push_back(box_name(r, c));
      }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& [r, c] : bp.boxes) {
    if (shape.has_box(r, c + 1)) covers.emplace_back(box_name(r, c), box_name(r, c + 1));
    if (shape.has_box(r + 1, c)) covers.emplace_back(box_name(r, c), box_name(r + 1, c));
  }
  bp.poset = Poset::from_covers(std::move(names), covers, /*require_bounded=*/false);
  return bp;
}

StandardTableau tableau_from_extension(const YoungShape& shape, const BoxPoset& bp, ChainView ext) {
  StandardTableau t;
  t.shape = shape;
  t.rows.assign(shape.outer.size(), {});
  for (size_t r = 0; r < shape.outer.size(); ++r) t.rows[r].assign(shape.outer[r], 0);
  for (size_t k = 0; k < ext.size(); ++k) {
    auto [r, c] = bp.boxes[ext[k]];
    t.rows[r][c] = static_cast<int>(k) + 1;
  }
  return t;
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const YoungShape& shape) {
  if (shape.boxes() > 9) fail(Errc::BadInput, "too many boxes");
  BoxPoset bp = box_poset(shape);
  std::vector<StandardTableau> out;
  for_each_linear_extension(bp.poset, [&](ChainView ext) {
    out.push_back(tableau_from_extension(shape, bp, ext));
    return true;
  });
  return out;
}

StandardTableau row_tableau(const YoungShape& shape) {
  shape.check();
  StandardTableau t;
  t.shape = shape;
  t.rows.assign(shape.outer.size(), {});
  int next = 1;
  for (size_t r = 0; r < shape.outer.size(); ++r) {
    t.rows[r].assign(shape.outer[r], 0);
    for (int c = 0; c < shape.outer[r]; ++c)
      if (shape.has_box(static_cast<int>(r), c)) t.rows[r][c] = next++;
  }
  return t;
}

Perm row_word(const StandardTableau& t) {
  Perm w;
  for (size_t r = 0; r < t.rows.size(); ++r)
    for (size_t c = 0; c < t.rows[r].size(); ++c)
      if (t.shape.has_box(static_cast<int>(r), static_cast<int>(c))) w.push_back(t.rows[r][c]);
  return w;
}

namespace {

void check_tableau_matches(const YoungShape& shape, const StandardTableau& t) {
  if (t.shape.outer != shape.outer || t.shape.inner != shape.inner)
    fail(Errc::ShapeMismatch, "tableau shape differs from the interval shape");
  int n = shape.boxes();
  std::vector<int> seen(n + 1, 0);
  for (int r = 0; r < static_cast<int>(shape.outer.size()); ++r)
    for (int c = 0; c < shape.outer[r]; ++c) {
      if (!shape.has_box(r, c)) continue;
      int v = t.at(r, c);
      if (v < 1 || v > n || seen[v]++) fail(Errc::ShapeMismatch, "filling is not a bijection with [n]");
      if (shape.has_box(r, c + 1) && t.at(r, c + 1) <= v)
        fail(Errc::ShapeMismatch, "rows must strictly increase");
      if (shape.has_box(r + 1, c) && t.at(r + 1, c) <= v)
        fail(Errc::ShapeMismatch, "columns must strictly increase");
    }
}

std::string diagram_name(const YoungShape& shape, const std::vector<int>& row_counts) {
  // Identify an ideal by the row lengths of inner + ideal.
  std::string s = "(";
  bool first = true;
  for (size_t r = 0; r < shape.outer.size(); ++r) {
    int in = r < shape.inner.size() ? shape.inner[r] : 0;
    int len = in + row_counts[r];
    if (len == 0) continue;
    if (!first) s += ",";
    s += std::to_string(len);
    first = false;
  }
  return s + ")";
}

}  // namespace

FamilyInstance young_interval(const YoungShape& shape, const StandardTableau& t) {
  if (shape.boxes() > 8) fail(Errc::BadInput, "too many boxes");
  check_tableau_matches(shape, t);
  BoxPoset bp = box_poset(shape);
  const Poset& q = bp.poset;

  std::vector<unsigned> ideals;
  for (unsigned mask = 0; mask < (1u << q.size()); ++mask) {
    bool ok = true;
    for (auto& [x, y] : q.cover_pairs())
      if ((mask & (1u << y)) && !(mask & (1u << x))) ok = false;
    if (ok) ideals.push_back(mask);
  }
  std::sort(ideals.begin(), ideals.end(), [](unsigned a, unsigned b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  auto name_of = [&](unsigned mask) {
    std::vector<int> rc(shape.outer.size(), 0);
    for (int b = 0; b < q.size(); ++b)
      if (mask & (1u << b)) rc[bp.boxes[b].first]++;
    return diagram_name(shape, rc);
  };
  std::map<unsigned, int> index;
  std::vector<std::string> names;
  for (unsigned m : ideals) {
    index[m] = static_cast<int>(names.size());
    names.push_back(name_of(m));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::pair<int, int>, Label> labels;
  for (unsigned m : ideals) {
    for (int x = 0; x < q.size(); ++x) {
      if (m & (1u << x)) continue;
      bool addable = true;
      for (int d : q.down(x))
        if (!(m & (1u << d))) addable = false;
      if (!addable) continue;
      unsigned m2 = m | (1u << x);
      covers.emplace_back(name_of(m), name_of(m2));
      labels[{index[m], index[m2]}] = t.at(bp.boxes[x].first, bp.boxes[x].second);
    }
  }
  FamilyInstance fi;
  fi.poset = Poset::from_covers(std::move(names), covers);
  fi.labeling = int_labeling(std::move(labels));
  return fi;
}

namespace {

std::optional<StandardTableau> tableau_swap(const StandardTableau& q, int i) {
  StandardTableau s = q;
  auto [r1, c1] = q.box_of(i);
  auto [r2, c2] = q.box_of(i + 1);
  s.rows[r1][c1] = i + 1;
  s.rows[r2][c2] = i;
  // Standard iff rows and columns still increase around the two boxes.
  auto ok = [&](int r, int c) {
    int v = s.rows[r][c];
    if (s.shape.has_box(r, c + 1) && s.rows[r][c + 1] <= v) return false;
    if (s.shape.has_box(r + 1, c) && s.rows[r + 1][c] <= v) return false;
    if (s.shape.has_box(r, c - 1) && c > 0 && s.rows[r][c - 1] >= v) return false;
    if (r > 0 && s.shape.has_box(r - 1, c) && s.rows[r - 1][c] >= v) return false;
    return true;
  };
  if (!ok(r1, c1) || !ok(r2, c2)) return std::nullopt;
  return s;
}

Poset closure_poset(const std::vector<std::string>& names,
                    const std::vector<std::pair<int, int>>& arrows) {
  auto covers = transitive_reduction(static_cast<int>(names.size()), arrows);
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [a, b] : covers) cov.emplace_back(names[a], names[b]);
  return Poset::from_covers(names, cov, /*require_bounded=*/false);
}

}  // namespace

Poset tableau_swap_poset(const YoungShape& shape, const StandardTableau& t,
                         std::vector<std::pair<std::string, std::string>>* moves) {
  check_tableau_matches(shape, t);
  auto all = standard_tableaux(shape);
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (auto& q : all) {
    index[q.id()] = static_cast<int>(names.size());
    names.push_back(q.id());
  }
  int n = shape.boxes();
  std::vector<std::pair<int, int>> arrows;
  for (auto& q : all) {
    for (int i = 1; i < n; ++i) {
      auto s = tableau_swap(q, i);
      if (!s) continue;
      auto bi = q.box_of(i), bj = q.box_of(i + 1);
      if (t.at(bi.first, bi.second) < t.at(bj.first, bj.second)) {
        arrows.emplace_back(index[q.id()], index[s->id()]);
        if (moves) moves->emplace_back(q.id(), s->id());
      }
    }
  }
  return closure_poset(names, arrows);
}

Poset left_order(const YoungShape& shape) {
  auto all = standard_tableaux(shape);
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (auto& q : all) {
    index[q.id()] = static_cast<int>(names.size());
    names.push_back(q.id());
  }
  int n = shape.boxes();
  std::vector<std::pair<int, int>> arrows;
  for (auto& q : all) {
    for (int i = 1; i < n; ++i) {
      auto s = tableau_swap(q, i);
      if (!s) continue;
      if (q.box_of(i).first < q.box_of(i + 1).first)  // i strictly above i+1
        arrows.emplace_back(index[q.id()], index[s->id()]);
    }
  }
  return closure_poset(names, arrows);
}

Poset restricted_left_weak_order(int, const std::vector<Perm>& set) {
  std::vector<std::string> names;
  for (auto& w : set) names.push_back(perm_string(w));
  std::vector<std::pair<int, int>> rel;
  for (size_t a = 0; a < set.size(); ++a)
    for (size_t b = 0; b < set.size(); ++b)
      if (a != b && left_weak_leq(set[a], set[b])) rel.emplace_back(a, b);
  auto covers = transitive_reduction(static_cast<int>(set.size()), rel);
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [a, b] : covers) cov.emplace_back(names[a], names[b]);
  return Poset::from_covers(names, cov, /*require_bounded=*/false);
}

Poset generalized_quotient(int n, const std::vector<Perm>& v) {
  std::vector<Perm> members;
  for (auto& w : all_permutations(n)) {
    bool ok = true;
    for (auto& u : v)
      if (perm_length(perm_compose(w, u)) != perm_length(w) + perm_length(u)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(w);
  }
  return restricted_left_weak_order(n, members);
}

}  // namespace shellab
