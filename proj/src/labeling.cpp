#include "shellab/labeling.hpp"

#include <algorithm>
#include <array>

namespace shellab {

LabelPoset LabelPoset::from_poset(Poset p) {
  LabelPoset lp;
  lp.explicit_ = std::move(p);
  return lp;
}

Label LabelPoset::parse(const std::string& s) const {
  if (is_integers()) {
    try {
      size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos == s.size()) return v;
    } catch (...) {
    }
    fail(Errc::BadInput, "label '" + s + "' is not an integer");
  }
  int i = explicit_->index_of(s);
  if (i < 0) fail(Errc::UnknownElement, "label '" + s + "' not in label poset");
  return i;
}

Label EdgeLabeling::label(const Poset& p, ChainView, int x, int y) const {
  auto it = edges_.find({x, y});
  if (it == edges_.end())
    fail(Errc::MissingLabel, "no label for cover (" + p.name(x) + "," + p.name(y) + ")");
  return it->second;
}

Label RootedLabeling::label(const Poset& p, ChainView root, int x, int y) const {
  if (root.empty() || root.back() != x)
    fail(Errc::BadInput, "chain-edge labeling needs a root ending at " + p.name(x));
  auto it = rooted_.find({Chain(root.begin(), root.end()), {x, y}});
  if (it != rooted_.end()) return it->second;
  auto jt = defaults_.find({x, y});
  if (jt == defaults_.end())
    fail(Errc::MissingLabel, "no label for cover (" + p.name(x) + "," + p.name(y) + ")");
  return jt->second;
}

LabelSeq label_sequence(const Poset& p, const Labeling& lab, ChainView chain, ChainView root) {
  LabelSeq out;
  if (chain.size() <= 1) return out;
  Chain prefix;
  if (root.empty()) {
    if (!lab.root_free() && p.bounded() && chain.front() != p.bottom())
      fail(Errc::BadInput, "chain-edge labeling needs a root for chains not at the bottom");
    prefix.assign(chain.begin(), chain.begin() + 1);
  } else {
    if (root.back() != chain.front()) fail(Errc::BadInput, "root must end at the chain's bottom");
    prefix.assign(root.begin(), root.end());
  }
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    out.push_back(lab.label(p, prefix, chain[i], chain[i + 1]));
    prefix.push_back(chain[i + 1]);
  }
  return out;
}

std::vector<int> descent_positions(const LabelPoset& lp, const LabelSeq& seq) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!lp.leq(seq[i], seq[i + 1])) out.push_back(static_cast<int>(i) + 1);  // 1-based position
  return out;
}

std::vector<int> descent_elements(const Poset& p, const Labeling& lab, ChainView chain,
                                  ChainView root) {
  LabelSeq seq = label_sequence(p, lab, chain, root);
  std::vector<int> out;
  for (int pos : descent_positions(lab.lambda(), seq)) out.push_back(chain[pos]);
  return out;
}

bool is_ascending(const LabelPoset& lp, const LabelSeq& seq) {
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!lp.leq(seq[i], seq[i + 1])) return false;
  return true;
}

bool is_descending(const LabelPoset& lp, const LabelSeq& seq) {
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (lp.leq(seq[i], seq[i + 1])) return false;
  return true;
}

Lex lex_compare(const LabelSeq& a, const LabelSeq& b, const LabelPoset& lp) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    if (lp.less(a[i], b[i])) return Lex::Less;
    if (lp.less(b[i], a[i])) return Lex::Greater;
    return Lex::Incomparable;
  }
  if (a.size() == b.size()) return Lex::Equal;
  return a.size() < b.size() ? Lex::Less : Lex::Greater;
}

namespace {

IntervalCheck check_interval(const Poset& p, const Labeling& lab, int x, int y, const Chain& root) {
  IntervalCheck c;
  c.x = x;
  c.y = y;
  c.root = root;
  auto chains = p.saturated_chains(x, y);
  c.chain_count = static_cast<int>(chains.size());
  std::vector<LabelSeq> seqs;
  seqs.reserve(chains.size());
  for (auto& ch : chains) seqs.push_back(label_sequence(p, lab, ch, root));
  int asc = -1;
  for (size_t i = 0; i < seqs.size(); ++i) {
    if (is_ascending(lab.lambda(), seqs[i])) {
      c.ascending_count++;
      asc = static_cast<int>(i);
    }
  }
  c.lex_first = (c.ascending_count == 1);
  if (c.ascending_count == 1) {
    for (size_t i = 0; i < seqs.size(); ++i) {
      if (static_cast<int>(i) == asc) continue;
      if (lex_compare(seqs[asc], seqs[i], lab.lambda()) != Lex::Less) {
        c.lex_first = false;
        break;
      }
    }
  }
  c.ok = (c.ascending_count == 1 && c.lex_first);
  return c;
}

}  // namespace

ValidationReport validate_labeling(const Poset& p, const Labeling& lab, LabelKind kind) {
  if (!p.bounded()) fail(Errc::NotBounded, "validation needs a bounded poset");
  ValidationReport rep;
  rep.valid = true;
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.lt(x, y)) continue;
      std::vector<Chain> roots;
      if (kind == LabelKind::EL || lab.root_free()) {
        roots.push_back(p.saturated_chains(p.bottom(), x).front());
      } else {
        roots = p.saturated_chains(p.bottom(), x);
      }
      for (auto& r : roots) {
        IntervalCheck c = check_interval(p, lab, x, y, r);
        rep.intervals_checked++;
        if (!c.ok) {
          rep.valid = false;
          rep.failures.push_back(c);
        }
        rep.entries.push_back(std::move(c));
      }
    }
  }
  return rep;
}

namespace {

class RestrictedLabeling final : public Labeling {
 public:
  RestrictedLabeling(const Poset& parent, std::shared_ptr<const Labeling> lab,
                     std::vector<int> back_map, Chain root)
      : Labeling(lab->lambda()),
        parent_(&parent),
        lab_(std::move(lab)),
        back_(std::move(back_map)),
        root_(std::move(root)) {}

  bool root_free() const override { return lab_->root_free(); }

  Label label(const Poset&, ChainView root, int x, int y) const override {
    Chain full = root_;
    // `root` is a chain of interval indices ending at x; root_ already ends
    // at the interval's bottom in parent coordinates.
    for (size_t i = 1; i < root.size(); ++i) full.push_back(back_[root[i]]);
    if (lab_->root_free() && full.empty()) full.push_back(back_[x]);
    return lab_->label(*parent_, full, back_[x], back_[y]);
  }

 private:
  const Poset* parent_;
  std::shared_ptr<const Labeling> lab_;
  std::vector<int> back_;
  Chain root_;
};

}  // namespace

std::shared_ptr<Labeling> restrict_labeling(const Poset& parent,
                                            std::shared_ptr<const Labeling> lab,
                                            const Poset& interval, std::span<const int> back_map,
                                            Chain root) {
  if (root.empty()) {
    int base = back_map[interval.bottom()];
    if (!lab->root_free() && parent.bounded() && base != parent.bottom())
      fail(Errc::BadInput, "restriction of a chain-edge labeling needs a root to the interval bottom");
    root.push_back(base);
  } else if (root.back() != back_map[interval.bottom()]) {
    fail(Errc::BadInput, "root must end at the interval bottom");
  }
  return std::make_shared<RestrictedLabeling>(parent, std::move(lab),
                                              std::vector<int>(back_map.begin(), back_map.end()),
                                              std::move(root));
}

SnElReport is_sn_el(const Poset& p, const Labeling& lab) {
  SnElReport rep;
  auto rk = p.rank_function();
  if (!rk || !p.bounded()) return rep;
  int n = (*rk)[p.top()];
  auto chains = p.maximal_chains();
  std::set<Label> labels;
  for (auto& m : chains) {
    LabelSeq seq = label_sequence(p, lab, m);
    std::set<Label> here(seq.begin(), seq.end());
    if (static_cast<int>(here.size()) != n) return rep;  // repeated label in a chain
    if (labels.empty()) {
      labels = here;
    } else if (labels != here) {
      return rep;
    }
  }
  // The common label set must be totally ordered in Lambda.
  std::vector<Label> sorted(labels.begin(), labels.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (!lab.lambda().leq(sorted[i], sorted[j]) && !lab.lambda().leq(sorted[j], sorted[i]))
        return rep;
  std::sort(sorted.begin(), sorted.end(),
            [&](Label a, Label b) { return lab.lambda().less(a, b); });
  rep.is_sn = true;
  rep.rank = n;
  rep.sorted_labels = std::move(sorted);
  return rep;
}

PolygonStrongReport is_polygon_strong(const Poset& p, const Labeling& lab) {
  if (!lab.root_free()) fail(Errc::BadInput, "polygon strong is defined for edge labelings");
  PolygonStrongReport rep;
  rep.strong = true;
  for (int y = 0; y < p.size(); ++y) {
    for (int x : p.down(y)) {
      for (int z : p.up(y)) {
        Label a = lab.label(p, {}, x, y), b = lab.label(p, {}, y, z);
        if (lab.lambda().leq(a, b)) continue;  // not a descent
        // Ascending chain of [x,z]; its coatom is y'.
        auto chains = p.saturated_chains(x, z);
        int yprime = -1;
        for (auto& c : chains) {
          if (is_ascending(lab.lambda(), label_sequence(p, lab, c,
                                                        p.saturated_chains(p.bottom(), x).front()))) {
            yprime = c[c.size() - 2];
            break;
          }
        }
        if (yprime < 0) fail(Errc::BadInput, "no ascending chain; labeling not validated?");
        Label top = lab.label(p, {}, yprime, z);
        if (!lab.lambda().less(b, top)) {
          rep.strong = false;
          rep.counterexample = {x, y, z};
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace shellab
