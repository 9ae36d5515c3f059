#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shellab/poset.hpp"

namespace shellab {

// A label is an integer value when the label poset is the integers, or an
// index into the label poset's element list otherwise.
using Label = int;
using LabelSeq = std::vector<Label>;

enum class Lex { Less, Greater, Equal, Incomparable };
enum class LabelKind { EL, CL };

// The label poset Lambda. Integer labels with their usual total order are the
// common case; an arbitrary finite poset is supported because descents only
// need the relation "not <=".
class LabelPoset {
 public:
  static LabelPoset integers() { return LabelPoset(); }
  static LabelPoset from_poset(Poset p);

  bool is_integers() const { return !explicit_.has_value(); }
  const Poset& poset() const { return *explicit_; }

  bool leq(Label a, Label b) const {
    return is_integers() ? a <= b : explicit_->leq(a, b);
  }
  bool less(Label a, Label b) const { return a != b && leq(a, b); }
  std::string display(Label a) const {
    return is_integers() ? std::to_string(a) : explicit_->name(a);
  }
  Label parse(const std::string& s) const;

 private:
  LabelPoset() = default;
  std::optional<Poset> explicit_;
};

// Chain-edge labeling. The label of a cover (x,y) may depend on the saturated
// chain from the bottom element to x used to reach it; edge labelings ignore
// the root. Keying on the full root prefix makes well-definedness structural.
class Labeling {
 public:
  explicit Labeling(LabelPoset lp) : lambda_(std::move(lp)) {}
  virtual ~Labeling() = default;

  const LabelPoset& lambda() const { return lambda_; }
  virtual bool root_free() const = 0;
  // `root` is a saturated chain from the bottom of the poset to x, inclusive
  // of x. Root-free labelings accept an empty root.
  virtual Label label(const Poset& p, ChainView root, int x, int y) const = 0;

 private:
  LabelPoset lambda_;
};

class EdgeLabeling final : public Labeling {
 public:
  EdgeLabeling(LabelPoset lp, std::map<std::pair<int, int>, Label> edges)
      : Labeling(std::move(lp)), edges_(std::move(edges)) {}
  bool root_free() const override { return true; }
  Label label(const Poset& p, ChainView, int x, int y) const override;
  const std::map<std::pair<int, int>, Label>& edges() const { return edges_; }

 private:
  std::map<std::pair<int, int>, Label> edges_;
};

class RootedLabeling final : public Labeling {
 public:
  RootedLabeling(LabelPoset lp, std::map<std::pair<int, int>, Label> defaults,
                 std::map<std::pair<Chain, std::pair<int, int>>, Label> rooted)
      : Labeling(std::move(lp)), defaults_(std::move(defaults)), rooted_(std::move(rooted)) {}
  bool root_free() const override { return false; }
  Label label(const Poset& p, ChainView root, int x, int y) const override;
  const std::map<std::pair<int, int>, Label>& defaults() const { return defaults_; }
  const std::map<std::pair<Chain, std::pair<int, int>>, Label>& rooted() const { return rooted_; }

 private:
  std::map<std::pair<int, int>, Label> defaults_;
  std::map<std::pair<Chain, std::pair<int, int>>, Label> rooted_;
};

class CallbackLabeling final : public Labeling {
 public:
  using Fn = std::function<Label(const Poset&, ChainView root, int x, int y)>;
  CallbackLabeling(LabelPoset lp, Fn fn, bool root_free)
      : Labeling(std::move(lp)), fn_(std::move(fn)), root_free_(root_free) {}
  bool root_free() const override { return root_free_; }
  Label label(const Poset& p, ChainView root, int x, int y) const override {
    return fn_(p, root, x, y);
  }

 private:
  Fn fn_;
  bool root_free_;
};

// Labels of a saturated chain, in chain order. For a chain-edge labeling the
// chain must either start at the bottom or come with a root: a saturated
// chain from the bottom ending at chain.front().
LabelSeq label_sequence(const Poset& p, const Labeling& lab, ChainView chain, ChainView root = {});

// Interior chain elements x_i with labels(i) not <= labels(i+1) in Lambda.
std::vector<int> descent_elements(const Poset& p, const Labeling& lab, ChainView chain,
                                  ChainView root = {});
std::vector<int> descent_positions(const LabelPoset& lp, const LabelSeq& seq);
bool is_ascending(const LabelPoset& lp, const LabelSeq& seq);
bool is_descending(const LabelPoset& lp, const LabelSeq& seq);

Lex lex_compare(const LabelSeq& a, const LabelSeq& b, const LabelPoset& lp);

struct IntervalCheck {
  int x = -1, y = -1;
  Chain root;  // empty for edge labelings
  int chain_count = 0;
  int ascending_count = 0;
  bool lex_first = false;
  bool ok = false;
};

struct ValidationReport {
  bool valid = false;
  int intervals_checked = 0;
  std::vector<IntervalCheck> entries;   // one per (rooted) closed interval
  std::vector<IntervalCheck> failures;  // the subset that failed
};

// Checks the defining property on every (rooted) closed interval: exactly one
// ascending maximal chain, lexicographically strictly before all others.
ValidationReport validate_labeling(const Poset& p, const Labeling& lab, LabelKind kind);

// Labeling of a closed interval [x,y] of `parent`, re-based on `root` (a
// saturated chain from the parent's bottom to x, inclusive; required for
// chain-edge labelings).
std::shared_ptr<Labeling> restrict_labeling(const Poset& parent,
                                            std::shared_ptr<const Labeling> lab,
                                            const Poset& interval, std::span<const int> back_map,
                                            Chain root = {});

struct SnElReport {
  bool is_sn = false;
  int rank = 0;
  std::vector<Label> sorted_labels;  // the common label set, ascending in Lambda
};

// True iff every maximal chain's label sequence is a permutation of one fixed
// set of rank-many Lambda-totally-ordered labels (permutation labels up to
// order isomorphism).
SnElReport is_sn_el(const Poset& p, const Labeling& lab);

struct PolygonStrongReport {
  bool strong = false;
  std::optional<std::array<int, 3>> counterexample;  // (x, y, z)
};

// Edge labelings only: for every descent x<y<z the second label must be
// strictly below the last label of the ascending chain of [x,z].
PolygonStrongReport is_polygon_strong(const Poset& p, const Labeling& lab);

}  // namespace shellab
