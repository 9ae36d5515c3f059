#include "shellab.h"

#include <cstring>
#include <json.hpp>
#include <string>

#include "shellab/dot.hpp"
#include "shellab/families.hpp"
#include "shellab/fixtures.hpp"
#include "shellab/json_io.hpp"
#include "shellab/shelling.hpp"

using nlohmann::json;
using namespace shellab;

struct shellab_bundle {
  Bundle b;
};
struct shellab_mcd {
  MCDOrder m;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** errmsg, const std::string& s) {
  if (errmsg) *errmsg = dup_string(s);
}

template <typename Fn>
shellab_status guarded(char** errmsg, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    set_err(errmsg, e.what());
    return SHELLAB_ERR_INPUT;
  } catch (const std::exception& e) {
    set_err(errmsg, e.what());
    return SHELLAB_ERR_INTERNAL;
  }
}

Bundle family_from_spec(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("family"))
    fail(Errc::BadInput, "family spec needs a 'family' key");
  std::string family = j.at("family").get<std::string>();
  if (family == "boolean") {
    auto fi = boolean_lattice(j.at("n").get<int>());
    return Bundle{std::move(fi.poset), std::move(fi.labeling), LabelKind::EL};
  }
  if (family == "partition") {
    PartitionLattice pl = partition_lattice(j.at("n").get<int>());
    std::string lab = j.value("labeling", std::string("maxmin"));
    std::shared_ptr<Labeling> labeling;
    if (lab == "maxmin") {
      labeling = max_min_labeling(pl);
    } else if (lab == "minimal") {
      std::vector<int> order;
      if (j.contains("atom_order")) {
        for (auto& a : j.at("atom_order")) {
          int idx = pl.poset.index_of(a.get<std::string>());
          if (idx < 0) fail(Errc::UnknownElement, "atom order names unknown element");
          order.push_back(idx);
        }
      } else {
        order = pl.poset.atoms();
      }
      labeling = minimal_labeling(pl.poset, order);
    } else {
      fail(Errc::BadInput, "partition labeling must be 'maxmin' or 'minimal'");
    }
    return Bundle{std::move(pl.poset), std::move(labeling), LabelKind::EL};
  }
  if (family == "young") {
    YoungShape shape;
    for (auto& v : j.at("shape")) shape.outer.push_back(v.get<int>());
    if (j.contains("inner"))
      for (auto& v : j.at("inner")) shape.inner.push_back(v.get<int>());
    StandardTableau t;
    if (j.contains("tableau")) {
      t.shape = shape;
      for (auto& row : j.at("tableau")) {
        t.rows.emplace_back();
        for (auto& v : row) t.rows.back().push_back(v.get<int>());
      }
      // Pad inner boxes with zeros so coordinates line up.
      for (size_t r = 0; r < shape.outer.size(); ++r) {
        int in = r < shape.inner.size() ? shape.inner[r] : 0;
        if (r >= t.rows.size()) t.rows.emplace_back();
        std::vector<int> padded(in, 0);
        padded.insert(padded.end(), t.rows[r].begin(), t.rows[r].end());
        padded.resize(shape.outer[r], 0);
        t.rows[r] = padded;
      }
    } else {
      t = row_tableau(shape);
    }
    auto fi = young_interval(shape, t);
    return Bundle{std::move(fi.poset), std::move(fi.labeling), LabelKind::EL};
  }
  if (family == "jp") {
    Poset q = poset_from_json_text(j.at("poset").dump());
    std::vector<int> ext;
    for (auto& e : j.at("extension")) {
      int idx = q.index_of(e.get<std::string>());
      if (idx < 0) fail(Errc::UnknownElement, "extension names unknown element");
      ext.push_back(idx);
    }
    auto fi = distributive_lattice(q, ext);
    return Bundle{std::move(fi.poset), std::move(fi.labeling), LabelKind::EL};
  }
  fail(Errc::BadInput, "unknown family '" + family + "'");
}

json validation_to_json(const Bundle& b, const ValidationReport& rep) {
  json j;
  j["valid"] = rep.valid;
  j["intervals_checked"] = rep.intervals_checked;
  j["failures"] = json::array();
  for (auto& f : rep.failures) {
    json e;
    e["interval"] = {b.poset.name(f.x), b.poset.name(f.y)};
    json root = json::array();
    for (int v : f.root) root.push_back(b.poset.name(v));
    e["root"] = root;
    e["chains"] = f.chain_count;
    e["ascending_chains"] = f.ascending_count;
    e["ascending_is_lex_first"] = f.lex_first;
    j["failures"].push_back(e);
  }
  return j;
}

json chain_names(const Bundle& b, const Chain& c) {
  json out = json::array();
  for (int v : c) out.push_back(b.poset.name(v));
  return out;
}

}  // namespace

extern "C" {

const char* shellab_version(void) { return "shellab 1.0.0"; }

void shellab_string_free(char* s) { std::free(s); }
void shellab_bundle_free(shellab_bundle* b) { delete b; }
void shellab_mcd_free(shellab_mcd* m) { delete m; }

shellab_status shellab_bundle_parse(const char* text, shellab_bundle** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = new shellab_bundle{bundle_from_json_text(text ? text : "")};
    return SHELLAB_OK;
  });
}

shellab_status shellab_bundle_family(const char* spec, shellab_bundle** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = new shellab_bundle{family_from_spec(spec ? spec : "")};
    return SHELLAB_OK;
  });
}

shellab_status shellab_bundle_fixture(const char* name, shellab_bundle** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = new shellab_bundle{fixture(name ? name : "").bundle};
    return SHELLAB_OK;
  });
}

char* shellab_bundle_json(const shellab_bundle* b) { return dup_string(bundle_to_json_text(b->b)); }

char* shellab_bundle_dot(const shellab_bundle* b) { return dup_string(poset_to_dot(b->b.poset)); }

shellab_status shellab_validate(const shellab_bundle* b, const char* kind, char** report_json) {
  return guarded(report_json, [&] {
    LabelKind k = LabelKind::EL;
    if (kind && std::string(kind) == "cl") k = LabelKind::CL;
    else if (kind && std::string(kind) != "el")
      fail(Errc::BadInput, "kind must be 'el' or 'cl'");
    auto rep = validate_labeling(b->b.poset, *b->b.labeling, k);
    if (report_json) *report_json = dup_string(validation_to_json(b->b, rep).dump(2));
    return rep.valid ? SHELLAB_OK : SHELLAB_FALSE;
  });
}

shellab_status shellab_mcd_build(const shellab_bundle* b, shellab_mcd** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = new shellab_mcd{build_mcd(b->b.poset, *b->b.labeling)};
    return SHELLAB_OK;
  });
}

char* shellab_mcd_json(const shellab_bundle* b, const shellab_mcd* m) {
  return dup_string(mcd_to_json_text(b->b, m->m));
}

char* shellab_mcd_dot(const shellab_bundle* b, const shellab_mcd* m) {
  return dup_string(mcd_to_dot(m->m, b->b.labeling->lambda()));
}

shellab_status shellab_polygon_complete(const shellab_bundle* b, const shellab_mcd* m,
                                        char** report_json) {
  return guarded(report_json, [&] {
    auto rep = is_polygon_complete(m->m);
    json j;
    j["polygon_complete"] = rep.complete;
    j["noncover_moves"] = json::array();
    for (int k : rep.noncover_moves) {
      const auto& mv = m->m.moves[k];
      json e;
      e["from"] = chain_names(b->b, m->m.chains[mv.src]);
      e["to"] = chain_names(b->b, m->m.chains[mv.dst]);
      e["from_labels"] = m->m.seq_string(mv.src, b->b.labeling->lambda());
      e["to_labels"] = m->m.seq_string(mv.dst, b->b.labeling->lambda());
      j["noncover_moves"].push_back(e);
    }
    if (report_json) *report_json = dup_string(j.dump(2));
    return rep.complete ? SHELLAB_OK : SHELLAB_FALSE;
  });
}

shellab_status shellab_inversion_ranked(const shellab_bundle* b, char** report_json) {
  return guarded(report_json, [&] {
    MCDOrder mcd = build_mcd(b->b.poset, *b->b.labeling);
    auto rep = is_inversion_ranked(b->b.poset, *b->b.labeling, mcd);
    json j;
    j["inversion_ranked"] = rep.inversion_ranked;
    if (rep.counterexample) {
      j["counterexample"] = {
          {"from", chain_names(b->b, mcd.chains[rep.counterexample->src])},
          {"to", chain_names(b->b, mcd.chains[rep.counterexample->dst])},
          {"inversions_from", rep.inv_src},
          {"inversions_to", rep.inv_dst}};
    }
    if (report_json) *report_json = dup_string(j.dump(2));
    return rep.inversion_ranked ? SHELLAB_OK : SHELLAB_FALSE;
  });
}

shellab_status shellab_polygon_strong(const shellab_bundle* b, char** report_json) {
  return guarded(report_json, [&] {
    auto rep = is_polygon_strong(b->b.poset, *b->b.labeling);
    json j;
    j["polygon_strong"] = rep.strong;
    if (rep.counterexample) {
      j["counterexample"] = {b->b.poset.name((*rep.counterexample)[0]),
                             b->b.poset.name((*rep.counterexample)[1]),
                             b->b.poset.name((*rep.counterexample)[2])};
    }
    if (report_json) *report_json = dup_string(j.dump(2));
    return rep.strong ? SHELLAB_OK : SHELLAB_FALSE;
  });
}

shellab_status shellab_shelling_check(const shellab_bundle* b, const char* order_json,
                                      char** report_json) {
  return guarded(report_json, [&] {
    json jo = json::parse(order_json ? order_json : "", nullptr, false);
    if (jo.is_discarded() || !jo.is_array()) fail(Errc::BadInput, "order must be a JSON array");
    MCDOrder mcd = build_mcd(b->b.poset, *b->b.labeling);
    std::vector<int> order;
    for (auto& jc : jo) {
      Chain c;
      for (auto& e : jc) {
        int v = b->b.poset.index_of(e.get<std::string>());
        if (v < 0) fail(Errc::UnknownElement, "order names unknown element");
        c.push_back(v);
      }
      int idx = mcd.index_of(c);
      if (idx < 0) fail(Errc::BadInput, "order entry is not a maximal chain");
      order.push_back(idx);
    }
    {
      std::vector<int> seen(mcd.chains.size(), 0);
      for (int v : order)
        if (seen[v]++) fail(Errc::BadInput, "order repeats a chain");
      if (order.size() != mcd.chains.size()) fail(Errc::BadInput, "order must list every maximal chain");
    }
    OrderComplex cx = order_complex(b->b.poset, false);
    auto res = shelling_equivalence_check(b->b.poset, *b->b.labeling, mcd, cx, order);
    auto rest = restriction_map(cx, order);
    auto part = partition_characterization(cx, order, rest);
    json j;
    j["linear_extension_of_descent_order"] = res.lin_ext;
    j["shelling_with_descent_restriction"] = res.shelling_with_descents;
    j["verdicts_agree"] = res.agree;
    j["codim1_ok"] = is_shelling_codim1(cx, order);
    j["partition_ok"] = part.partition_ok;
    j["containment_ok"] = part.containment_ok;
    json table = json::array();
    auto desc = descent_restriction(b->b.poset, *b->b.labeling, cx);
    for (size_t k = 0; k < order.size(); ++k) {
      int f = order[k];
      json row;
      row["facet"] = chain_names(b->b, mcd.chains[f]);
      row["labels"] = mcd.seq_string(f, b->b.labeling->lambda());
      json rset = json::array();
      for (int v : rest[f].members()) rset.push_back(b->b.poset.name(v));
      row["restriction"] = rset;
      // Homology facets live in the proper part: the restriction face must
      // be the whole facet minus the cone points.
      Bitset interior = cx.facets[f];
      interior.reset(b->b.poset.bottom());
      interior.reset(b->b.poset.top());
      row["homology_facet"] = rest[f] == interior;
      row["restriction_matches_descents"] = rest[f] == desc[f];
      table.push_back(row);
    }
    j["facets"] = table;
    if (report_json) *report_json = dup_string(j.dump(2));
    return (res.lin_ext && res.shelling_with_descents) ? SHELLAB_OK : SHELLAB_FALSE;
  });
}

shellab_status shellab_equivalence_audit(const shellab_bundle* b, uint64_t seed,
                                         int exhaustive_threshold, char** report_json) {
  return guarded(report_json, [&] {
    MCDOrder mcd = build_mcd(b->b.poset, *b->b.labeling);
    auto rep = equivalence_audit(b->b.poset, *b->b.labeling, mcd, seed, exhaustive_threshold);
    json j;
    j["orders_checked"] = rep.orders_checked;
    j["mismatches"] = rep.mismatches;
    j["linear_extension_orders"] = rep.lin_ext_orders;
    j["exhaustive"] = rep.exhaustive;
    if (report_json) *report_json = dup_string(j.dump(2));
    return rep.mismatches == 0 ? SHELLAB_OK : SHELLAB_FALSE;
  });
}

shellab_status shellab_witnesses(const shellab_bundle* b, char** report_json) {
  return guarded(report_json, [&] {
    json j;
    auto easy = find_easy_noncover_witness(b->b.poset, *b->b.labeling);
    if (easy) {
      j["easy_witness"] = {{"root", chain_names(b->b, easy->root)},
                           {"ascending", chain_names(b->b, easy->ascending)},
                           {"detour", chain_names(b->b, easy->detour)}};
    } else {
      j["easy_witness"] = nullptr;
    }
    MCDOrder mcd = build_mcd(b->b.poset, *b->b.labeling);
    auto comp = is_polygon_complete(mcd);
    j["characterization_witnesses"] = json::array();
    for (int k : comp.noncover_moves) {
      auto w = find_characterization_witness(b->b.poset, b->b.labeling, mcd, k);
      bool ok = verify_characterization_witness(b->b.poset, b->b.labeling, w);
      json e;
      e["move"] = {chain_names(b->b, mcd.chains[mcd.moves[k].src]),
                   chain_names(b->b, mcd.chains[mcd.moves[k].dst])};
      e["y"] = b->b.poset.name(w.y);
      json xs = json::array(), zs = json::array();
      for (int v : w.xs) xs.push_back(b->b.poset.name(v));
      for (int v : w.zs) zs.push_back(b->b.poset.name(v));
      e["x"] = xs;
      e["z"] = zs;
      e["verified"] = ok;
      j["characterization_witnesses"].push_back(e);
    }
    if (report_json) *report_json = dup_string(j.dump(2));
    return SHELLAB_OK;
  });
}

}  // extern "C"
