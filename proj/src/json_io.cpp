#include "shellab/json_io.hpp"

#include <json.hpp>

namespace shellab {

using nlohmann::json;

namespace {

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(Errc::BadInput, "poset object needs 'elements' and 'covers'");
  std::vector<std::string> elements;
  for (auto& e : j.at("elements")) {
    std::string name = e.get<std::string>();
    if (name.find('|') != std::string::npos)
      fail(Errc::BadInput, "element identifiers must not contain '|'");
    elements.push_back(std::move(name));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
  bool bounded = j.value("bounded", true);
  return Poset::from_covers(std::move(elements), covers, bounded);
}

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = json::array();
  for (int i = 0; i < p.size(); ++i) j["elements"].push_back(p.name(i));
  j["covers"] = json::array();
  for (auto& [a, b] : p.cover_pairs()) j["covers"].push_back({p.name(a), p.name(b)});
  j["bounded"] = p.bounded();
  return j;
}

std::pair<int, int> parse_edge_key(const Poset& p, const std::string& key) {
  auto bar = key.find('|');
  if (bar == std::string::npos) fail(Errc::BadInput, "label key must look like 'x|y'");
  int x = p.index_of(key.substr(0, bar)), y = p.index_of(key.substr(bar + 1));
  if (x < 0 || y < 0) fail(Errc::UnknownElement, "label key names unknown element: " + key);
  if (!p.is_cover(x, y)) fail(Errc::BadInput, "label key is not a cover: " + key);
  return {x, y};
}

}  // namespace

Poset poset_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::BadInput, "malformed JSON");
  return poset_from_json(j);
}

std::string poset_to_json_text(const Poset& p) { return poset_to_json(p).dump(2); }

Bundle bundle_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(Errc::BadInput, "malformed JSON");
  if (!j.is_object() || !j.contains("poset")) fail(Errc::BadInput, "bundle needs a 'poset'");
  Bundle b;
  b.poset = poset_from_json(j.at("poset"));

  LabelPoset lp = LabelPoset::integers();
  if (j.contains("label_poset") && !(j.at("label_poset").is_string() &&
                                     j.at("label_poset").get<std::string>() == "integers"))
    lp = LabelPoset::from_poset(poset_from_json(j.at("label_poset")));

  if (!j.contains("labeling")) fail(Errc::BadInput, "bundle needs a 'labeling'");
  const json& jl = j.at("labeling");
  std::string kind = jl.value("kind", "el");
  auto parse_label = [&](const json& v) {
    return lp.parse(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
  };
  std::map<std::pair<int, int>, Label> defaults;
  if (jl.contains("labels"))
    for (auto& [key, value] : jl.at("labels").items())
      defaults[parse_edge_key(b.poset, key)] = parse_label(value);

  if (kind == "el") {
    b.kind = LabelKind::EL;
    // Every cover must carry a label.
    for (auto& [x, y] : b.poset.cover_pairs())
      if (!defaults.count({x, y}))
        fail(Errc::MissingLabel,
             "no label for cover (" + b.poset.name(x) + "," + b.poset.name(y) + ")");
    b.labeling = std::make_shared<EdgeLabeling>(std::move(lp), std::move(defaults));
    return b;
  }
  if (kind != "cl") fail(Errc::BadInput, "labeling kind must be 'el' or 'cl'");
  b.kind = LabelKind::CL;
  std::map<std::pair<Chain, std::pair<int, int>>, Label> rooted;
  if (jl.contains("rooted_labels")) {
    for (auto& item : jl.at("rooted_labels")) {
      Chain root;
      for (auto& e : item.at("root")) {
        int v = b.poset.index_of(e.get<std::string>());
        if (v < 0) fail(Errc::UnknownElement, "rooted label names unknown element");
        root.push_back(v);
      }
      int x = b.poset.index_of(item.at("edge").at(0).get<std::string>());
      int y = b.poset.index_of(item.at("edge").at(1).get<std::string>());
      if (x < 0 || y < 0 || !b.poset.is_cover(x, y))
        fail(Errc::BadInput, "rooted label edge is not a cover");
      if (root.empty() || root.back() != x)
        fail(Errc::BadInput, "root must be a chain from the bottom ending at the edge's lower end");
      rooted[{std::move(root), {x, y}}] = parse_label(item.at("label"));
    }
  }
  b.labeling = std::make_shared<RootedLabeling>(std::move(lp), std::move(defaults), std::move(rooted));
  return b;
}

std::string bundle_to_json_text(const Bundle& b) {
  json j;
  j["poset"] = poset_to_json(b.poset);
  const LabelPoset& lp = b.labeling->lambda();
  j["label_poset"] = lp.is_integers() ? json("integers") : poset_to_json(lp.poset());
  json jl;
  auto edge_key = [&](int x, int y) { return b.poset.name(x) + "|" + b.poset.name(y); };
  if (auto* el = dynamic_cast<const EdgeLabeling*>(b.labeling.get())) {
    jl["kind"] = "el";
    json labels = json::object();
    for (auto& [edge, l] : el->edges()) labels[edge_key(edge.first, edge.second)] = lp.display(l);
    jl["labels"] = labels;
  } else if (auto* cl = dynamic_cast<const RootedLabeling*>(b.labeling.get())) {
    jl["kind"] = "cl";
    json labels = json::object();
    for (auto& [edge, l] : cl->defaults()) labels[edge_key(edge.first, edge.second)] = lp.display(l);
    jl["labels"] = labels;
    json rl = json::array();
    for (auto& [key, l] : cl->rooted()) {
      json item;
      item["root"] = json::array();
      for (int v : key.first) item["root"].push_back(b.poset.name(v));
      item["edge"] = {b.poset.name(key.second.first), b.poset.name(key.second.second)};
      item["label"] = lp.display(l);
      rl.push_back(item);
    }
    jl["rooted_labels"] = rl;
  } else {
    // Materialize callback labelings over covers; only possible root-free.
    if (!b.labeling->root_free())
      fail(Errc::BadInput, "cannot serialize a root-dependent callback labeling");
    jl["kind"] = "el";
    json labels = json::object();
    for (auto& [x, y] : b.poset.cover_pairs())
      labels[edge_key(x, y)] = lp.display(b.labeling->label(b.poset, {}, x, y));
    jl["labels"] = labels;
  }
  j["labeling"] = jl;
  return j.dump(2);
}

std::string mcd_to_json_text(const Bundle& b, const MCDOrder& mcd) {
  json j;
  j["chains"] = json::array();
  for (size_t i = 0; i < mcd.chains.size(); ++i) {
    json c = json::array();
    for (int v : mcd.chains[i]) c.push_back(b.poset.name(v));
    j["chains"].push_back(c);
  }
  j["label_sequences"] = json::array();
  for (size_t i = 0; i < mcd.chains.size(); ++i)
    j["label_sequences"].push_back(mcd.seq_string(static_cast<int>(i), b.labeling->lambda()));
  j["moves"] = json::array();
  for (auto& mv : mcd.moves) j["moves"].push_back({mv.src, mv.dst});
  j["covers"] = json::array();
  for (auto& [a, c] : mcd.covers) j["covers"].push_back({a, c});
  j["minimum"] = mcd.minimum;
  return j.dump(2);
}

}  // namespace shellab
