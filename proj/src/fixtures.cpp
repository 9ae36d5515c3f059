#include "shellab/fixtures.hpp"

#include <json.hpp>
#include <map>

namespace shellab {

namespace {

// Each fixture carries poset, labeling, and the expected descent order:
// "expected_cord" lists chains (as element arrays) and cover index pairs.

const char* kFig2 = R"json({
  "poset": {
    "elements": ["0", "z1", "z2", "x1", "x2", "1"],
    "covers": [["0","z1"],["0","z2"],["z1","x1"],["z1","x2"],["z2","x1"],["z2","x2"],["x1","1"],["x2","1"]],
    "bounded": true
  },
  "label_poset": "integers",
  "labeling": {
    "kind": "el",
    "labels": {
      "0|z1": "1", "0|z2": "5",
      "z1|x1": "2", "z1|x2": "5",
      "z2|x1": "4", "z2|x2": "3",
      "x1|1": "3", "x2|1": "4"
    }
  },
  "expected_cord": {
    "chains": [["0","z1","x1","1"], ["0","z1","x2","1"], ["0","z2","x2","1"], ["0","z2","x1","1"]],
    "covers": [[0,1],[1,2],[2,3]]
  }
})json";

const char* kFig3 = R"json({
  "poset": {
    "elements": ["0", "a", "b", "c", "d", "e", "1"],
    "covers": [["0","a"],["a","b"],["b","c"],["c","1"],["a","d"],["d","1"],["a","e"],["e","1"]],
    "bounded": true
  },
  "label_poset": "integers",
  "labeling": {
    "kind": "el",
    "labels": {
      "0|a": "1", "a|b": "2", "b|c": "3", "c|1": "4",
      "a|d": "4", "d|1": "2",
      "a|e": "5", "e|1": "1"
    }
  },
  "expected_cord": {
    "chains": [["0","a","b","c","1"], ["0","a","d","1"], ["0","a","e","1"]],
    "covers": [[0,1],[0,2]]
  }
})json";

const char* kFig5Cl = R"json({
  "poset": {
    "elements": ["0", "z1", "z2", "x1", "x2", "1"],
    "covers": [["0","z1"],["0","z2"],["z1","x1"],["z1","x2"],["z2","x1"],["z2","x2"],["x1","1"],["x2","1"]],
    "bounded": true
  },
  "label_poset": "integers",
  "labeling": {
    "kind": "cl",
    "labels": {
      "0|z1": "3", "0|z2": "1",
      "z1|x1": "2", "z1|x2": "1",
      "z2|x1": "2", "z2|x2": "3",
      "x1|1": "3", "x2|1": "2"
    },
    "rooted_labels": [
      {"root": ["0","z1","x1"], "edge": ["x1","1"], "label": "1"}
    ]
  },
  "expected_cord": {
    "chains": [["0","z2","x1","1"], ["0","z2","x2","1"], ["0","z1","x2","1"], ["0","z1","x1","1"]],
    "covers": [[0,1],[1,2],[2,3]]
  }
})json";

const char* kFig6Lambda = R"json({
  "poset": {
    "elements": ["0", "a", "b", "c", "d", "1"],
    "covers": [["0","a"],["a","b"],["b","d"],["a","c"],["c","d"],["d","1"]],
    "bounded": true
  },
  "label_poset": {
    "elements": ["1", "2", "3", "4", "5"],
    "covers": [["1","2"],["2","3"],["3","4"],["2","5"]],
    "bounded": false
  },
  "labeling": {
    "kind": "el",
    "labels": {
      "0|a": "1", "a|b": "2", "b|d": "3", "d|1": "4",
      "a|c": "5", "c|d": "1"
    }
  },
  "expected_cord": {
    "chains": [["0","a","b","d","1"], ["0","a","c","d","1"]],
    "covers": [[0,1]]
  }
})json";

const char* kFig7 = R"json({
  "poset": {
    "elements": ["0", "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "1"],
    "covers": [["0","a1"],["0","a2"],["0","a3"],
               ["a1","b1"],["a1","b2"],["a2","b1"],["a2","b3"],["a3","b2"],["a3","b3"],
               ["b1","c1"],["b1","c2"],["b2","c2"],["b3","c1"],["b3","c2"],
               ["c1","1"],["c2","1"]],
    "bounded": true
  },
  "label_poset": "integers",
  "labeling": {
    "kind": "el",
    "labels": {
      "0|a1": "1", "0|a2": "2", "0|a3": "3",
      "a1|b1": "2", "a1|b2": "3", "a2|b1": "1", "a2|b3": "6", "a3|b2": "2", "a3|b3": "1",
      "b1|c1": "6", "b1|c2": "3", "b2|c2": "1", "b3|c1": "4", "b3|c2": "5",
      "c1|1": "5", "c2|1": "4"
    }
  },
  "expected_cord": {
    "chains": [["0","a1","b1","c1","1"], ["0","a1","b1","c2","1"], ["0","a1","b2","c2","1"],
               ["0","a2","b1","c1","1"], ["0","a2","b1","c2","1"], ["0","a2","b3","c1","1"],
               ["0","a2","b3","c2","1"], ["0","a3","b2","c2","1"], ["0","a3","b3","c1","1"],
               ["0","a3","b3","c2","1"]],
    "covers": [[1,2],[2,7],[1,0],[0,3],[3,5],[5,6],[6,9],[9,7],[1,4],[4,3],[5,8],[8,9]]
  }
})json";

const char* kPropInvVsStrong = R"json({
  "poset": {
    "elements": ["a", "b", "c", "d"],
    "covers": [["a","b"],["b","d"],["a","c"],["c","d"]],
    "bounded": true
  },
  "label_poset": "integers",
  "labeling": {
    "kind": "el",
    "labels": { "a|b": "1", "b|d": "2", "a|c": "4", "c|d": "3" }
  },
  "expected_cord": {
    "chains": [["a","b","d"], ["a","c","d"]],
    "covers": [[0,1]]
  }
})json";

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> t = {
      {"fig2", kFig2},           {"fig3", kFig3},
      {"fig5_cl", kFig5Cl},      {"fig6_lambda", kFig6Lambda},
      {"fig7", kFig7},           {"prop_inv_vs_strong", kPropInvVsStrong},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto& [k, v] : table()) out.push_back(k);
    return out;
  }();
  return names;
}

const std::string& fixture_json(const std::string& name) {
  static std::map<std::string, std::string> cache;
  auto it = table().find(name);
  if (it == table().end()) fail(Errc::UnknownFixture, "unknown fixture '" + name + "'");
  return cache.emplace(name, it->second).first->second;
}

Fixture fixture(const std::string& name) {
  const std::string& text = fixture_json(name);
  Fixture f;
  f.bundle = bundle_from_json_text(text);
  nlohmann::json j = nlohmann::json::parse(text);
  for (auto& jc : j.at("expected_cord").at("chains")) {
    Chain c;
    for (auto& e : jc) {
      int idx = f.bundle.poset.index_of(e.get<std::string>());
      if (idx < 0) fail(Errc::UnknownElement, "expected chain names unknown element");
      c.push_back(idx);
    }
    f.expected_chains.push_back(std::move(c));
  }
  for (auto& jc : j.at("expected_cord").at("covers"))
    f.expected_covers.emplace_back(jc.at(0).get<int>(), jc.at(1).get<int>());
  return f;
}

}  // namespace shellab
