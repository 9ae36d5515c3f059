#pragma once

#include <memory>
#include <string>

#include "shellab/descent_order.hpp"
#include "shellab/labeling.hpp"
#include "shellab/poset.hpp"

namespace shellab {

// A poset together with a labeling, the unit the command line passes between
// subcommands.
struct Bundle {
  Poset poset;
  std::shared_ptr<Labeling> labeling;
  LabelKind kind = LabelKind::EL;
};

// Schemas:
//   poset     {"elements":[...], "covers":[["x","y"],...], "bounded":true}
//   labeling  {"kind":"el", "labels":{"x|y":"3", ...}}
//             {"kind":"cl", "labels":{...}, "rooted_labels":[
//                {"root":["0","z1","x1"], "edge":["x1","1"], "label":"1"}]}
//   bundle    {"poset":..., "label_poset":"integers"|poset, "labeling":...}
// Roots list the full saturated chain from the bottom, including the edge's
// lower endpoint. Element identifiers must not contain '|'.
Poset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const Poset& p);

Bundle bundle_from_json_text(const std::string& text);
std::string bundle_to_json_text(const Bundle& b);

std::string mcd_to_json_text(const Bundle& b, const MCDOrder& mcd);

}  // namespace shellab
