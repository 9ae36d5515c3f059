#pragma once

#include "shellab/json_io.hpp"

namespace shellab {

// A bundled labeled poset together with the expected Hasse diagram of its
// maximal chain descent order, for regression checks.
struct Fixture {
  Bundle bundle;
  std::vector<Chain> expected_chains;                 // element indices of bundle.poset
  std::vector<std::pair<int, int>> expected_covers;   // indices into expected_chains
};

// Names: fig2, fig3, fig5_cl, fig6_lambda, fig7, prop_inv_vs_strong.
Fixture fixture(const std::string& name);
const std::vector<std::string>& fixture_names();
// The raw JSON a fixture is built from (same content as fixtures/<name>.json).
const std::string& fixture_json(const std::string& name);

}  // namespace shellab
