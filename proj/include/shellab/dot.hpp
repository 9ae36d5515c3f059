#pragma once

#include <string>

#include "shellab/descent_order.hpp"
#include "shellab/poset.hpp"

namespace shellab {

// Hasse diagram, edges drawn upward (rankdir=BT).
std::string poset_to_dot(const Poset& p);

// The descent order with chains rendered as their label sequences.
std::string mcd_to_dot(const MCDOrder& mcd, const LabelPoset& lp);

}  // namespace shellab
