#include "shellab/dot.hpp"

namespace shellab {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i) out += "  " + quote(p.name(i)) + ";\n";
  for (auto& [a, b] : p.cover_pairs())
    out += "  " + quote(p.name(a)) + " -> " + quote(p.name(b)) + ";\n";
  return out + "}\n";
}

std::string mcd_to_dot(const MCDOrder& mcd, const LabelPoset& lp) {
  std::string out = "digraph mcd {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (size_t i = 0; i < mcd.chains.size(); ++i)
    out += "  m" + std::to_string(i) + " [label=" + quote(mcd.seq_string(static_cast<int>(i), lp)) +
           "];\n";
  for (auto& [a, b] : mcd.covers)
    out += "  m" + std::to_string(a) + " -> m" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace shellab
