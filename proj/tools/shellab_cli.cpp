// Command line front end. Subcommands read a bundle (poset + labeling) from a
// file or stdin and write JSON, DOT, or tables to stdout, so they compose:
//   shellab family boolean 3 | shellab mcd --format dot
// Exit codes: 0 success / true verdict, 1 false verdict, 2 input error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "shellab.h"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct BundleHandle {
  shellab_bundle* b = nullptr;
  ~BundleHandle() { shellab_bundle_free(b); }
};

struct McdHandle {
  shellab_mcd* m = nullptr;
  ~McdHandle() { shellab_mcd_free(m); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  shellab_string_free(s);
  return out;
}

int fail_input(char* errmsg) {
  std::cerr << "error: " << take(errmsg) << "\n";
  return 2;
}

void load_bundle(const std::string& path, BundleHandle& h) {
  std::string text = read_input(path);
  char* err = nullptr;
  if (shellab_bundle_parse(text.c_str(), &h.b, &err) != SHELLAB_OK) std::exit(fail_input(err));
}

int emit_verdict(shellab_status st, const std::string& report, const std::string& format) {
  if (st >= SHELLAB_ERR_INPUT) {
    std::cerr << "error: " << report << "\n";
    return 2;
  }
  if (format == "table") {
    json j = json::parse(report, nullptr, false);
    if (!j.is_discarded() && j.is_object()) {
      for (auto& [k, v] : j.items())
        if (!v.is_array() && !v.is_object()) std::cout << k << ": " << v.dump() << "\n";
    }
  } else {
    std::cout << report << "\n";
  }
  return st == SHELLAB_OK ? 0 : 1;
}

void print_shelling_table(const json& j) {
  std::cout << "lin-ext-of-descent-order: " << j.at("linear_extension_of_descent_order").dump()
            << "  shelling-with-descents: " << j.at("shelling_with_descent_restriction").dump()
            << "\n";
  std::printf("%-28s %-12s %-24s %s\n", "facet", "labels", "restriction", "homology");
  for (auto& row : j.at("facets")) {
    std::string facet;
    for (auto& e : row.at("facet")) facet += e.get<std::string>() + " ";
    std::string rest;
    for (auto& e : row.at("restriction")) rest += e.get<std::string>() + " ";
    std::printf("%-28s %-12s %-24s %s\n", facet.c_str(),
                row.at("labels").get<std::string>().c_str(), rest.c_str(),
                row.at("homology_facet").get<bool>() ? "yes" : "no");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal chain descent orders, shellings, and labeled poset families"};
  app.require_subcommand(1);

  std::string input = "-", format = "json", kind = "el", order_file;
  uint64_t seed = 20240601;
  int threshold = 7;

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input) cmd->add_option("input", input, "bundle file (default: stdin)");
    cmd->add_option("--format", format, "json|dot|table")->default_val("json");
  };

  auto* validate = app.add_subcommand("validate", "check the EL/CL axioms");
  validate->add_option("--kind", kind, "el|cl")->default_val("el");
  add_common(validate);

  auto* mcd = app.add_subcommand("mcd", "build the maximal chain descent order");
  add_common(mcd);

  auto* pcomplete = app.add_subcommand("polygon-complete", "do all polygon moves give covers?");
  add_common(pcomplete);

  auto* iranked = app.add_subcommand("inversion-ranked", "does every move add one inversion?");
  add_common(iranked);

  auto* pstrong = app.add_subcommand("polygon-strong", "check the polygon strong condition");
  add_common(pstrong);

  auto* shcheck = app.add_subcommand("shelling-check", "verify one facet order");
  shcheck->add_option("order", order_file, "JSON file with the facet order")->required();
  add_common(shcheck);

  auto* audit = app.add_subcommand("equivalence-audit",
                                   "linear extensions vs shellings with descent restrictions");
  audit->add_option("--seed", seed, "RNG seed")->default_val(20240601);
  audit->add_option("--exhaustive", threshold, "exhaust all orders up to this many chains")
      ->default_val(7);
  add_common(audit);

  auto* family = app.add_subcommand("family", "generate a labeled family");
  std::string fam_name, fam_arg, fam_labeling = "maxmin", fam_tableau, fam_inner, fam_ext;
  family->add_option("name", fam_name, "boolean|partition|young|jp")->required();
  family->add_option("arg", fam_arg, "n, shape, or poset file")->required();
  family->add_option("--labeling", fam_labeling, "partition: maxmin | minimal:<atom,atom,...>");
  family->add_option("--tableau", fam_tableau, "young: rows as 1,4,6/2,5/3");
  family->add_option("--inner", fam_inner, "young: inner shape");
  family->add_option("--ext", fam_ext, "jp: linear extension as comma list");
  family->add_option("--format", format, "json|dot")->default_val("json");

  auto* fixture = app.add_subcommand("fixture", "emit a bundled fixture");
  std::string fixture_name;
  fixture->add_option("name", fixture_name, "fig2|fig3|fig5_cl|fig6_lambda|fig7|prop_inv_vs_strong")
      ->required();
  fixture->add_option("--format", format, "json|dot")->default_val("json");

  auto* witness = app.add_subcommand("witness", "non-cover witnesses");
  add_common(witness);

  CLI11_PARSE(app, argc, argv);

  char* err = nullptr;
  char* report = nullptr;

  if (family->parsed()) {
    json spec;
    spec["family"] = fam_name;
    if (fam_name == "boolean" || fam_name == "partition") {
      spec["n"] = std::atoi(fam_arg.c_str());
      if (fam_name == "partition") {
        if (fam_labeling.rfind("minimal", 0) == 0) {
          spec["labeling"] = "minimal";
          auto colon = fam_labeling.find(':');
          if (colon != std::string::npos) {
            json atoms = json::array();
            std::stringstream ss(fam_labeling.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) atoms.push_back(tok);
            spec["atom_order"] = atoms;
          }
        } else {
          spec["labeling"] = fam_labeling;
        }
      }
    } else if (fam_name == "young") {
      json shape = json::array();
      std::stringstream ss(fam_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) shape.push_back(std::atoi(tok.c_str()));
      spec["shape"] = shape;
      if (!fam_inner.empty()) {
        json inner = json::array();
        std::stringstream si(fam_inner);
        while (std::getline(si, tok, ',')) inner.push_back(std::atoi(tok.c_str()));
        spec["inner"] = inner;
      }
      if (!fam_tableau.empty()) {
        json rows = json::array();
        std::stringstream sr(fam_tableau);
        std::string row;
        while (std::getline(sr, row, '/')) {
          json jr = json::array();
          std::stringstream sv(row);
          while (std::getline(sv, tok, ',')) jr.push_back(std::atoi(tok.c_str()));
          rows.push_back(jr);
        }
        spec["tableau"] = rows;
      }
    } else if (fam_name == "jp") {
      spec["poset"] = json::parse(read_input(fam_arg));
      json ext = json::array();
      std::stringstream ss(fam_ext);
      std::string tok;
      while (std::getline(ss, tok, ',')) ext.push_back(tok);
      spec["extension"] = ext;
    } else {
      std::cerr << "error: unknown family '" << fam_name << "'\n";
      return 2;
    }
    BundleHandle h;
    if (shellab_bundle_family(spec.dump().c_str(), &h.b, &err) != SHELLAB_OK)
      return fail_input(err);
    std::cout << take(format == "dot" ? shellab_bundle_dot(h.b) : shellab_bundle_json(h.b)) << "\n";
    return 0;
  }

  if (fixture->parsed()) {
    BundleHandle h;
    if (shellab_bundle_fixture(fixture_name.c_str(), &h.b, &err) != SHELLAB_OK)
      return fail_input(err);
    std::cout << take(format == "dot" ? shellab_bundle_dot(h.b) : shellab_bundle_json(h.b)) << "\n";
    return 0;
  }

  BundleHandle h;
  load_bundle(input, h);

  if (validate->parsed()) {
    shellab_status st = shellab_validate(h.b, kind.c_str(), &report);
    return emit_verdict(st, take(report), format);
  }
  if (mcd->parsed()) {
    McdHandle m;
    if (shellab_mcd_build(h.b, &m.m, &err) != SHELLAB_OK) return fail_input(err);
    std::cout << take(format == "dot" ? shellab_mcd_dot(h.b, m.m) : shellab_mcd_json(h.b, m.m))
              << "\n";
    return 0;
  }
  if (pcomplete->parsed()) {
    McdHandle m;
    if (shellab_mcd_build(h.b, &m.m, &err) != SHELLAB_OK) return fail_input(err);
    shellab_status st = shellab_polygon_complete(h.b, m.m, &report);
    return emit_verdict(st, take(report), format);
  }
  if (iranked->parsed()) {
    shellab_status st = shellab_inversion_ranked(h.b, &report);
    return emit_verdict(st, take(report), format);
  }
  if (pstrong->parsed()) {
    shellab_status st = shellab_polygon_strong(h.b, &report);
    return emit_verdict(st, take(report), format);
  }
  if (shcheck->parsed()) {
    shellab_status st = shellab_shelling_check(h.b, read_input(order_file).c_str(), &report);
    std::string rep = take(report);
    if (st >= SHELLAB_ERR_INPUT) {
      std::cerr << "error: " << rep << "\n";
      return 2;
    }
    if (format == "table") {
      print_shelling_table(json::parse(rep));
    } else {
      std::cout << rep << "\n";
    }
    return st == SHELLAB_OK ? 0 : 1;
  }
  if (audit->parsed()) {
    shellab_status st = shellab_equivalence_audit(h.b, seed, threshold, &report);
    return emit_verdict(st, take(report), format);
  }
  if (witness->parsed()) {
    shellab_status st = shellab_witnesses(h.b, &report);
    return emit_verdict(st, take(report), format);
  }
  return 2;
}
