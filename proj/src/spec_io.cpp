#include "spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dynamics.hpp"
#include "error.hpp"
#include "nil_index.hpp"
#include "tree.hpp"

namespace nilsplit {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail_field(const std::string& field, const std::string& what) {
  fail(errc::parse_error, "spec field \"" + field + "\": " + what);
}

std::vector<Elt> parse_elt_list(const json& j, const std::string& field) {
  if (!j.is_array()) fail_field(field, "expected an array of integers");
  std::vector<Elt> out;
  out.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_number_integer()) fail_field(field, "expected an array of integers");
    out.push_back(entry.get<Elt>());
  }
  return out;
}

std::vector<std::vector<Elt>> parse_elt_rows(const json& j, const std::string& field) {
  if (!j.is_array()) fail_field(field, "expected an array of rows");
  std::vector<std::vector<Elt>> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_elt_list(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

FiniteGroup parse_group_block(const json& block, const std::string& field, int order_cap) {
  if (!block.is_object()) fail_field(field, "expected an object");
  bool has_table = block.contains("table");
  bool has_perms = block.contains("permutation_generators");
  if (has_table == has_perms)
    fail_field(field, "expected exactly one of \"table\" or \"permutation_generators\"");
  for (const auto& [key, value] : block.items()) {
    (void)value;
    if (key != "table" && key != "permutation_generators")
      fail_field(field, "unknown key \"" + key + "\"");
  }
  try {
    if (has_table)
      return group_from_table(parse_elt_rows(block["table"], field + ".table"), order_cap);
    return group_from_permutations(
        parse_elt_rows(block["permutation_generators"], field + ".permutation_generators"),
        order_cap);
  } catch (const Error& e) {
    fail(e.code(), "spec field \"" + field + "\": " + e.what());
  }
}

}  // namespace

AmalgamSpec parse_spec_json(const std::string& text, int order_cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::parse_error, "spec root must be an object");
  for (const char* field : {"name", "g1", "g2", "h", "embed1", "embed2"}) {
    if (!doc.contains(field))
      fail(errc::parse_error, std::string("spec field \"") + field + "\" is missing");
  }
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "name" && key != "g1" && key != "g2" && key != "h" && key != "embed1" &&
        key != "embed2")
      fail(errc::parse_error, "unknown spec field \"" + key + "\"");
  }
  if (!doc["name"].is_string()) fail_field("name", "expected a string");
  FiniteGroup g1 = parse_group_block(doc["g1"], "g1", order_cap);
  FiniteGroup g2 = parse_group_block(doc["g2"], "g2", order_cap);
  FiniteGroup h = parse_group_block(doc["h"], "h", order_cap);
  std::vector<Elt> embed1 = parse_elt_list(doc["embed1"], "embed1");
  std::vector<Elt> embed2 = parse_elt_list(doc["embed2"], "embed2");
  return build_amalgam(g1, g2, h, embed1, embed2, doc["name"].get<std::string>());
}

AmalgamSpec load_spec_file(const std::string& path, int order_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_argument, "cannot read spec file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_json(buf.str(), order_cap);
}

namespace {

ojson table_json(const FiniteGroup& g) {
  ojson rows = ojson::array();
  for (Elt a = 0; a < g.order; ++a) {
    ojson row = ojson::array();
    for (Elt b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  ojson block;
  block["table"] = std::move(rows);
  return block;
}

}  // namespace

std::string canonical_spec_json(const AmalgamSpec& spec) {
  ojson doc;
  doc["name"] = spec.name;
  doc["g1"] = table_json(spec.g1);
  doc["g2"] = table_json(spec.g2);
  doc["h"] = table_json(spec.h);
  doc["embed1"] = spec.emb1.map;
  doc["embed2"] = spec.emb2.map;
  return doc.dump(2) + "\n";
}

std::string render_validate(const AmalgamSpec& spec, bool echo) {
  if (echo) return canonical_spec_json(spec);
  Fingerprint fh = iso_fingerprint(spec.h);
  std::string out;
  out += "spec: " + spec.name + "\n";
  out += "indices (" + std::to_string(spec.index1()) + "," + std::to_string(spec.index2()) +
         "), H = " + fh.name + "\n";
  out += "G1: " + fingerprint_to_string(iso_fingerprint(spec.g1)) + "\n";
  out += "G2: " + fingerprint_to_string(iso_fingerprint(spec.g2)) + "\n";
  out += "H: " + fingerprint_to_string(fh) + "\n";
  return out;
}

std::string render_classify(const AmalgamSpec& spec, const std::string& word_text) {
  NormalForm nf = reduce(spec, parse_word(word_text));
  ElementAction action = classify_element(spec, nf);
  std::string out;
  out += "normal form: " + nf_to_string(nf) + "\n";
  out += "syllable length: " + std::to_string(nf.syllables.size()) + "\n";
  if (action.elliptic) {
    out += "verdict: elliptic\n";
    out += "translation length: 0\n";
    out += "fixed vertex: " + cell_to_string(action.fixed_vertex) + "\n";
  } else {
    out += "verdict: hyperbolic\n";
    out += "translation length: " + std::to_string(action.translation_length) + "\n";
    out += "axis period: " + path_to_string(action.axis->period) + "\n";
  }
  return out;
}

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_enumerate(const AmalgamSpec& spec, int max_syllables) {
  std::vector<VCClass> classes = enumerate_vc_classes(spec, max_syllables);
  std::string out;
  out += "classes at syllable bound " + std::to_string(max_syllables) + ": " +
         std::to_string(classes.size()) + "\n";
  for (size_t i = 0; i < classes.size(); ++i) {
    const VCClass& vc = classes[i];
    out += "class " + std::to_string(i) + ": " +
           (vc.dinfty ? "D_infinity" : "F_semidirect_Z") + "\n";
    out += "  min word: " + nf_to_string(vc.min_word) + "\n";
    out += "  translation length: " + std::to_string(vc.axis.length()) + "\n";
    out += "  t_min: " + nf_to_string(vc.stab.t_min) + " (shift " +
           std::to_string(vc.stab.t_min_length) + ")\n";
    out += "  fixer: " + fingerprint_to_string(vc.fixer_fp) + "\n";
    out += "  alpha: " + alpha_label(vc.alpha) + "\n";
    if (vc.dinfty) {
      out += "  reflection: " + nf_to_string(*vc.stab.reflection) + "\n";
      out += "  A: " + fingerprint_to_string(vc.a_fp) + "\n";
      out += "  B: " + fingerprint_to_string(vc.b_fp) + "\n";
      out += std::string("  constraints: fixer in edge stabilizers ") +
             yn(vc.fixer_in_edge_stabilizers) + ", A fixes vertex " + yn(vc.a_fixes_vertex) +
             ", B fixes vertex " + yn(vc.b_fixes_vertex) + "\n";
    } else {
      out += std::string("  constraints: fixer in edge stabilizers ") +
             yn(vc.fixer_in_edge_stabilizers) + "\n";
    }
  }
  return out;
}

std::string render_adapted(const AmalgamSpec& spec, int max_syllables, int conj_bound) {
  std::vector<VCClass> classes = enumerate_vc_classes(spec, max_syllables);
  AdaptedReport report = check_adapted(spec, classes, max_syllables, conj_bound);
  std::string out;
  out += "classes at syllable bound " + std::to_string(max_syllables) + ": " +
         std::to_string(classes.size()) + "\n";
  out += "conjugator bound: " + std::to_string(conj_bound) + "\n";
  for (const AdaptedAxiom& ax : report.axioms) {
    out += "axiom " + std::to_string(ax.axiom) + ": " + (ax.holds ? "PASS" : "FAIL") + " (" +
           ax.detail + ")\n";
  }
  out += std::string("result: ") + (report.all_hold ? "adapted" : "not adapted") + "\n";
  return out;
}

std::string render_report_text(const AmalgamSpec& spec, int max_syllables) {
  SplittingReport report = splitting_report(spec, max_syllables);
  std::string out;
  out += "left summand: " + report.left_label + "\n";
  out += "truncation: syllable bound " + std::to_string(report.max_syllables) + ", complete " +
         yn(report.complete) + "\n";
  out += "summands: " + std::to_string(report.summands.size()) + "\n";
  for (size_t i = 0; i < report.summands.size(); ++i) {
    const Summand& s = report.summands[i];
    out += "summand " + std::to_string(i) + ": " +
           (s.vc.dinfty ? "D_infinity" : "F_semidirect_Z") + "\n";
    out += "  translator: " + nf_to_string(s.vc.min_word) + "\n";
    out += "  translation length: " + std::to_string(s.vc.axis.length()) + "\n";
    out += "  nil label: " + s.nil_label + "\n";
    if (s.vc.dinfty) out += "  V' label: " + s.v_prime_label + "\n";
  }
  return out;
}

namespace {

ojson fingerprint_json(const Fingerprint& fp) {
  ojson j;
  j["name"] = fp.name;
  j["order"] = fp.order;
  ojson orders = ojson::array();
  for (const auto& [o, count] : fp.order_histogram)
    orders.push_back(ojson::array({o, count}));
  j["element_orders"] = std::move(orders);
  j["center_order"] = fp.center_order;
  j["abelian"] = fp.abelian;
  return j;
}

}  // namespace

std::string render_report_json(const AmalgamSpec& spec, int max_syllables) {
  SplittingReport report = splitting_report(spec, max_syllables);
  ojson doc;
  doc["left_label"] = report.left_label;
  {
    ojson trunc;
    trunc["max_syllables"] = report.max_syllables;
    trunc["complete"] = report.complete;
    doc["truncation"] = std::move(trunc);
  }
  ojson summands = ojson::array();
  for (const Summand& s : report.summands) {
    ojson j;
    j["type"] = s.vc.dinfty ? "D_infinity" : "F_semidirect_Z";
    j["F"] = fingerprint_json(s.vc.fixer_fp);
    j["alpha"] = s.vc.alpha;
    if (s.vc.dinfty) {
      j["A"] = fingerprint_json(s.vc.a_fp);
      j["B"] = fingerprint_json(s.vc.b_fp);
      j["C"] = fingerprint_json(s.vc.fixer_fp);
    }
    j["translator"] = nf_to_string(s.vc.min_word);
    j["translation_length"] = s.vc.axis.length();
    j["nil_label"] = s.nil_label;
    if (s.vc.dinfty) j["v_prime_label"] = s.v_prime_label;
    summands.push_back(std::move(j));
  }
  doc["summands"] = std::move(summands);
  return doc.dump(2) + "\n";
}

std::string render_acylindrical(const AmalgamSpec& spec, int k, int radius) {
  AcylReport report = check_acylindrical(spec, k, radius);
  std::string out;
  out += "acylindricity check: k = " + std::to_string(k) + ", radius = " +
         std::to_string(radius) + "\n";
  out += "max path stabilizer order: " + std::to_string(report.max_stab_order) + "\n";
  out += std::string("holds: ") + yn(report.holds) + "\n";
  out += "witness path: " + path_to_string(report.witness) + "\n";
  return out;
}

}  // namespace nilsplit
