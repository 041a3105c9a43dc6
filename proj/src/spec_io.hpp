#pragma once

#include <string>

#include "amalgam.hpp"

namespace nilsplit {

// Spec file: {"name": ..., "g1"/"g2"/"h": {"table": [[..]]} or
// {"permutation_generators": [[..]]}, "embed1"/"embed2": [..]}.
AmalgamSpec parse_spec_json(const std::string& text, int order_cap = kDefaultOrderCap);
AmalgamSpec load_spec_file(const std::string& path, int order_cap = kDefaultOrderCap);

// Re-serialization with every group as an explicit table; parsing it back
// reproduces the same amalgam.
std::string canonical_spec_json(const AmalgamSpec& spec);

std::string render_validate(const AmalgamSpec& spec, bool echo);
std::string render_classify(const AmalgamSpec& spec, const std::string& word_text);
std::string render_enumerate(const AmalgamSpec& spec, int max_syllables);
std::string render_adapted(const AmalgamSpec& spec, int max_syllables, int conj_bound);
std::string render_report_text(const AmalgamSpec& spec, int max_syllables);
std::string render_report_json(const AmalgamSpec& spec, int max_syllables);
std::string render_acylindrical(const AmalgamSpec& spec, int k, int radius);

}  // namespace nilsplit
