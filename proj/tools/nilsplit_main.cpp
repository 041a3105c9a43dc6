// Command-line front end. Talks to the library exclusively through the
// public C API so that the binary doubles as a smoke test for it.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "nilsplit.h"

namespace {

// Returns 0 when the variable is unset (use the built-in default),
// -1 when it is set but not a positive integer.
int order_cap_from_env() {
  const char* raw = std::getenv("NILSPLIT_ORDER_CAP");
  if (!raw || !*raw) return 0;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value <= 0 || value > 1000000000L) return -1;
  return static_cast<int>(value);
}

int finish(nilsplit_status status, char* text) {
  if (status == NILSPLIT_OK) {
    std::fputs(text, stdout);
    nilsplit_string_free(text);
    return 0;
  }
  std::fprintf(stderr, "error: %s\n", nilsplit_last_error());
  return status == NILSPLIT_ERR_INTERNAL ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtually cyclic subgroup classification for amalgams of finite groups"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string word;
  std::string format = "text";
  int max_syllables = 4;
  int conj_bound = 4;
  int k = 1;
  int radius = 3;
  bool echo = false;

  auto* validate = app.add_subcommand("validate", "Parse a spec file and print group fingerprints");
  validate->add_option("spec", spec_path, "Amalgam spec file (JSON)")->required();
  validate->add_flag("--echo", echo, "Print the parsed spec back as canonical JSON");

  auto* classify = app.add_subcommand("classify", "Classify a word as elliptic or hyperbolic");
  classify->add_option("spec", spec_path, "Amalgam spec file (JSON)")->required();
  classify->add_option("--word", word, "Word such as \"g1:1 g2:2 h:0\"")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List virtually cyclic classes up to a syllable bound");
  enumerate->add_option("spec", spec_path, "Amalgam spec file (JSON)")->required();
  enumerate->add_option("--max-syllables", max_syllables, "Translator syllable bound")
      ->capture_default_str();

  auto* adapted = app.add_subcommand("adapted", "Check the adapted-family axioms for the class list");
  adapted->add_option("spec", spec_path, "Amalgam spec file (JSON)")->required();
  adapted->add_option("--max-syllables", max_syllables, "Translator syllable bound")
      ->capture_default_str();
  adapted->add_option("--conj-bound", conj_bound, "Conjugator syllable bound")
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "Emit the splitting report");
  report->add_option("spec", spec_path, "Amalgam spec file (JSON)")->required();
  report->add_option("--max-syllables", max_syllables, "Translator syllable bound")
      ->capture_default_str();
  report->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* acylindrical = app.add_subcommand("acylindrical", "Bound edge-path stabilizers in the tree");
  acylindrical->add_option("spec", spec_path, "Amalgam spec file (JSON)")->required();
  acylindrical->add_option("-k", k, "Path length whose stabilizers must be trivial")
      ->capture_default_str();
  acylindrical->add_option("--radius", radius, "Search radius around the base vertex")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  const int order_cap = order_cap_from_env();
  if (order_cap < 0) {
    std::fprintf(stderr, "error: NILSPLIT_ORDER_CAP must be a positive integer\n");
    return 1;
  }

  nilsplit_amalgam* amalgam = nullptr;
  nilsplit_status status = nilsplit_amalgam_from_file(spec_path.c_str(), order_cap, &amalgam);
  if (status != NILSPLIT_OK) {
    std::fprintf(stderr, "error: %s\n", nilsplit_last_error());
    return status == NILSPLIT_ERR_INTERNAL ? 2 : 1;
  }

  char* text = nullptr;
  if (validate->parsed()) {
    status = nilsplit_validate(amalgam, echo ? 1 : 0, &text);
  } else if (classify->parsed()) {
    status = nilsplit_classify_word(amalgam, word.c_str(), &text);
  } else if (enumerate->parsed()) {
    status = nilsplit_enumerate(amalgam, max_syllables, &text);
  } else if (adapted->parsed()) {
    status = nilsplit_adapted(amalgam, max_syllables, conj_bound, &text);
  } else if (report->parsed()) {
    status = nilsplit_report(amalgam, max_syllables, format == "json" ? 1 : 0, &text);
  } else {
    status = nilsplit_acylindrical(amalgam, k, radius, &text);
  }

  const int rc = finish(status, text);
  nilsplit_amalgam_free(amalgam);
  return rc;
}
