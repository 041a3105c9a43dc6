#include "nilsplit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "amalgam.hpp"
#include "error.hpp"
#include "spec_io.hpp"

struct nilsplit_amalgam {
  nilsplit::AmalgamSpec spec;
};

namespace {

thread_local std::string g_last_error;

nilsplit_status status_of(nilsplit::errc code) {
  return static_cast<nilsplit_status>(static_cast<int>(code) + 1);
}

template <typename Fn>
nilsplit_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const nilsplit::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return NILSPLIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NILSPLIT_ERR_INTERNAL;
  }
}

nilsplit_status invalid(const char* what) {
  g_last_error = what;
  return NILSPLIT_ERR_INVALID_ARGUMENT;
}

nilsplit_status emit(const std::string& text, char** out_text) {
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (!copy) {
    g_last_error = "out of memory";
    return NILSPLIT_ERR_INTERNAL;
  }
  std::memcpy(copy, text.c_str(), text.size() + 1);
  *out_text = copy;
  return NILSPLIT_OK;
}

int effective_cap(int order_cap) {
  return order_cap > 0 ? order_cap : nilsplit::kDefaultOrderCap;
}

}  // namespace

extern "C" {

nilsplit_status nilsplit_amalgam_from_json(const char* json_text, int order_cap,
                                           nilsplit_amalgam** out) {
  return guarded([&]() -> nilsplit_status {
    if (!json_text || !out) return invalid("null argument");
    *out = new nilsplit_amalgam{nilsplit::parse_spec_json(json_text, effective_cap(order_cap))};
    return NILSPLIT_OK;
  });
}

nilsplit_status nilsplit_amalgam_from_file(const char* path, int order_cap,
                                           nilsplit_amalgam** out) {
  return guarded([&]() -> nilsplit_status {
    if (!path || !out) return invalid("null argument");
    *out = new nilsplit_amalgam{nilsplit::load_spec_file(path, effective_cap(order_cap))};
    return NILSPLIT_OK;
  });
}

void nilsplit_amalgam_free(nilsplit_amalgam* amalgam) { delete amalgam; }

nilsplit_status nilsplit_validate(const nilsplit_amalgam* amalgam, int echo,
                                  char** out_text) {
  return guarded([&]() -> nilsplit_status {
    if (!amalgam || !out_text) return invalid("null argument");
    return emit(nilsplit::render_validate(amalgam->spec, echo != 0), out_text);
  });
}

nilsplit_status nilsplit_classify_word(const nilsplit_amalgam* amalgam, const char* word,
                                       char** out_text) {
  return guarded([&]() -> nilsplit_status {
    if (!amalgam || !word || !out_text) return invalid("null argument");
    return emit(nilsplit::render_classify(amalgam->spec, word), out_text);
  });
}

nilsplit_status nilsplit_enumerate(const nilsplit_amalgam* amalgam, int max_syllables,
                                   char** out_text) {
  return guarded([&]() -> nilsplit_status {
    if (!amalgam || !out_text) return invalid("null argument");
    return emit(nilsplit::render_enumerate(amalgam->spec, max_syllables), out_text);
  });
}

nilsplit_status nilsplit_adapted(const nilsplit_amalgam* amalgam, int max_syllables,
                                 int conj_bound, char** out_text) {
  return guarded([&]() -> nilsplit_status {
    if (!amalgam || !out_text) return invalid("null argument");
    return emit(nilsplit::render_adapted(amalgam->spec, max_syllables, conj_bound), out_text);
  });
}

nilsplit_status nilsplit_report(const nilsplit_amalgam* amalgam, int max_syllables,
                                int as_json, char** out_text) {
  return guarded([&]() -> nilsplit_status {
    if (!amalgam || !out_text) return invalid("null argument");
    const std::string text = as_json != 0
                                 ? nilsplit::render_report_json(amalgam->spec, max_syllables)
                                 : nilsplit::render_report_text(amalgam->spec, max_syllables);
    return emit(text, out_text);
  });
}

nilsplit_status nilsplit_acylindrical(const nilsplit_amalgam* amalgam, int k, int radius,
                                      char** out_text) {
  return guarded([&]() -> nilsplit_status {
    if (!amalgam || !out_text) return invalid("null argument");
    return emit(nilsplit::render_acylindrical(amalgam->spec, k, radius), out_text);
  });
}

void nilsplit_string_free(char* text) { std::free(text); }

const char* nilsplit_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
