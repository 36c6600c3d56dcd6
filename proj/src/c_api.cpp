#include "scarf/scarf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "scarf/constructions.hpp"
#include "scarf/engine.hpp"
#include "scarf/error.hpp"
#include "scarf/io.hpp"
#include "scarf/verify.hpp"

struct scarf_ideal {
  scarf::MonomialIdeal value;
};
struct scarf_graph {
  scarf::SimpleGraph value;
};
struct scarf_complex {
  scarf::LabeledComplex value;
};
struct scarf_report {
  scarf::ScarfReport value;
};

namespace {

thread_local std::string last_error;

scarf_status status_of(scarf::ErrorKind kind) {
  switch (kind) {
    case scarf::ErrorKind::parse: return SCARF_ERR_PARSE;
    case scarf::ErrorKind::incompatible_rings: return SCARF_ERR_INCOMPATIBLE_RINGS;
    case scarf::ErrorKind::invalid_argument: return SCARF_ERR_INVALID_ARGUMENT;
    case scarf::ErrorKind::not_found: return SCARF_ERR_NOT_FOUND;
    case scarf::ErrorKind::limit_exceeded: return SCARF_ERR_LIMIT_EXCEEDED;
    case scarf::ErrorKind::internal: return SCARF_ERR_INTERNAL;
  }
  return SCARF_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
scarf_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return SCARF_OK;
  } catch (const scarf::LimitExceeded& e) {
    last_error = std::string(e.what()) + " (" + std::to_string(e.partial_count()) + " elements reached)";
    return SCARF_ERR_LIMIT_EXCEEDED;
  } catch (const scarf::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SCARF_ERR_LIMIT_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SCARF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw scarf::Error(scarf::ErrorKind::invalid_argument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render_complex(const scarf::LabeledComplex& c, scarf_format format) {
  switch (format) {
    case SCARF_FORMAT_TEXT: return scarf::io::complex_to_text(c);
    case SCARF_FORMAT_JSON: return scarf::io::complex_to_json(c) + "\n";
    case SCARF_FORMAT_DOT: return scarf::io::complex_to_dot(c);
  }
  throw scarf::Error(scarf::ErrorKind::invalid_argument, "unknown format");
}

void no_dot(scarf_format format) {
  if (format == SCARF_FORMAT_DOT) throw scarf::Error(scarf::ErrorKind::invalid_argument, "DOT output is only available for complexes");
}

}  // namespace

extern "C" {

const char* scarf_last_error(void) { return last_error.c_str(); }

void scarf_string_free(char* s) { std::free(s); }

size_t scarf_default_lattice_cap(void) { return scarf::kDefaultLatticeCap; }

uint64_t scarf_default_seed(void) { return scarf::verify::kDefaultSeed; }

scarf_status scarf_ideal_parse(const char* text, scarf_ideal** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new scarf_ideal{scarf::io::parse_ideal(text)};
  });
}

scarf_status scarf_ideal_from_graph(const scarf_graph* graph, scarf_ideal** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = new scarf_ideal{scarf::edge_ideal(graph->value)};
  });
}

scarf_status scarf_ideal_power(const scarf_ideal* ideal, unsigned t, scarf_ideal** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = new scarf_ideal{scarf::power(ideal->value, t)};
  });
}

size_t scarf_ideal_generator_count(const scarf_ideal* ideal) { return ideal ? ideal->value.size() : 0; }

scarf_status scarf_ideal_render(const scarf_ideal* ideal, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = duplicate(scarf::io::ideal_to_text(ideal->value));
  });
}

void scarf_ideal_free(scarf_ideal* ideal) { delete ideal; }

scarf_status scarf_graph_parse(const char* text, scarf_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new scarf_graph{scarf::io::parse_graph(text)};
  });
}

int scarf_graph_is_connected(const scarf_graph* graph) { return graph && scarf::is_connected(graph->value) ? 1 : 0; }

void scarf_graph_free(scarf_graph* graph) { delete graph; }

scarf_status scarf_graph_enumerate(unsigned n, scarf_format format, void (*visit)(const char*, void*), void* user) {
  return guarded([&] {
    require(reinterpret_cast<const void*>(visit), "visit");
    no_dot(format);
    scarf::for_each_labeled_graph(n, [&](const scarf::SimpleGraph& g) {
      const std::string line =
          format == SCARF_FORMAT_JSON ? scarf::io::graph_to_json(g) : scarf::io::graph_to_text(g);
      visit(line.c_str(), user);
    });
  });
}

scarf_status scarf_complex_scarf(const scarf_ideal* ideal, scarf_complex** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = new scarf_complex{scarf::scarf_complex(ideal->value)};
  });
}

scarf_status scarf_complex_taylor(const scarf_ideal* ideal, scarf_complex** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    *out = new scarf_complex{scarf::taylor_complex(ideal->value)};
  });
}

scarf_status scarf_complex_forest(const scarf_graph* forest, scarf_complex** out) {
  return guarded([&] {
    require(forest, "forest");
    require(out, "out");
    *out = new scarf_complex{scarf::forest_scarf(forest->value)};
  });
}

scarf_status scarf_complex_power_form(const char* kind, unsigned t, scarf_complex** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    const auto parsed = scarf::parse_special_graph(kind);
    if (!parsed) {
      throw scarf::Error(scarf::ErrorKind::invalid_argument,
                         std::string("unknown kind '") + kind + "' (expected triangle, path3, claw or square)");
    }
    *out = new scarf_complex{scarf::power_scarf_closed_form({*parsed, t})};
  });
}

scarf_status scarf_complex_parse_json(const char* text, scarf_complex** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new scarf_complex{scarf::io::complex_from_json(text)};
  });
}

scarf_status scarf_complex_render(const scarf_complex* complex, scarf_format format, char** out) {
  return guarded([&] {
    require(complex, "complex");
    require(out, "out");
    *out = duplicate(render_complex(complex->value, format));
  });
}

scarf_status scarf_complex_homology(const scarf_complex* complex, unsigned characteristic, scarf_format format,
                                    char** out) {
  return guarded([&] {
    require(complex, "complex");
    require(out, "out");
    no_dot(format);
    const auto profile = scarf::reduced_homology(complex->value, scarf::Coefficients{characteristic});
    *out = duplicate(format == SCARF_FORMAT_JSON ? scarf::io::homology_to_json(profile) + "\n"
                                                 : scarf::io::homology_to_text(profile));
  });
}

void scarf_complex_free(scarf_complex* complex) { delete complex; }

scarf_status scarf_taylor_groups_render(const scarf_ideal* ideal, scarf_format format, char** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    no_dot(format);
    const auto groups = scarf::taylor_label_groups(ideal->value);
    *out = duplicate(format == SCARF_FORMAT_JSON ? scarf::io::taylor_groups_to_json(ideal->value, groups) + "\n"
                                                 : scarf::io::taylor_groups_to_text(ideal->value, groups));
  });
}

scarf_status scarf_is_scarf(const scarf_ideal* ideal, size_t lattice_cap, scarf_report** out) {
  return guarded([&] {
    require(ideal, "ideal");
    require(out, "out");
    const std::size_t cap = lattice_cap == 0 ? scarf::kDefaultLatticeCap : lattice_cap;
    *out = new scarf_report{scarf::is_scarf(ideal->value, cap)};
  });
}

scarf_verdict scarf_report_verdict(const scarf_report* report) {
  if (report == nullptr) return SCARF_VERDICT_NO;
  switch (report->value.verdict) {
    case scarf::SupportVerdict::yes: return SCARF_VERDICT_YES;
    case scarf::SupportVerdict::no: return SCARF_VERDICT_NO;
    case scarf::SupportVerdict::field_dependent: return SCARF_VERDICT_FIELD_DEPENDENT;
  }
  return SCARF_VERDICT_NO;
}

scarf_status scarf_report_render(const scarf_report* report, scarf_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    switch (format) {
      case SCARF_FORMAT_TEXT: *out = duplicate(scarf::io::report_to_text(report->value)); return;
      case SCARF_FORMAT_JSON: *out = duplicate(scarf::io::report_to_json(report->value) + "\n"); return;
      case SCARF_FORMAT_DOT: *out = duplicate(scarf::io::complex_to_dot(report->value.scarf)); return;
    }
    throw scarf::Error(scarf::ErrorKind::invalid_argument, "unknown format");
  });
}

void scarf_report_free(scarf_report* report) { delete report; }

size_t scarf_suite_count(void) { return scarf::verify::suite_names().size(); }

const char* scarf_suite_name(size_t index) {
  const auto& names = scarf::verify::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

scarf_status scarf_verify(const char* suite, double budget_seconds, uint64_t seed, scarf_format format, char** out,
                          int* all_passed) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    no_dot(format);
    const auto report = scarf::verify::run_suite(suite, budget_seconds, seed);
    if (all_passed) *all_passed = report.ok() ? 1 : 0;
    *out = duplicate(format == SCARF_FORMAT_JSON ? scarf::verify::report_to_json(report) + "\n"
                                                 : scarf::verify::report_to_text(report));
  });
}

}  // extern "C"
