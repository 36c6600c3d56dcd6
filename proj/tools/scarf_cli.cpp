#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "scarf/scarf.h"

namespace {

constexpr int kExitParse = 64;

// Error statuses map to 63 + code: parse 64, incompatible rings 65,
// invalid argument 66, not found 67, limit exceeded 68, internal 69.
int exit_code_for(scarf_status s) { return 63 + static_cast<int>(s); }

struct Failure {
  scarf_status status;
};

void check(scarf_status s) {
  if (s != SCARF_OK) throw Failure{s};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Ideal = std::unique_ptr<scarf_ideal, Deleter<scarf_ideal, scarf_ideal_free>>;
using Graph = std::unique_ptr<scarf_graph, Deleter<scarf_graph, scarf_graph_free>>;
using Complex = std::unique_ptr<scarf_complex, Deleter<scarf_complex, scarf_complex_free>>;
using Report = std::unique_ptr<scarf_report, Deleter<scarf_report, scarf_report_free>>;

// Takes ownership of a library string and writes it to stdout.
void emit(char* text) {
  std::unique_ptr<char, Deleter<char, scarf_string_free>> owned(text);
  std::fputs(owned.get(), stdout);
}

Ideal parse_ideal(const std::string& text) {
  scarf_ideal* raw = nullptr;
  check(scarf_ideal_parse(text.c_str(), &raw));
  return Ideal(raw);
}

Graph parse_graph(const std::string& text) {
  scarf_graph* raw = nullptr;
  check(scarf_graph_parse(text.c_str(), &raw));
  return Graph(raw);
}

std::string read_source(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(arg);
  if (!in) {
    std::cerr << "error: cannot open '" << arg << "'\n";
    throw Failure{SCARF_ERR_NOT_FOUND};
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void print_graph_line(const char* line, void*) { std::printf("%s\n", line); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scarf complexes of monomial ideals and edge ideals"};
  app.require_subcommand(1);
  app.fallthrough();

  scarf_format format = SCARF_FORMAT_TEXT;
  const std::map<std::string, scarf_format> formats{
      {"text", SCARF_FORMAT_TEXT}, {"json", SCARF_FORMAT_JSON}, {"dot", SCARF_FORMAT_DOT}};
  std::size_t lattice_cap = scarf_default_lattice_cap();
  app.add_option("--format", format, "Output format: text, json or dot")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--lattice-cap", lattice_cap, "Largest lcm lattice to build")
      ->envname("SCARF_LATTICE_CAP")
      ->check(CLI::PositiveNumber);

  std::string ideal_text;
  auto* scarf_cmd = app.add_subcommand("scarf", "Print the Scarf complex of an ideal");
  scarf_cmd->add_option("ideal", ideal_text, "Generators, e.g. \"xy,yz\" or \"x^2*y, y*z\"")->required();

  auto* taylor_cmd = app.add_subcommand("taylor", "List Taylor labels with repeated-label groups");
  taylor_cmd->add_option("ideal", ideal_text, "Generators")->required();

  bool as_graph = false;
  unsigned power = 1;
  auto* is_scarf_cmd = app.add_subcommand("is-scarf", "Decide whether the Scarf complex supports a resolution");
  is_scarf_cmd->add_option("input", ideal_text, "Ideal, or graph with --graph")->required();
  is_scarf_cmd->add_flag("--graph", as_graph, "Read the input as a graph and use its edge ideal");
  is_scarf_cmd->add_option("--power", power, "Test the t-th power")->check(CLI::PositiveNumber);

  std::string graph_text;
  auto* forest_cmd = app.add_subcommand("forest-scarf", "Closed-form Scarf complex of a forest");
  forest_cmd->add_option("graph", graph_text, "Edge list, JSON, or builtin such as path:4")->required();

  std::string kind;
  unsigned t = 1;
  auto* power_cmd = app.add_subcommand("power-form", "Closed-form Scarf complex of a power of a special graph");
  power_cmd->add_option("kind", kind, "triangle, path3, claw or square")->required();
  power_cmd->add_option("t", t, "Power")->required()->check(CLI::PositiveNumber);

  std::string complex_source;
  unsigned characteristic = 0;
  auto* homology_cmd = app.add_subcommand("homology", "Reduced homology of a complex given as JSON");
  homology_cmd->add_option("complex", complex_source, "JSON file, '-' for stdin, or inline JSON")->required();
  homology_cmd->add_option("--char", characteristic, "Coefficient characteristic: 0 or a prime");

  std::string suite;
  double budget = 0.0;
  std::uint64_t seed = scarf_default_seed();
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite, or 'all'");
  verify_cmd->add_option("suite", suite, "Suite name")->required();
  verify_cmd->add_option("--budget", budget, "Time budget in seconds (0 = unlimited)");
  verify_cmd->add_option("--seed", seed, "Seed for randomized cases");

  unsigned enumerate_n = 0;
  auto* graphs_cmd = app.add_subcommand("graphs", "Stream all labeled graphs on n vertices");
  graphs_cmd->add_option("--enumerate", enumerate_n, "Vertex count, 1 to 6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    char* out = nullptr;
    if (*scarf_cmd) {
      const auto ideal = parse_ideal(ideal_text);
      scarf_complex* raw = nullptr;
      check(scarf_complex_scarf(ideal.get(), &raw));
      const Complex complex(raw);
      check(scarf_complex_render(complex.get(), format, &out));
      emit(out);
      return 0;
    }
    if (*taylor_cmd) {
      const auto ideal = parse_ideal(ideal_text);
      if (format == SCARF_FORMAT_DOT) {
        scarf_complex* raw = nullptr;
        check(scarf_complex_taylor(ideal.get(), &raw));
        const Complex complex(raw);
        check(scarf_complex_render(complex.get(), format, &out));
      } else {
        check(scarf_taylor_groups_render(ideal.get(), format, &out));
      }
      emit(out);
      return 0;
    }
    if (*is_scarf_cmd) {
      Ideal ideal;
      if (as_graph) {
        const auto graph = parse_graph(ideal_text);
        scarf_ideal* raw = nullptr;
        check(scarf_ideal_from_graph(graph.get(), &raw));
        ideal.reset(raw);
      } else {
        ideal = parse_ideal(ideal_text);
      }
      if (power > 1) {
        scarf_ideal* raw = nullptr;
        check(scarf_ideal_power(ideal.get(), power, &raw));
        ideal.reset(raw);
      }
      scarf_report* raw = nullptr;
      check(scarf_is_scarf(ideal.get(), lattice_cap, &raw));
      const Report report(raw);
      check(scarf_report_render(report.get(), format, &out));
      emit(out);
      return static_cast<int>(scarf_report_verdict(report.get()));
    }
    if (*forest_cmd) {
      const auto graph = parse_graph(graph_text);
      scarf_complex* raw = nullptr;
      check(scarf_complex_forest(graph.get(), &raw));
      const Complex complex(raw);
      check(scarf_complex_render(complex.get(), format, &out));
      emit(out);
      return 0;
    }
    if (*power_cmd) {
      scarf_complex* raw = nullptr;
      check(scarf_complex_power_form(kind.c_str(), t, &raw));
      const Complex complex(raw);
      check(scarf_complex_render(complex.get(), format, &out));
      emit(out);
      return 0;
    }
    if (*homology_cmd) {
      const std::string json = read_source(complex_source);
      scarf_complex* raw = nullptr;
      check(scarf_complex_parse_json(json.c_str(), &raw));
      const Complex complex(raw);
      check(scarf_complex_homology(complex.get(), characteristic, format, &out));
      emit(out);
      return 0;
    }
    if (*verify_cmd) {
      bool all_ok = true;
      const bool every = suite == "all";
      const std::size_t count = every ? scarf_suite_count() : 1;
      for (std::size_t i = 0; i < count; ++i) {
        const char* name = every ? scarf_suite_name(i) : suite.c_str();
        int passed = 0;
        check(scarf_verify(name, budget, seed, format, &out, &passed));
        emit(out);
        all_ok = all_ok && passed;
      }
      return all_ok ? 0 : 1;
    }
    if (*graphs_cmd) {
      check(scarf_graph_enumerate(enumerate_n, format, print_graph_line, nullptr));
      return 0;
    }
  } catch (const Failure& f) {
    const char* message = scarf_last_error();
    if (message && *message) std::cerr << "error: " << message << '\n';
    return exit_code_for(f.status);
  }
  return kExitParse;
}
