// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Complexes are compared here as sets of faces, each face the
// set of its vertex-label strings, so the check does not go through
// same_labeled_faces.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scarf/constructions.hpp"
#include "scarf/engine.hpp"
#include "scarf/io.hpp"

using namespace scarf;

namespace {

constexpr std::uint64_t kSeed = 20240611;

using FaceSet = std::set<std::set<std::string>>;

FaceSet face_set(const LabeledComplex& c) {
  FaceSet out;
  for (const auto& f : c.faces()) {
    std::set<std::string> labels;
    for (auto v : f) labels.insert(c.vertex_labels()[v].to_string());
    out.insert(std::move(labels));
  }
  return out;
}

std::vector<std::string> labels_in_size(const LabeledComplex& c, std::size_t size) {
  std::vector<std::string> out;
  for (const auto& f : c.faces()) {
    if (f.size() == size) out.push_back(c.label(f).to_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> strings(const VariableSet& v, std::initializer_list<const char*> words) {
  std::vector<std::string> out;
  for (auto w : words) out.push_back(Monomial::parse(v, w).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Faces given by generator words, closed under subsets.
FaceSet faces_from_facets(const VariableSet& v, std::vector<std::vector<const char*>> facets) {
  FaceSet out;
  for (const auto& f : facets) {
    const std::size_t n = f.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::set<std::string> face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.insert(Monomial::parse(v, f[i]).to_string());
      }
      out.insert(face);
    }
  }
  return out;
}

SimpleGraph named(std::vector<std::string> v, std::vector<std::pair<std::string, std::string>> e) {
  return SimpleGraph(std::move(v), e);
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<bool(std::ostringstream&)> body;
};

// Labeled forests on n vertices: each edge set grown in increasing edge
// order, joining distinct union-find components.
void for_each_forest(unsigned n, std::size_t max_edges, const std::function<void(const SimpleGraph&)>& visit) {
  std::vector<Edge> all;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  std::vector<Edge> chosen;
  std::function<void(std::size_t, std::vector<unsigned>)> grow = [&](std::size_t from, std::vector<unsigned> comp) {
    SimpleGraph g(names);
    for (const auto& e : chosen) g.add_edge(e.first, e.second);
    visit(g);
    if (chosen.size() == max_edges) return;
    for (std::size_t i = from; i < all.size(); ++i) {
      const auto ca = comp[all[i].first];
      const auto cb = comp[all[i].second];
      if (ca == cb) continue;
      auto next = comp;
      for (auto& c : next) {
        if (c == cb) c = ca;
      }
      chosen.push_back(all[i]);
      grow(i + 1, std::move(next));
      chosen.pop_back();
    }
  };
  std::vector<unsigned> comp(n);
  std::iota(comp.begin(), comp.end(), 0u);
  grow(0, comp);
}

SimpleGraph random_forest(std::mt19937_64& rng, unsigned vertices) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < vertices; ++i) names.push_back("v" + std::to_string(i + 1));
  SimpleGraph g(names);
  for (VertexId v = 1; v < vertices; ++v) {
    // Attach to an earlier vertex or start a new tree.
    const auto pick = rng() % (v + 1);
    if (pick < v) g.add_edge(static_cast<VertexId>(pick), v);
  }
  return g;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const VariableSet& v, unsigned max_gens, unsigned max_exp) {
  std::vector<Monomial> gens;
  const unsigned q = 1 + static_cast<unsigned>(rng() % max_gens);
  for (unsigned i = 0; i < q; ++i) {
    std::vector<Monomial::Exponent> e(v.size());
    for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % (max_exp + 1));
    gens.emplace_back(v, e);
  }
  return minimize(v, gens);
}

VariableSet letters(unsigned n, char first) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>(first + i)));
  return VariableSet(names);
}

bool criterion_examples(std::ostringstream& log) {
  bool ok = true;
  {
    const auto ideal = io::parse_ideal("xyz, x^2z, xy^2");
    const auto c = scarf_complex(ideal);
    const bool pass = f_vector(c) == std::vector<std::size_t>{3, 2} &&
                      labels_in_size(c, 2) == strings(ideal.variables(), {"x^2yz", "xy^2z"});
    log << " three-generators=" << pass;
    ok &= pass;
  }
  {
    const auto ideal = io::parse_ideal("xy, yz, zw, wx");
    const auto c = scarf_complex(ideal);
    const bool pass = f_vector(c) == std::vector<std::size_t>{4, 4} && c.dimension() == 1 &&
                      labels_in_size(c, 2) == strings(ideal.variables(), {"xyz", "yzw", "xzw", "xyw"}) &&
                      reduced_homology(c).rank_in(1) == 1;
    log << " c4=" << pass;
    ok &= pass;
  }
  {
    const auto ideal = io::parse_ideal("xy, yz, uv");
    const bool pass = face_set(scarf_complex(ideal)) == face_set(taylor_complex(ideal));
    log << " disjoint=" << pass;
    ok &= pass;
  }
  {
    const auto ideal = edge_ideal(named({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "e"}}));
    const bool pass = face_set(scarf_complex(ideal)) == faces_from_facets(ideal.variables(), {{"ab", "bc", "bd"}, {"bd", "de"}});
    log << " four-edge-tree=" << pass;
    ok &= pass;
  }
  {
    const auto ideal = io::parse_ideal("ab, bc, cd, de, ef");
    const auto c = scarf_complex(ideal);
    const auto& v = ideal.variables();
    const bool pass = f_vector(c) == std::vector<std::size_t>{5, 7, 2} &&
                      labels_in_size(c, 2) == strings(v, {"abc", "bcd", "cde", "def", "abde", "abef", "bcef"}) &&
                      labels_in_size(c, 3) == strings(v, {"abcef", "abdef"});
    log << " path5=" << pass;
    ok &= pass;
  }
  {
    const auto ideal = io::parse_ideal("ab, bc, bd, de, ef");
    const auto c = scarf_complex(ideal);
    const auto support = supports_resolution(c, ideal);
    const bool pass = !is_acyclic(c) && support.verdict == SupportVerdict::no &&
                      face_set(c) == faces_from_facets(ideal.variables(),
                                                       {{"ab", "bc", "bd"}, {"ab", "bc", "ef"}, {"bd", "de"}, {"de", "ef"}});
    log << " non-acyclic-tree=" << pass;
    ok &= pass;
  }
  return ok;
}

bool criterion_oracle(std::ostringstream& log) {
  std::size_t checked = 0, mismatches = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_labeled_graph(n, [&](const SimpleGraph& g) {
      if (g.edge_count() == 0) return;
      for (unsigned t = 1; t <= 2; ++t) {
        const auto ideal = power(edge_ideal(g), t);
        ++checked;
        if (face_set(scarf_complex(ideal)) != face_set(scarf_complex_bruteforce(ideal))) ++mismatches;
      }
    });
  }
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const auto v = letters(2 + static_cast<unsigned>(rng() % 4), 'a');
    const auto ideal = random_ideal(rng, v, 12, 4);
    ++checked;
    if (face_set(scarf_complex(ideal)) != face_set(scarf_complex_bruteforce(ideal))) ++mismatches;
  }
  log << " ideals=" << checked << " mismatches=" << mismatches;
  return mismatches == 0 && checked > 200;
}

bool criterion_sweep(std::ostringstream& log) {
  std::size_t graphs = 0, disagreements = 0, scarf = 0;
  for_each_labeled_graph(5, [&](const SimpleGraph& g) {
    ++graphs;
    const bool engine = is_scarf(edge_ideal(g)).verdict == SupportVerdict::yes;
    scarf += engine;
    if (engine != (is_forest(g) && is_gap_free(g))) ++disagreements;
  });
  log << " graphs=" << graphs << " scarf=" << scarf << " disagreements=" << disagreements;
  return graphs == 1024 && disagreements == 0;
}

bool criterion_forests(std::ostringstream& log) {
  std::size_t checked = 0, mismatches = 0;
  for (unsigned n = 2; n <= 8; ++n) {
    for_each_forest(n, 7, [&](const SimpleGraph& g) {
      if (g.edge_count() == 0) return;
      ++checked;
      if (face_set(forest_scarf(g)) != face_set(scarf_complex(edge_ideal(g)))) ++mismatches;
    });
  }
  std::mt19937_64 rng(kSeed + 4);
  std::size_t random = 0;
  while (random < 50) {
    const auto g = random_forest(rng, 2 + static_cast<unsigned>(rng() % 12));
    if (g.edge_count() == 0 || g.edge_count() > 12) continue;
    ++random;
    if (face_set(forest_scarf(g)) != face_set(scarf_complex(edge_ideal(g)))) ++mismatches;
  }
  log << " exhaustive=" << checked << " random=" << random << " mismatches=" << mismatches;
  return mismatches == 0;
}

bool criterion_vertex_removal(std::ostringstream& log) {
  std::size_t checked = 0, mismatches = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const SimpleGraph& g) {
      const auto expected = face_set(scarf_complex(edge_ideal(g)));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto smaller = delete_vertex(g, v);
        const auto rebuilt = vertex_removal_scarf(g, v, scarf_complex(edge_ideal(smaller)));
        ++checked;
        if (face_set(rebuilt) != expected) ++mismatches;
      }
    });
  }
  log << " (graph, vertex) pairs=" << checked << " mismatches=" << mismatches;
  return mismatches == 0;
}

unsigned binomial(unsigned n, unsigned k) {
  unsigned r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool criterion_closed_forms(std::ostringstream& log) {
  bool ok = true;
  for (auto kind : {SpecialGraph::triangle, SpecialGraph::square, SpecialGraph::path3, SpecialGraph::claw}) {
    const bool needs_two = kind == SpecialGraph::path3 || kind == SpecialGraph::claw;
    for (unsigned t = needs_two ? 2 : 1; t <= 3; ++t) {
      const auto ideal = power(edge_ideal(special_graph(kind)), t);
      const auto closed = power_scarf_closed_form({kind, t});
      const auto engine = scarf_complex(ideal);
      bool pass = face_set(closed) == face_set(engine);
      if (kind == SpecialGraph::triangle || kind == SpecialGraph::claw) pass &= closed.vertex_count() == binomial(t + 2, 2);
      if (kind == SpecialGraph::square) pass &= closed.vertex_count() == (t + 1) * (t + 1);
      if (kind == SpecialGraph::claw) pass &= f_vector(closed).size() >= 2 && f_vector(closed)[1] == 3 * t;
      const auto support = supports_resolution(engine, ideal);
      const auto witness = vertex_support_product(edge_ideal(special_graph(kind))).pow(t);
      const auto at_witness = check_multidegree(engine, witness);
      pass &= support.verdict == SupportVerdict::no && at_witness.homology.verdict != Acyclicity::acyclic;
      log << ' ' << to_string(kind) << t << '=' << pass;
      ok &= pass;
    }
  }
  return ok;
}

bool criterion_powers(std::ostringstream& log) {
  constexpr std::size_t kGenericLimit = 18;
  std::size_t generic = 0, certificate = 0, failures = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [&](const SimpleGraph& g) {
      if (!is_connected(g)) return;
      const auto verdict = power_graph_verdict(g, 2);
      if (g.edge_count() == 0) {
        failures += !verdict.scarf;
        ++generic;
        return;
      }
      const auto sq = power(edge_ideal(g), 2);
      if (sq.size() <= kGenericLimit) {
        ++generic;
        const bool engine = is_scarf(sq).verdict == SupportVerdict::yes;
        failures += engine != verdict.scarf;
      } else {
        ++certificate;
        const auto h = find_forbidden_induced(g, ForbiddenFamily::power);
        bool pass = h && !verdict.scarf && verdict.homology && verdict.homology->verdict != Acyclicity::acyclic;
        if (pass) {
          Monomial m(g.variables());
          for (auto v : h->vertices) {
            std::size_t idx[] = {v};
            m = product(m, Monomial::from_support(g.variables(), idx));
          }
          const auto restricted = restrict_to_divisors(scarf_complex(sq), m.pow(2));
          pass = !restricted.empty() && acyclicity(restricted).verdict != Acyclicity::acyclic;
        }
        failures += !pass;
      }
    });
  }
  log << " generic=" << generic << " certificate=" << certificate << " failures=" << failures;
  return failures == 0 && generic > 0;
}

bool criterion_join(std::ostringstream& log) {
  std::mt19937_64 rng(kSeed + 8);
  std::size_t mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const auto a = random_ideal(rng, letters(1 + static_cast<unsigned>(rng() % 3), 'a'), 8, 3);
    const auto b = random_ideal(rng, letters(1 + static_cast<unsigned>(rng() % 3), 'p'), 8, 3);
    const auto joined = join(scarf_complex(a), scarf_complex(b));
    if (face_set(scarf_complex(sum(a, b))) != face_set(joined)) ++mismatches;
  }
  log << " pairs=100 mismatches=" << mismatches;
  return mismatches == 0;
}

bool criterion_induced(std::ostringstream& log) {
  constexpr std::size_t kGuardrail = 80;
  std::mt19937_64 rng(kSeed + 9);
  std::size_t checked = 0, skipped = 0, failures = 0;
  while (checked + skipped < 100) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 5);
    std::vector<std::string> names;
    for (unsigned i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    SimpleGraph g(names);
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = x + 1; y < n; ++y) {
        if (rng() % 2) g.add_edge(x, y);
      }
    }
    std::vector<VertexId> keep;
    for (VertexId x = 0; x < n; ++x) {
      if (rng() % 3) keep.push_back(x);
    }
    const auto h = induced_subgraph(g, keep);
    if (h.edge_count() == 0) continue;
    const unsigned t = 1 + static_cast<unsigned>(rng() % 2);
    const auto big = power(edge_ideal(g), t);
    if (big.size() > kGuardrail) {
      ++skipped;
      continue;
    }
    ++checked;
    const auto small = power(edge_ideal(h), t);
    std::set<std::string> big_gens;
    for (const auto& m : big.generators()) big_gens.insert(m.to_string());
    bool pass = true;
    for (const auto& m : small.generators()) pass &= big_gens.count(m.to_string()) == 1;
    std::vector<std::size_t> support(keep.begin(), keep.end());
    const auto m_h = Monomial::from_support(g.variables(), support).pow(t);
    pass &= face_set(scarf_complex(small)) == face_set(restrict_to_divisors(scarf_complex(big), m_h));
    failures += !pass;
  }
  log << " triples=" << checked << " guardrail-skips=" << skipped << " failures=" << failures;
  return failures == 0 && checked > 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden examples", 1.0, criterion_examples},
      {2, "depth-first vs brute-force Scarf complexes", 120.0, criterion_oracle},
      {3, "edge ideals on 5 vertices: Scarf iff gap-free forest", 300.0, criterion_sweep},
      {4, "forest construction vs engine", 300.0, criterion_forests},
      {5, "vertex-removal recursion", 600.0, criterion_vertex_removal},
      {6, "closed forms for powers of the four special graphs", 180.0, criterion_closed_forms},
      {7, "squares of connected edge ideals", 600.0, criterion_powers},
      {8, "Scarf complex of a sum in disjoint variables is the join", 60.0, criterion_join},
      {9, "induced subgraphs restrict Scarf complexes of powers", 300.0, criterion_induced},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(log);
    } catch (const std::exception& e) {
      log << " exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = seconds < c.limit_seconds;
    if (!in_time) log << " over time limit";
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s\n", ok && in_time ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, c.limit_seconds, log.str().c_str());
    failed += !(ok && in_time);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
