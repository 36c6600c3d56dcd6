#include "scarf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "scarf/constructions.hpp"
#include "scarf/engine.hpp"
#include "scarf/error.hpp"
#include "scarf/io.hpp"

namespace scarf::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string expected;
  std::string observed;
};

class Runner {
 public:
  explicit Runner(SuiteReport& report) : report_(report), start_(Clock::now()) {}

  void run(std::string name, std::string anchor, std::string input, const std::function<Outcome()>& body) {
    VerificationCase c{std::move(name), std::move(anchor), std::move(input), {}, {}, CaseStatus::skipped, {}, 0.0};
    if (report_.budget_seconds > 0 && elapsed() > report_.budget_seconds) {
      c.skip_reason = "budget of " + format_seconds(report_.budget_seconds) + " exhausted";
      report_.cases.push_back(std::move(c));
      return;
    }
    const auto t0 = Clock::now();
    try {
      Outcome out = body();
      c.expected = std::move(out.expected);
      c.observed = std::move(out.observed);
      c.status = out.ok ? CaseStatus::pass : CaseStatus::fail;
    } catch (const std::exception& e) {
      c.observed = std::string("error: ") + e.what();
      c.status = CaseStatus::fail;
    }
    c.milliseconds = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report_.cases.push_back(std::move(c));
  }

  void skip(std::string name, std::string anchor, std::string input, std::string reason) {
    report_.cases.push_back(
        {std::move(name), std::move(anchor), std::move(input), {}, {}, CaseStatus::skipped, std::move(reason), 0.0});
  }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  static std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%gs", s);
    return buf;
  }

 private:
  SuiteReport& report_;
  Clock::time_point start_;
};

std::string padded(std::size_t i, int width = 3) {
  std::string s = std::to_string(i);
  return std::string(width > static_cast<int>(s.size()) ? width - s.size() : 0, '0') + s;
}

std::string describe(const LabeledComplex& c) {
  if (c.empty()) return "empty complex";
  std::vector<std::string> facets;
  for (const auto& f : c.facets()) {
    std::vector<std::string> labels;
    for (auto v : f) labels.push_back(c.vertex_labels()[v].to_string());
    std::sort(labels.begin(), labels.end());
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    facets.push_back(s + "}");
  }
  std::sort(facets.begin(), facets.end());
  std::string out;
  for (const auto& f : facets) out += (out.empty() ? "" : " ") + f;
  return out;
}

std::string vec_text(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

Outcome same(const LabeledComplex& expected, const LabeledComplex& observed) {
  return {same_labeled_faces(expected, observed), describe(expected), describe(observed)};
}

// Label strings of the faces of one dimension, sorted.
std::vector<std::string> labels_in_dimension(const LabeledComplex& c, std::size_t size) {
  std::vector<std::string> out;
  for (const auto& f : c.faces()) {
    if (f.size() == size) out.push_back(c.label(f).to_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::vector<std::string> monomial_strings(const VariableSet& vars, std::initializer_list<const char*> words) {
  std::vector<std::string> out;
  for (auto w : words) out.push_back(Monomial::parse(vars, w).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

LabeledComplex complex_from_label_facets(const MonomialIdeal& ideal,
                                         const std::vector<std::vector<const char*>>& facets) {
  std::vector<Face> faces;
  for (const auto& f : facets) {
    Face face;
    for (auto w : f) {
      auto idx = ideal.index_of(Monomial::parse(ideal.variables(), w));
      if (!idx) throw Error(ErrorKind::internal, std::string("fixture label is not a generator: ") + w);
      face.push_back(static_cast<std::uint32_t>(*idx));
    }
    std::sort(face.begin(), face.end());
    faces.push_back(face);
  }
  return LabeledComplex::from_facets(ideal.variables(), ideal.generators(), faces);
}

std::vector<std::string> edge_face_names(const SimpleGraph& g, const std::vector<EdgeFace>& faces) {
  std::vector<std::string> out;
  for (const auto& f : faces) {
    std::vector<std::string> names;
    for (const auto& e : f) names.push_back(g.edge_name(e));
    std::sort(names.begin(), names.end());
    out.push_back("{" + joined(names) + "}");
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimpleGraph named_graph(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges) {
  return SimpleGraph(std::move(vertices), edges);
}

// ---------------------------------------------------------------- suites

void worked_examples(Runner& r) {
  r.run("c4-hollow-square", "Scarf complex of the 4-cycle is its boundary square", "xy,yz,zw,wx", [] {
    const auto ideal = io::parse_ideal("xy,yz,zw,wx");
    const auto report = is_scarf(ideal);
    const auto& vars = ideal.variables();
    const auto edges = labels_in_dimension(report.scarf, 2);
    const auto want = monomial_strings(vars, {"xyz", "yzw", "xzw", "xyw"});
    const bool ok = f_vector(report.scarf) == std::vector<std::size_t>{4, 4} && edges == want &&
                    report.verdict == SupportVerdict::no && report.witness &&
                    *report.witness == Monomial::parse(vars, "xyzw");
    return Outcome{ok, "f=[4,4] edges " + joined(want) + "; not Scarf, witness " + Monomial::parse(vars, "xyzw").to_string(),
                   "f=" + vec_text(f_vector(report.scarf)) + " edges " + joined(edges) + "; " +
                       to_string(report.verdict) + ", witness " + (report.witness ? report.witness->to_string() : "none")};
  });

  r.run("disjoint-edges-full-simplex", "Scarf complex equals the Taylor simplex when no label repeats",
        "xy,yz,uv", [] {
          const auto ideal = io::parse_ideal("xy,yz,uv");
          return same(taylor_complex(ideal), scarf_complex(ideal));
        });

  r.run("forest-four-edges", "Scarf complex of the tree ab,bc,bd,de", "ab bc bd de", [] {
    const auto g = io::parse_graph("ab bc bd de");
    const auto ideal = edge_ideal(g);
    const auto expected = complex_from_label_facets(ideal, {{"ab", "bc", "bd"}, {"bd", "de"}});
    auto out = same(expected, scarf_complex(ideal));
    const auto forest = same(expected, forest_scarf(g));
    out.ok = out.ok && forest.ok;
    out.observed += " | forest form " + forest.observed;
    return out;
  });

  r.run("forest-four-edges-leaf-de", "Extendable faces at the leaf edge de are the empty face and {bd}",
        "ab bc bd de; leaf e", [] {
          const auto g = io::parse_graph("ab bc bd de");
          const auto e = g.require_vertex("e");
          const auto smaller = delete_vertex(g, e);
          const auto faces = edge_face_names(g, leaf_extension_faces(g, e, scarf_complex(edge_ideal(smaller))));
          const std::vector<std::string> want{"{bd}", "{}"};
          return Outcome{faces == want, joined(want), joined(faces)};
        });

  r.run("path-five-edges", "Scarf complex of the path a..f: f-vector [5,7,2] with the listed labels",
        "ab bc cd de ef", [] {
          const auto g = io::parse_graph("ab bc cd de ef");
          const auto c = scarf_complex(edge_ideal(g));
          const auto vars = g.variables();
          const auto edges = labels_in_dimension(c, 2);
          const auto triangles = labels_in_dimension(c, 3);
          const auto want_edges = monomial_strings(vars, {"abc", "bcd", "cde", "def", "abde", "abef", "bcef"});
          const auto want_tri = monomial_strings(vars, {"abcef", "abdef"});
          const bool ok = f_vector(c) == std::vector<std::size_t>{5, 7, 2} && edges == want_edges && triangles == want_tri;
          return Outcome{ok, "f=[5,7,2] edges " + joined(want_edges) + " triangles " + joined(want_tri),
                         "f=" + vec_text(f_vector(c)) + " edges " + joined(edges) + " triangles " + joined(triangles)};
        });

  r.run("path-five-edges-extension", "{ab,bc} extends by the leaf edge ef", "ab bc cd de ef; sigma {ab,bc}", [] {
    const auto g = io::parse_graph("ab bc cd de ef");
    const auto f = g.require_vertex("f");
    const auto faces = edge_face_names(g, leaf_extension_faces(g, f, scarf_complex(edge_ideal(delete_vertex(g, f)))));
    const bool found = std::find(faces.begin(), faces.end(), "{ab,bc}") != faces.end();
    return Outcome{found, "{ab,bc} among extendable faces", joined(faces)};
  });

  r.run("forest-non-acyclic", "A tree whose Scarf complex has a 4-cycle and no resolution",
        "ab bc bd de ef", [] {
          const auto g = named_graph({"a", "b", "c", "d", "e", "f"},
                                     {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "e"}, {"e", "f"}});
          const auto ideal = edge_ideal(g);
          const auto c = scarf_complex(ideal);
          const auto expected =
              complex_from_label_facets(ideal, {{"ab", "bc", "bd"}, {"ab", "bc", "ef"}, {"bd", "de"}, {"de", "ef"}});
          const auto support = supports_resolution(c, ideal);
          const auto hom = acyclicity(c);
          const bool ok = same_labeled_faces(expected, c) && hom.verdict == Acyclicity::not_acyclic &&
                          support.verdict == SupportVerdict::no;
          return Outcome{ok, describe(expected) + "; not-acyclic; support no",
                         describe(c) + "; " + to_string(hom.verdict) + "; support " + to_string(support.verdict)};
        });

  r.run("forest-six-edges", "Scarf complex of the tree ab,bc,bd,de,df,dg is a tetrahedron and a triangle",
        "ab bc bd de df dg", [] {
          const auto g = io::parse_graph("ab bc bd de df dg");
          const auto ideal = edge_ideal(g);
          const auto expected = complex_from_label_facets(ideal, {{"bd", "de", "df", "dg"}, {"ab", "bc", "bd"}});
          const auto c = scarf_complex(ideal);
          const auto support = supports_resolution(c, ideal);
          auto out = same(expected, c);
          out.ok = out.ok && support.verdict == SupportVerdict::yes && same_labeled_faces(expected, forest_scarf(g));
          out.observed += "; support " + std::string(to_string(support.verdict));
          return out;
        });

  r.run("edge-removal-triangle", "Scarf(G - vw) need not lie in Scarf(G): {wa,av} for the triangle",
        "G' = wa av, G = wa av vw", [] {
          const auto g = named_graph({"w", "a", "v"}, {{"w", "a"}, {"a", "v"}, {"v", "w"}});
          const Edge vw(g.require_vertex("v"), g.require_vertex("w"));
          const auto smaller = delete_edge(g, vw);
          const auto smaller_scarf = scarf_complex(edge_ideal(smaller));
          const auto ext = edge_face_names(g, edge_removal_extension_faces(g, vw, smaller_scarf));
          const auto big_faces = edge_face_names(g, edge_faces(g, scarf_complex(edge_ideal(g))));
          const std::string sigma = "{av,wa}";
          const bool in_small = smaller_scarf.facets().size() == 1 && smaller_scarf.facets().front().size() == 2;
          const bool extends = std::find(ext.begin(), ext.end(), sigma) != ext.end();
          const bool in_big = std::find(big_faces.begin(), big_faces.end(), sigma) != big_faces.end();
          return Outcome{in_small && !extends && !in_big,
                         sigma + " in Scarf(G'), not extendable, not in Scarf(G)",
                         "extendable " + joined(ext) + "; Scarf(G) faces " + joined(big_faces)};
        });

  r.run("taylor-three-generators", "Scarf complex of (xyz, x^2z, xy^2) has two edges", "xyz, x^2z, xy^2", [] {
    const auto ideal = io::parse_ideal("xyz, x^2z, xy^2");
    const auto c = scarf_complex(ideal);
    const auto edges = labels_in_dimension(c, 2);
    const auto want = monomial_strings(ideal.variables(), {"x^2yz", "xy^2z"});
    const bool ok = f_vector(c) == std::vector<std::size_t>{3, 2} && edges == want;
    return Outcome{ok, "f=[3,2] edges " + joined(want), "f=" + vec_text(f_vector(c)) + " edges " + joined(edges)};
  });

  r.run("power-triangle-certificate", "Square of the triangle's edge ideal fails at (abc)^2", "cycle:3, t = 2", [] {
    const auto v = power_graph_verdict(graphs::cycle(3), 2);
    const bool ok = !v.scarf && v.obstruction && v.obstruction->kind == InducedKind::C3 && v.multidegree &&
                    v.multidegree->to_string() == "a^2*b^2*c^2" && v.homology &&
                    v.homology->verdict == Acyclicity::not_acyclic && v.restricted &&
                    f_vector(*v.restricted) == std::vector<std::size_t>{6};
    return Outcome{ok, "not Scarf, C3, a^2*b^2*c^2, 6 isolated vertices",
                   std::string(v.scarf ? "Scarf" : "not Scarf") + ", " +
                       (v.multidegree ? v.multidegree->to_string() : "-") + ", " +
                       (v.restricted ? vec_text(f_vector(*v.restricted)) : "-")};
  });
}

void edge_ideal_sweep(Runner& r) {
  for (unsigned n = 1; n <= 5; ++n) {
    r.run("graphs-on-" + std::to_string(n), "edge ideal is Scarf iff the graph is a gap-free forest",
          "all labeled graphs on " + std::to_string(n) + " vertices", [n] {
            std::size_t total = 0, agree = 0;
            std::string first_bad;
            for_each_labeled_graph(n, [&](const SimpleGraph& g) {
              ++total;
              const bool engine = is_scarf(edge_ideal(g)).verdict == SupportVerdict::yes;
              const bool fast = is_forest(g) && is_gap_free(g);
              if (engine == fast) {
                ++agree;
              } else if (first_bad.empty()) {
                first_bad = io::graph_to_text(g);
              }
            });
            std::string obs = std::to_string(agree) + "/" + std::to_string(total);
            if (!first_bad.empty()) obs += " first disagreement " + first_bad;
            return Outcome{agree == total, std::to_string(total) + "/" + std::to_string(total), obs};
          });
  }
}

void power_verdicts(Runner& r) {
  constexpr std::size_t kGenericLimit = 18;
  for (unsigned n = 1; n <= 5; ++n) {
    r.run("connected-on-" + std::to_string(n), "square of I(G) is Scarf iff G is a vertex, an edge or a 2-path",
          "connected labeled graphs on " + std::to_string(n) + " vertices, t = 2", [n] {
            std::size_t total = 0, generic = 0, certified = 0, agree = 0;
            std::string first_bad;
            for_each_labeled_graph(n, [&](const SimpleGraph& g) {
              if (!is_connected(g)) return;
              ++total;
              const auto verdict = power_graph_verdict(g, 2);
              bool ok;
              if (g.edge_count() == 0) {
                ok = verdict.scarf;
                ++generic;
              } else if (power(edge_ideal(g), 2).size() <= kGenericLimit) {
                ++generic;
                ok = verdict.scarf == (is_scarf(power(edge_ideal(g), 2)).verdict == SupportVerdict::yes);
              } else {
                ++certified;
                ok = !verdict.scarf && verdict.homology && verdict.homology->verdict != Acyclicity::acyclic;
              }
              if (ok) {
                ++agree;
              } else if (first_bad.empty()) {
                first_bad = io::graph_to_text(g);
              }
            });
            std::string obs = std::to_string(agree) + "/" + std::to_string(total) + " (generic " +
                              std::to_string(generic) + ", certificate " + std::to_string(certified) + ")";
            if (!first_bad.empty()) obs += " first disagreement " + first_bad;
            return Outcome{agree == total, std::to_string(total) + "/" + std::to_string(total), obs};
          });
  }
}

// Every labeled forest on n vertices with at least one edge.
void for_each_forest(unsigned n, const std::function<void(const SimpleGraph&)>& visit) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  const auto names = graphs::default_names(n);
  std::vector<unsigned> comp(n);
  std::iota(comp.begin(), comp.end(), 0u);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t next) {
    if (!chosen.empty()) {
      SimpleGraph g(names);
      for (auto i : chosen) g.add_edge(pairs[i].first, pairs[i].second);
      visit(g);
    }
    for (std::size_t i = next; i < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      if (comp[a] == comp[b]) continue;
      const auto saved = comp;
      const unsigned from = comp[b];
      for (auto& c : comp) {
        if (c == from) c = comp[a];
      }
      chosen.push_back(i);
      grow(i + 1);
      chosen.pop_back();
      comp = saved;
    }
  };
  grow(0);
}

SimpleGraph random_forest(std::mt19937_64& rng, unsigned max_edges) {
  const unsigned m = std::uniform_int_distribution<unsigned>(1, max_edges)(rng);
  const unsigned n = m + 1 + std::uniform_int_distribution<unsigned>(0, 3)(rng);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (unsigned i = 1; i < n; ++i) {
    edges.emplace_back(order[i], order[std::uniform_int_distribution<unsigned>(0, i - 1)(rng)]);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  edges.resize(m);
  SimpleGraph g(graphs::default_names(n));
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void forest_oracle(Runner& r, std::uint64_t seed) {
  for (unsigned n = 2; n <= 8; ++n) {
    r.run("exhaustive-" + std::to_string(n), "Scarf complex of a forest is the clique complex of pairs at distance != 1",
          "all labeled forests on " + std::to_string(n) + " vertices", [n] {
            std::size_t total = 0, agree = 0;
            std::string first_bad;
            for_each_forest(n, [&](const SimpleGraph& g) {
              ++total;
              if (same_labeled_faces(forest_scarf(g), scarf_complex(edge_ideal(g)))) {
                ++agree;
              } else if (first_bad.empty()) {
                first_bad = io::graph_to_text(g);
              }
            });
            std::string obs = std::to_string(agree) + "/" + std::to_string(total);
            if (!first_bad.empty()) obs += " first disagreement " + first_bad;
            return Outcome{agree == total, std::to_string(total) + "/" + std::to_string(total), obs};
          });
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto g = random_forest(rng, 12);
    r.run("random-" + padded(i), "Scarf complex of a forest is the clique complex of pairs at distance != 1",
          io::graph_to_text(g), [g] { return same(scarf_complex(edge_ideal(g)), forest_scarf(g)); });
  }
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const VariableSet& vars, unsigned max_gens, unsigned max_exp) {
  const unsigned q = std::uniform_int_distribution<unsigned>(1, max_gens)(rng);
  std::uniform_int_distribution<Monomial::Exponent> exp(0, max_exp);
  std::vector<Monomial> gens;
  for (unsigned i = 0; i < q; ++i) {
    std::vector<Monomial::Exponent> e(vars.size());
    do {
      for (auto& x : e) x = exp(rng);
    } while (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; }));
    gens.emplace_back(vars, e);
  }
  return minimize(vars, gens);
}

VariableSet numbered_vars(const std::string& prefix, unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return VariableSet(names);
}

SimpleGraph random_graph(std::mt19937_64& rng, unsigned n) {
  SimpleGraph g(graphs::default_names(n));
  std::bernoulli_distribution coin(0.5);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

// Ideal with the same generators over a larger variable set.
MonomialIdeal embedded(const MonomialIdeal& ideal, const VariableSet& vars) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(vars));
  return minimize(vars, gens);
}

void join_induced(Runner& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 100; ++i) {
    const auto a = random_ideal(rng, numbered_vars("x", std::uniform_int_distribution<unsigned>(2, 4)(rng)), 8, 3);
    const auto b = random_ideal(rng, numbered_vars("y", std::uniform_int_distribution<unsigned>(2, 4)(rng)), 8, 3);
    r.run("join-" + padded(i), "Scarf complex of a sum in disjoint variables is the join",
          io::ideal_to_text(a) + " + " + io::ideal_to_text(b),
          [a, b] { return same(join(scarf_complex(a), scarf_complex(b)), scarf_complex(sum(a, b))); });
  }

  constexpr std::size_t kGuardrail = 80;
  for (std::size_t i = 0; i < 100; ++i) {
    const unsigned n = std::uniform_int_distribution<unsigned>(2, 6)(rng);
    SimpleGraph g = random_graph(rng, n);
    std::vector<VertexId> keep;
    do {
      keep.clear();
      std::bernoulli_distribution coin(0.6);
      for (VertexId v = 0; v < n; ++v) {
        if (coin(rng)) keep.push_back(v);
      }
    } while (keep.size() < 2 && n >= 2);
    const unsigned t = std::uniform_int_distribution<unsigned>(1, 2)(rng);
    std::string input = io::graph_to_text(g) + "; H on";
    for (auto v : keep) input += " " + g.name(v);
    input += "; t = " + std::to_string(t);
    const std::string name = "induced-" + padded(i);
    const std::string anchor = "restriction of Scarf(I(G)^t) to (m_H)^t is Scarf(I(H)^t)";
    if (g.edge_count() == 0) {
      r.run(name, anchor, input, [g] {
        return Outcome{scarf_complex(edge_ideal(g)).empty(), "empty complexes", "zero ideal"};
      });
      continue;
    }
    const auto big = power(edge_ideal(g), t);
    if (big.size() > kGuardrail) {
      r.skip(name, anchor, input, "I(G)^t has " + std::to_string(big.size()) + " generators > " + std::to_string(kGuardrail));
      continue;
    }
    r.run(name, anchor, input, [g, keep, t, big] {
      const auto h = induced_subgraph(g, keep);
      const auto vars = g.variables();
      const Monomial m_h = Monomial::from_support(vars, keep).pow(t);
      const MonomialIdeal small =
          h.edge_count() ? embedded(power(edge_ideal(h), t), vars) : MonomialIdeal(vars);
      const bool contained = std::all_of(small.generators().begin(), small.generators().end(),
                                         [&](const Monomial& m) { return big.index_of(m).has_value(); });
      const auto dividing = restrict_to_divisors(big, m_h);
      const bool exact = dividing.size() == small.size() && contained;
      auto out = same(scarf_complex(small), restrict_to_divisors(scarf_complex(big), m_h));
      out.ok = out.ok && exact;
      if (!exact) out.observed += " | generator containment failed";
      return out;
    });
  }
}

void closed_forms(Runner& r) {
  for (auto kind : {SpecialGraph::triangle, SpecialGraph::path3, SpecialGraph::claw, SpecialGraph::square}) {
    const unsigned first = (kind == SpecialGraph::path3 || kind == SpecialGraph::claw) ? 2 : 1;
    for (unsigned t = first; t <= 3; ++t) {
      const std::string name = std::string(to_string(kind)) + "-t" + std::to_string(t);
      r.run(name, "closed-form Scarf complex of the t-th power of a special graph", name, [kind, t] {
        const auto g = special_graph(kind);
        const auto ideal = power(edge_ideal(g), t);
        const auto closed = power_scarf_closed_form({kind, t});
        auto out = same(scarf_complex(ideal), closed);
        std::string notes;
        const std::size_t choose = (t + 2) * (t + 1) / 2;
        if (kind == SpecialGraph::triangle || kind == SpecialGraph::claw) {
          if (closed.vertex_count() != choose) notes += " vertex count " + std::to_string(closed.vertex_count());
        }
        if (kind == SpecialGraph::square && closed.vertex_count() != (t + 1) * (t + 1)) {
          notes += " vertex count " + std::to_string(closed.vertex_count());
        }
        if (kind == SpecialGraph::claw) {
          const auto f = f_vector(closed);
          if (f.size() < 2 || f[1] != 3 * t) notes += " cycle length mismatch";
        }
        const auto support = supports_resolution(closed, ideal);
        const auto check = check_multidegree(closed, vertex_support_product(edge_ideal(g)).pow(t));
        if (support.verdict != SupportVerdict::no) notes += " supports a resolution";
        if (check.homology.verdict == Acyclicity::acyclic) notes += " acyclic at vertex product power";
        out.ok = out.ok && notes.empty();
        out.observed += notes.empty() ? "" : " |" + notes;
        return out;
      });
    }
  }
}

void scarf_oracle(Runner& r, std::uint64_t seed) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned t = 1; t <= 2; ++t) {
      r.run("graphs-on-" + std::to_string(n) + "-t" + std::to_string(t),
            "depth-first Scarf complex equals the brute-force label count",
            "I(G)^" + std::to_string(t) + " over labeled graphs on " + std::to_string(n) + " vertices", [n, t] {
              std::size_t total = 0, agree = 0;
              std::string first_bad;
              for_each_labeled_graph(n, [&](const SimpleGraph& g) {
                ++total;
                const auto ideal = g.edge_count() ? power(edge_ideal(g), t) : MonomialIdeal(g.variables());
                if (same_labeled_faces(scarf_complex(ideal), scarf_complex_bruteforce(ideal))) {
                  ++agree;
                } else if (first_bad.empty()) {
                  first_bad = io::graph_to_text(g);
                }
              });
              std::string obs = std::to_string(agree) + "/" + std::to_string(total);
              if (!first_bad.empty()) obs += " first disagreement " + first_bad;
              return Outcome{agree == total, std::to_string(total) + "/" + std::to_string(total), obs};
            });
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 200; ++i) {
    const auto vars = numbered_vars("x", std::uniform_int_distribution<unsigned>(2, 5)(rng));
    const auto ideal = random_ideal(rng, vars, 12, 4);
    r.run("random-" + padded(i), "depth-first Scarf complex equals the brute-force label count",
          io::ideal_to_text(ideal), [ideal] { return same(scarf_complex_bruteforce(ideal), scarf_complex(ideal)); });
  }
}

void vertex_removal(Runner& r) {
  for (unsigned n = 1; n <= 5; ++n) {
    r.run("graphs-on-" + std::to_string(n), "Scarf(G) is rebuilt from Scarf(G - v) for every vertex v",
          "all labeled graphs on " + std::to_string(n) + " vertices, every v", [n] {
            std::size_t total = 0, agree = 0;
            std::string first_bad;
            for_each_labeled_graph(n, [&](const SimpleGraph& g) {
              const auto full = scarf_complex(edge_ideal(g));
              for (VertexId v = 0; v < g.vertex_count(); ++v) {
                ++total;
                const auto rebuilt = vertex_removal_scarf(g, v, scarf_complex(edge_ideal(delete_vertex(g, v))));
                if (same_labeled_faces(full, rebuilt)) {
                  ++agree;
                } else if (first_bad.empty()) {
                  first_bad = io::graph_to_text(g) + " at " + g.name(v);
                }
              }
            });
            std::string obs = std::to_string(agree) + "/" + std::to_string(total);
            if (!first_bad.empty()) obs += " first disagreement " + first_bad;
            return Outcome{agree == total, std::to_string(total) + "/" + std::to_string(total), obs};
          });
  }
}

const std::map<std::string, std::function<void(Runner&, std::uint64_t)>>& registry() {
  static const std::map<std::string, std::function<void(Runner&, std::uint64_t)>> suites{
      {"worked-examples", [](Runner& r, std::uint64_t) { worked_examples(r); }},
      {"edge-ideal-sweep", [](Runner& r, std::uint64_t) { edge_ideal_sweep(r); }},
      {"power-verdicts", [](Runner& r, std::uint64_t) { power_verdicts(r); }},
      {"forest-oracle", forest_oracle},
      {"join-induced", join_induced},
      {"closed-forms", [](Runner& r, std::uint64_t) { closed_forms(r); }},
      {"scarf-oracle", scarf_oracle},
      {"vertex-removal", [](Runner& r, std::uint64_t) { vertex_removal(r); }},
  };
  return suites;
}

}  // namespace

const char* to_string(CaseStatus s) noexcept {
  switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t SuiteReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [s](const auto& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"worked-examples", "edge-ideal-sweep", "power-verdicts",   "forest-oracle",
                                              "join-induced",    "closed-forms",     "scarf-oracle",     "vertex-removal"};
  return names;
}

SuiteReport run_suite(std::string_view suite, double budget_seconds, std::uint64_t seed) {
  const auto it = registry().find(std::string(suite));
  if (it == registry().end()) throw Error(ErrorKind::not_found, "unknown suite '" + std::string(suite) + "'");
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  report.budget_seconds = budget_seconds;
  Runner runner(report);
  it->second(runner, seed);
  report.seconds = runner.elapsed();
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const auto& a, const auto& b) { return a.name < b.name; });
  return report;
}

std::string report_to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["budget_seconds"] = report.budget_seconds;
  j["seconds"] = report.seconds;
  j["summary"] = {{"pass", report.count(CaseStatus::pass)},
                  {"fail", report.count(CaseStatus::fail)},
                  {"skipped", report.count(CaseStatus::skipped)}};
  j["cases"] = nlohmann::json::array();
  for (const auto& c : report.cases) {
    nlohmann::json cj = {{"name", c.name},         {"anchor", c.anchor},     {"input", c.input},
                         {"expected", c.expected}, {"observed", c.observed}, {"status", to_string(c.status)},
                         {"milliseconds", c.milliseconds}};
    if (c.status == CaseStatus::skipped) cj["skip_reason"] = c.skip_reason;
    j["cases"].push_back(std::move(cj));
  }
  return j.dump(2);
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << to_string(c.status) << "  " << c.name;
    if (c.status == CaseStatus::skipped) {
      out << "  (" << c.skip_reason << ")";
    } else if (c.status == CaseStatus::fail) {
      out << "\n    expected: " << c.expected << "\n    observed: " << c.observed;
    } else {
      out << "  " << c.observed;
    }
    out << '\n';
  }
  out << report.suite << ": " << report.count(CaseStatus::pass) << " passed, " << report.count(CaseStatus::fail)
      << " failed, " << report.count(CaseStatus::skipped) << " skipped (seed " << report.seed << ")\n";
  return out.str();
}

}  // namespace scarf::verify
