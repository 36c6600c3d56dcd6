#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "scarf/constructions.hpp"
#include "scarf/error.hpp"

using namespace scarf;

namespace {

SimpleGraph graph(std::vector<std::string> v, std::vector<std::pair<std::string, std::string>> e) {
  return SimpleGraph(std::move(v), e);
}

std::vector<std::string> names(const SimpleGraph& g, const std::vector<EdgeFace>& faces) {
  std::vector<std::string> out;
  for (const auto& f : faces) {
    std::vector<std::string> parts;
    for (const auto& e : f) parts.push_back(g.edge_name(e));
    std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    out.push_back(s + "}");
  }
  std::sort(out.begin(), out.end());
  return out;
}

const SimpleGraph& b18_tree() {
  static const auto g = graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"d", "e"}});
  return g;
}

}  // namespace

TEST_CASE("forest construction on the four-edge tree") {
  const auto& g = b18_tree();
  const auto c = forest_scarf(g);
  CHECK(same_labeled_faces(c, scarf_complex(edge_ideal(g))));
  std::vector<std::string> facets;
  for (const auto& f : c.facets()) facets.push_back(c.label(f).to_string());
  std::sort(facets.begin(), facets.end());
  CHECK(facets == std::vector<std::string>{"a*b*c*d", "b*d*e"});
  CHECK(f_vector(c) == std::vector<std::size_t>{4, 4, 1});
  CHECK_THROWS_AS(forest_scarf(graphs::cycle(3)), Error);
  CHECK_THROWS_AS(forest_scarf(SimpleGraph({"a", "b"})), Error);
}

TEST_CASE("forest construction on paths and stars") {
  for (unsigned n = 1; n <= 6; ++n) CHECK(same_labeled_faces(forest_scarf(graphs::path(n)), scarf_complex(edge_ideal(graphs::path(n)))));
  for (unsigned n = 1; n <= 5; ++n) {
    const auto s = forest_scarf(graphs::star(n));
    CHECK(s.is_simplex());
    CHECK(s.vertex_count() == n);
  }
}

TEST_CASE("edge faces round-trip through complex_from_edge_faces") {
  const auto g = graphs::path(4);
  const auto c = scarf_complex(edge_ideal(g));
  CHECK(same_labeled_faces(complex_from_edge_faces(g, edge_faces(g, c)), c));
  CHECK(complex_from_edge_faces(SimpleGraph({"a"}), {}).empty());
}

TEST_CASE("leaf extension at de on the four-edge tree") {
  const auto& g = b18_tree();
  const auto e = g.require_vertex("e");
  const auto faces = leaf_extension_faces(g, e, scarf_complex(edge_ideal(delete_vertex(g, e))));
  CHECK(names(g, faces) == std::vector<std::string>{"{bd}", "{}"});
}

TEST_CASE("leaf extension equals edge-removal extension at leaf edges") {
  for (unsigned n = 2; n <= 6; ++n) {
    for_each_labeled_graph(n, [](const SimpleGraph& g) {
      for (const auto v : leaves(g)) {
        const auto w = g.adjacent(v).front();
        const auto without_vertex = delete_vertex(g, v);
        if (without_vertex.edge_count() == 0) continue;
        const auto leaf = names(g, leaf_extension_faces(g, v, scarf_complex(edge_ideal(without_vertex))));
        // Removing the edge keeps v isolated; the edge ideal is the same.
        const auto without_edge = delete_edge(g, Edge(v, w));
        const auto edge = names(g, edge_removal_extension_faces(g, Edge(v, w), scarf_complex(edge_ideal(without_edge))));
        CHECK(leaf == edge);
      }
    });
  }
}

TEST_CASE("edge removal on the triangle: {wa,av} does not extend") {
  const auto g = graph({"w", "a", "v"}, {{"w", "a"}, {"a", "v"}, {"v", "w"}});
  const Edge vw(g.require_vertex("v"), g.require_vertex("w"));
  const auto ext = names(g, edge_removal_extension_faces(g, vw, scarf_complex(edge_ideal(delete_edge(g, vw)))));
  CHECK(std::find(ext.begin(), ext.end(), "{av,wa}") == ext.end());
  CHECK(std::find(ext.begin(), ext.end(), "{}") != ext.end());
}

TEST_CASE("extended faces from edge removal are Scarf faces of G") {
  for (unsigned n = 3; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const SimpleGraph& g) {
      const auto full = names(g, edge_faces(g, scarf_complex(edge_ideal(g))));
      for (const auto& vw : g.edges()) {
        const auto smaller = delete_edge(g, vw);
        if (smaller.edge_count() == 0) continue;
        for (auto sigma : edge_removal_extension_faces(g, vw, scarf_complex(edge_ideal(smaller)))) {
          sigma.push_back(vw);
          const auto extended = names(g, {sigma}).front();
          CHECK(std::binary_search(full.begin(), full.end(), extended));
        }
      }
    });
  }
}

TEST_CASE("vertex removal rebuilds the Scarf complex") {
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_labeled_graph(n, [](const SimpleGraph& g) {
      const auto expected = scarf_complex(edge_ideal(g));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto smaller = delete_vertex(g, v);
        CHECK(same_labeled_faces(vertex_removal_scarf(g, v, scarf_complex(edge_ideal(smaller))), expected));
      }
    });
  }
}

TEST_CASE("vertex elimination over every order of the 4-cycle and a paw") {
  const auto paw = graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
  for (const auto& g : {graphs::cycle(4), paw, graphs::path(3)}) {
    const auto expected = scarf_complex(edge_ideal(g));
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK(same_labeled_faces(scarf_by_vertex_elimination(g, order), expected));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  CHECK_THROWS_AS(scarf_by_vertex_elimination(graphs::cycle(4), {0, 1, 2}), Error);
}

TEST_CASE("special graphs by name") {
  CHECK(parse_special_graph("claw") == SpecialGraph::claw);
  CHECK_FALSE(parse_special_graph("pentagon"));
  CHECK(std::string(to_string(SpecialGraph::path3)) == "path3");
  CHECK(special_graph(SpecialGraph::square).edge_count() == 4);
  CHECK(special_graph(SpecialGraph::triangle).vertex_count() == 3);
}

TEST_CASE("closed forms in small cases") {
  SUBCASE("claw squared is a hexagon") {
    const auto c = power_scarf_closed_form({SpecialGraph::claw, 2});
    CHECK(f_vector(c) == std::vector<std::size_t>{6, 6});
    CHECK(reduced_homology(c).rank_in(1) == 1);
  }
  SUBCASE("square at t = 1 is the hollow square") {
    const auto c = power_scarf_closed_form({SpecialGraph::square, 1});
    CHECK(f_vector(c) == std::vector<std::size_t>{4, 4});
  }
  SUBCASE("triangle squared is six points") {
    const auto c = power_scarf_closed_form({SpecialGraph::triangle, 2});
    CHECK(f_vector(c) == std::vector<std::size_t>{6});
  }
  SUBCASE("path3 squared") {
    const auto c = power_scarf_closed_form({SpecialGraph::path3, 2});
    CHECK(c.vertex_count() == 6);
  }
  CHECK_THROWS_AS(power_scarf_closed_form({SpecialGraph::claw, 1}), Error);
  CHECK_THROWS_AS(power_scarf_closed_form({SpecialGraph::triangle, 0}), Error);
}

TEST_CASE("closed forms equal the engine for t <= 3") {
  for (auto kind : {SpecialGraph::triangle, SpecialGraph::path3, SpecialGraph::claw, SpecialGraph::square}) {
    for (unsigned t = 1; t <= 3; ++t) {
      if (t == 1 && (kind == SpecialGraph::path3 || kind == SpecialGraph::claw)) continue;
      CAPTURE(to_string(kind));
      CAPTURE(t);
      const auto engine = scarf_complex(power(edge_ideal(special_graph(kind)), t));
      CHECK(same_labeled_faces(power_scarf_closed_form({kind, t}), engine));
    }
  }
}

TEST_CASE("power verdicts") {
  CHECK(power_graph_verdict(graphs::path(1), 3).scarf);
  CHECK(power_graph_verdict(graphs::path(2), 2).scarf);
  CHECK(power_graph_verdict(SimpleGraph({"a"}), 2).scarf);

  const auto tri = power_graph_verdict(graphs::cycle(3), 2);
  CHECK_FALSE(tri.scarf);
  REQUIRE(tri.obstruction);
  CHECK(tri.obstruction->kind == InducedKind::C3);
  REQUIRE(tri.multidegree);
  CHECK(tri.multidegree->to_string() == "a^2*b^2*c^2");
  REQUIRE(tri.homology);
  CHECK(tri.homology->verdict == Acyclicity::not_acyclic);

  const auto k4 = power_graph_verdict(graphs::complete(4), 2);
  CHECK_FALSE(k4.scarf);
  CHECK(k4.homology->verdict != Acyclicity::acyclic);

  const auto p3 = power_graph_verdict(graphs::path(3), 2);
  CHECK_FALSE(p3.scarf);
  CHECK(p3.obstruction->kind == InducedKind::P3);

  CHECK_THROWS_AS(power_graph_verdict(graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}), 2), Error);
  CHECK_THROWS_AS(power_graph_verdict(graphs::path(2), 1), Error);
}
