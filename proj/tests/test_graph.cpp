#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>

#include "scarf/error.hpp"
#include "scarf/graph.hpp"

using namespace scarf;

namespace {

SimpleGraph graph(std::vector<std::string> v, std::vector<std::pair<std::string, std::string>> e) {
  return SimpleGraph(std::move(v), e);
}

Edge edge(const SimpleGraph& g, const char* a, const char* b) { return Edge(g.require_vertex(a), g.require_vertex(b)); }

// Edge distance by BFS over the line-graph-free definition: shortest
// vertex path between the two edges' endpoint sets.
std::size_t bfs_edge_distance(const SimpleGraph& g, const Edge& e, const Edge& f) {
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::queue<VertexId> q;
  for (auto v : {e.first, e.second}) {
    dist[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (auto w : g.adjacent(u)) {
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return std::min(dist[f.first], dist[f.second]);
}

}  // namespace

TEST_CASE("edges are normalized and loops rejected") {
  const Edge e(3, 1);
  CHECK(e.first == 1);
  CHECK(e.second == 3);
  CHECK(e.other(1) == 3);
  CHECK_THROWS_AS(e.other(2), Error);
  CHECK_THROWS_AS(Edge(2, 2), Error);
}

TEST_CASE("graph construction") {
  auto g = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  g.add_edge("b", "a");
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(g.require_vertex("b")) == 2);
  CHECK(g.has_edge(edge(g, "c", "b")));
  CHECK_FALSE(g.has_edge(edge(g, "a", "c")));
  CHECK(g.edge_name(edge(g, "a", "b")) == "ab");
  CHECK_THROWS_AS(g.add_edge("a", "z"), Error);
  CHECK_THROWS_AS(g.add_edge("a", "a"), Error);
  CHECK_THROWS_AS(g.add_vertex("a"), Error);
  const auto long_names = graph({"v1", "v2"}, {{"v1", "v2"}});
  CHECK(long_names.edge_name(long_names.edges()[0]) == "v1-v2");
}

TEST_CASE("edge ideal generators follow sorted edge order") {
  const auto g = graph({"a", "b", "c", "d"}, {{"c", "d"}, {"a", "b"}, {"b", "c"}});
  std::vector<std::string> gens;
  const auto ideal = edge_ideal(g);
  for (const auto& m : ideal.generators()) gens.push_back(m.to_string());
  CHECK(gens == std::vector<std::string>{"a*b", "b*c", "c*d"});
}

TEST_CASE("edge distances on a path and across components") {
  const auto p = graphs::path(5);  // a..f
  CHECK(edge_distance(p, edge(p, "a", "b"), edge(p, "b", "c")) == 0);
  CHECK(edge_distance(p, edge(p, "a", "b"), edge(p, "c", "d")) == 1);
  CHECK(edge_distance(p, edge(p, "a", "b"), edge(p, "e", "f")) == 3);
  const auto two = graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  const auto d = edge_distance(two, edge(two, "a", "b"), edge(two, "c", "d"));
  CHECK(d.is_infinite());
  CHECK(d > 100);
  CHECK(d.to_string() == "inf");
  CHECK_THROWS_AS(d.value(), Error);
}

TEST_CASE("distance to a non-edge pair adds it temporarily") {
  const auto p = graphs::path(3);  // a-b-c-d
  // ad is not an edge; once added it is one step from bc.
  CHECK(edge_distance(p, edge(p, "b", "c"), edge(p, "a", "d")) == 1);
  CHECK(face_edge_distance(p, {edge(p, "a", "b")}, edge(p, "c", "d")) == 1);
  CHECK_THROWS_AS(face_edge_distance(p, {}, edge(p, "c", "d")), Error);
}

TEST_CASE("all-pairs edge distances agree with a BFS oracle") {
  for (const auto& g : {graphs::cycle(7), graphs::path(6), graphs::complete(5), graphs::star(4)}) {
    const VertexDistances dist(g);
    for (const auto& e : g.edges()) {
      for (const auto& f : g.edges()) CHECK(dist.between(e, f) == bfs_edge_distance(g, e, f));
    }
  }
}

TEST_CASE("neighborhoods") {
  const auto g = graphs::star(3);
  CHECK(neighborhood(g, 0) == std::vector<VertexId>{1, 2, 3});
  const EdgeFace face{Edge(0, 1), Edge(0, 3)};
  CHECK(relative_neighborhood(g, face, 0) == std::vector<VertexId>{1, 3});
  CHECK(relative_neighborhood(g, face, 2).empty());
}

TEST_CASE("forests, connectivity and gap-freeness") {
  CHECK(is_forest(graphs::path(4)));
  CHECK_FALSE(is_forest(graphs::cycle(3)));
  CHECK(is_forest(SimpleGraph({"a"})));
  CHECK(is_connected(graphs::cycle(5)));
  CHECK_FALSE(is_connected(graph({"a", "b", "c"}, {{"a", "b"}})));

  CHECK(is_gap_free(graphs::cycle(4)));
  CHECK(is_gap_free(graphs::path(3)));
  CHECK_FALSE(is_gap_free(graphs::path(4)));
  CHECK(is_gap_free(graphs::cycle(5)));
  CHECK_FALSE(is_gap_free(graphs::cycle(6)));
  // Two disjoint edges in separate components are not a gap.
  CHECK(is_gap_free(graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})));
  CHECK(connected_components(graph({"a", "b", "c"}, {{"a", "c"}})).size() == 2);
}

TEST_CASE("deletion and induced subgraphs keep names") {
  const auto c = graphs::cycle(4);
  const auto d = delete_vertex(c, 0);
  CHECK(d.vertex_names() == std::vector<std::string>{"b", "c", "d"});
  CHECK(d.edge_count() == 2);
  const auto e = delete_edge(c, Edge(0, 1));
  CHECK(e.vertex_count() == 4);
  CHECK(e.edge_count() == 3);
  const auto h = induced_subgraph(c, {0, 2});
  CHECK(h.edge_count() == 0);
  CHECK(leaves(graphs::path(3)) == std::vector<VertexId>{0, 3});
}

TEST_CASE("forbidden induced subgraphs") {
  const auto tri = find_forbidden_induced(graphs::complete(4), ForbiddenFamily::power);
  REQUIRE(tri);
  CHECK(tri->kind == InducedKind::C3);
  CHECK(tri->vertices.size() == 3);

  const auto p = find_forbidden_induced(graphs::path(4), ForbiddenFamily::power);
  REQUIRE(p);
  CHECK(p->kind == InducedKind::P3);

  const auto claw = find_forbidden_induced(graphs::star(4), ForbiddenFamily::power);
  REQUIRE(claw);
  CHECK(claw->kind == InducedKind::claw);

  const auto sq = find_forbidden_induced(graphs::cycle(4), ForbiddenFamily::power);
  REQUIRE(sq);
  CHECK(sq->kind == InducedKind::C4);

  CHECK_FALSE(find_forbidden_induced(graphs::path(2), ForbiddenFamily::power));
  CHECK_FALSE(find_forbidden_induced(graphs::star(5), ForbiddenFamily::gap_free_forest));
  const auto c5 = find_forbidden_induced(graphs::cycle(5), ForbiddenFamily::gap_free_forest);
  REQUIRE(c5);
  CHECK(c5->kind == InducedKind::C5);
  const auto p4 = find_forbidden_induced(graphs::path(5), ForbiddenFamily::gap_free_forest);
  REQUIRE(p4);
  CHECK(p4->kind == InducedKind::P4);
}

TEST_CASE("gap-free forests are exactly graphs without induced C3, C4, C5, P4") {
  for (unsigned n = 1; n <= 6; ++n) {
    for_each_labeled_graph(n, [](const SimpleGraph& g) {
      CHECK((is_forest(g) && is_gap_free(g)) == !find_forbidden_induced(g, ForbiddenFamily::gap_free_forest));
    });
  }
}

TEST_CASE("labeled graph enumeration counts and order") {
  CHECK(enumerate_labeled_graphs(1).size() == 1);
  CHECK(enumerate_labeled_graphs(3).size() == 8);
  CHECK(enumerate_labeled_graphs(5).size() == 1024);
  const auto three = enumerate_labeled_graphs(3);
  CHECK(three[0].edge_count() == 0);
  CHECK(three[1].edges() == std::vector<Edge>{Edge(0, 1)});
  CHECK(three[2].edges() == std::vector<Edge>{Edge(0, 2)});
  CHECK(three[1].vertex_names() == std::vector<std::string>{"v1", "v2", "v3"});
  CHECK_THROWS_AS(enumerate_labeled_graphs(0), Error);
  CHECK_THROWS_AS(enumerate_labeled_graphs(7), Error);
}

TEST_CASE("builtin graphs") {
  CHECK(graphs::cycle(5).edge_count() == 5);
  CHECK(graphs::path(4).vertex_count() == 5);
  CHECK(graphs::claw().edge_count() == 3);
  CHECK(graphs::complete(5).edge_count() == 10);
  CHECK_THROWS_AS(graphs::cycle(2), Error);
  CHECK(graphs::default_names(30)[0] == "v1");
}
