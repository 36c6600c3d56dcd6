#include "scarf/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "scarf/error.hpp"

namespace scarf {

namespace {

std::size_t edge_index(const SimpleGraph& g, const Edge& e) {
  const auto& edges = g.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw Error(ErrorKind::not_found, "not an edge: " + g.edge_name(e));
  }
  return static_cast<std::size_t>(it - edges.begin());
}

Edge edge_for_label(const SimpleGraph& g, const Monomial& label) {
  const auto support = label.support();
  if (support.size() != 2 || !label.is_squarefree()) {
    throw Error(ErrorKind::invalid_argument, "label is not an edge monomial: " + label.to_string());
  }
  const auto& vars = label.variables();
  Edge e(g.require_vertex(vars.name(support[0])), g.require_vertex(vars.name(support[1])));
  if (!g.has_edge(e)) throw Error(ErrorKind::not_found, "label is not an edge of the graph: " + label.to_string());
  return e;
}

// Faces of a Scarf complex as edge sets, with ∅. A complex without faces
// (the zero ideal) is read as {∅}.
std::vector<EdgeFace> faces_with_empty(const SimpleGraph& g, const LabeledComplex& complex) {
  if (complex.empty()) return {EdgeFace{}};
  return edge_faces(g, complex);
}

bool none_at_distance_one(const VertexDistances& dist, const EdgeFace& face, const Edge& vw) {
  return std::none_of(face.begin(), face.end(), [&](const Edge& e) { return dist.between(e, vw) == 1; });
}

Distance face_distance(const VertexDistances& dist, const EdgeFace& face, const Edge& vw) {
  return face.empty() ? Distance::infinite() : dist.between(face, vw);
}

bool disjoint(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  // Both sorted.
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

EdgeFace with_edges(EdgeFace face, const std::vector<Edge>& extra) {
  face.insert(face.end(), extra.begin(), extra.end());
  std::sort(face.begin(), face.end());
  return face;
}

}  // namespace

LabeledComplex forest_scarf(const SimpleGraph& forest) {
  if (!is_forest(forest)) throw Error(ErrorKind::invalid_argument, "graph has a cycle");
  if (forest.edge_count() == 0) throw Error(ErrorKind::invalid_argument, "forest has no edges");
  const auto& edges = forest.edges();
  const VertexDistances dist(forest);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < edges.size(); ++i) names.push_back(std::to_string(i));
  SimpleGraph compatible(std::move(names));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!(dist.between(edges[i], edges[j]) == 1)) compatible.add_edge(i, j);
    }
  }
  const auto ideal = edge_ideal(forest);
  return clique_complex(compatible, ideal.variables(), ideal.generators());
}

std::vector<EdgeFace> edge_faces(const SimpleGraph& g, const LabeledComplex& complex) {
  std::vector<Edge> vertex_edges;
  vertex_edges.reserve(complex.vertex_count());
  for (const auto& label : complex.vertex_labels()) vertex_edges.push_back(edge_for_label(g, label));
  std::vector<EdgeFace> out;
  out.reserve(complex.faces().size());
  for (const auto& face : complex.faces()) {
    EdgeFace ef;
    ef.reserve(face.size());
    for (auto i : face) ef.push_back(vertex_edges[i]);
    std::sort(ef.begin(), ef.end());
    out.push_back(std::move(ef));
  }
  return out;
}

LabeledComplex complex_from_edge_faces(const SimpleGraph& g, const std::vector<EdgeFace>& faces) {
  const auto ideal = edge_ideal(g);
  if (ideal.is_zero()) return LabeledComplex(ideal.variables());
  std::vector<Face> index_faces;
  index_faces.reserve(faces.size());
  for (const auto& ef : faces) {
    Face f;
    f.reserve(ef.size());
    for (const auto& e : ef) f.push_back(static_cast<std::uint32_t>(edge_index(g, e)));
    std::sort(f.begin(), f.end());
    index_faces.push_back(std::move(f));
  }
  return LabeledComplex::from_faces(ideal.variables(), ideal.generators(), std::move(index_faces));
}

std::vector<EdgeFace> edge_removal_extension_faces(const SimpleGraph& g, const Edge& vw,
                                                   const LabeledComplex& scarf_without_edge) {
  if (!g.has_edge(vw)) throw Error(ErrorKind::not_found, "not an edge: " + g.edge_name(vw));
  const SimpleGraph smaller = delete_edge(g, vw);
  const VertexDistances dist(g);
  const VertexId v = vw.first;
  const VertexId w = vw.second;
  const auto nv = sorted(neighborhood(g, v));
  const auto nw = sorted(neighborhood(g, w));

  std::vector<EdgeFace> out;
  for (auto& sigma : faces_with_empty(smaller, scarf_without_edge)) {
    if (!none_at_distance_one(dist, sigma, vw)) continue;
    const Distance d = face_distance(dist, sigma, vw);
    bool ok = d >= 2;
    if (d == 0) {
      const auto sigma_w = sorted(relative_neighborhood(g, sigma, w));
      const auto sigma_v = sorted(relative_neighborhood(g, sigma, v));
      ok = (sigma_w.empty() || sigma_v.empty()) && disjoint(sigma_w, nv) && disjoint(sigma_v, nw);
    }
    if (ok) out.push_back(std::move(sigma));
  }
  return out;
}

LabeledComplex vertex_removal_scarf(const SimpleGraph& g, VertexId v, const LabeledComplex& scarf_without_vertex) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::not_found, "vertex index out of range");
  std::vector<VertexId> keep;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  const SimpleGraph smaller = induced_subgraph(g, keep);
  if (g.edge_count() == 0) return LabeledComplex(g.variables());

  const VertexDistances dist(g);
  const auto& nbrs = g.adjacent(v);
  const auto nv = sorted(neighborhood(g, v));
  if (nbrs.size() >= 32) throw Error(ErrorKind::limit_exceeded, "vertex degree too large for subset enumeration");

  // Faces of the smaller complex are edges of `smaller`; map them into g.
  auto lift = [&](const EdgeFace& face) {
    EdgeFace out;
    out.reserve(face.size());
    for (const auto& e : face) out.emplace_back(keep[e.first], keep[e.second]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<EdgeFace> result;
  for (const auto& small_face : faces_with_empty(smaller, scarf_without_vertex)) {
    const EdgeFace sigma = lift(small_face);
    result.push_back(sigma);
    for (std::uint32_t mask = 1; mask < (1u << nbrs.size()); ++mask) {
      std::vector<Edge> added;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (mask & (1u << i)) added.emplace_back(v, nbrs[i]);
      }
      bool accept = false;
      if (added.size() == 1 && face_distance(dist, sigma, added[0]) == 0) {
        const VertexId w1 = added[0].other(v);
        accept = disjoint(sorted(relative_neighborhood(g, sigma, w1)), nv) &&
                 none_at_distance_one(dist, sigma, added[0]);
      } else {
        accept = std::all_of(added.begin(), added.end(),
                             [&](const Edge& e) { return face_distance(dist, sigma, e) >= 2; });
        for (std::size_t i = 0; accept && i < added.size(); ++i) {
          for (std::size_t j = i + 1; accept && j < added.size(); ++j) {
            if (g.has_edge(added[i].other(v), added[j].other(v))) accept = false;
          }
        }
      }
      if (accept) result.push_back(with_edges(sigma, added));
    }
  }
  return complex_from_edge_faces(g, result);
}

LabeledComplex scarf_by_vertex_elimination(const SimpleGraph& g, const std::vector<VertexId>& removal_order) {
  if (removal_order.size() != g.vertex_count() ||
      std::set<VertexId>(removal_order.begin(), removal_order.end()).size() != g.vertex_count() ||
      std::any_of(removal_order.begin(), removal_order.end(), [&](VertexId u) { return u >= g.vertex_count(); })) {
    throw Error(ErrorKind::invalid_argument, "removal order is not a permutation of the vertices");
  }
  // Stage k keeps the vertices removed last; rebuilt from the back.
  std::vector<VertexId> kept;
  LabeledComplex current(VariableSet{});
  for (auto it = removal_order.rbegin(); it != removal_order.rend(); ++it) {
    kept.push_back(*it);
    auto stage_vertices = kept;
    std::sort(stage_vertices.begin(), stage_vertices.end());
    const SimpleGraph stage = induced_subgraph(g, stage_vertices);
    const VertexId local = static_cast<VertexId>(
        std::lower_bound(stage_vertices.begin(), stage_vertices.end(), *it) - stage_vertices.begin());
    current = vertex_removal_scarf(stage, local, current);
  }
  if (g.vertex_count() == 0) return LabeledComplex(g.variables());
  return current;
}

std::vector<EdgeFace> leaf_extension_faces(const SimpleGraph& g, VertexId v, const LabeledComplex& scarf_without_leaf) {
  if (v >= g.vertex_count() || g.degree(v) != 1) throw Error(ErrorKind::invalid_argument, "not a leaf vertex");
  const Edge vw(v, g.adjacent(v).front());
  std::vector<VertexId> keep;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  const SimpleGraph smaller = induced_subgraph(g, keep);
  const VertexDistances dist(g);
  std::vector<EdgeFace> out;
  for (const auto& small_face : faces_with_empty(smaller, scarf_without_leaf)) {
    EdgeFace sigma;
    for (const auto& e : small_face) sigma.emplace_back(keep[e.first], keep[e.second]);
    std::sort(sigma.begin(), sigma.end());
    if (none_at_distance_one(dist, sigma, vw)) out.push_back(std::move(sigma));
  }
  return out;
}

const char* to_string(SpecialGraph kind) noexcept {
  switch (kind) {
    case SpecialGraph::triangle: return "triangle";
    case SpecialGraph::path3: return "path3";
    case SpecialGraph::claw: return "claw";
    case SpecialGraph::square: return "square";
  }
  return "?";
}

std::optional<SpecialGraph> parse_special_graph(const std::string& name) {
  for (auto kind : {SpecialGraph::triangle, SpecialGraph::path3, SpecialGraph::claw, SpecialGraph::square}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

SimpleGraph special_graph(SpecialGraph kind) {
  switch (kind) {
    case SpecialGraph::triangle: return SimpleGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    case SpecialGraph::path3: return SimpleGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    case SpecialGraph::claw: return SimpleGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
    case SpecialGraph::square:
      return SimpleGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
  }
  throw Error(ErrorKind::invalid_argument, "unknown special graph");
}

namespace {

// Vertices by exponent vector, edges by position pairs.
struct GridBuilder {
  VariableSet vars;
  std::vector<Monomial> labels;
  std::map<std::vector<Monomial::Exponent>, std::uint32_t> index;
  std::vector<Face> facets;

  std::uint32_t add(std::vector<Monomial::Exponent> exps) {
    auto [it, inserted] = index.emplace(exps, static_cast<std::uint32_t>(labels.size()));
    if (inserted) labels.emplace_back(vars, std::move(exps));
    return it->second;
  }
  void link(std::uint32_t a, std::uint32_t b) { facets.push_back(a < b ? Face{a, b} : Face{b, a}); }

  LabeledComplex finish() {
    std::vector<bool> covered(labels.size(), false);
    for (const auto& f : facets) {
      for (auto i : f) covered[i] = true;
    }
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      if (!covered[i]) facets.push_back(Face{i});
    }
    return LabeledComplex::from_facets(vars, std::move(labels), std::move(facets));
  }
};

}  // namespace

LabeledComplex power_scarf_closed_form(const GridSpec& spec) {
  const unsigned t = spec.t;
  const unsigned min_t = (spec.kind == SpecialGraph::path3 || spec.kind == SpecialGraph::claw) ? 2 : 1;
  if (t < min_t) {
    throw Error(ErrorKind::invalid_argument,
                std::string(to_string(spec.kind)) + " closed form needs t >= " + std::to_string(min_t));
  }
  GridBuilder grid{special_graph(spec.kind).variables(), {}, {}, {}};
  using E = Monomial::Exponent;

  switch (spec.kind) {
    case SpecialGraph::triangle:
      for (E x = 0; x <= t; ++x) {
        for (E y = 0; y <= t; ++y) {
          if (x + y > 2 * t || 2 * t - x - y > t) continue;
          grid.add({x, y, 2 * t - x - y});
        }
      }
      break;
    case SpecialGraph::path3: {
      auto at = [&](E i, E k) { return grid.add({i, t - k, t - i, k}); };
      for (E i = 0; i <= t; ++i) {
        for (E k = 0; i + k <= t; ++k) {
          const auto here = at(i, k);
          if (i > 0) grid.link(here, at(i - 1, k));
          if (k > 0) grid.link(here, at(i, k - 1));
        }
      }
      break;
    }
    case SpecialGraph::claw: {
      auto at = [&](E i, E j, E k) { return grid.add({t, i, j, k}); };
      std::vector<std::uint32_t> cycle;
      for (E s = 0; s < t; ++s) cycle.push_back(at(t - s, s, 0));
      for (E s = 0; s < t; ++s) cycle.push_back(at(0, t - s, s));
      for (E s = 0; s < t; ++s) cycle.push_back(at(s, 0, t - s));
      for (std::size_t s = 0; s < cycle.size(); ++s) grid.link(cycle[s], cycle[(s + 1) % cycle.size()]);
      for (E i = t; i-- > 0;) {
        for (E j = t - i; j-- > 0;) {
          const E k = t - i - j;
          if (i > 0 && j > 0 && k > 0) at(i, j, k);
        }
      }
      break;
    }
    case SpecialGraph::square: {
      auto at = [&](E i, E j) { return grid.add({i, j, t - i, t - j}); };
      for (E i = 0; i <= t; ++i) {
        for (E j = 0; j <= t; ++j) {
          const auto here = at(i, j);
          if (i > 0) grid.link(here, at(i - 1, j));
          if (j > 0) grid.link(here, at(i, j - 1));
        }
      }
      break;
    }
  }
  return grid.finish();
}

PowerVerdict power_graph_verdict(const SimpleGraph& g, unsigned t) {
  if (t < 2) throw Error(ErrorKind::invalid_argument, "power verdict needs t >= 2");
  if (g.vertex_count() == 0 || !is_connected(g)) throw Error(ErrorKind::invalid_argument, "graph is not connected");
  PowerVerdict verdict;
  const std::size_t n = g.vertex_count();
  if (n <= 2 || (n == 3 && g.edge_count() == 2)) {
    verdict.scarf = true;
    return verdict;
  }
  verdict.obstruction = find_forbidden_induced(g, ForbiddenFamily::power);
  if (!verdict.obstruction) {
    throw Error(ErrorKind::internal, "connected graph without a forbidden induced subgraph");
  }
  const VariableSet vars = g.variables();
  Monomial m_h = Monomial::from_support(vars, verdict.obstruction->vertices);
  verdict.multidegree = m_h.pow(t);
  const auto restricted_ideal = restrict_to_divisors(power(edge_ideal(g), t), *verdict.multidegree);
  verdict.restricted = scarf_complex(restricted_ideal);
  verdict.homology = acyclicity(*verdict.restricted);
  return verdict;
}

}  // namespace scarf
