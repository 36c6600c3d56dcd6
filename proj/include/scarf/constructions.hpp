#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scarf/engine.hpp"
#include "scarf/graph.hpp"
#include "scarf/simplicial.hpp"

namespace scarf {

/// Scarf complex of a forest's edge ideal: the clique complex of the
/// complete graph on the edges minus the pairs at edge distance exactly 1.
/// Throws for graphs with a cycle or without edges.
LabeledComplex forest_scarf(const SimpleGraph& forest);

/// Faces of a Scarf complex of an edge ideal, read back as edge sets of `g`.
/// Every vertex label must be x_a x_b for an edge ab of g (matched by name).
std::vector<EdgeFace> edge_faces(const SimpleGraph& g, const LabeledComplex& complex);

/// Complex on edge_ideal(g)'s generators from edge-set faces of g.
LabeledComplex complex_from_edge_faces(const SimpleGraph& g, const std::vector<EdgeFace>& faces);

/// The σ ∈ Scarf(G - vw), ∅ included, with σ ∪ {vw} ∈ Scarf(G): no edge of
/// σ at distance 1 from vw, and either σ at distance >= 2, or σ touching
/// vw from one side only without closing a triangle over vw.
std::vector<EdgeFace> edge_removal_extension_faces(const SimpleGraph& g, const Edge& vw,
                                                   const LabeledComplex& scarf_without_edge);

/// Scarf(G) rebuilt from Scarf(G - v). Keeps every face of the smaller
/// complex and adds σ ∪ {vw_1..vw_t} for neighbor subsets W of v when
/// either t = 1, σ touches vw_1, no edge of σ is at distance 1 from vw_1
/// and σ has no edge w_1 x with x adjacent to v; or every vw_i is at
/// distance >= 2 from σ and W is independent in G.
LabeledComplex vertex_removal_scarf(const SimpleGraph& g, VertexId v, const LabeledComplex& scarf_without_vertex);

/// Applies vertex_removal_scarf from the edgeless graph upward, adding
/// vertices in the reverse of `removal_order` (a permutation of V(g)).
LabeledComplex scarf_by_vertex_elimination(const SimpleGraph& g, const std::vector<VertexId>& removal_order);

/// For a leaf v with neighbor w: the σ ∈ Scarf(G - v), ∅ included, with no
/// edge at distance 1 from vw.
std::vector<EdgeFace> leaf_extension_faces(const SimpleGraph& g, VertexId v, const LabeledComplex& scarf_without_leaf);

enum class SpecialGraph { triangle, path3, claw, square };
const char* to_string(SpecialGraph kind) noexcept;
std::optional<SpecialGraph> parse_special_graph(const std::string& name);

/// The special graph on vertices a, b, c(, d): (ab,bc,ca), (ab,bc,cd),
/// (ab,ac,ad), (ab,bc,cd,da).
SimpleGraph special_graph(SpecialGraph kind);

struct GridSpec {
  SpecialGraph kind;
  unsigned t;
};

/// Closed-form Scarf complex of I^t for the special graphs. Vertices follow
/// the generator parametrizations:
///   triangle a^x b^y c^z, x + y + z = 2t, all <= t: isolated vertices;
///   path3    a^i b^(t-k) c^(t-i) d^k, i + k <= t: unit steps in i or k;
///   claw     a^t b^i c^j d^k, i + j + k = t: the boundary 3t-cycle
///            (traversed b -> c -> d -> b), interior points isolated;
///   square   a^i b^j c^(t-i) d^(t-j), 0 <= i, j <= t: the unit grid.
/// Path3 and claw need t >= 2; triangle and square need t >= 1.
LabeledComplex power_scarf_closed_form(const GridSpec& spec);

struct PowerVerdict {
  bool scarf = false;
  std::optional<InducedCopy> obstruction;
  /// (m_H)^t for the obstruction H.
  std::optional<Monomial> multidegree;
  /// Restriction of Scarf(I^t) to the multidegree; computed from the
  /// generators of I^t dividing it.
  std::optional<LabeledComplex> restricted;
  std::optional<AcyclicityReport> homology;
};

/// For connected g and t >= 2: I(g)^t is Scarf iff g is a vertex, an edge,
/// or a path with two edges. Otherwise an induced triangle, P3, square or
/// claw H certifies failure at (m_H)^t.
PowerVerdict power_graph_verdict(const SimpleGraph& g, unsigned t);

}  // namespace scarf
