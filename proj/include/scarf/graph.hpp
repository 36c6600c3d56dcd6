#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scarf/ideal.hpp"

namespace scarf {

using VertexId = std::size_t;

/// Unordered vertex pair, normalized so that first < second.
struct Edge {
  VertexId first;
  VertexId second;

  Edge(VertexId a, VertexId b);
  bool contains(VertexId v) const noexcept { return first == v || second == v; }
  VertexId other(VertexId v) const;
  bool shares_vertex(const Edge& e) const noexcept {
    return contains(e.first) || contains(e.second);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A face of the Taylor complex of an edge ideal, read as a set of edges.
using EdgeFace = std::vector<Edge>;

/// Edge distance; infinite when the edges lie in different components.
class Distance {
 public:
  static constexpr Distance infinite() noexcept { return Distance(); }
  constexpr explicit Distance(std::size_t value) noexcept : value_(value), finite_(true) {}

  constexpr bool is_infinite() const noexcept { return !finite_; }
  std::size_t value() const;

  friend constexpr bool operator==(const Distance& a, const Distance& b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator==(const Distance& a, std::size_t b) noexcept {
    return a.finite_ && a.value_ == b;
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a, const Distance& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a, std::size_t b) noexcept {
    return a <=> Distance(b);
  }

  std::string to_string() const;

 private:
  constexpr Distance() noexcept = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

/// Labeled simple graph. Vertices are strings indexed by declaration order;
/// isolated vertices are allowed.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertices);
  SimpleGraph(std::vector<std::string> vertices,
              const std::vector<std::pair<std::string, std::string>>& edges);

  VertexId add_vertex(const std::string& name);
  /// Rejects loops and unknown endpoints; re-adding an edge is a no-op.
  void add_edge(VertexId a, VertexId b);
  void add_edge(std::string_view a, std::string_view b);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId require_vertex(std::string_view name) const;

  /// Edges sorted by (first, second).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.first, e.second); }
  std::size_t degree(VertexId v) const;
  const std::vector<VertexId>& adjacent(VertexId v) const { return adj_.at(v); }

  std::string edge_name(const Edge& e) const;
  VariableSet variables() const { return VariableSet(names_); }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b);

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
};

/// Squarefree quadratic ideal over the vertex names, generators in sorted edge order.
MonomialIdeal edge_ideal(const SimpleGraph& g);
/// Label x_a x_b of an edge, over `g.variables()`.
Monomial edge_monomial(const SimpleGraph& g, const VariableSet& vars, const Edge& e);

std::vector<VertexId> neighborhood(const SimpleGraph& g, VertexId v);
/// Vertices x with xv an edge of the face.
std::vector<VertexId> relative_neighborhood(const SimpleGraph& g, const EdgeFace& face, VertexId v);

/// All-pairs shortest path lengths; infinite across components.
class VertexDistances {
 public:
  explicit VertexDistances(const SimpleGraph& g);
  Distance between(VertexId a, VertexId b) const;
  /// Min over endpoint pairs; 0 when the pairs intersect.
  Distance between(const Edge& e, const Edge& f) const;
  /// Min over edges of the face; throws on an empty face.
  Distance between(const EdgeFace& face, const Edge& f) const;

 private:
  std::size_t n_;
  std::vector<std::size_t> dist_;  // n*n, npos = unreachable
};

/// Distance between two vertex pairs. Pairs that are not edges of g are
/// added temporarily before measuring.
Distance edge_distance(const SimpleGraph& g, const Edge& e, const Edge& f);
Distance face_edge_distance(const SimpleGraph& g, const EdgeFace& face, const Edge& f);

bool is_forest(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// Vertex-disjoint edges in one component always have a connecting edge.
bool is_gap_free(const SimpleGraph& g);

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<VertexId>& keep);
SimpleGraph delete_vertex(const SimpleGraph& g, VertexId v);
SimpleGraph delete_edge(const SimpleGraph& g, const Edge& e);
std::vector<VertexId> leaves(const SimpleGraph& g);
/// Connected components as vertex lists, each sorted.
std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g);

/// Small graph shapes searched as induced subgraphs. P_n has n edges.
enum class InducedKind { C3, C4, C5, P3, P4, claw };
const char* to_string(InducedKind kind) noexcept;

enum class ForbiddenFamily {
  /// {C3, C4, C5, P4}: obstructions to gap-free forests.
  gap_free_forest,
  /// {C3, P3, C4, claw}: obstructions for powers t >= 2.
  power,
};

struct InducedCopy {
  InducedKind kind;
  std::vector<VertexId> vertices;
};

/// Exhaustive search by increasing subset size; first hit is returned.
std::optional<InducedCopy> find_forbidden_induced(const SimpleGraph& g, ForbiddenFamily family);

/// All 2^(n choose 2) graphs on v1..vn, 1 <= n <= 6. Edge subsets are
/// visited as bitmasks in increasing order over the edge list
/// v1v2, v1v3, ..., v(n-1)vn.
void for_each_labeled_graph(unsigned n, const std::function<void(const SimpleGraph&)>& visit);
std::vector<SimpleGraph> enumerate_labeled_graphs(unsigned n);

namespace graphs {
/// Cycle on n >= 3 vertices.
SimpleGraph cycle(unsigned n);
/// Path with n edges on n + 1 vertices.
SimpleGraph path(unsigned n);
/// Star with n leaves; the claw is star(3).
SimpleGraph star(unsigned n);
SimpleGraph claw();
SimpleGraph complete(unsigned n);
/// Vertex names a, b, c, ... (v1, v2, ... beyond 26).
std::vector<std::string> default_names(unsigned n);
}  // namespace graphs

}  // namespace scarf
