#include "scarf/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "scarf/error.hpp"

namespace scarf {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs(const SimpleGraph& g, const std::vector<VertexId>& sources) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  for (auto s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto w : g.adjacent(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Edge::Edge(VertexId a, VertexId b) : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) throw Error(ErrorKind::invalid_argument, "loops are not allowed in simple graphs");
}

VertexId Edge::other(VertexId v) const {
  if (v == first) return second;
  if (v == second) return first;
  throw Error(ErrorKind::invalid_argument, "vertex is not an endpoint of the edge");
}

std::size_t Distance::value() const {
  if (!finite_) throw Error(ErrorKind::invalid_argument, "distance is infinite");
  return value_;
}

std::string Distance::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

SimpleGraph::SimpleGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

SimpleGraph::SimpleGraph(std::vector<std::string> vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : SimpleGraph(std::move(vertices)) {
  for (const auto& [a, b] : edges) add_edge(a, b);
}

VertexId SimpleGraph::add_vertex(const std::string& name) {
  if (name.empty()) throw Error(ErrorKind::invalid_argument, "empty vertex name");
  if (find_vertex(name)) throw Error(ErrorKind::invalid_argument, "duplicate vertex '" + name + "'");
  names_.push_back(name);
  adj_.emplace_back();
  return names_.size() - 1;
}

void SimpleGraph::check_vertex(VertexId v) const {
  if (v >= names_.size()) throw Error(ErrorKind::not_found, "vertex index out of range");
}

void SimpleGraph::add_edge(VertexId a, VertexId b) {
  check_vertex(a);
  check_vertex(b);
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

void SimpleGraph::add_edge(std::string_view a, std::string_view b) {
  add_edge(require_vertex(a), require_vertex(b));
}

std::optional<VertexId> SimpleGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VertexId SimpleGraph::require_vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw Error(ErrorKind::not_found, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

bool SimpleGraph::has_edge(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::size_t SimpleGraph::degree(VertexId v) const {
  check_vertex(v);
  return adj_[v].size();
}

std::string SimpleGraph::edge_name(const Edge& e) const {
  const auto& a = name(e.first);
  const auto& b = name(e.second);
  if (a.size() == 1 && b.size() == 1) return a + b;
  return a + "-" + b;
}

bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
  return a.names_ == b.names_ && a.edges_ == b.edges_;
}

Monomial edge_monomial(const SimpleGraph& g, const VariableSet& vars, const Edge& e) {
  std::size_t idx[2] = {vars.require_index(g.name(e.first)), vars.require_index(g.name(e.second))};
  return Monomial::from_support(vars, idx);
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
  VariableSet vars = g.variables();
  std::vector<Monomial> gens;
  gens.reserve(g.edge_count());
  for (const auto& e : g.edges()) gens.push_back(edge_monomial(g, vars, e));
  return minimize(vars, gens);
}

std::vector<VertexId> neighborhood(const SimpleGraph& g, VertexId v) { return g.adjacent(v); }

std::vector<VertexId> relative_neighborhood(const SimpleGraph& g, const EdgeFace& face, VertexId v) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::not_found, "vertex index out of range");
  std::vector<VertexId> out;
  for (const auto& e : face) {
    if (e.contains(v) && g.has_edge(e)) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexDistances::VertexDistances(const SimpleGraph& g) : n_(g.vertex_count()), dist_(n_ * n_) {
  for (VertexId s = 0; s < n_; ++s) {
    auto d = bfs(g, {s});
    std::copy(d.begin(), d.end(), dist_.begin() + static_cast<std::ptrdiff_t>(s * n_));
  }
}

Distance VertexDistances::between(VertexId a, VertexId b) const {
  if (a >= n_ || b >= n_) throw Error(ErrorKind::not_found, "vertex index out of range");
  auto d = dist_[a * n_ + b];
  return d == kUnreachable ? Distance::infinite() : Distance(d);
}

Distance VertexDistances::between(const Edge& e, const Edge& f) const {
  return std::min({between(e.first, f.first), between(e.first, f.second),
                   between(e.second, f.first), between(e.second, f.second)});
}

Distance VertexDistances::between(const EdgeFace& face, const Edge& f) const {
  if (face.empty()) throw Error(ErrorKind::invalid_argument, "distance from an empty face is undefined");
  Distance best = Distance::infinite();
  for (const auto& e : face) best = std::min(best, between(e, f));
  return best;
}

namespace {

SimpleGraph with_pairs(const SimpleGraph& g, std::initializer_list<Edge> pairs) {
  SimpleGraph h = g;
  for (const auto& p : pairs) {
    if (p.second >= g.vertex_count()) throw Error(ErrorKind::not_found, "vertex index out of range");
    h.add_edge(p.first, p.second);
  }
  return h;
}

}  // namespace

Distance edge_distance(const SimpleGraph& g, const Edge& e, const Edge& f) {
  SimpleGraph h = with_pairs(g, {e, f});
  auto d = bfs(h, {e.first, e.second});
  auto best = std::min(d[f.first], d[f.second]);
  return best == kUnreachable ? Distance::infinite() : Distance(best);
}

Distance face_edge_distance(const SimpleGraph& g, const EdgeFace& face, const Edge& f) {
  if (face.empty()) throw Error(ErrorKind::invalid_argument, "distance from an empty face is undefined");
  for (const auto& e : face) {
    if (!g.has_edge(e)) throw Error(ErrorKind::invalid_argument, "face contains a non-edge");
  }
  Distance best = Distance::infinite();
  for (const auto& e : face) best = std::min(best, edge_distance(g, e, f));
  return best;
}

bool is_forest(const SimpleGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (!uf.unite(e.first, e.second)) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> connected_components(const SimpleGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.first, e.second);
  std::vector<std::vector<VertexId>> comps;
  std::vector<std::size_t> slot(g.vertex_count(), kUnreachable);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = uf.find(v);
    if (slot[r] == kUnreachable) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

bool is_gap_free(const SimpleGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.first, e.second);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (e.shares_vertex(f)) continue;
      if (uf.find(e.first) != uf.find(f.first)) continue;
      if (!(g.has_edge(e.first, f.first) || g.has_edge(e.first, f.second) ||
            g.has_edge(e.second, f.first) || g.has_edge(e.second, f.second))) {
        return false;
      }
    }
  }
  return true;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<VertexId>& keep) {
  std::vector<VertexId> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::invalid_argument, "duplicate vertex in induced subgraph selection");
  }
  SimpleGraph h;
  std::vector<std::size_t> map(g.vertex_count(), kUnreachable);
  for (auto v : sorted) {
    if (v >= g.vertex_count()) throw Error(ErrorKind::not_found, "vertex index out of range");
    map[v] = h.add_vertex(g.name(v));
  }
  for (const auto& e : g.edges()) {
    if (map[e.first] != kUnreachable && map[e.second] != kUnreachable) {
      h.add_edge(map[e.first], map[e.second]);
    }
  }
  return h;
}

SimpleGraph delete_vertex(const SimpleGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::not_found, "vertex index out of range");
  std::vector<VertexId> keep;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

SimpleGraph delete_edge(const SimpleGraph& g, const Edge& e) {
  if (e.second >= g.vertex_count() || !g.has_edge(e)) {
    throw Error(ErrorKind::not_found, "edge is not in the graph");
  }
  SimpleGraph h(g.vertex_names());
  for (const auto& f : g.edges()) {
    if (!(f == e)) h.add_edge(f.first, f.second);
  }
  return h;
}

std::vector<VertexId> leaves(const SimpleGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

const char* to_string(InducedKind kind) noexcept {
  switch (kind) {
    case InducedKind::C3: return "C3";
    case InducedKind::C4: return "C4";
    case InducedKind::C5: return "C5";
    case InducedKind::P3: return "P3";
    case InducedKind::P4: return "P4";
    case InducedKind::claw: return "claw";
  }
  return "?";
}

namespace {

// Classifies the induced subgraph on `vs` by vertex count, edge count and
// degree multiset. These invariants pin down each shape up to isomorphism.
std::optional<InducedKind> classify(const SimpleGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::size_t> deg(vs.size(), 0);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
    }
  }
  std::sort(deg.begin(), deg.end());
  using D = std::vector<std::size_t>;
  switch (vs.size()) {
    case 3:
      if (edges == 3) return InducedKind::C3;
      break;
    case 4:
      if (edges == 4 && deg == D{2, 2, 2, 2}) return InducedKind::C4;
      if (edges == 3 && deg == D{1, 1, 2, 2}) return InducedKind::P3;
      if (edges == 3 && deg == D{1, 1, 1, 3}) return InducedKind::claw;
      break;
    case 5:
      if (edges == 5 && deg == D{2, 2, 2, 2, 2}) return InducedKind::C5;
      if (edges == 4 && deg == D{1, 1, 2, 2, 2}) {
        // 4 edges on 5 vertices with this degree sequence could also be a
        // triangle plus a disjoint edge; require connectivity.
        auto h = induced_subgraph(g, vs);
        if (is_connected(h)) return InducedKind::P4;
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

bool in_family(InducedKind kind, ForbiddenFamily family) {
  switch (family) {
    case ForbiddenFamily::gap_free_forest:
      return kind == InducedKind::C3 || kind == InducedKind::C4 || kind == InducedKind::C5 ||
             kind == InducedKind::P4;
    case ForbiddenFamily::power:
      return kind == InducedKind::C3 || kind == InducedKind::P3 || kind == InducedKind::C4 ||
             kind == InducedKind::claw;
  }
  return false;
}

bool for_each_subset(std::size_t n, std::size_t k, std::vector<VertexId>& cur, std::size_t start,
                     const std::function<bool(const std::vector<VertexId>&)>& fn) {
  if (cur.size() == k) return fn(cur);
  for (std::size_t v = start; v < n; ++v) {
    cur.push_back(v);
    if (for_each_subset(n, k, cur, v + 1, fn)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<InducedCopy> find_forbidden_induced(const SimpleGraph& g, ForbiddenFamily family) {
  const std::size_t max_size = family == ForbiddenFamily::gap_free_forest ? 5 : 4;
  std::optional<InducedCopy> found;
  for (std::size_t k = 3; k <= max_size && !found; ++k) {
    std::vector<VertexId> cur;
    for_each_subset(g.vertex_count(), k, cur, 0, [&](const std::vector<VertexId>& vs) {
      auto kind = classify(g, vs);
      if (kind && in_family(*kind, family)) {
        found = InducedCopy{*kind, vs};
        return true;
      }
      return false;
    });
  }
  return found;
}

void for_each_labeled_graph(unsigned n, const std::function<void(const SimpleGraph&)>& visit) {
  if (n < 1 || n > 6) throw Error(ErrorKind::invalid_argument, "labeled graph enumeration needs 1 <= n <= 6");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> slots;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SimpleGraph g(names);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1U) g.add_edge(slots[i].first, slots[i].second);
    }
    visit(g);
  }
}

std::vector<SimpleGraph> enumerate_labeled_graphs(unsigned n) {
  std::vector<SimpleGraph> out;
  for_each_labeled_graph(n, [&](const SimpleGraph& g) { out.push_back(g); });
  return out;
}

namespace graphs {

std::vector<std::string> default_names(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i + 1));
  }
  return names;
}

SimpleGraph cycle(unsigned n) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle needs at least 3 vertices");
  SimpleGraph g(default_names(n));
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path(unsigned n) {
  SimpleGraph g(default_names(n + 1));
  for (unsigned i = 0; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph star(unsigned n) {
  SimpleGraph g(default_names(n + 1));
  for (unsigned i = 1; i <= n; ++i) g.add_edge(0, i);
  return g;
}

SimpleGraph claw() { return star(3); }

SimpleGraph complete(unsigned n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "complete graph needs at least 1 vertex");
  SimpleGraph g(default_names(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

}  // namespace graphs

}  // namespace scarf
