#include "scarf/simplicial.hpp"

#include <algorithm>
#include <numeric>

#include "scarf/error.hpp"

namespace scarf {

namespace {

constexpr std::size_t kMaxMaterializedFacet = 22;

std::vector<Face> maximal_only(std::vector<Face> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorKind::invalid_argument, "face lists a vertex twice");
    }
  }
  std::sort(facets.begin(), facets.end(),
            [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Face> kept;
  for (auto& f : facets) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& k) {
      return std::includes(k.begin(), k.end(), f.begin(), f.end());
    });
    if (!covered) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool face_order(const Face& a, const Face& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

LabeledComplex::LabeledComplex(VariableSet vars)
    : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {}

LabeledComplex::LabeledComplex(VariableSet vars, std::vector<Monomial> labels, std::vector<Face> facets)
    : vars_(std::move(vars)),
      labels_(std::move(labels)),
      facets_(std::move(facets)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& l : labels_) require_same_ring(vars_, l.variables());
  for (const auto& f : facets_) {
    for (auto v : f) {
      if (v >= labels_.size()) throw Error(ErrorKind::invalid_argument, "face refers to an unknown vertex");
    }
  }
}

LabeledComplex LabeledComplex::from_facets(VariableSet vars, std::vector<Monomial> labels,
                                           std::vector<Face> facets) {
  return LabeledComplex(std::move(vars), std::move(labels), maximal_only(std::move(facets)));
}

LabeledComplex LabeledComplex::from_faces(VariableSet vars, std::vector<Monomial> labels,
                                          std::vector<Face> faces) {
  for (auto& f : faces) std::sort(f.begin(), f.end());
  std::set<Face> family(faces.begin(), faces.end());
  if (!family.empty()) family.insert(Face{});
  for (const auto& f : family) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != drop) sub.push_back(f[i]);
      }
      if (!family.count(sub)) {
        throw Error(ErrorKind::invalid_argument, "face family is not closed under subsets");
      }
    }
  }
  LabeledComplex c = from_facets(std::move(vars), std::move(labels), std::vector<Face>(family.begin(), family.end()));
  return c;
}

LabeledComplex LabeledComplex::simplex(VariableSet vars, std::vector<Monomial> labels) {
  Face all(labels.size());
  std::iota(all.begin(), all.end(), 0U);
  return LabeledComplex(std::move(vars), std::move(labels), {std::move(all)});
}

int LabeledComplex::dimension() const {
  if (empty()) throw Error(ErrorKind::invalid_argument, "the empty complex has no dimension");
  std::size_t best = 0;
  for (const auto& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

const LabeledComplex::Cache& LabeledComplex::cache() const {
  std::call_once(cache_->once, [this] {
    std::set<Face> all;
    for (const auto& facet : facets_) {
      if (facet.size() > kMaxMaterializedFacet) {
        throw LimitExceeded("facet too large to enumerate its faces", facet.size());
      }
      const std::uint64_t n = std::uint64_t{1} << facet.size();
      for (std::uint64_t mask = 0; mask < n; ++mask) {
        Face f;
        for (std::size_t i = 0; i < facet.size(); ++i) {
          if (mask >> i & 1U) f.push_back(facet[i]);
        }
        all.insert(std::move(f));
      }
    }
    cache_->faces.assign(all.begin(), all.end());
    std::sort(cache_->faces.begin(), cache_->faces.end(), face_order);
    cache_->index = std::move(all);
  });
  return *cache_;
}

const std::vector<Face>& LabeledComplex::faces() const { return cache().faces; }

bool LabeledComplex::contains(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  for (const auto& facet : facets_) {
    if (std::includes(facet.begin(), facet.end(), f.begin(), f.end())) return true;
  }
  return false;
}

Monomial LabeledComplex::label(const Face& face) const {
  std::vector<Monomial::Exponent> e(vars_.size(), 0);
  for (auto v : face) {
    const auto& l = labels_.at(v).exponent_vector();
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], l[i]);
  }
  return Monomial(vars_, std::move(e));
}

std::set<std::vector<Monomial>> LabeledComplex::labeled_faces() const {
  std::set<std::vector<Monomial>> out;
  for (const auto& f : faces()) {
    std::vector<Monomial> ls;
    for (auto v : f) ls.push_back(labels_[v]);
    std::sort(ls.begin(), ls.end());
    out.insert(std::move(ls));
  }
  return out;
}

bool same_labeled_faces(const LabeledComplex& a, const LabeledComplex& b) {
  if (!(a.variables() == b.variables())) return false;
  if (a.empty() != b.empty()) return false;
  return a.labeled_faces() == b.labeled_faces();
}

LabeledComplex restrict_to_divisors(const LabeledComplex& complex, const Monomial& m) {
  require_same_ring(complex.variables(), m.variables());
  constexpr auto kDropped = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> map(complex.vertex_count(), kDropped);
  std::vector<Monomial> labels;
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
    if (divides(complex.vertex_labels()[v], m)) {
      map[v] = static_cast<std::uint32_t>(labels.size());
      labels.push_back(complex.vertex_labels()[v]);
    }
  }
  if (labels.empty() || complex.empty()) return LabeledComplex(complex.variables());

  std::vector<Face> facets;
  for (const auto& facet : complex.facets()) {
    Face f;
    for (auto v : facet) {
      if (map[v] != kDropped) f.push_back(map[v]);
    }
    facets.push_back(std::move(f));
  }
  return LabeledComplex::from_facets(complex.variables(), std::move(labels), std::move(facets));
}

namespace {

LabeledComplex reembed(const LabeledComplex& c, const VariableSet& vars) {
  if (c.empty()) return LabeledComplex(vars);
  std::vector<Monomial> labels;
  for (const auto& l : c.vertex_labels()) labels.push_back(l.embed(vars));
  return LabeledComplex::from_facets(vars, std::move(labels), c.facets());
}

}  // namespace

LabeledComplex join(const LabeledComplex& a, const LabeledComplex& b) {
  if (a.vertex_count() == 0) return reembed(b, a.variables().merged_with(b.variables()));
  if (b.vertex_count() == 0) return reembed(a, a.variables().merged_with(b.variables()));

  VariableSet vars = a.variables().merged_with(b.variables());
  std::vector<Monomial> labels;
  for (const auto& l : a.vertex_labels()) labels.push_back(l.embed(vars));
  for (const auto& l : b.vertex_labels()) labels.push_back(l.embed(vars));
  if (a.empty() || b.empty()) return LabeledComplex(vars);

  const auto shift = static_cast<std::uint32_t>(a.vertex_count());
  std::vector<Face> facets;
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      Face f = fa;
      for (auto v : fb) f.push_back(v + shift);
      facets.push_back(std::move(f));
    }
  }
  return LabeledComplex::from_facets(vars, std::move(labels), std::move(facets));
}

namespace {

void bron_kerbosch(const SimpleGraph& h, Face& r, std::vector<VertexId> p, std::vector<VertexId> x,
                   std::vector<Face>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot on the vertex of P ∪ X with the most neighbors in P.
  VertexId pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (auto u : *set) {
      std::size_t count = 0;
      for (auto w : p) count += h.has_edge(u, w) ? 1 : 0;
      if (count >= best) {
        best = count;
        pivot = u;
      }
    }
  }
  std::vector<VertexId> candidates;
  for (auto v : p) {
    if (!h.has_edge(pivot, v)) candidates.push_back(v);
  }
  for (auto v : candidates) {
    std::vector<VertexId> np, nx;
    for (auto w : p) {
      if (h.has_edge(v, w)) np.push_back(w);
    }
    for (auto w : x) {
      if (h.has_edge(v, w)) nx.push_back(w);
    }
    r.push_back(static_cast<std::uint32_t>(v));
    bron_kerbosch(h, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

LabeledComplex clique_complex(const SimpleGraph& h, VariableSet vars, std::vector<Monomial> labels) {
  if (labels.size() != h.vertex_count()) {
    throw Error(ErrorKind::invalid_argument, "clique complex needs one label per vertex");
  }
  if (h.vertex_count() == 0) return LabeledComplex(std::move(vars));
  std::vector<Face> facets;
  Face r;
  std::vector<VertexId> p(h.vertex_count());
  std::iota(p.begin(), p.end(), VertexId{0});
  bron_kerbosch(h, r, std::move(p), {}, facets);
  return LabeledComplex::from_facets(std::move(vars), std::move(labels), std::move(facets));
}

std::vector<std::size_t> f_vector(const LabeledComplex& complex) {
  std::vector<std::size_t> counts;
  for (const auto& f : complex.faces()) {
    if (f.empty()) continue;
    if (counts.size() < f.size()) counts.resize(f.size(), 0);
    ++counts[f.size() - 1];
  }
  return counts;
}

long long reduced_euler_characteristic(const LabeledComplex& complex) {
  if (complex.empty()) return 0;
  long long chi = -1;
  auto fv = f_vector(complex);
  for (std::size_t i = 0; i < fv.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(fv[i]);
  }
  return chi;
}

std::size_t HomologyProfile::rank_in(int dim) const {
  auto k = static_cast<long long>(dim) + 1;
  if (k < 0 || static_cast<std::size_t>(k) >= ranks.size()) return 0;
  return ranks[static_cast<std::size_t>(k)];
}

bool HomologyProfile::all_zero() const {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

HomologyProfile reduced_homology(const LabeledComplex& complex, Coefficients coefficients) {
  HomologyProfile profile;
  profile.coefficients = coefficients;
  if (complex.empty()) {
    profile.empty_complex = true;
    return profile;
  }

  // Group faces by size; size 0 is the empty face in dimension -1.
  std::vector<std::vector<const Face*>> by_size;
  for (const auto& f : complex.faces()) {
    if (by_size.size() <= f.size()) by_size.resize(f.size() + 1);
    by_size[f.size()].push_back(&f);
  }
  const std::size_t levels = by_size.size();

  // boundary_rank[k]: rank of the map from size-k faces to size-(k-1) faces.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) {
    std::map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < by_size[k - 1].size(); ++i) row_of.emplace(*by_size[k - 1][i], i);
    // Transposed: one row per size-k face, entries over size-(k-1) faces.
    std::vector<std::vector<long long>> rows(by_size[k].size(),
                                             std::vector<long long>(by_size[k - 1].size(), 0));
    for (std::size_t j = 0; j < by_size[k].size(); ++j) {
      const Face& f = *by_size[k][j];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub;
        sub.reserve(f.size() - 1);
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (i != drop) sub.push_back(f[i]);
        }
        rows[j][row_of.at(sub)] = drop % 2 == 0 ? 1 : -1;
      }
    }
    boundary_rank[k] = matrix_rank(std::move(rows), coefficients.characteristic);
  }

  profile.ranks.resize(levels, 0);
  for (std::size_t k = 0; k < levels; ++k) {
    profile.ranks[k] = by_size[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  }
  return profile;
}

const char* to_string(Acyclicity a) noexcept {
  switch (a) {
    case Acyclicity::acyclic: return "acyclic";
    case Acyclicity::not_acyclic: return "not-acyclic";
    case Acyclicity::field_dependent: return "field-dependent";
  }
  return "?";
}

AcyclicityReport acyclicity(const LabeledComplex& complex) {
  AcyclicityReport report{Acyclicity::acyclic, complex.empty(), {}, {}};
  if (complex.empty()) return report;
  if (complex.is_simplex() && !complex.facets().front().empty()) {
    // A non-empty simplex is a cone.
    const std::size_t levels = complex.facets().front().size() + 1;
    report.ranks_char0.assign(levels, 0);
    report.ranks_char2.assign(levels, 0);
    return report;
  }
  auto h0 = reduced_homology(complex, {0});
  auto h2 = reduced_homology(complex, {2});
  report.ranks_char0 = h0.ranks;
  report.ranks_char2 = h2.ranks;
  const bool z0 = h0.all_zero();
  const bool z2 = h2.all_zero();
  if (z0 && z2) {
    report.verdict = Acyclicity::acyclic;
  } else if (!z0 && !z2) {
    report.verdict = Acyclicity::not_acyclic;
  } else {
    report.verdict = Acyclicity::field_dependent;
  }
  return report;
}

bool is_acyclic(const LabeledComplex& complex) {
  return acyclicity(complex).verdict == Acyclicity::acyclic;
}

}  // namespace scarf
