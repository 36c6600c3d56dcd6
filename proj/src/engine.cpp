#include "scarf/engine.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "scarf/error.hpp"

namespace scarf {

namespace {

using Exps = std::vector<Monomial::Exponent>;

bool divides_exps(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void lcm_into(Exps& acc, const Exps& e) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = std::max(acc[i], e[i]);
}

std::vector<Monomial> generator_labels(const MonomialIdeal& ideal) { return ideal.generators(); }

// Local uniqueness test for a face with label `label`.
bool has_unique_label(const std::vector<Exps>& gens, const std::vector<std::uint32_t>& face,
                      const Exps& label, std::vector<char>& in_face) {
  for (std::size_t h = 0; h < gens.size(); ++h) {
    if (!in_face[h] && divides_exps(gens[h], label)) return false;
  }
  const std::size_t n = label.size();
  std::vector<std::uint32_t> attain(n, 0);
  for (auto g : face) {
    for (std::size_t x = 0; x < n; ++x) {
      if (gens[g][x] == label[x] && label[x] > 0) ++attain[x];
    }
  }
  for (auto g : face) {
    bool needed = false;
    for (std::size_t x = 0; x < n && !needed; ++x) {
      needed = label[x] > 0 && gens[g][x] == label[x] && attain[x] == 1;
    }
    if (!needed) return false;
  }
  return true;
}

void grow(const std::vector<Exps>& gens, std::vector<std::uint32_t>& face, const Exps& label,
          std::vector<char>& in_face, std::vector<Face>& out) {
  const std::uint32_t start = face.empty() ? 0 : face.back() + 1;
  for (std::uint32_t j = start; j < gens.size(); ++j) {
    if (divides_exps(gens[j], label) && !face.empty()) continue;
    Exps child = label;
    lcm_into(child, gens[j]);
    face.push_back(j);
    in_face[j] = 1;
    if (has_unique_label(gens, face, child, in_face)) {
      out.push_back(face);
      grow(gens, face, child, in_face, out);
    }
    in_face[j] = 0;
    face.pop_back();
  }
}

}  // namespace

LabeledComplex taylor_complex(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::invalid_argument, "Taylor complex of the zero ideal");
  if (ideal.size() > kTaylorGeneratorLimit) {
    throw LimitExceeded("Taylor complex limited to " + std::to_string(kTaylorGeneratorLimit) + " generators",
                        ideal.size());
  }
  return LabeledComplex::simplex(ideal.variables(), generator_labels(ideal));
}

std::vector<TaylorLabelGroup> taylor_label_groups(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::invalid_argument, "Taylor complex of the zero ideal");
  const std::size_t q = ideal.size();
  if (q > kBruteForceGeneratorLimit) {
    throw LimitExceeded("Taylor enumeration limited to " + std::to_string(kBruteForceGeneratorLimit) +
                            " generators",
                        q);
  }
  std::map<Monomial, std::vector<Face>> groups;
  const std::uint64_t total = std::uint64_t{1} << q;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    Face f;
    Exps label(ideal.variables().size(), 0);
    for (std::uint32_t i = 0; i < q; ++i) {
      if (mask >> i & 1U) {
        f.push_back(i);
        lcm_into(label, ideal.generators()[i].exponent_vector());
      }
    }
    groups[Monomial(ideal.variables(), std::move(label))].push_back(std::move(f));
  }
  std::vector<TaylorLabelGroup> out;
  for (auto& [label, faces] : groups) out.push_back({label, std::move(faces)});
  return out;
}

LabeledComplex scarf_complex(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return LabeledComplex(ideal.variables());
  std::vector<Exps> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.exponent_vector());
  std::vector<Face> faces;
  std::vector<std::uint32_t> face;
  std::vector<char> in_face(gens.size(), 0);
  grow(gens, face, Exps(ideal.variables().size(), 0), in_face, faces);
  return LabeledComplex::from_faces(ideal.variables(), generator_labels(ideal), std::move(faces));
}

LabeledComplex scarf_complex_bruteforce(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return LabeledComplex(ideal.variables());
  const std::size_t q = ideal.size();
  if (q > kBruteForceGeneratorLimit) {
    throw LimitExceeded("brute-force Scarf enumeration limited to " +
                            std::to_string(kBruteForceGeneratorLimit) + " generators",
                        q);
  }
  const std::size_t n = ideal.variables().size();
  const std::size_t total = std::size_t{1} << q;

  // labels[mask * n ...] = lcm of the generators in mask; mask 0 is ∅ with label 1.
  std::vector<Monomial::Exponent> labels(total * n, 0);
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    const auto& g = ideal.generators()[low].exponent_vector();
    for (std::size_t k = 0; k < n; ++k) {
      labels[mask * n + k] = std::max(labels[rest * n + k], g[k]);
    }
  }
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(labels.begin() + a * n, labels.begin() + (a + 1) * n,
                                        labels.begin() + b * n, labels.begin() + (b + 1) * n);
  };
  auto same = [&](std::size_t a, std::size_t b) {
    return std::equal(labels.begin() + a * n, labels.begin() + (a + 1) * n, labels.begin() + b * n);
  };
  std::sort(order.begin(), order.end(), less);

  std::vector<Face> faces;
  for (std::size_t i = 0; i < total;) {
    std::size_t j = i + 1;
    while (j < total && same(order[i], order[j])) ++j;
    if (j == i + 1 && order[i] != 0) {
      Face f;
      for (std::uint32_t b = 0; b < q; ++b) {
        if (order[i] >> b & 1U) f.push_back(b);
      }
      faces.push_back(std::move(f));
    }
    i = j;
  }
  return LabeledComplex::from_faces(ideal.variables(), generator_labels(ideal), std::move(faces));
}

const char* to_string(SupportVerdict v) noexcept {
  switch (v) {
    case SupportVerdict::yes: return "yes";
    case SupportVerdict::no: return "no";
    case SupportVerdict::field_dependent: return "field-dependent";
  }
  return "?";
}

MultidegreeCheck check_multidegree(const LabeledComplex& complex, const Monomial& m) {
  auto restricted = restrict_to_divisors(complex, m);
  auto homology = acyclicity(restricted);
  return {std::move(restricted), std::move(homology)};
}

namespace {

bool labels_match_generators(const LabeledComplex& complex, const MonomialIdeal& ideal) {
  if (!(complex.variables() == ideal.variables())) return false;
  if (complex.vertex_count() != ideal.size()) return false;
  auto a = complex.vertex_labels();
  auto b = ideal.generators();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_minimal_labeling(const LabeledComplex& complex) {
  for (const auto& f : complex.faces()) {
    if (f.empty()) continue;
    const Monomial own = complex.label(f);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != drop) sub.push_back(f[i]);
      }
      if (complex.label(sub) == own) return false;
    }
  }
  return true;
}

}  // namespace

SupportResult supports_resolution(const LabeledComplex& complex, const MonomialIdeal& ideal,
                                  std::size_t lattice_cap) {
  if (!labels_match_generators(complex, ideal)) {
    throw Error(ErrorKind::invalid_argument, "complex labels are not the minimal generators of the ideal");
  }
  SupportResult result;
  if (ideal.is_zero()) return result;

  const auto lattice = lcm_lattice(ideal, lattice_cap);
  result.lattice_size = lattice.elements.size();
  std::optional<MultidegreeCheck> first_field_dependent;
  std::optional<Monomial> first_field_dependent_m;
  for (const auto& m : lattice.elements) {
    auto check = check_multidegree(complex, m);
    if (check.homology.verdict == Acyclicity::not_acyclic) {
      result.verdict = SupportVerdict::no;
      result.witness = m;
      result.witness_homology = check.homology;
      break;
    }
    if (check.homology.verdict == Acyclicity::field_dependent && !first_field_dependent) {
      first_field_dependent_m = m;
      first_field_dependent = std::move(check);
    }
  }
  if (result.verdict != SupportVerdict::no && first_field_dependent) {
    result.verdict = SupportVerdict::field_dependent;
    result.witness = first_field_dependent_m;
    result.witness_homology = first_field_dependent->homology;
  }
  result.minimal = is_minimal_labeling(complex);
  return result;
}

ScarfReport is_scarf(const MonomialIdeal& ideal, std::size_t lattice_cap) {
  const auto start = std::chrono::steady_clock::now();
  auto complex = scarf_complex(ideal);
  ScarfReport report{ideal, complex, SupportVerdict::yes, std::nullopt, std::nullopt, std::nullopt, 0, 0.0};
  if (!ideal.is_zero()) {
    auto support = supports_resolution(complex, ideal, lattice_cap);
    if (support.verdict == SupportVerdict::yes && !support.minimal) {
      throw Error(ErrorKind::internal, "Scarf complex shares a label between a face and a subface");
    }
    report.verdict = support.verdict;
    report.witness = support.witness;
    report.witness_homology = support.witness_homology;
    report.lattice_size = support.lattice_size;
  }
  if (report.verdict == SupportVerdict::yes) {
    std::map<std::pair<std::size_t, Monomial>, std::size_t> counts;
    for (const auto& f : complex.faces()) {
      if (f.empty()) continue;
      ++counts[{f.size() - 1, complex.label(f)}];
    }
    std::vector<BettiEntry> betti;
    for (const auto& [key, count] : counts) betti.push_back({key.first, key.second, count});
    report.betti = std::move(betti);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool is_scarf_graph_fast(const SimpleGraph& g) { return is_forest(g) && is_gap_free(g); }

std::vector<EdgeFactorization> edge_factorizations(const SimpleGraph& g, const MonomialIdeal& previous_power,
                                                   const Monomial& m) {
  std::vector<EdgeFactorization> out;
  const VariableSet& vars = m.variables();
  for (const auto& e : g.edges()) {
    const Monomial em = edge_monomial(g, vars, e);
    if (!divides(em, m)) continue;
    Exps rest = m.exponent_vector();
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= em.exponent(i);
    Monomial cofactor(vars, std::move(rest));
    const bool ok = previous_power.is_zero() ? cofactor.is_unit() : previous_power.index_of(cofactor).has_value();
    if (ok) out.push_back({e, std::move(cofactor)});
  }
  return out;
}

bool is_certified_non_scarf_edge(const SimpleGraph& g, unsigned t, const EdgeFactorization& first,
                                 const EdgeFactorization& second) {
  if (t == 0) throw Error(ErrorKind::invalid_argument, "power must be positive");
  const VariableSet vars = g.variables();
  for (const auto* f : {&first, &second}) {
    if (!g.has_edge(f->edge)) throw Error(ErrorKind::invalid_argument, "factorization edge is not in the graph");
    require_same_ring(vars, f->cofactor.variables());
    if (t == 1) {
      if (!f->cofactor.is_unit()) throw Error(ErrorKind::invalid_argument, "cofactor must be 1 when t = 1");
    } else if (!power(edge_ideal(g), t - 1).index_of(f->cofactor)) {
      throw Error(ErrorKind::invalid_argument, "cofactor is not a minimal generator of I^(t-1)");
    }
  }
  const Monomial m = product(edge_monomial(g, vars, first.edge), first.cofactor);
  const Monomial mp = product(edge_monomial(g, vars, second.edge), second.cofactor);
  if (m == mp) throw Error(ErrorKind::invalid_argument, "the two generators coincide");

  const Edge& e = first.edge;
  const Edge& ep = second.edge;

  // Two edges of a triangle with a common cofactor.
  if (!(e == ep) && e.shares_vertex(ep) && first.cofactor == second.cofactor) {
    const VertexId shared = e.contains(ep.first) ? ep.first : ep.second;
    if (g.has_edge(e.other(shared), ep.other(shared))) return true;
  }

  // Edges e = ab and e' = cd joined by a third edge bc.
  for (VertexId b : {e.first, e.second}) {
    for (VertexId c : {ep.first, ep.second}) {
      if (b == c || ep.contains(b) || e.contains(c) || !g.has_edge(b, c)) continue;
      const Monomial bc = edge_monomial(g, vars, Edge(b, c));
      const std::string& bn = g.name(b);
      const std::string& cn = g.name(c);
      if (mp.degree_in(bn) < m.degree_in(bn) && !(product(bc, second.cofactor) == m)) return true;
      if (m.degree_in(cn) < mp.degree_in(cn) && !(product(bc, first.cofactor) == mp)) return true;
    }
  }
  return false;
}

}  // namespace scarf
