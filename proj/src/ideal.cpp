#include "scarf/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "scarf/error.hpp"

namespace scarf {

std::optional<std::size_t> MonomialIdeal::index_of(const Monomial& m) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] == m) return i;
  }
  return std::nullopt;
}

MonomialIdeal minimize(const VariableSet& vars, const std::vector<Monomial>& generators) {
  for (const auto& g : generators) require_same_ring(vars, g.variables());

  MonomialIdeal ideal(vars);
  std::unordered_set<Monomial, MonomialHash> seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (!seen.insert(g).second) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i != j && !(generators[j] == g) && divides(generators[j], g)) redundant = true;
    }
    if (!redundant) ideal.gens_.push_back(g);
  }
  return ideal;
}

MonomialIdeal minimize(const std::vector<Monomial>& generators) {
  if (generators.empty()) return MonomialIdeal(VariableSet{});
  return minimize(generators.front().variables(), generators);
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned t) {
  if (t == 0) throw Error(ErrorKind::invalid_argument, "ideal power requires t >= 1");
  if (ideal.is_zero()) throw Error(ErrorKind::invalid_argument, "power of the zero ideal");
  if (t == 1) return ideal;

  const auto& gens = ideal.generators();
  const std::size_t q = gens.size();
  std::vector<Monomial> candidates;
  // Non-decreasing index tuples in lexicographic order.
  std::vector<std::size_t> idx(t, 0);
  while (true) {
    Monomial m = gens[idx[0]];
    for (unsigned k = 1; k < t; ++k) m = product(m, gens[idx[k]]);
    candidates.push_back(std::move(m));

    int k = static_cast<int>(t) - 1;
    while (k >= 0 && idx[k] == q - 1) --k;
    if (k < 0) break;
    ++idx[k];
    for (unsigned j = k + 1; j < t; ++j) idx[j] = idx[k];
  }
  return minimize(ideal.variables(), candidates);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  VariableSet vars = a.variables().merged_with(b.variables());
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.embed(vars));
  for (const auto& g : b.generators()) gens.push_back(g.embed(vars));
  return minimize(vars, gens);
}

MonomialIdeal restrict_to_divisors(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> kept;
  for (const auto& g : ideal.generators()) {
    if (divides(g, m)) kept.push_back(g);
  }
  return minimize(ideal.variables(), kept);
}

bool LcmLattice::contains(const Monomial& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) throw Error(ErrorKind::invalid_argument, "lcm lattice of the zero ideal");

  using Exps = std::vector<Monomial::Exponent>;
  const auto& gens = ideal.generators();
  std::unordered_set<Exps, ExponentsHash> seen;
  std::vector<Exps> order;
  auto add = [&](Exps e) {
    if (seen.insert(e).second) {
      order.push_back(std::move(e));
      if (order.size() > cap) {
        throw LimitExceeded("lcm lattice exceeds cap of " + std::to_string(cap) + " elements",
                            order.size());
      }
    }
  };
  for (const auto& g : gens) add(g.exponent_vector());

  // Every element is a join of atoms, so closing under lcm with atoms suffices.
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& g : gens) {
      Exps e = order[i];
      const auto& ge = g.exponent_vector();
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(e[k], ge[k]);
      add(std::move(e));
    }
  }

  LcmLattice lattice{ideal, {}};
  lattice.elements.reserve(order.size());
  for (auto& e : order) lattice.elements.emplace_back(ideal.variables(), std::move(e));
  std::sort(lattice.elements.begin(), lattice.elements.end());
  return lattice;
}

Monomial vertex_support_product(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error(ErrorKind::invalid_argument, "vertex product of the zero ideal");
  Monomial acc(ideal.variables());
  for (const auto& g : ideal.generators()) acc = lcm(acc, g);
  if (!std::all_of(ideal.generators().begin(), ideal.generators().end(),
                   [](const Monomial& g) { return g.is_squarefree(); })) {
    return acc;
  }
  auto supp = acc.support();
  return Monomial::from_support(ideal.variables(), supp);
}

}  // namespace scarf
