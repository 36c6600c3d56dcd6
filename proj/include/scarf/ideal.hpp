#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scarf/monomial.hpp"

namespace scarf {

/// A monomial ideal held as its minimal generating set. An empty generator
/// list is the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(VariableSet vars) : vars_(std::move(vars)) {}

  const VariableSet& variables() const noexcept { return vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// Position of `m` among the generators, if it is one.
  std::optional<std::size_t> index_of(const Monomial& m) const;

  friend MonomialIdeal minimize(const VariableSet& vars, const std::vector<Monomial>& generators);

 private:
  VariableSet vars_;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal, deduplicated generators in input order.
MonomialIdeal minimize(const VariableSet& vars, const std::vector<Monomial>& generators);
MonomialIdeal minimize(const std::vector<Monomial>& generators);

/// Minimal generators of I^t. Candidates are the products over multisets of
/// generator indices taken in lexicographic order. t = 0 is rejected.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned t);

/// Sum of two ideals over the merged variable set (I + J).
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// Generators of `ideal` dividing `m`: the ideal whose Taylor faces are
/// exactly the faces with labels dividing m.
MonomialIdeal restrict_to_divisors(const MonomialIdeal& ideal, const Monomial& m);

/// The lcm-closure of the minimal generators, sorted by `Monomial::operator<`.
struct LcmLattice {
  MonomialIdeal ideal;
  std::vector<Monomial> elements;

  bool contains(const Monomial& m) const;
};

inline constexpr std::size_t kDefaultLatticeCap = 100000;

/// Throws LimitExceeded (carrying the partial count) past `cap` elements.
LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = kDefaultLatticeCap);

/// Product of all variables used by some generator for squarefree ideals;
/// the lcm of all generators otherwise.
Monomial vertex_support_product(const MonomialIdeal& ideal);

}  // namespace scarf
