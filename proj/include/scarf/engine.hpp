#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scarf/graph.hpp"
#include "scarf/ideal.hpp"
#include "scarf/simplicial.hpp"

namespace scarf {

inline constexpr std::size_t kTaylorGeneratorLimit = 25;
inline constexpr std::size_t kBruteForceGeneratorLimit = 20;

/// Full simplex on the minimal generators, vertex i labeled by generator i.
LabeledComplex taylor_complex(const MonomialIdeal& ideal);

/// Taylor faces grouped by label, for listing repeated labels.
struct TaylorLabelGroup {
  Monomial label;
  std::vector<Face> faces;
};
/// Non-empty faces only; groups sorted by label. Limited to
/// kBruteForceGeneratorLimit generators.
std::vector<TaylorLabelGroup> taylor_label_groups(const MonomialIdeal& ideal);

/// Faces of the Taylor simplex whose label occurs exactly once.
///
/// Grown depth-first from the empty face, appending only larger generator
/// indices. A face is kept iff no outside generator divides its label and
/// dropping any one of its generators lowers the label; together these are
/// equivalent to uniqueness of the label. Since the complex is closed
/// under subsets, every face is reached through its prefixes. The zero
/// ideal yields the empty complex.
LabeledComplex scarf_complex(const MonomialIdeal& ideal);

/// Oracle form: enumerates all 2^q faces and keeps singleton label buckets.
LabeledComplex scarf_complex_bruteforce(const MonomialIdeal& ideal);

enum class SupportVerdict { yes, no, field_dependent };
const char* to_string(SupportVerdict v) noexcept;

struct SupportResult {
  SupportVerdict verdict = SupportVerdict::yes;
  /// Smallest failing lattice element (degree, then lex order).
  std::optional<Monomial> witness;
  std::optional<AcyclicityReport> witness_homology;
  /// No face shares its label with a codimension-one subface.
  bool minimal = true;
  std::size_t lattice_size = 0;
};

/// Checks that each restriction to an lcm-lattice element is empty or
/// acyclic. Vertex labels must be the generators of the ideal (any order).
SupportResult supports_resolution(const LabeledComplex& complex, const MonomialIdeal& ideal,
                                  std::size_t lattice_cap = kDefaultLatticeCap);

/// Restriction of `complex` to m together with its acyclicity, for checking
/// a specific multidegree.
struct MultidegreeCheck {
  LabeledComplex restricted;
  AcyclicityReport homology;
};
MultidegreeCheck check_multidegree(const LabeledComplex& complex, const Monomial& m);

struct BettiEntry {
  std::size_t homological_index;
  Monomial multidegree;
  std::size_t count;
};

struct ScarfReport {
  MonomialIdeal ideal;
  LabeledComplex scarf;
  SupportVerdict verdict;
  std::optional<Monomial> witness;
  std::optional<AcyclicityReport> witness_homology;
  /// Present exactly when verdict is yes.
  std::optional<std::vector<BettiEntry>> betti;
  std::size_t lattice_size = 0;
  double seconds = 0.0;
};

ScarfReport is_scarf(const MonomialIdeal& ideal, std::size_t lattice_cap = kDefaultLatticeCap);

/// Forest and gap-free test; no complex is built.
bool is_scarf_graph_fast(const SimpleGraph& g);

/// A generator of I^t written as an edge times a generator of I^(t-1).
struct EdgeFactorization {
  Edge edge;
  Monomial cofactor;
};

/// Sufficient test that {e * m, e' * m'} is not a Scarf edge of I(G)^t:
/// either e, e' are two edges of a triangle with equal cofactors, or the
/// edges are joined by a third edge bc whose degree conditions force a
/// third generator under the pair's lcm. Throws when a factorization does
/// not match the generators of I(G)^(t-1).
bool is_certified_non_scarf_edge(const SimpleGraph& g, unsigned t, const EdgeFactorization& first,
                                 const EdgeFactorization& second);

/// Every factorization of a degree-2t monomial as edge * generator of I^(t-1).
std::vector<EdgeFactorization> edge_factorizations(const SimpleGraph& g, const MonomialIdeal& previous_power,
                                                   const Monomial& m);

}  // namespace scarf
