#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "scarf/graph.hpp"
#include "scarf/monomial.hpp"

namespace scarf {

/// Sorted vertex indices.
using Face = std::vector<std::uint32_t>;

/// A finite simplicial complex whose vertices carry monomial labels. Face
/// labels are the lcm of vertex labels and are derived on demand.
///
/// Two degenerate complexes are distinguished: `empty()` has no faces at
/// all, while the complex whose only face is the empty set has reduced
/// homology of rank 1 in dimension -1.
class LabeledComplex {
 public:
  /// The complex with no faces.
  explicit LabeledComplex(VariableSet vars);

  /// Builds from maximal faces; non-maximal entries are dropped.
  static LabeledComplex from_facets(VariableSet vars, std::vector<Monomial> labels,
                                    std::vector<Face> facets);
  /// Builds from a complete face family; throws unless it is closed under
  /// taking subsets. The empty face is implied.
  static LabeledComplex from_faces(VariableSet vars, std::vector<Monomial> labels,
                                   std::vector<Face> faces);
  /// The full simplex on all labels. Only the facet is stored.
  static LabeledComplex simplex(VariableSet vars, std::vector<Monomial> labels);

  const VariableSet& variables() const noexcept { return vars_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<Monomial>& vertex_labels() const noexcept { return labels_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }

  bool empty() const noexcept { return facets_.empty(); }
  bool is_simplex() const noexcept { return facets_.size() == 1; }
  /// -1 for {∅}; throws for the empty complex.
  int dimension() const;

  /// Every face including ∅, ordered by size then lexicographically.
  /// Materialized on first use.
  const std::vector<Face>& faces() const;
  bool contains(const Face& face) const;
  Monomial label(const Face& face) const;

  /// Faces as sets of vertex labels; the comparison key for labeled equality.
  std::set<std::vector<Monomial>> labeled_faces() const;

 private:
  LabeledComplex(VariableSet vars, std::vector<Monomial> labels, std::vector<Face> facets);

  struct Cache {
    std::once_flag once;
    std::vector<Face> faces;
    std::set<Face> index;
  };
  const Cache& cache() const;

  VariableSet vars_;
  std::vector<Monomial> labels_;
  std::vector<Face> facets_;
  std::shared_ptr<Cache> cache_;
};

/// Equality of label-indexed face sets.
bool same_labeled_faces(const LabeledComplex& a, const LabeledComplex& b);

/// Induced subcomplex on the vertices whose labels divide m; vertices are
/// renumbered in their original order. No dividing vertex gives the empty
/// complex.
LabeledComplex restrict_to_divisors(const LabeledComplex& complex, const Monomial& m);

/// Join on the disjoint union of vertex sets, labels over the merged
/// variable set. A complex with no vertices acts as the identity.
LabeledComplex join(const LabeledComplex& a, const LabeledComplex& b);

/// Cliques of h as faces; vertex i is labeled labels[i]. Facets are the
/// maximal cliques.
LabeledComplex clique_complex(const SimpleGraph& h, VariableSet vars, std::vector<Monomial> labels);

/// Face counts by dimension starting at 0.
std::vector<std::size_t> f_vector(const LabeledComplex& complex);

/// Reduced Euler characteristic from the f-vector, including the ∅ term.
long long reduced_euler_characteristic(const LabeledComplex& complex);

/// Coefficient field: characteristic 0 (rationals) or a prime p.
struct Coefficients {
  unsigned characteristic = 0;
};

struct HomologyProfile {
  Coefficients coefficients;
  bool empty_complex = false;
  /// ranks[k] is the reduced Betti number in dimension k - 1.
  std::vector<std::size_t> ranks;

  std::size_t rank_in(int dim) const;
  bool all_zero() const;
};

/// Reduced homology ranks from boundary-matrix ranks: fraction-free
/// integer elimination for characteristic 0, modular elimination for p.
HomologyProfile reduced_homology(const LabeledComplex& complex, Coefficients coefficients = {});

enum class Acyclicity { acyclic, not_acyclic, field_dependent };
const char* to_string(Acyclicity a) noexcept;

struct AcyclicityReport {
  Acyclicity verdict;
  bool empty_complex;
  std::vector<std::size_t> ranks_char0;
  std::vector<std::size_t> ranks_char2;
};

/// Checks characteristic 0 and 2. The empty complex counts as acyclic.
AcyclicityReport acyclicity(const LabeledComplex& complex);
bool is_acyclic(const LabeledComplex& complex);

/// Rank of an integer matrix over Q (Bareiss) or over F_p.
std::size_t matrix_rank(std::vector<std::vector<long long>> rows, unsigned characteristic);

}  // namespace scarf
