#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scarf {

/// Ordered list of distinct variable names. The order fixes exponent-vector
/// positions. Copies share storage.
class VariableSet {
 public:
  VariableSet();
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws ErrorKind::not_found for an unknown name.
  std::size_t require_index(std::string_view name) const;

  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  /// True when every name is one character, enabling the `xyz` shorthand.
  bool single_char_names() const noexcept { return data_->single_char; }

  /// Names of `this` followed by names of `other` not already present.
  VariableSet merged_with(const VariableSet& other) const;

  friend bool operator==(const VariableSet& a, const VariableSet& b) noexcept;

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
    bool single_char = true;
  };
  std::shared_ptr<const Data> data_;
};

/// A monomial as a vector of non-negative exponents over a VariableSet.
/// Immutable value type; the all-zero vector is the unit monomial 1.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  explicit Monomial(VariableSet vars);
  Monomial(VariableSet vars, std::vector<Exponent> exponents);

  /// Squarefree product of the named variables.
  static Monomial from_support(VariableSet vars, std::span<const std::size_t> indices);

  /// Parses `x^2*y*z` or `1`. Over single-character names a factor may be a
  /// word, `xy^2z`, with each exponent binding to the preceding letter.
  static Monomial parse(const VariableSet& vars, std::string_view text);

  const VariableSet& variables() const noexcept { return vars_; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  const std::vector<Exponent>& exponent_vector() const noexcept { return exps_; }
  Exponent exponent(std::size_t i) const { return exps_.at(i); }
  Exponent degree_in(std::string_view variable) const;

  std::uint64_t total_degree() const noexcept;
  bool is_unit() const noexcept;
  bool is_squarefree() const noexcept;
  /// Indices of variables with non-zero exponent.
  std::vector<std::size_t> support() const;

  /// Raises to the power t with overflow checks.
  Monomial pow(unsigned t) const;
  /// Re-expresses this monomial over a superset of its variables (by name).
  Monomial embed(const VariableSet& target) const;

  /// Caret form in declared variable order, e.g. `x^2*y*z`; unit is `1`.
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
  /// Total order: by total degree, then lexicographically by exponent vector.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept;

 private:
  VariableSet vars_;
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct ExponentsHash {
  std::size_t operator()(const std::vector<Monomial::Exponent>& e) const noexcept;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
Monomial::Exponent degree_in(const Monomial& m, std::string_view variable);

/// Throws ErrorKind::incompatible_rings when the two sets differ.
void require_same_ring(const VariableSet& a, const VariableSet& b);

}  // namespace scarf
