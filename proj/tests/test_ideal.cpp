#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "scarf/error.hpp"
#include "scarf/ideal.hpp"

using namespace scarf;

namespace {

MonomialIdeal ideal_of(const VariableSet& v, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) ms.push_back(Monomial::parse(v, g));
  return minimize(v, ms);
}

std::vector<std::string> strings(const MonomialIdeal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(g.to_string());
  return out;
}

// Naive lcm closure over all non-empty subsets, for comparison.
std::set<std::vector<Monomial::Exponent>> subset_lcms(const MonomialIdeal& ideal) {
  std::set<std::vector<Monomial::Exponent>> out;
  const auto& g = ideal.generators();
  for (unsigned mask = 1; mask < (1u << g.size()); ++mask) {
    Monomial m(ideal.variables());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (mask & (1u << i)) m = lcm(m, g[i]);
    }
    out.insert(m.exponent_vector());
  }
  return out;
}

}  // namespace

TEST_CASE("minimize drops multiples and duplicates, keeping input order") {
  const VariableSet v({"x", "y", "z"});
  const auto i = ideal_of(v, {"xy", "x^2*y", "z", "xy", "yz"});
  CHECK(strings(i) == std::vector<std::string>{"x*y", "z"});
  CHECK(i.index_of(Monomial::parse(v, "z")) == 1);
  CHECK_FALSE(i.index_of(Monomial::parse(v, "yz")));
}

TEST_CASE("the unit generates the whole ring") {
  const VariableSet v({"x"});
  CHECK(strings(ideal_of(v, {"x", "1", "x^2"})) == std::vector<std::string>{"1"});
}

TEST_CASE("powers of an edge ideal") {
  const VariableSet v({"a", "b", "c"});
  const auto i = ideal_of(v, {"ab", "bc"});
  CHECK(strings(power(i, 2)) == std::vector<std::string>{"a^2*b^2", "a*b^2*c", "b^2*c^2"});
  CHECK(power(i, 1).generators() == i.generators());
  CHECK_THROWS_AS(power(i, 0), Error);
  CHECK_THROWS_AS(power(MonomialIdeal(v), 2), Error);
}

TEST_CASE("square of (a^2, b)") {
  const VariableSet v({"a", "b"});
  const auto i = minimize(v, {Monomial::parse(v, "a^2"), Monomial::parse(v, "b")});
  CHECK(strings(power(i, 2)) == std::vector<std::string>{"a^4", "a^2*b", "b^2"});
}

TEST_CASE("triangle squared has six generators") {
  const VariableSet v({"a", "b", "c"});
  CHECK(power(ideal_of(v, {"ab", "bc", "ac"}), 2).size() == 6);
}

TEST_CASE("sum merges variable sets") {
  const auto a = ideal_of(VariableSet({"x", "y"}), {"xy"});
  const auto b = ideal_of(VariableSet({"u", "v"}), {"uv", "u^2"});
  const auto s = sum(a, b);
  CHECK(s.variables().names() == std::vector<std::string>{"x", "y", "u", "v"});
  CHECK(strings(s) == std::vector<std::string>{"x*y", "u*v", "u^2"});
}

TEST_CASE("restriction keeps the generators dividing m") {
  const VariableSet v({"x", "y", "z", "w"});
  const auto c4 = ideal_of(v, {"xy", "yz", "zw", "wx"});
  CHECK(strings(restrict_to_divisors(c4, Monomial::parse(v, "xyz"))) == std::vector<std::string>{"x*y", "y*z"});
  CHECK(restrict_to_divisors(c4, Monomial::parse(v, "x")).is_zero());
}

TEST_CASE("lcm lattice equals the closure of subset lcms") {
  const VariableSet v({"x", "y", "z", "w"});
  for (const auto& ideal : {ideal_of(v, {"xy", "yz", "zw", "wx"}), ideal_of(v, {"x^2*y", "y^3", "xz", "zw^2", "w"}),
                            ideal_of(v, {"xyz", "x^2*z", "xy^2"})}) {
    const auto lattice = lcm_lattice(ideal);
    std::set<std::vector<Monomial::Exponent>> got;
    for (const auto& m : lattice.elements) got.insert(m.exponent_vector());
    CHECK(got == subset_lcms(ideal));
    CHECK(got.size() == lattice.elements.size());
    CHECK(std::is_sorted(lattice.elements.begin(), lattice.elements.end()));
    for (const auto& g : ideal.generators()) CHECK(lattice.contains(g));
  }
}

TEST_CASE("C4 lattice: four atoms, four degree-3 lcms, and xyzw") {
  const VariableSet v({"x", "y", "z", "w"});
  CHECK(lcm_lattice(ideal_of(v, {"xy", "yz", "zw", "wx"})).elements.size() == 9);
}

TEST_CASE("the lattice cap reports the partial count") {
  std::vector<std::string> names;
  std::vector<Monomial> gens;
  for (int i = 0; i < 12; ++i) names.push_back("x" + std::to_string(i));
  const VariableSet v(names);
  for (int i = 0; i < 12; ++i) {
    std::vector<Monomial::Exponent> e(12, 0);
    e[i] = 1;
    gens.emplace_back(v, e);
  }
  const auto ideal = minimize(v, gens);
  try {
    (void)lcm_lattice(ideal, 100);
    FAIL("expected the cap to trigger");
  } catch (const LimitExceeded& e) {
    CHECK(e.kind() == ErrorKind::limit_exceeded);
    CHECK(e.partial_count() > 100);
  }
  CHECK(lcm_lattice(ideal).elements.size() == 4095);
}

TEST_CASE("vertex support product") {
  const VariableSet v({"a", "b", "c", "d"});
  CHECK(vertex_support_product(ideal_of(v, {"ab", "bc"})) == Monomial::parse(v, "abc"));
  CHECK(vertex_support_product(ideal_of(v, {"a^2*b", "bc"})) == Monomial::parse(v, "a^2*b*c"));
}
