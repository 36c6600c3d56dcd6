#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scarf/engine.hpp"
#include "scarf/graph.hpp"
#include "scarf/ideal.hpp"
#include "scarf/simplicial.hpp"

namespace scarf::io {

/// Generators separated by commas or whitespace. Without any `*` and with
/// purely alphabetic factors, every letter is a variable (`xy^2z`);
/// otherwise factors are identifiers (`x1^2*x2`). Variables are numbered in
/// order of first appearance. Text starting with `{` is read as JSON:
/// {"variables": [...], "generators": ["x^2*y" | {"x": 2, "y": 1}, ...]}.
MonomialIdeal parse_ideal(std::string_view text);

/// Builtins `cycle:n`, `path:n`, `star:n`, `complete:n`, `claw`; JSON
/// {"vertices": [...], "edges": [["a", "b"], ...]}; or tokens separated by
/// commas or whitespace, each `ab`, `a-b`, or a lone vertex name.
SimpleGraph parse_graph(std::string_view text);

/// Edges, then isolated vertices, in parse_graph's token syntax; `-` for
/// a graph without vertices.
std::string graph_to_text(const SimpleGraph& g);
std::string graph_to_json(const SimpleGraph& g);

std::string ideal_to_text(const MonomialIdeal& ideal);

std::string complex_to_text(const LabeledComplex& complex);
/// {"variables", "vertices": [labels], "facets": [[vertex indices]]}.
/// `facets` is [] for the empty complex and [[]] for {∅}.
std::string complex_to_json(const LabeledComplex& complex);
LabeledComplex complex_from_json(std::string_view text);
/// 1-skeleton; facets of dimension >= 2 are listed in a comment block.
std::string complex_to_dot(const LabeledComplex& complex, std::string_view name = "scarf");

std::string homology_to_text(const HomologyProfile& profile);
std::string homology_to_json(const HomologyProfile& profile);

std::string report_to_text(const ScarfReport& report);
std::string report_to_json(const ScarfReport& report);

std::string taylor_groups_to_text(const MonomialIdeal& ideal, const std::vector<TaylorLabelGroup>& groups);
std::string taylor_groups_to_json(const MonomialIdeal& ideal, const std::vector<TaylorLabelGroup>& groups);

}  // namespace scarf::io
