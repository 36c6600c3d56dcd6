#include "scarf/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "scarf/error.hpp"

namespace scarf::io {

using nlohmann::json;

namespace {

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (is_separator(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Factor names of one generator: text between `*` up to an optional `^`.
std::vector<std::string> factor_names(std::string_view token) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    auto star = token.find('*', pos);
    auto factor = token.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    out.emplace_back(trim(factor.substr(0, factor.find('^'))));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> string_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorKind::parse, std::string("JSON field '") + key + "' must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : j.at(key)) {
    if (!item.is_string()) throw Error(ErrorKind::parse, std::string("entries of '") + key + "' must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Monomial monomial_from_json(const VariableSet& vars, const json& j) {
  if (j.is_string()) return Monomial::parse(vars, j.get<std::string>());
  if (!j.is_object()) throw Error(ErrorKind::parse, "monomial must be a string or an exponent object");
  std::vector<Monomial::Exponent> e(vars.size(), 0);
  for (const auto& [name, value] : j.items()) {
    auto idx = vars.index_of(name);
    if (!idx) throw Error(ErrorKind::parse, "unknown variable '" + name + "'");
    if (!value.is_number_unsigned()) throw Error(ErrorKind::parse, "exponent of '" + name + "' must be a non-negative integer");
    e[*idx] = value.get<Monomial::Exponent>();
  }
  return Monomial(vars, std::move(e));
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::parse, "ideal JSON must be an object");
  VariableSet vars;
  try {
    vars = VariableSet(string_array(j, "variables"));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw Error(ErrorKind::parse, "JSON field 'generators' must be an array");
  }
  std::vector<Monomial> gens;
  for (const auto& g : j.at("generators")) gens.push_back(monomial_from_json(vars, g));
  return minimize(vars, gens);
}

std::optional<unsigned> parse_count(std::string_view s) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<SimpleGraph> parse_builtin(std::string_view text) {
  if (text == "claw") return graphs::claw();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto kind = text.substr(0, colon);
  const auto n = parse_count(text.substr(colon + 1));
  if (!n) throw Error(ErrorKind::parse, "bad size in '" + std::string(text) + "'");
  try {
    if (kind == "cycle") return graphs::cycle(*n);
    if (kind == "path") return graphs::path(*n);
    if (kind == "star") return graphs::star(*n);
    if (kind == "complete") return graphs::complete(*n);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  throw Error(ErrorKind::parse, "unknown graph family '" + std::string(kind) + "'");
}

SimpleGraph parse_graph_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::parse, "graph JSON must be an object");
  SimpleGraph g(string_array(j, "vertices"));
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw Error(ErrorKind::parse, "JSON field 'edges' must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw Error(ErrorKind::parse, "edges must be pairs of vertex names");
      }
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return g;
}

std::string labels_of(const LabeledComplex& c, const Face& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += c.vertex_labels()[f[i]].to_string();
  }
  return out + "}";
}

std::string vector_text(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

json complex_json(const LabeledComplex& c) {
  json j;
  j["variables"] = c.variables().names();
  j["vertices"] = json::array();
  for (const auto& l : c.vertex_labels()) j["vertices"].push_back(l.to_string());
  j["facets"] = json::array();
  for (const auto& f : c.facets()) j["facets"].push_back(f);
  return j;
}

json ranks_json(const std::vector<std::size_t>& ranks) {
  json out = json::array();
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    out.push_back({{"dimension", static_cast<int>(k) - 1}, {"rank", ranks[k]}});
  }
  return out;
}

json acyclicity_json(const AcyclicityReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"empty_complex", r.empty_complex},
          {"reduced_homology_char0", ranks_json(r.ranks_char0)},
          {"reduced_homology_char2", ranks_json(r.ranks_char2)}};
}

std::string nonzero_ranks(const std::vector<std::size_t>& ranks) {
  std::string out;
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (ranks[k] == 0) continue;
    if (!out.empty()) out += ", ";
    out += "H~_" + std::to_string(static_cast<int>(k) - 1) + " = " + std::to_string(ranks[k]);
  }
  return out.empty() ? "all zero" : out;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return parse_ideal_json(text);
  const auto tokens = split_tokens(text);
  if (tokens.empty()) throw Error(ErrorKind::parse, "no generators given");

  // Word mode: no `*`, and only letters once `^digits` runs are removed.
  bool words = true;
  for (const auto& tok : tokens) {
    if (tok == "1") continue;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      const auto c = static_cast<unsigned char>(tok[i]);
      if (tok[i] == '^' && i > 0) {
        while (i + 1 < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i + 1]))) ++i;
      } else if (!std::isalpha(c)) {
        words = false;
      }
    }
  }

  std::vector<std::string> names;
  std::set<std::string> seen;
  auto note = [&](std::string name) {
    if (seen.insert(name).second) names.push_back(std::move(name));
  };
  for (const auto& tok : tokens) {
    if (tok == "1") continue;
    if (words) {
      for (char c : tok) {
        if (std::isalpha(static_cast<unsigned char>(c))) note(std::string(1, c));
      }
    } else {
      for (const auto& name : factor_names(tok)) note(name);
    }
  }

  VariableSet vars;
  try {
    vars = VariableSet(names);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  std::vector<Monomial> gens;
  gens.reserve(tokens.size());
  for (const auto& tok : tokens) gens.push_back(Monomial::parse(vars, tok));
  return minimize(vars, gens);
}

SimpleGraph parse_graph(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') return parse_graph_json(text);
  if (auto builtin = parse_builtin(text)) return *builtin;

  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  auto note = [&](const std::string& v) {
    if (seen.insert(v).second) vertices.push_back(v);
  };
  for (const auto& tok : split_tokens(text)) {
    const auto dash = tok.find('-');
    if (dash != std::string::npos) {
      const auto a = tok.substr(0, dash);
      const auto b = tok.substr(dash + 1);
      if (a.empty() || b.empty() || b.find('-') != std::string::npos) {
        throw Error(ErrorKind::parse, "bad edge token '" + tok + "'");
      }
      note(a);
      note(b);
      edges.emplace_back(a, b);
    } else if (tok.size() == 2) {
      note(tok.substr(0, 1));
      note(tok.substr(1, 1));
      edges.emplace_back(tok.substr(0, 1), tok.substr(1, 1));
    } else {
      note(tok);
    }
  }
  try {
    return SimpleGraph(vertices, edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

std::string graph_to_text(const SimpleGraph& g) {
  std::string out;
  std::vector<bool> touched(g.vertex_count(), false);
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += g.name(e.first) + "-" + g.name(e.second);
    touched[e.first] = touched[e.second] = true;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (touched[v]) continue;
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out.empty() ? "-" : out;
}

std::string graph_to_json(const SimpleGraph& g) {
  json j;
  j["vertices"] = g.vertex_names();
  j["edges"] = json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({g.name(e.first), g.name(e.second)});
  return j.dump();
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += ideal.generators()[i].to_string();
  }
  return out + ")";
}

std::string complex_to_text(const LabeledComplex& c) {
  std::ostringstream out;
  out << "variables: ";
  for (std::size_t i = 0; i < c.variables().size(); ++i) out << (i ? " " : "") << c.variables().name(i);
  out << '\n';
  if (c.empty()) {
    out << "empty complex (no faces)\n";
    return out.str();
  }
  out << "f-vector: " << vector_text(f_vector(c)) << '\n';
  out << "vertices:\n";
  for (std::size_t i = 0; i < c.vertex_count(); ++i) out << "  " << i << ": " << c.vertex_labels()[i].to_string() << '\n';
  out << "facets:\n";
  for (const auto& f : c.facets()) out << "  " << labels_of(c, f) << " label " << c.label(f).to_string() << '\n';
  return out.str();
}

std::string complex_to_json(const LabeledComplex& c) { return complex_json(c).dump(2); }

LabeledComplex complex_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::parse, "complex JSON must be an object");
  VariableSet vars;
  try {
    vars = VariableSet(string_array(j, "variables"));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  std::vector<Monomial> labels;
  for (const auto& s : string_array(j, "vertices")) labels.push_back(Monomial::parse(vars, s));
  if (!j.contains("facets") || !j.at("facets").is_array()) throw Error(ErrorKind::parse, "JSON field 'facets' must be an array");
  std::vector<Face> facets;
  for (const auto& f : j.at("facets")) {
    if (!f.is_array()) throw Error(ErrorKind::parse, "facets must be arrays of vertex indices");
    Face face;
    for (const auto& v : f) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= labels.size()) {
        throw Error(ErrorKind::parse, "facet vertex index out of range");
      }
      face.push_back(v.get<std::uint32_t>());
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) throw Error(ErrorKind::parse, "repeated vertex in facet");
    facets.push_back(std::move(face));
  }
  if (facets.empty()) return LabeledComplex(vars);
  return LabeledComplex::from_facets(vars, std::move(labels), std::move(facets));
}

std::string complex_to_dot(const LabeledComplex& c, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  bool header = false;
  for (const auto& f : c.facets()) {
    if (f.size() < 3) continue;
    if (!header) out << "  // facets of dimension >= 2:\n";
    header = true;
    out << "  //   " << labels_of(c, f) << '\n';
  }
  std::vector<bool> used(c.vertex_count(), false);
  for (const auto& f : c.facets()) {
    for (auto v : f) used[v] = true;
  }
  for (std::size_t i = 0; i < c.vertex_count(); ++i) {
    if (used[i]) out << "  v" << i << " [label=\"" << c.vertex_labels()[i].to_string() << "\"];\n";
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.emplace(f[i], f[j]);
    }
  }
  for (const auto& [a, b] : edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string homology_to_text(const HomologyProfile& p) {
  std::ostringstream out;
  out << "characteristic: " << p.coefficients.characteristic << '\n';
  if (p.empty_complex) {
    out << "empty complex: all reduced homology vanishes\n";
    return out.str();
  }
  for (std::size_t k = 0; k < p.ranks.size(); ++k) {
    out << "H~_" << static_cast<int>(k) - 1 << " = " << p.ranks[k] << '\n';
  }
  out << (p.all_zero() ? "acyclic\n" : "not acyclic\n");
  return out.str();
}

std::string homology_to_json(const HomologyProfile& p) {
  json j = {{"characteristic", p.coefficients.characteristic},
            {"empty_complex", p.empty_complex},
            {"acyclic", p.all_zero()},
            {"reduced_homology", ranks_json(p.ranks)}};
  return j.dump(2);
}

std::string report_to_text(const ScarfReport& r) {
  std::ostringstream out;
  out << "ideal: " << ideal_to_text(r.ideal) << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
  if (r.witness) {
    out << "witness: " << r.witness->to_string() << '\n';
    if (r.witness_homology) {
      out << "witness homology (char 0): " << nonzero_ranks(r.witness_homology->ranks_char0) << '\n';
      out << "witness homology (char 2): " << nonzero_ranks(r.witness_homology->ranks_char2) << '\n';
    }
  }
  out << "lcm lattice size: " << r.lattice_size << '\n';
  if (!r.scarf.empty()) out << "f-vector: " << vector_text(f_vector(r.scarf)) << '\n';
  out << "facets:\n";
  for (const auto& f : r.scarf.facets()) out << "  " << labels_of(r.scarf, f) << '\n';
  if (r.betti) {
    out << "betti numbers (i, multidegree, count):\n";
    for (const auto& b : *r.betti) {
      out << "  " << b.homological_index << ' ' << b.multidegree.to_string() << ' ' << b.count << '\n';
    }
  }
  return out.str();
}

std::string report_to_json(const ScarfReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["generators"] = json::array();
  for (const auto& g : r.ideal.generators()) j["generators"].push_back(g.to_string());
  j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  j["witness_homology"] = r.witness_homology ? acyclicity_json(*r.witness_homology) : json(nullptr);
  j["f_vector"] = r.scarf.empty() ? std::vector<std::size_t>{} : f_vector(r.scarf);
  j["scarf_complex"] = complex_json(r.scarf);
  if (r.betti) {
    j["betti"] = json::array();
    for (const auto& b : *r.betti) {
      j["betti"].push_back({{"homological_index", b.homological_index},
                            {"multidegree", b.multidegree.to_string()},
                            {"count", b.count}});
    }
  } else {
    j["betti"] = nullptr;
  }
  j["lattice_size"] = r.lattice_size;
  j["seconds"] = r.seconds;
  return j.dump(2);
}

std::string taylor_groups_to_text(const MonomialIdeal& ideal, const std::vector<TaylorLabelGroup>& groups) {
  std::ostringstream out;
  out << "generators: " << ideal_to_text(ideal) << '\n';
  std::size_t repeated = 0;
  for (const auto& g : groups) repeated += g.faces.size() > 1;
  out << "distinct labels: " << groups.size() << ", repeated: " << repeated << '\n';
  for (const auto& g : groups) {
    out << "  " << g.label.to_string() << " x" << g.faces.size() << ':';
    for (const auto& f : g.faces) {
      out << " {";
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

std::string taylor_groups_to_json(const MonomialIdeal& ideal, const std::vector<TaylorLabelGroup>& groups) {
  json j;
  j["generators"] = json::array();
  for (const auto& g : ideal.generators()) j["generators"].push_back(g.to_string());
  j["labels"] = json::array();
  for (const auto& g : groups) {
    j["labels"].push_back({{"label", g.label.to_string()}, {"multiplicity", g.faces.size()}, {"faces", g.faces}});
  }
  return j.dump(2);
}

}  // namespace scarf::io
