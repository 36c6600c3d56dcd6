#include "scarf/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "scarf/error.hpp"

namespace scarf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::incompatible_rings: return "incompatible rings";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::not_found: return "not found";
    case ErrorKind::limit_exceeded: return "limit exceeded";
    case ErrorKind::internal: return "internal error";
  }
  return "unknown error";
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::limit_exceeded, "monomial exponent overflow");
  }
  return r;
}

}  // namespace

VariableSet::VariableSet() : data_(std::make_shared<const Data>()) {}

VariableSet::VariableSet(std::vector<std::string> names) {
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!is_identifier(names[i])) {
      throw Error(ErrorKind::invalid_argument, "invalid variable name '" + names[i] + "'");
    }
    if (!data->index.emplace(names[i], i).second) {
      throw Error(ErrorKind::invalid_argument, "duplicate variable name '" + names[i] + "'");
    }
    if (names[i].size() != 1) data->single_char = false;
  }
  data->names = std::move(names);
  data_ = std::move(data);
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  auto it = data_->index.find(std::string(name));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSet::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error(ErrorKind::not_found, "unknown variable '" + std::string(name) + "'");
  return *idx;
}

VariableSet VariableSet::merged_with(const VariableSet& other) const {
  std::vector<std::string> names = data_->names;
  for (const auto& n : other.names()) {
    if (!contains(n)) names.push_back(n);
  }
  return VariableSet(std::move(names));
}

bool operator==(const VariableSet& a, const VariableSet& b) noexcept {
  return a.data_ == b.data_ || a.data_->names == b.data_->names;
}

void require_same_ring(const VariableSet& a, const VariableSet& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::incompatible_rings, "monomials live over different variable sets");
  }
}

Monomial::Monomial(VariableSet vars) : vars_(std::move(vars)), exps_(vars_.size(), 0) {}

Monomial::Monomial(VariableSet vars, std::vector<Exponent> exponents)
    : vars_(std::move(vars)), exps_(std::move(exponents)) {
  if (exps_.size() != vars_.size()) {
    throw Error(ErrorKind::invalid_argument, "exponent vector length does not match variable count");
  }
}

Monomial Monomial::from_support(VariableSet vars, std::span<const std::size_t> indices) {
  std::vector<Exponent> e(vars.size(), 0);
  for (auto i : indices) e.at(i) = 1;
  return Monomial(std::move(vars), std::move(e));
}

Monomial Monomial::parse(const VariableSet& vars, std::string_view text) {
  text = trim(text);
  std::vector<Exponent> e(vars.size(), 0);
  if (text.empty()) throw Error(ErrorKind::parse, "empty monomial");
  if (text == "1") return Monomial(vars, std::move(e));

  auto add_factor = [&](std::string_view name, Exponent power) {
    auto idx = vars.index_of(name);
    if (!idx) throw Error(ErrorKind::parse, "unknown variable '" + std::string(name) + "'");
    e[*idx] = checked_add(e[*idx], power);
  };

  auto parse_power = [](std::string_view digits, std::string_view factor) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorKind::parse, "bad exponent in '" + std::string(factor) + "'");
    }
    unsigned long value = 0;
    for (char c : digits) {
      value = value * 10 + static_cast<unsigned long>(c - '0');
      if (value > std::numeric_limits<Exponent>::max()) {
        throw Error(ErrorKind::limit_exceeded, "exponent too large in '" + std::string(factor) + "'");
      }
    }
    return static_cast<Exponent>(value);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto star = text.find('*', pos);
    auto factor = trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.empty()) throw Error(ErrorKind::parse, "empty factor in '" + std::string(text) + "'");
    if (vars.single_char_names()) {
      // Letter by letter: `xy^2z` is x * y^2 * z.
      std::size_t i = 0;
      while (i < factor.size()) {
        const auto name = factor.substr(i, 1);
        ++i;
        Exponent power = 1;
        if (i < factor.size() && factor[i] == '^') {
          const auto first = ++i;
          while (i < factor.size() && std::isdigit(static_cast<unsigned char>(factor[i]))) ++i;
          power = parse_power(factor.substr(first, i - first), factor);
        }
        add_factor(name, power);
      }
    } else {
      auto caret_pos = factor.find('^');
      auto name = trim(factor.substr(0, caret_pos));
      add_factor(name, caret_pos == std::string_view::npos ? 1 : parse_power(trim(factor.substr(caret_pos + 1)), factor));
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(vars, std::move(e));
}

Monomial::Exponent Monomial::degree_in(std::string_view variable) const {
  return exps_[vars_.require_index(variable)];
}

std::uint64_t Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent x) { return x <= 1; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

Monomial Monomial::pow(unsigned t) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(exps_[i]) * t;
    if (v > std::numeric_limits<Exponent>::max()) {
      throw Error(ErrorKind::limit_exceeded, "monomial exponent overflow");
    }
    e[i] = static_cast<Exponent>(v);
  }
  return Monomial(vars_, std::move(e));
}

Monomial Monomial::embed(const VariableSet& target) const {
  if (vars_ == target) return *this;
  std::vector<Exponent> e(target.size(), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    auto idx = target.index_of(vars_.name(i));
    if (!idx) {
      throw Error(ErrorKind::incompatible_rings,
                  "variable '" + vars_.name(i) + "' missing from target variable set");
    }
    e[*idx] = exps_[i];
  }
  return Monomial(target, std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_.name(i);
    if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  return a.exps_ == b.exps_ && a.vars_ == b.vars_;
}

bool operator<(const Monomial& a, const Monomial& b) noexcept {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da < db;
  return a.exps_ < b.exps_;
}

std::size_t ExponentsHash::operator()(const std::vector<Monomial::Exponent>& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : e) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  return ExponentsHash{}(m.exponent_vector());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.variables(), b.variables());
  std::vector<Monomial::Exponent> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(a.variables(), std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a.variables(), b.variables());
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

Monomial product(const Monomial& a, const Monomial& b) {
  require_same_ring(a.variables(), b.variables());
  std::vector<Monomial::Exponent> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(a.exponent(i), b.exponent(i));
  return Monomial(a.variables(), std::move(e));
}

Monomial::Exponent degree_in(const Monomial& m, std::string_view variable) {
  return m.degree_in(variable);
}

}  // namespace scarf
