#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scarf/error.hpp"
#include "scarf/simplicial.hpp"

namespace scarf {

namespace {

struct Overflow {};

long long mul_or_throw(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

long long sub_or_throw(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Fraction-free (Bareiss) elimination. Every division is exact, so the
// entries stay integral; ranks are those over Q.
template <class Int, class Mul, class Sub>
std::size_t bareiss_rank(std::vector<std::vector<Int>>& m, Mul mul, Sub sub) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Int& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int factor = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int num = sub(mul(p, m[i][j]), mul(factor, m[rank][j]));
        m[i][j] = num / prev;
      }
      m[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  // p < 2^32, so products of residues fit in 64 bits.
  std::uint64_t r = 1, x = b % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t modular_rank(const std::vector<std::vector<long long>>& rows, unsigned p) {
  const std::size_t n = rows.size();
  if (n == 0) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      long long v = rows[i][j] % static_cast<long long>(p);
      m[i][j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][col], p - 2, p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const std::uint64_t f = m[i][col] * inv % p;
      for (std::size_t j = col; j < cols; ++j) {
        m[i][j] = (m[i][j] + (p - f) * m[rank][j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<long long>> rows, unsigned characteristic) {
  for (const auto& r : rows) {
    if (!rows.empty() && r.size() != rows.front().size()) {
      throw Error(ErrorKind::invalid_argument, "ragged matrix");
    }
  }
  if (characteristic != 0) {
    if (!is_prime(characteristic)) {
      throw Error(ErrorKind::invalid_argument,
                  "coefficient characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    }
    return modular_rank(rows, characteristic);
  }

  try {
    auto copy = rows;
    return bareiss_rank(copy, mul_or_throw, sub_or_throw);
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> big(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      big[i].reserve(rows[i].size());
      for (auto v : rows[i]) big[i].emplace_back(static_cast<long>(v));
    }
    return bareiss_rank(
        big, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a * b); },
        [](const mpz_class& a, const mpz_class& b) { return mpz_class(a - b); });
  }
}

}  // namespace scarf
