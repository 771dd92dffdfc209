#pragma once

#include <cstdint>
#include <numeric>

namespace segcalc::arith {

/// Representative of x modulo m in [0, m).
inline constexpr std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

inline constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline constexpr std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

inline constexpr std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  std::int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1u) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1u;
  }
  return result;
}

/// Inverse modulo a prime p; x must be a unit.
inline constexpr std::int64_t inv_mod(std::int64_t x, std::int64_t p) {
  return pow_mod(x, static_cast<std::uint64_t>(p - 2), p);
}

/// Signed power: negative exponents go through the inverse.
inline constexpr std::int64_t zpow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  if (exp >= 0) return pow_mod(base, static_cast<std::uint64_t>(exp), p);
  return pow_mod(inv_mod(base, p), static_cast<std::uint64_t>(-exp), p);
}

/// Multiplicative order of a unit x modulo a prime p.
inline constexpr std::int64_t mult_order(std::int64_t x, std::int64_t p) {
  const std::int64_t u = mod(x, p);
  std::int64_t acc = u;
  std::int64_t k = 1;
  while (acc != 1) {
    acc = mul_mod(acc, u, p);
    ++k;
  }
  return k;
}

}  // namespace segcalc::arith
