#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gaplab {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a, b < m <= 2^63
  const std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m);

/// Nonnegative residue of a signed value.
inline std::uint64_t mod_i64(std::int64_t a, std::uint64_t m) {
  const __int128 r = static_cast<__int128>(a) % static_cast<__int128>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in ascending prime order (Pollard-Brent rho beyond trial division).
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Solution x in [0, m1*m2) of x = r1 (mod m1), x = r2 (mod m2) for coprime moduli.
std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2);

/// p^k, or nullopt if it exceeds 2^62.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, int k);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace gaplab
