#include "gaplab/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaplab/common.hpp"

namespace gaplab {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> invmod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return addmod(mulmod(v, v, n), c % n, n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("cannot factor zero");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> result;
  for (std::uint64_t p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t crt_pair(std::uint64_t r1, std::uint64_t m1, std::uint64_t r2, std::uint64_t m2) {
  const auto inv = invmod(m1 % m2, m2);
  if (!inv) throw PreconditionError("CRT moduli must be coprime");
  // x = r1 + m1 * ((r2 - r1) * inv mod m2)
  const std::uint64_t k = mulmod(submod(r2 % m2, r1 % m2, m2), *inv, m2);
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(m1) * k + r1);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, int k) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > limit / p) return std::nullopt;
    v *= p;
  }
  return v;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace gaplab
