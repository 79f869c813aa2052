#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/common.hpp"

namespace gaplab {

/// Primality table for [0, limit] from an Eratosthenes sieve.
class PrimeTable {
 public:
  PrimeTable() = default;
  /// limit <= 10^8 times the guard scale.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  /// n must not exceed limit().
  bool is_prime(std::uint64_t n) const;
  /// Ascending list of primes <= limit.
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  /// Number of primes <= min(x, limit).
  std::size_t count_up_to(std::uint64_t x) const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<bool> composite_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable sieve(std::uint64_t limit);

/// Sum of natural logs in fixed point with 48 fractional bits.
///
/// Each log p is rounded once, so sums over disjoint sets add exactly and the
/// class decomposition of psi is an exact identity. The rounding error is at
/// most 2^-49 per prime.
class LogSum {
 public:
  static constexpr int kFractionBits = 48;

  void add_log(std::uint64_t p);
  LogSum& operator+=(const LogSum& other) {
    raw_ += other.raw_;
    return *this;
  }
  friend bool operator==(const LogSum& a, const LogSum& b) { return a.raw_ == b.raw_; }
  __int128 raw() const { return raw_; }
  double value() const;
  bool positive() const { return raw_ > 0; }

 private:
  __int128 raw_ = 0;
};

/// Fixed-point log p as used by LogSum.
__int128 fixed_log(std::uint64_t p);

/// psi(x, a, q): sum of log p over primes p <= x with p = a (mod q).
/// Prime powers are not included. Requires x <= table.limit().
LogSum psi_fixed(const PrimeTable& table, std::uint64_t x, std::int64_t a, std::uint64_t q);
double psi(const PrimeTable& table, std::uint64_t x, std::int64_t a, std::uint64_t q);

/// psi(x, a, q) for every a in [0, q) in one pass.
std::vector<LogSum> psi_classes(const PrimeTable& table, std::uint64_t x, std::uint64_t q);

/// psi(x, a, q) * phi(q) * sqrt(q) / x; requires gcd(a, q) = 1.
double lemma6_ratio(const PrimeTable& table, std::uint64_t x, std::int64_t a, std::uint64_t q);

/// Smallest prime p = a (mod q). Uses the table when it covers p, then
/// Miller-Rabin, up to a search ceiling of 10^8 (scaled by the guard).
std::uint64_t least_prime_in_ap(std::int64_t a, std::uint64_t q, const PrimeTable* table = nullptr);

struct LinnikRow {
  std::uint64_t q = 0;
  std::uint64_t worst_a = 0;       // class with the largest least prime
  std::uint64_t worst_prime = 0;
  double ratio = 0;                // worst_prime / q^2
  double log_exponent = 0;         // log(worst_prime) / log(q), 0 for q = 1
};

/// For each q in [1, qmax], the largest least prime over the coprime classes.
std::vector<LinnikRow> linnik_scan(std::uint64_t qmax, int threads = 1);

}  // namespace gaplab
