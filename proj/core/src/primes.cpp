#include "gaplab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gaplab/modarith.hpp"

namespace gaplab {

namespace {
constexpr std::uint64_t kSieveGuard = 100'000'000;
constexpr std::uint64_t kSearchCeiling = 100'000'000;
}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit > scaled_guard(kSieveGuard)) throw GuardExceeded("sieve limit exceeds the guard");
  if (limit > 0xFFFFFFFFull) throw GuardExceeded("sieve limit exceeds 2^32");
  composite_.assign(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite_[i]) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw PreconditionError("PrimeTable::is_prime: argument beyond the sieve limit");
  return n >= 2 && !composite_[n];
}

std::size_t PrimeTable::count_up_to(std::uint64_t x) const {
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

PrimeTable sieve(std::uint64_t limit) { return PrimeTable(limit); }

__int128 fixed_log(std::uint64_t p) {
  const long double v = std::log(static_cast<long double>(p)) * std::ldexp(1.0L, LogSum::kFractionBits);
  return static_cast<__int128>(std::llround(v));
}

void LogSum::add_log(std::uint64_t p) { raw_ += fixed_log(p); }

double LogSum::value() const {
  return static_cast<double>(static_cast<long double>(raw_) / std::ldexp(1.0L, kFractionBits));
}

namespace {

void check_psi_args(const PrimeTable& table, std::uint64_t x, std::uint64_t q) {
  if (q == 0) throw PreconditionError("psi: q must be positive");
  if (x > table.limit()) throw PreconditionError("psi: x exceeds the sieve limit");
}

}  // namespace

LogSum psi_fixed(const PrimeTable& table, std::uint64_t x, std::int64_t a, std::uint64_t q) {
  check_psi_args(table, x, q);
  const std::uint64_t cls = mod_i64(a, q);
  LogSum s;
  for (std::uint32_t p : table.primes()) {
    if (p > x) break;
    if (p % q == cls) s.add_log(p);
  }
  return s;
}

double psi(const PrimeTable& table, std::uint64_t x, std::int64_t a, std::uint64_t q) {
  return psi_fixed(table, x, a, q).value();
}

std::vector<LogSum> psi_classes(const PrimeTable& table, std::uint64_t x, std::uint64_t q) {
  check_psi_args(table, x, q);
  std::vector<LogSum> out(q);
  for (std::uint32_t p : table.primes()) {
    if (p > x) break;
    out[p % q].add_log(p);
  }
  return out;
}

double lemma6_ratio(const PrimeTable& table, std::uint64_t x, std::int64_t a, std::uint64_t q) {
  if (q == 0) throw PreconditionError("lemma6_ratio: q must be positive");
  if (std::gcd(mod_i64(a, q), q) != 1) throw PreconditionError("lemma6_ratio: gcd(a, q) must be 1");
  if (x == 0) throw PreconditionError("lemma6_ratio: x must be positive");
  const double s = psi(table, x, a, q);
  return s * static_cast<double>(euler_phi(q)) * std::sqrt(static_cast<double>(q)) / static_cast<double>(x);
}

std::uint64_t least_prime_in_ap(std::int64_t a, std::uint64_t q, const PrimeTable* table) {
  if (q == 0) throw PreconditionError("least_prime_in_ap: q must be positive");
  const std::uint64_t r = mod_i64(a, q);
  if (std::gcd(r, q) != 1) throw PreconditionError("least_prime_in_ap: gcd(a, q) must be 1");
  const std::uint64_t ceiling = scaled_guard(kSearchCeiling);
  for (std::uint64_t n = r; n <= ceiling; n += q) {
    const bool prime = (table != nullptr && n <= table->limit()) ? table->is_prime(n) : is_prime_u64(n);
    if (prime) return n;
  }
  throw GuardExceeded("no prime found below the search ceiling " + std::to_string(ceiling) + " for a = " +
                      std::to_string(r) + " mod " + std::to_string(q));
}

std::vector<LinnikRow> linnik_scan(std::uint64_t qmax, int threads) {
  if (qmax == 0) throw PreconditionError("linnik_scan: qmax must be positive");
  // Least primes for q <= qmax stay far below q^3 in practice; the table covers
  // the common case and Miller-Rabin handles the rest.
  const std::uint64_t limit = std::min<std::uint64_t>(scaled_guard(kSieveGuard), std::max<std::uint64_t>(qmax * qmax * 4, 1000));
  const PrimeTable table(limit);
  std::vector<LinnikRow> rows(qmax);
  parallel_for(qmax, static_cast<unsigned>(std::max(1, threads)), [&](std::size_t i) {
    const std::uint64_t q = i + 1;
    LinnikRow row;
    row.q = q;
    for (std::uint64_t a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const std::uint64_t p = least_prime_in_ap(static_cast<std::int64_t>(a), q, &table);
      if (p > row.worst_prime) {
        row.worst_prime = p;
        row.worst_a = a;
      }
    }
    row.ratio = static_cast<double>(row.worst_prime) / (static_cast<double>(q) * static_cast<double>(q));
    row.log_exponent = q > 1 ? std::log(static_cast<double>(row.worst_prime)) / std::log(static_cast<double>(q)) : 0.0;
    rows[i] = row;
  });
  return rows;
}

}  // namespace gaplab
