#include "doctest.h"
#include "oracles.hpp"

#include "gaplab/modarith.hpp"
#include "gaplab/primes.hpp"

using namespace gaplab;

TEST_CASE("sieve examples") {
  CHECK(sieve(10).primes() == std::vector<std::uint32_t>{2, 3, 5, 7});
  CHECK(sieve(100).primes().size() == 25);
  CHECK(sieve(1).primes().empty());
  CHECK(sieve(0).primes().empty());
  const auto t = sieve(100'000);
  CHECK(t.primes().size() == 9592);
  CHECK(t.count_up_to(1000) == 168);
  CHECK(t.count_up_to(10'000'000) == 9592);
  for (std::uint64_t n = 0; n <= 5000; ++n) CHECK(t.is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("psi examples") {
  const auto t = sieve(1000);
  CHECK(psi(t, 10, 0, 1) == doctest::Approx(std::log(210.0)));
  CHECK(psi(t, 10, 0, 1) == doctest::Approx(5.3471).epsilon(1e-4));
  CHECK(psi(t, 20, 1, 4) == doctest::Approx(std::log(5.0 * 13 * 17)));
  CHECK(psi(t, 20, 1, 4) == doctest::Approx(7.007).epsilon(1e-3));
  CHECK(psi(t, 100, 0, 4) == 0.0);
  CHECK(psi(t, 100, -3, 4) == doctest::Approx(psi(t, 100, 1, 4)));
  CHECK_THROWS_AS(psi(t, 1001, 0, 1), PreconditionError);
}

TEST_CASE("normalized ratios") {
  const auto t = sieve(1'000'000);
  CHECK(lemma6_ratio(t, 1'000'000, 1, 1) == doctest::Approx(1.0).epsilon(0.01));
  // psi(x, 1, 4) is close to x / 2, so the sqrt(q) factor puts this near 2
  const double r4 = lemma6_ratio(t, 100'000, 1, 4);
  CHECK(r4 == doctest::Approx(1.98959).epsilon(1e-5));
  CHECK(r4 / 2 >= 0.5);
  CHECK(r4 / 2 <= 1.5);
  CHECK(lemma6_ratio(t, 10'000, 2, 3) > 0);
  CHECK_THROWS_AS(lemma6_ratio(t, 1000, 2, 4), PreconditionError);
}

TEST_CASE("least primes in progressions") {
  CHECK(least_prime_in_ap(1, 4) == 5);
  CHECK(least_prime_in_ap(2, 3) == 2);
  CHECK(least_prime_in_ap(0, 1) == 2);
  CHECK(least_prime_in_ap(-1, 10) == 19);
  CHECK_THROWS_AS(least_prime_in_ap(2, 4), PreconditionError);
  const auto t = sieve(200'000);
  for (std::uint64_t q = 1; q <= 120; ++q)
    for (std::uint64_t a = 0; a < q; ++a) {
      if (oracle::gcd(a, q) != 1) continue;
      const auto p = least_prime_in_ap(static_cast<std::int64_t>(a), q, &t);
      CHECK(p % q == a % q);
      CHECK(t.is_prime(p));
      for (std::uint64_t s = a == 0 ? q : a; s < p; s += q) CHECK_FALSE(oracle::is_prime(s));
    }
}

TEST_CASE("Linnik scan") {
  const auto rows = linnik_scan(30, 1);
  REQUIRE(rows.size() == 30);
  CHECK(rows[0].q == 1);
  CHECK(rows[0].log_exponent == 0.0);
  CHECK(rows[3].q == 4);
  CHECK(rows[3].worst_prime == 5);   // class 1 -> 5, class 3 -> 3
  CHECK(rows[3].worst_a == 1);
  const auto par = linnik_scan(30, 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].worst_prime == par[i].worst_prime);
    CHECK(rows[i].worst_a == par[i].worst_a);
  }
}

TEST_CASE("property: psi splits exactly over residue classes") {
  const auto t = sieve(200'000);
  oracle::Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    const auto x = static_cast<std::uint64_t>(rng.uniform(0, 200'000));
    const auto q = static_cast<std::uint64_t>(rng.uniform(1, 500));
    const auto classes = psi_classes(t, x, q);
    LogSum total;
    for (std::uint64_t a = 0; a < q; ++a) {
      total += classes[a];
      if (a < 5) CHECK(classes[a] == psi_fixed(t, x, static_cast<std::int64_t>(a), q));
    }
    CHECK(total == psi_fixed(t, x, 0, 1));
    if (x <= 20'000) CHECK(psi(t, x, 3, q) == doctest::Approx(static_cast<double>(oracle::psi(x, 3, q))).epsilon(1e-12));
  }
}

TEST_CASE("property: arithmetic helpers agree with brute force") {
  for (std::uint64_t q = 1; q <= 10'000; ++q) {
    std::uint64_t units = 0;
    for (std::uint64_t a = 0; a < q; ++a) units += oracle::gcd(a, q) == 1;
    REQUIRE(euler_phi(q) == units);
  }
  oracle::Rng rng(62);
  for (int i = 0; i < 2000; ++i) {
    const auto n = static_cast<std::uint64_t>(rng.uniform(2, 2'000'000));
    CHECK(is_prime_u64(n) == oracle::is_prime(n));
    std::uint64_t prod = 1;
    for (const auto& pp : factorize(n)) {
      CHECK(oracle::is_prime(pp.prime));
      for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
    }
    CHECK(prod == n);
  }
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK_FALSE(is_prime_u64(3215031751ull));   // strong pseudoprime to bases 2, 3, 5, 7
  const auto big = factorize(600851475143ull);
  CHECK(big == std::vector<PrimePower>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  CHECK(crt_pair(2, 3, 3, 5) == 8);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(18446744073709551615ull) == 4294967295ull);
}
