#include "doctest.h"
#include "corpus.hpp"
#include "oracles.hpp"

#include "gaplab/intersective.hpp"
#include "gaplab/modarith.hpp"

#include <numeric>

using namespace gaplab;

namespace {

oracle::Coeffs coeffs_of(const IntPolynomial& h) {
  oracle::Coeffs c;
  for (const auto& a : h.coeffs()) c.push_back(a.convert_to<long long>());
  return c;
}

}  // namespace

TEST_CASE("roots_mod examples under every method") {
  for (auto m : {RootsMethod::automatic, RootsMethod::direct, RootsMethod::lifted}) {
    CHECK(roots_mod(parse_poly("x^2"), 4, m) == std::vector<std::uint64_t>{0, 2});
    CHECK(roots_mod(parse_poly("x^2+x+1"), 7, m) == std::vector<std::uint64_t>{2, 4});
    CHECK(roots_mod(parse_poly("x^2+1"), 3, m).empty());
    CHECK(roots_mod(parse_poly("x^2+1"), 1, m) == std::vector<std::uint64_t>{0});
  }
}

TEST_CASE("roots modulo large primes use the splitting path") {
  const std::uint64_t p = 1'000'000'007;
  // x^2 - 4 has roots 2 and p - 2
  CHECK(roots_mod_prime(parse_poly("x^2-4"), p) == std::vector<std::uint64_t>{2, p - 2});
  // x^2 + 1 splits mod p iff p = 1 mod 4; 10^9+7 = 3 mod 4
  CHECK(roots_mod_prime(parse_poly("x^2+1"), p).empty());
  const std::uint64_t p1 = 998'244'353;   // 1 mod 4
  const auto r = roots_mod_prime(parse_poly("x^2+1"), p1);
  REQUIRE(r.size() == 2);
  for (auto x : r) CHECK(evaluate_mod(parse_poly("x^2+1"), static_cast<std::int64_t>(x), p1) == 0);
}

TEST_CASE("p-adic root examples") {
  const auto a = has_padic_root(parse_poly("x^2+1"), 5, false);
  CHECK(a.verdict == PadicVerdict::has_root);
  REQUIRE(a.witness);
  CHECK(a.witness->r % 5 == 2);
  const auto b = has_padic_root(parse_poly("x^2+1"), 3, false);
  CHECK(b.verdict == PadicVerdict::no_root);
  CHECK(b.refuted_exponent == 1);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    const auto c = has_padic_root(parse_poly("x-3"), p, false);
    CHECK(c.verdict == PadicVerdict::has_root);
    REQUIRE(c.witness);
    CHECK((c.witness->r - 3) % c.witness->modulus == 0);
  }
  // x^2 has the root 0 but no unit root
  CHECK(has_padic_root(parse_poly("x^2"), 7, true).verdict == PadicVerdict::no_root);
  // x^2 - 17 is a 2-adic square only through the non-Hensel branch
  CHECK(has_padic_root(parse_poly("x^2-17"), 2, false).verdict == PadicVerdict::has_root);
  // x^2 - 5 has roots mod 2 and mod 4 but none mod 8
  const auto d = has_padic_root(parse_poly("x^2-5"), 2, false);
  CHECK(d.verdict == PadicVerdict::no_root);
  CHECK(d.refuted_exponent == 3);
}

TEST_CASE("certificates for the standard examples") {
  const auto prod = parse_poly("x^5+x^4+x^3-19x^2-19x-19");
  const auto ci = certify(prod, InputMode::integers, 100);
  CHECK(ci.status == CertificateStatus::verified);
  CHECK(ci.primes_checked == 25);
  const auto cp = certify(prod, InputMode::primes, 100);
  CHECK(cp.status == CertificateStatus::verified);
  for (const auto& [p, w] : cp.witnesses) {
    CHECK(mod_u64(evaluate(prod, w.r), w.modulus.convert_to<std::uint64_t>()) == 0);
    CHECK(w.r % p != 0);
  }

  const auto r1 = certify(parse_poly("x^2+1"), InputMode::integers, 100);
  CHECK(r1.status == CertificateStatus::refuted);
  CHECK(r1.failing_prime == 3);
  CHECK(r1.failing_exponent == 1);

  const auto r2 = certify(parse_poly("x"), InputMode::primes, 10);
  CHECK(r2.status == CertificateStatus::refuted);
  CHECK(r2.failing_prime == 2);
  CHECK(r2.failing_exponent == 1);

  // intersective with no rational root
  const auto classic = certify(parse_poly("x^6-251x^4+6851x^2-48841"), InputMode::integers, 300);
  CHECK(classic.status == CertificateStatus::verified);
  CHECK(integer_roots(parse_poly("x^6-251x^4+6851x^2-48841")).empty());
}

TEST_CASE("certify is independent of the worker count") {
  const auto h = parse_poly("x^6-251x^4+6851x^2-48841");
  const auto a = certify(h, InputMode::primes, 2000, 1);
  const auto b = certify(h, InputMode::primes, 2000, 4);
  CHECK(a.status == b.status);
  CHECK(a.failing_prime == b.failing_prime);
  CHECK(a.witnesses.size() == b.witnesses.size());
  CHECK(a.inconclusive_primes == b.inconclusive_primes);
}

TEST_CASE("roots for GAP reductions") {
  CHECK(coprime_root_for_gap(parse_poly("x-1"), 12) == 1u);
  CHECK(coprime_root_for_gap(parse_poly("x^2+x+1"), 7) == 2u);
  CHECK_FALSE(coprime_root_for_gap(parse_poly("x"), 5).has_value());
  CHECK(root_for_gap(parse_poly("x"), 5) == 0u);
  CHECK(root_for_gap(parse_poly("x^2-4"), 12) == 2u);
}

TEST_CASE("property: lifted roots match brute force on composite moduli") {
  oracle::Rng rng(21);
  for (const char* text : corpus::kPolys) {
    const auto h = parse_poly(text);
    const auto c = coeffs_of(h);
    for (int i = 0; i < 12; ++i) {
      const auto q = static_cast<std::uint64_t>(rng.uniform(1, 3000));
      CHECK_MESSAGE(roots_mod(h, q, RootsMethod::lifted) == oracle::brute_roots(c, q), text << " mod " << q);
    }
  }
}

TEST_CASE("property: roots modulo coprime products glue by CRT") {
  oracle::Rng rng(22);
  for (const char* text : corpus::kPolys) {
    const auto h = parse_poly(text);
    for (int i = 0; i < 6; ++i) {
      const auto q1 = static_cast<std::uint64_t>(rng.uniform(2, 300));
      const auto q2 = static_cast<std::uint64_t>(rng.uniform(2, 300));
      if (std::gcd(q1, q2) != 1) continue;
      std::vector<std::uint64_t> glued;
      for (auto a : roots_mod(h, q1))
        for (auto b : roots_mod(h, q2)) glued.push_back(crt_pair(a, q1, b, q2));
      std::sort(glued.begin(), glued.end());
      CHECK(roots_mod(h, q1 * q2) == glued);
    }
  }
}

TEST_CASE("property: p-adic verdicts are consistent with roots modulo p^k") {
  for (const char* text : corpus::kPolys) {
    const auto h = parse_poly(text);
    const auto c = coeffs_of(h);
    for (std::uint64_t p = 2; p <= 50; ++p) {
      if (!oracle::is_prime(p)) continue;
      for (bool coprime : {false, true}) {
        const auto res = has_padic_root(h, p, coprime);
        auto admissible = [&](std::uint64_t q) {
          auto roots = oracle::brute_roots(c, q);
          if (coprime) std::erase_if(roots, [&](std::uint64_t r) { return r % p == 0; });
          return !roots.empty();
        };
        if (res.verdict == PadicVerdict::has_root) {
          REQUIRE(res.witness);
          CHECK(mod_u64(evaluate(h, res.witness->r), res.witness->modulus.convert_to<std::uint64_t>()) == 0);
          for (std::uint64_t q = p; q <= 200'000; q *= p) CHECK_MESSAGE(admissible(q), text << " p=" << p << " q=" << q);
        } else if (res.verdict == PadicVerdict::no_root) {
          REQUIRE(res.refuted_exponent);
          const auto q = checked_pow(p, *res.refuted_exponent);
          REQUIRE(q);
          CHECK_FALSE(admissible(*q));
          if (*res.refuted_exponent > 1) CHECK(admissible(*q / p));
        }
      }
    }
  }
}

TEST_CASE("property: rational roots certify") {
  oracle::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const long long a = rng.uniform(-20, 20);
    const auto other = IntPolynomial{rng.uniform(-9, 9), rng.uniform(-9, 9), 1};
    const auto h = IntPolynomial{-a, 1} * other;
    CHECK(certify(h, InputMode::integers, 200).status == CertificateStatus::verified);
    const auto unit = IntPolynomial{rng.coin() ? -1 : 1, 1} * other;
    CHECK(certify(unit, InputMode::primes, 200).status == CertificateStatus::verified);
  }
}
