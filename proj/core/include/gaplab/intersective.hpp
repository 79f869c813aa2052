#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/common.hpp"
#include "gaplab/poly.hpp"

namespace gaplab {

enum class RootsMethod { automatic, direct, lifted };

/// All r in [0, q) with q | h(r), ascending.
///
/// direct: scan every residue (q <= 10^7 times the guard scale).
/// lifted: factor q, lift level by level at each prime power, glue by CRT.
/// automatic uses lifted. The result size is capped by a guard.
std::vector<std::uint64_t> roots_mod(const IntPolynomial& h, std::uint64_t q,
                                     RootsMethod method = RootsMethod::automatic);

/// Roots of h modulo a prime p (any p < 2^63). Brute force for small p,
/// otherwise gcd with x^p - x over F_p and equal-degree splitting.
/// If h vanishes identically mod p every residue is returned (guarded).
std::vector<std::uint64_t> roots_mod_prime(const IntPolynomial& h, std::uint64_t p);

enum class PadicVerdict { has_root, no_root, inconclusive };
std::string to_string(PadicVerdict v);

/// Number of admissible roots of h modulo p^level.
struct TraceLevel {
  int level;
  std::uint64_t roots;
};

struct PadicWitness {
  BigInt r;             // residue in [0, p^exponent)
  int exponent;         // p^exponent | h(r)
  BigInt modulus;       // p^exponent
};

struct PadicRootResult {
  PadicVerdict verdict = PadicVerdict::inconclusive;
  std::optional<PadicWitness> witness;
  /// For no_root: smallest k with no admissible root of h mod p^k, if the
  /// search on h itself finished within its caps.
  std::optional<int> refuted_exponent;
  /// Root counts of h per level, ending with the empty level when refuted.
  std::vector<TraceLevel> trace;
  int depth_cap = 0;
  /// v_p of the resultant of the squarefree part and its derivative.
  int discriminant_valuation = 0;
  std::string note;
};

/// Decides whether h has a root in Z_p (a unit root when coprime is set).
/// Searches the lifting tree of the squarefree part g until a node r with
/// v_p(g(r)) > 2 v_p(g'(r)) appears (Hensel) or the tree dies. The depth is
/// capped at min(2E + 1, 64) with E = v_p(Res(g, g')); hitting a cap gives
/// inconclusive.
PadicRootResult has_padic_root(const IntPolynomial& h, std::uint64_t p, bool coprime);

enum class CertificateStatus { verified, refuted, inconclusive };
std::string to_string(CertificateStatus s);

struct IntersectivityCertificate {
  InputMode mode = InputMode::integers;
  CertificateStatus status = CertificateStatus::inconclusive;
  std::uint64_t prime_bound = 0;
  std::uint64_t primes_checked = 0;
  // refuted
  std::uint64_t failing_prime = 0;
  std::optional<int> failing_exponent;
  std::vector<TraceLevel> trace;
  // inconclusive primes (no refutation found anywhere)
  std::vector<std::uint64_t> inconclusive_primes;
  /// Checked prime -> witness root. Coprime to p in primes mode.
  std::map<std::uint64_t, PadicWitness> witnesses;
};

/// Runs has_padic_root for every prime p <= B (B <= 10^6). A refutation reports
/// the smallest modulus p^k with no admissible root; otherwise verified or
/// inconclusive.
IntersectivityCertificate certify(const IntPolynomial& h, InputMode mode, std::uint64_t prime_bound,
                                  int threads = 1);

/// Smallest r in [0, q) with q | h(r) and gcd(r, q) = 1.
std::optional<std::uint64_t> coprime_root_for_gap(const IntPolynomial& h, std::uint64_t q);
/// Smallest r in [0, q) with q | h(r).
std::optional<std::uint64_t> root_for_gap(const IntPolynomial& h, std::uint64_t q);

}  // namespace gaplab
