#pragma once

#include <complex>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/common.hpp"
#include "gaplab/poly.hpp"
#include "gaplab/primes.hpp"

namespace gaplab {

using Complex = std::complex<double>;

/// W = sum_{m=1}^n e^{2 pi i h(m) t / d}.
///
/// Phases h(m) t mod d are advanced by exact finite differences; each phase
/// is looked up in a unit-circle table when d <= 2^20 (and the table pays for
/// itself), else computed with one trig call. Terms are added in blocks of
/// 1024 and the blocks accumulated in extended precision.
/// Guards: n <= 10^8, 1 <= d <= 10^9.
Complex weyl_sum(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d);

/// Reference path: exact h(m) mod d per term, extended-precision trig and
/// compensated summation.
Complex weyl_sum_direct(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d);

/// (2 n^2 / d' + 7 (n + d') ln d')^{1/2}, d' = d / gcd(2 a2 t, d).
double lemma1_bound(std::int64_t n, std::uint64_t d, std::int64_t a2, std::int64_t t);
std::uint64_t lemma1_reduced_modulus(std::uint64_t d, std::int64_t a2, std::int64_t t);

struct Lemma1Instance {
  std::int64_t n = 0;
  std::uint64_t d = 1;
  std::int64_t a1 = 0, a2 = 0, t = 0;
};

struct Lemma1Report {
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0;
  Lemma1Instance argmax;
  std::vector<Lemma1Instance> violating;   // first few violations, if any
  static constexpr double kTolerance = 1e-6;
};

/// Checks |W(a1 x + a2 x^2, n, t, d)| <= lemma1_bound + 1e-6 for each instance.
Lemma1Report verify_lemma1(const std::vector<Lemma1Instance>& instances, int threads = 1);

/// The full box n in [1, nmax], d in [1, dmax], a1, a2, t in [cmin, cmax].
/// Per d the sum depends only on (a1 t mod d, a2 t mod d), and prefix sums
/// over m give every n at once; each distinct pair is summed once and the
/// instance multiplicity is counted.
Lemma1Report verify_lemma1_box(std::int64_t nmax, std::uint64_t dmax, std::int64_t cmin, std::int64_t cmax,
                               int threads = 1);

/// Line-oriented grid: `n d a1 a2 t`, blank lines and `#` comments ignored.
std::vector<Lemma1Instance> read_lemma1_grid(std::istream& in);

/// n (a L^{l^2} (1/d + 1/n + d/(a n^l)))^{2^{-l}} with L = max(1, ln(a d n)),
/// a the leading coefficient, after reducing t/d to lowest terms. No implicit
/// constant is included.
double lemma3_shape(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d);

struct WeylReport {
  std::string poly;
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::uint64_t d = 1;
  std::optional<std::uint64_t> q, r;    // prime-input sums
  Complex value;
  double magnitude = 0;
  std::string bound_kind;               // "lemma1", "lemma3_shape", "none"
  std::optional<double> bound;
  std::optional<double> ratio;
};

WeylReport weyl_report(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d,
                       const std::string& bound_kind);

struct DivisorMomentReport {
  int j = 2;
  std::uint64_t M = 1;
  BigInt moment;                        // sum_{m <= M} d_j(m)^2
  std::optional<double> normalized;     // moment / (M (ln M)^{j^2 - 1}), M >= 2
};

/// Exact moment from a smallest-prime-factor sieve; j in [2, 4], M <= 10^7.
DivisorMomentReport divisor_moment(int j, std::uint64_t M);

/// V = sum_{1 <= m <= n, qm + r prime} log(qm + r) e^{2 pi i h(m) t / d}.
/// Requires qn + r <= 10^8. Pass a table covering qn + r to skip the sieve.
Complex prime_weyl_sum(const IntPolynomial& h, std::uint64_t q, std::uint64_t r, std::int64_t n, std::int64_t t,
                       std::uint64_t d, const PrimeTable* table = nullptr);

struct Lemma4Report {
  int ell = 1;
  double L = 0;                 // 64 l^2 4^l
  double U = 0;
  double log_bound = 0;         // ln(n/U + U^L n^{1 - 4^{-l}})
  double log_magnitude = 0;     // ln |V|, -inf when V = 0
  double log_ratio = 0;
  bool hypotheses_met = false;  // U >= ln n, U^L <= d <= h(n)/U^L, q, |r|, a_l <= U^l
};

/// Evaluates the prime sum and the bound shape in log space.
Lemma4Report lemma4_report(const IntPolynomial& h, std::uint64_t q, std::uint64_t r, std::int64_t n, std::int64_t t,
                           std::uint64_t d, double U, const PrimeTable* table = nullptr);

struct MomentReport {
  double value = 0;       // sum_t |V(t)|^s
  double shape = 0;       // d n^{s - l} + n^s
  double ratio = 0;
};

/// Left side of the high-moment estimate with all d sums from one transform.
/// Requires s > 2^l and d <= 10^5.
MomentReport moment_sum(const IntPolynomial& h, std::uint64_t q, std::uint64_t r, std::int64_t n, std::uint64_t d,
                        double s, const PrimeTable* table = nullptr);

struct ShapeRow {
  std::int64_t n = 0;
  std::uint64_t d = 0;
  double envelope = 0;          // max ratio over the family's t (log ratio for lemma4_family)
  std::int64_t argmax_t = 0;
};

struct ShapeFamilyReport {
  std::string name;
  bool log_space = false;
  std::vector<ShapeRow> rows;
  double max_doubling_factor = 0;   // max over consecutive rows of the ratio change
  static constexpr double kStabilityFactor = 4.0;
  bool stable() const { return max_doubling_factor <= kStabilityFactor; }
};

/// h = x^l, d = n, t in [1, d - 1]: max |W| / lemma3_shape.
ShapeFamilyReport lemma3_family(int ell, const std::vector<std::int64_t>& ns, int threads = 1);
/// h = x^2, q = 1, r = 0, d = n, t coprime to d, U fixed: max log ratio.
ShapeFamilyReport lemma4_family(const std::vector<std::int64_t>& ns, double U, int threads = 1);
/// h = x^2, q = 1, r = 0, d = least prime >= n: moment ratio.
ShapeFamilyReport lemma5_family(const std::vector<std::int64_t>& ns, double s);

/// n_j = base * 2^j for j = 0..count-1.
std::vector<std::int64_t> doubling_sequence(std::int64_t base, int count);

}  // namespace gaplab
