#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaplab/common.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/poly.hpp"

namespace gaplab {

using Complex = std::complex<double>;

/// A complex-valued function on Z_d.
class ZdFunction {
 public:
  ZdFunction() = default;
  explicit ZdFunction(std::uint64_t d);
  explicit ZdFunction(std::vector<Complex> values);

  static ZdFunction delta(std::uint64_t d, std::uint64_t at);
  static ZdFunction indicator(std::uint64_t d, const std::vector<std::uint64_t>& support);

  std::uint64_t modulus() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  std::vector<Complex>& values() { return values_; }
  Complex& operator[](std::uint64_t x) { return values_[x]; }
  const Complex& operator[](std::uint64_t x) const { return values_[x]; }
  double max_abs() const;

 private:
  std::vector<Complex> values_;
};

/// f^(t) = sum_x f(x) e^{-2 pi i x t / d}; O(d log d) for every d.
ZdFunction dft(const ZdFunction& f);
/// Same transform by direct O(d^2) summation in extended precision.
ZdFunction dft_direct(const ZdFunction& f);
/// f(x) = (1/d) sum_t F(t) e^{2 pi i x t / d}.
ZdFunction inverse_dft(const ZdFunction& F);
ZdFunction inverse_dft_direct(const ZdFunction& F);
/// Cyclic convolution f * g(x) = sum_y f(y) g(x - y), via transforms.
ZdFunction convolve(const ZdFunction& f, const ZdFunction& g);
ZdFunction convolve_direct(const ZdFunction& f, const ZdFunction& g);

/// g_i and g_i * g_i on Z_{d_k} for A_i = {y d_i : |y| <= w}, as exact counts.
struct LayerFunction {
  std::uint64_t modulus = 0;
  std::int64_t step = 0;
  std::int64_t width = 0;
  std::uint64_t size = 0;              // |A_i| = 2w + 1
  std::vector<std::uint64_t> g;        // g_i(x)
  std::vector<std::uint64_t> gg;       // (g_i * g_i)(x)

  ZdFunction g_function() const;
  /// f_i = |A_i|^{-1} g_i * g_i
  ZdFunction f_function() const;
};

LayerFunction layer_function(std::uint64_t modulus, std::int64_t step, std::int64_t width);

struct DetectionInstance {
  SymmetricGap gap;
  IntPolynomial h;
  InputMode inputs = InputMode::integers;
  std::uint64_t q = 1;                   // common divisor of the steps
  std::uint64_t r = 0;                   // root of h mod q (coprime in primes mode)
  IntPolynomial hq;                      // h(r + q x) / q
  std::vector<std::int64_t> reduced_steps;  // d_i = D_i / q
  std::size_t major = 0;                 // index playing the role of d_k
  std::uint64_t dk = 1;
  std::int64_t n = 0;                    // floor((L_k d_k / (2 q^{l-1} b))^{1/l})
  std::vector<std::int64_t> layer_widths;   // floor(L_i / 4k); 0 at the major index
  BigInt threshold;                      // L_k d_k; S = {m >= 1 : 0 < 2 h_q(m) < threshold}
};

/// Builds the reduction. q defaults to gcd of the steps; an override must
/// divide every step. Requires offset 0, positive steps and a positive leading
/// coefficient.
DetectionInstance make_detection_instance(const SymmetricGap& gap, const IntPolynomial& h, InputMode inputs,
                                          std::optional<std::uint64_t> q_override = std::nullopt);

struct DetectionWitness {
  std::int64_t m = 0;                    // element of S (or Lambda)
  std::int64_t input = 0;                // r + q m
  BigInt value;                          // h(input), a nonzero element of the GAP
  std::vector<std::int64_t> coords;      // x_i with value = sum x_i D_i
};

struct DetectionReport {
  double physical = 0;
  double spectral = 0;
  double spectral_imag = 0;
  double difference = 0;
  double tolerance = 0;
  bool consistent = true;
  double main_term = 0;        // prod f_i^(0) * W(0)
  double tail_sum = 0;         // sum_{t != 0} prod f_i^(t) W(t), real part
  double tail_abs_sum = 0;     // sum_{t != 0} prod f_i^(t) |W(t)|
  bool positive = false;       // decided on exact integer counts
  std::string exact_count;     // sum_{m} (G_1 * ... * G_{k-1})(h_q(m)), integers mode
  bool exact_convolution = true;
  std::uint64_t set_size = 0;  // |S| or |Lambda|
  std::uint64_t symmetric_difference = 0;  // |S symmetric-difference [1, n]|
  std::optional<DetectionWitness> witness;
};

/// Evaluates both sides of
///   d_k sum_{m in S} w(m) F(h_q(m)) = sum_t f_1^(t)...f_{k-1}^(t) W(t),
/// F = f_1 * ... * f_{k-1}, w = 1 (or log(qm + r) over primes qm + r).
DetectionReport detection_count(const DetectionInstance& inst);

/// f_1 * ... * f_{k-1}(0) = numerator / denominator exactly, with numerator
/// (G_1 * ... * G_{k-1})(0) and denominator prod |A_i|.
struct ExactRatio {
  BigInt numerator;
  BigInt denominator;
};
ExactRatio layer_convolution_at_zero(const DetectionInstance& inst);

}  // namespace gaplab
