#pragma once

// Length-n DFT plans: iterative radix-2 for powers of two, Bluestein's chirp
// convolution otherwise. Twiddles and chirps are computed from exact integer
// indices so no phase error accumulates along the table.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace gaplab::detail {

template <class Real>
std::complex<Real> unit_root(std::uint64_t num, std::uint64_t den, int sign) {
  // exp(sign * 2 pi i num / den), num < den
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(num) /
                            static_cast<long double>(den);
  return {static_cast<Real>(std::cos(angle)), static_cast<Real>(sign * std::sin(angle))};
}

template <class Real>
class FftPlan {
 public:
  using C = std::complex<Real>;

  explicit FftPlan(std::size_t n) : n_(n) {
    pow2_ = n_ > 0 && (n_ & (n_ - 1)) == 0;
    m_ = 1;
    if (pow2_) {
      m_ = n_;
    } else {
      while (m_ < 2 * n_ - 1) m_ <<= 1;
    }
    roots_.resize(m_ / 2 + 1);
    for (std::size_t j = 0; j < roots_.size(); ++j) roots_[j] = unit_root<Real>(j % m_, m_, -1);
    if (!pow2_) {
      chirp_.resize(n_);
      const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n_);
      for (std::size_t k = 0; k < n_; ++k) {
        // exp(-pi i k^2 / n) = exp(-2 pi i (k^2 mod 2n) / 2n)
        const auto k2 = static_cast<std::uint64_t>(static_cast<unsigned __int128>(k) * k % two_n);
        chirp_[k] = unit_root<Real>(k2, two_n, -1);
      }
      kernel_.assign(m_, C{});
      kernel_[0] = std::conj(chirp_[0]);
      for (std::size_t k = 1; k < n_; ++k) {
        kernel_[k] = std::conj(chirp_[k]);
        kernel_[m_ - k] = std::conj(chirp_[k]);
      }
      radix2(kernel_, false);
    }
  }

  std::size_t size() const { return n_; }

  /// In place: a[t] <- sum_x a[x] exp(-2 pi i x t / n).
  void forward(std::vector<C>& a) const {
    if (n_ <= 1) return;
    if (pow2_) {
      radix2(a, false);
      return;
    }
    std::vector<C> u(m_, C{});
    for (std::size_t x = 0; x < n_; ++x) u[x] = a[x] * chirp_[x];
    radix2(u, false);
    for (std::size_t j = 0; j < m_; ++j) u[j] *= kernel_[j];
    radix2(u, true);
    const Real scale = Real(1) / static_cast<Real>(m_);
    for (std::size_t t = 0; t < n_; ++t) a[t] = u[t] * scale * chirp_[t];
  }

  /// In place: a[x] <- (1/n) sum_t a[t] exp(2 pi i x t / n).
  void inverse(std::vector<C>& a) const {
    for (auto& v : a) v = std::conj(v);
    forward(a);
    const Real scale = Real(1) / static_cast<Real>(n_);
    for (auto& v : a) v = std::conj(v) * scale;
  }

 private:
  // Unnormalized power-of-two transform of length m_; conjugate twiddles when
  // `conjugate` is set.
  void radix2(std::vector<C>& a, bool conjugate) const {
    const std::size_t m = m_;
    for (std::size_t i = 1, j = 0; i < m; ++i) {
      std::size_t bit = m >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
      const std::size_t step = m / len;
      const std::size_t half = len / 2;
      for (std::size_t i = 0; i < m; i += len) {
        for (std::size_t j = 0; j < half; ++j) {
          const C w = conjugate ? std::conj(roots_[j * step]) : roots_[j * step];
          const C u = a[i + j];
          const C v = a[i + j + half] * w;
          a[i + j] = u + v;
          a[i + j + half] = u - v;
        }
      }
    }
  }

  std::size_t n_;
  std::size_t m_;
  bool pow2_;
  std::vector<C> roots_;
  std::vector<C> chirp_;
  std::vector<C> kernel_;
};

/// Compensated (Neumaier) summation.
template <class Real>
class Neumaier {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
};

}  // namespace gaplab::detail
