#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls into gaplab except for the shared BigInt type.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Coeffs = std::vector<long long>;   // ascending degree

// splitmix64; small, fast and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }
  double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t s_;
};

inline Big eval(const Coeffs& c, const Big& x) {
  Big v = 0, p = 1;
  for (long long a : c) {
    v += Big(a) * p;
    p *= x;
  }
  return v;
}

inline std::uint64_t mod(const Big& v, std::uint64_t q) {
  Big r = v % q;
  if (r < 0) r += q;
  return r.convert_to<std::uint64_t>();
}

inline std::string to_text(const Coeffs& c) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    s += (c[i] < 0 ? "-" : (s.empty() ? "" : "+"));
    s += std::to_string(c[i] < 0 ? -c[i] : c[i]);
    if (i >= 1) s += "*x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

inline Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Every r in [0, q) with q | h(r), by evaluating at each residue with forward
// differences (exact, O(deg) additions per residue).
inline std::vector<std::uint64_t> brute_roots(const Coeffs& c, std::uint64_t q) {
  const std::size_t l = c.size() - 1;
  std::vector<std::uint64_t> diff(l + 1);
  for (std::size_t i = 0; i <= l; ++i) diff[i] = mod(eval(c, Big(i)), q);
  for (std::size_t j = 1; j <= l; ++j)
    for (std::size_t i = l; i >= j; --i) diff[i] = (diff[i] + q - diff[i - 1]) % q;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < q; ++r) {
    if (diff[0] == 0) out.push_back(r);
    for (std::size_t j = 0; j < l; ++j) {
      diff[j] += diff[j + 1];
      if (diff[j] >= q) diff[j] -= q;
    }
  }
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// sum_{m=1}^n e^{2 pi i h(m) t / d}, phases from exact big-integer values.
inline std::complex<long double> weyl(const Coeffs& c, long long n, long long t, std::uint64_t d) {
  std::complex<long double> s = 0;
  for (long long m = 1; m <= n; ++m) {
    const std::uint64_t ph = mod(eval(c, Big(m)) * t, d);
    const long double a = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(ph) / static_cast<long double>(d);
    s += std::complex<long double>(std::cos(a), std::sin(a));
  }
  return s;
}

// f^(t) = sum_x f(x) e^{-2 pi i x t / d}, direct.
inline std::vector<std::complex<long double>> dft(const std::vector<std::complex<double>>& f) {
  const std::size_t d = f.size();
  std::vector<std::complex<long double>> out(d);
  for (std::size_t t = 0; t < d; ++t) {
    std::complex<long double> s = 0;
    for (std::size_t x = 0; x < d; ++x) {
      const long double a = -2.0L * std::numbers::pi_v<long double> * static_cast<long double>((x * t) % d) / static_cast<long double>(d);
      s += std::complex<long double>(f[x].real(), f[x].imag()) * std::complex<long double>(std::cos(a), std::sin(a));
    }
    out[t] = s;
  }
  return out;
}

// value -> number of tuples representing it, by walking the whole box.
inline std::map<std::int64_t, std::uint64_t> representations(const std::vector<std::int64_t>& steps,
                                                          const std::vector<std::int64_t>& widths, std::int64_t offset = 0) {
  std::map<std::int64_t, std::uint64_t> out;
  std::vector<std::int64_t> x(steps.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = -widths[i];
  while (true) {
    std::int64_t v = offset;
    for (std::size_t i = 0; i < x.size(); ++i) v += x[i] * steps[i];
    ++out[v];
    std::size_t i = 0;
    while (i < x.size() && x[i] == widths[i]) {
      x[i] = -widths[i];
      ++i;
    }
    if (i == x.size()) break;
    ++x[i];
  }
  return out;
}

// First input n (0, 1, -1, 2, -2, ... or primes ascending) with 0 != h(n) in A.
struct Hit {
  bool found = false;
  std::int64_t n = 0;
  std::int64_t value = 0;
};

inline Hit find_value(const std::vector<std::int64_t>& steps, const std::vector<std::int64_t>& widths, const Coeffs& c,
                      bool primes) {
  const auto reps = representations(steps, widths);
  std::int64_t max_abs = 0;
  for (const auto& [v, _] : reps) max_abs = std::max(max_abs, v < 0 ? -v : v);
  std::int64_t lower = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) lower += c[i] < 0 ? -c[i] : c[i];
  // For |n| >= max_abs + lower + 1, |h(n)| >= |n| - lower > max_abs.
  const std::int64_t B = max_abs + lower + 1;
  auto test = [&](std::int64_t n, Hit& hit) {
    const Big v = eval(c, Big(n));
    if (v == 0 || abs(v) > max_abs) return false;
    const std::int64_t w = v.convert_to<std::int64_t>();
    if (!reps.count(w)) return false;
    hit = {true, n, w};
    return true;
  };
  Hit hit;
  if (primes) {
    for (std::int64_t p = 2; p <= B; ++p)
      if (is_prime(static_cast<std::uint64_t>(p)) && test(p, hit)) return hit;
    return hit;
  }
  if (test(0, hit)) return hit;
  for (std::int64_t n = 1; n <= B; ++n)
    if (test(n, hit) || test(-n, hit)) return hit;
  return hit;
}

// d_j(m) by the recursion d_j(m) = sum_{e | m} d_{j-1}(e).
inline std::uint64_t divisor_j(std::uint64_t m, int j) {
  if (j == 1) return 1;
  std::uint64_t s = 0;
  for (std::uint64_t e = 1; e * e <= m; ++e) {
    if (m % e) continue;
    s += divisor_j(e, j - 1);
    if (e * e != m) s += divisor_j(m / e, j - 1);
  }
  return s;
}

inline long double psi(std::uint64_t x, long long a, std::uint64_t q) {
  long double s = 0;
  const long long am = ((a % static_cast<long long>(q)) + static_cast<long long>(q)) % static_cast<long long>(q);
  for (std::uint64_t p = 2; p <= x; ++p)
    if (p % q == static_cast<std::uint64_t>(am) && is_prime(p)) s += std::log(static_cast<long double>(p));
  return s;
}

}  // namespace oracle
