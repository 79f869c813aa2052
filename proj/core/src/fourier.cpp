#include "gaplab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fft_impl.hpp"
#include "gaplab/intersective.hpp"
#include "gaplab/modarith.hpp"
#include "gaplab/primes.hpp"

namespace gaplab {

namespace {

constexpr std::uint64_t kModulusGuard = 1'000'000;
constexpr std::uint64_t kInputGuard = 40'000'000;
constexpr std::uint64_t kConvolutionWork = 400'000'000;
constexpr std::uint64_t kDirectGuard = 1u << 14;

using LD = long double;
using CL = std::complex<LD>;
using u128 = unsigned __int128;

BigInt to_big(u128 v) {
  return (BigInt(static_cast<std::uint64_t>(v >> 64)) << 64) + static_cast<std::uint64_t>(v);
}

std::vector<CL> widen(const ZdFunction& f) {
  std::vector<CL> a(f.modulus());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = CL(f[i].real(), f[i].imag());
  return a;
}

ZdFunction narrow(const std::vector<CL>& a) {
  std::vector<Complex> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = Complex(static_cast<double>(a[i].real()), static_cast<double>(a[i].imag()));
  return ZdFunction(std::move(v));
}

void require_modulus(const ZdFunction& f) {
  if (f.modulus() == 0) throw PreconditionError("Z_d functions need d >= 1");
}

ZdFunction direct_transform(const ZdFunction& f, int sign, bool normalize) {
  require_modulus(f);
  const std::uint64_t d = f.modulus();
  if (d > kDirectGuard) throw GuardExceeded("direct transform limited to d <= 16384");
  std::vector<CL> roots(d);
  for (std::uint64_t j = 0; j < d; ++j) roots[j] = detail::unit_root<LD>(j, d, sign);
  std::vector<CL> out(d);
  for (std::uint64_t t = 0; t < d; ++t) {
    detail::Neumaier<LD> re, im;
    for (std::uint64_t x = 0; x < d; ++x) {
      const CL term = CL(f[x].real(), f[x].imag()) * roots[static_cast<std::uint64_t>(static_cast<u128>(x) * t % d)];
      re.add(term.real());
      im.add(term.imag());
    }
    out[t] = CL(re.value(), im.value());
    if (normalize) out[t] /= static_cast<LD>(d);
  }
  return narrow(out);
}

}  // namespace

ZdFunction::ZdFunction(std::uint64_t d) : values_(d) {}

ZdFunction::ZdFunction(std::vector<Complex> values) : values_(std::move(values)) {}

ZdFunction ZdFunction::delta(std::uint64_t d, std::uint64_t at) {
  ZdFunction f(d);
  f[at % d] = 1.0;
  return f;
}

ZdFunction ZdFunction::indicator(std::uint64_t d, const std::vector<std::uint64_t>& support) {
  ZdFunction f(d);
  for (std::uint64_t x : support) f[x % d] = 1.0;
  return f;
}

double ZdFunction::max_abs() const {
  double m = 0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

ZdFunction dft(const ZdFunction& f) {
  require_modulus(f);
  std::vector<CL> a = widen(f);
  detail::FftPlan<LD>(a.size()).forward(a);
  return narrow(a);
}

ZdFunction dft_direct(const ZdFunction& f) { return direct_transform(f, -1, false); }

ZdFunction inverse_dft(const ZdFunction& F) {
  require_modulus(F);
  std::vector<CL> a = widen(F);
  detail::FftPlan<LD>(a.size()).inverse(a);
  return narrow(a);
}

ZdFunction inverse_dft_direct(const ZdFunction& F) { return direct_transform(F, 1, true); }

ZdFunction convolve(const ZdFunction& f, const ZdFunction& g) {
  require_modulus(f);
  if (f.modulus() != g.modulus()) throw PreconditionError("convolve: moduli differ");
  std::vector<CL> a = widen(f), b = widen(g);
  const detail::FftPlan<LD> plan(a.size());
  plan.forward(a);
  plan.forward(b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  plan.inverse(a);
  return narrow(a);
}

ZdFunction convolve_direct(const ZdFunction& f, const ZdFunction& g) {
  require_modulus(f);
  if (f.modulus() != g.modulus()) throw PreconditionError("convolve: moduli differ");
  const std::uint64_t d = f.modulus();
  if (d > kDirectGuard) throw GuardExceeded("direct convolution limited to d <= 16384");
  std::vector<CL> out(d);
  for (std::uint64_t x = 0; x < d; ++x) {
    detail::Neumaier<LD> re, im;
    for (std::uint64_t y = 0; y < d; ++y) {
      const CL term = CL(f[y].real(), f[y].imag()) * CL(g[(x + d - y) % d].real(), g[(x + d - y) % d].imag());
      re.add(term.real());
      im.add(term.imag());
    }
    out[x] = CL(re.value(), im.value());
  }
  return narrow(out);
}

ZdFunction LayerFunction::g_function() const {
  std::vector<Complex> v(modulus);
  for (std::size_t x = 0; x < modulus; ++x) v[x] = static_cast<double>(g[x]);
  return ZdFunction(std::move(v));
}

ZdFunction LayerFunction::f_function() const {
  std::vector<Complex> v(modulus);
  for (std::size_t x = 0; x < modulus; ++x) v[x] = static_cast<double>(gg[x]) / static_cast<double>(size);
  return ZdFunction(std::move(v));
}

LayerFunction layer_function(std::uint64_t modulus, std::int64_t step, std::int64_t width) {
  if (modulus == 0) throw PreconditionError("layer_function: modulus must be positive");
  if (width < 0) throw PreconditionError("layer_function: width must be nonnegative");
  if (width > (std::int64_t{1} << 30)) throw GuardExceeded("layer_function: width too large");
  LayerFunction out;
  out.modulus = modulus;
  out.step = step;
  out.width = width;
  out.size = static_cast<std::uint64_t>(2 * width + 1);
  out.g.assign(modulus, 0);
  out.gg.assign(modulus, 0);
  const std::uint64_t ds = mod_i64(step, modulus);
  for (std::int64_t y = -width; y <= width; ++y) {
    ++out.g[mulmod(mod_i64(y, modulus), ds, modulus)];
  }
  // g * g counts pairs (y1, y2) with (y1 + y2) d = x; s = y1 + y2 occurs 2w + 1 - |s| times.
  for (std::int64_t s = -2 * width; s <= 2 * width; ++s) {
    out.gg[mulmod(mod_i64(s, modulus), ds, modulus)] += static_cast<std::uint64_t>(2 * width + 1 - std::llabs(s));
  }
  return out;
}

DetectionInstance make_detection_instance(const SymmetricGap& gap, const IntPolynomial& h, InputMode inputs,
                                          std::optional<std::uint64_t> q_override) {
  gap.validate();
  if (gap.offset != 0) throw PreconditionError("detection needs a symmetric GAP (offset 0)");
  for (std::int64_t d : gap.steps) {
    if (d <= 0) throw PreconditionError("detection needs positive steps");
  }
  if (h.degree() < 1) throw PreconditionError("detection needs a nonconstant polynomial");
  if (h.leading() <= 0) {
    throw PreconditionError("detection needs a positive leading coefficient; negate the polynomial first");
  }
  DetectionInstance inst;
  inst.gap = gap;
  inst.h = h;
  inst.inputs = inputs;
  std::uint64_t g = 0;
  for (std::int64_t d : gap.steps) g = std::gcd(g, static_cast<std::uint64_t>(d));
  inst.q = q_override.value_or(g);
  if (inst.q == 0 || g % inst.q != 0) throw PreconditionError("q must divide every step");
  const auto root = inputs == InputMode::primes ? coprime_root_for_gap(h, inst.q) : root_for_gap(h, inst.q);
  if (!root) {
    throw PreconditionError(std::string("h has no ") + (inputs == InputMode::primes ? "coprime " : "") +
                            "root modulo q = " + std::to_string(inst.q));
  }
  inst.r = *root;
  inst.hq = aux_poly(h, inst.r, inst.q);
  const std::size_t k = gap.dims();
  for (std::int64_t d : gap.steps) inst.reduced_steps.push_back(d / static_cast<std::int64_t>(inst.q));
  BigInt best = -1;
  for (std::size_t i = 0; i < k; ++i) {
    const BigInt w = BigInt(gap.widths[i]) * inst.reduced_steps[i];
    if (w >= best) {
      best = w;
      inst.major = i;
    }
  }
  inst.dk = static_cast<std::uint64_t>(inst.reduced_steps[inst.major]);
  inst.threshold = best;
  inst.layer_widths.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (i != inst.major) inst.layer_widths[i] = gap.widths[i] / static_cast<std::int64_t>(4 * k);
  }
  // n = floor((L_k d_k / (2 q^{l-1} b))^{1/l}): largest m with m^l * 2 q^{l-1} b <= L_k d_k.
  const int l = h.degree();
  const BigInt denom = 2 * pow(BigInt(inst.q), static_cast<unsigned>(l - 1)) * h.leading();
  auto fits = [&](const BigInt& m) { return pow(m, static_cast<unsigned>(l)) * denom <= inst.threshold; };
  BigInt lo = 0, hi = 1;
  while (fits(hi)) hi *= 2;
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  inst.n = lo.convert_to<std::int64_t>();
  return inst;
}

DetectionReport detection_count(const DetectionInstance& inst) {
  const std::uint64_t dk = inst.dk;
  if (dk > scaled_guard(kModulusGuard)) throw GuardExceeded("d_k exceeds the detection guard");
  const std::size_t k = inst.gap.dims();
  const bool primes_mode = inst.inputs == InputMode::primes;

  // The set S (or Lambda) and the residues h_q(m) mod d_k.
  const std::int64_t threshold = inst.threshold.convert_to<std::int64_t>();
  const std::uint64_t cutoff = magnitude_cutoff(inst.hq, inst.threshold / 2);
  if (cutoff > scaled_guard(kInputGuard)) throw GuardExceeded("input range exceeds the detection guard");
  PrimeTable table;
  if (primes_mode) table = PrimeTable(inst.q * cutoff + inst.r + 1);
  const Int64Evaluator eval(inst.hq);
  std::vector<std::int64_t> ms;
  std::vector<std::int64_t> values;
  for (std::uint64_t m = 1; m <= cutoff; ++m) {
    const auto v = eval(static_cast<std::int64_t>(m));
    if (!v || *v <= 0 || *v >= threshold - *v) continue;  // 0 < 2v < L_k d_k
    if (primes_mode && !table.is_prime(inst.q * m + inst.r)) continue;
    ms.push_back(static_cast<std::int64_t>(m));
    values.push_back(*v);
  }
  DetectionReport rep;
  rep.set_size = ms.size();
  {
    std::uint64_t inside = 0;
    for (std::int64_t m : ms) inside += (m <= inst.n) ? 1 : 0;
    rep.symmetric_difference = ms.size() + static_cast<std::uint64_t>(inst.n) - 2 * inside;
  }
  auto weight = [&](std::size_t idx) -> LD {
    return primes_mode ? std::log(static_cast<LD>(inst.q * static_cast<std::uint64_t>(ms[idx]) + inst.r)) : LD(1);
  };

  std::vector<LayerFunction> layers;
  std::vector<std::size_t> layer_index;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == inst.major) continue;
    layers.push_back(layer_function(dk, inst.reduced_steps[i], inst.layer_widths[i]));
    layer_index.push_back(i);
  }
  LD norm = 1;
  BigInt count_bound = 1;
  std::uint64_t work = 0;
  for (const auto& L : layers) {
    norm *= static_cast<LD>(L.size);
    count_bound *= BigInt(L.size) * L.size;
    work += dk * static_cast<std::uint64_t>(std::count_if(L.gg.begin(), L.gg.end(), [](std::uint64_t c) { return c != 0; }));
  }
  rep.exact_convolution = work <= scaled_guard(kConvolutionWork) && count_bound < (BigInt(1) << 126);

  // Physical side. partial[j] = G_1 * ... * G_j with G = g * g as exact counts.
  std::vector<std::vector<u128>> partial;
  std::vector<LD> F_approx;
  std::vector<CL> spectrum_F(dk, CL(1, 0));
  const detail::FftPlan<LD> plan(dk);
  for (const auto& L : layers) {
    std::vector<CL> a(dk);
    for (std::size_t x = 0; x < dk; ++x) a[x] = CL(static_cast<LD>(L.gg[x]) / static_cast<LD>(L.size), 0);
    plan.forward(a);
    for (std::size_t t = 0; t < dk; ++t) spectrum_F[t] *= CL(a[t].real(), 0);
  }
  if (rep.exact_convolution) {
    partial.emplace_back(dk, 0);
    partial[0][0] = 1;
    for (const auto& L : layers) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> nz;
      for (std::uint64_t x = 0; x < dk; ++x) {
        if (L.gg[x] != 0) nz.emplace_back(x, L.gg[x]);
      }
      const auto& prev = partial.back();
      std::vector<u128> next(dk, 0);
      for (std::uint64_t x = 0; x < dk; ++x) {
        if (prev[x] == 0) continue;
        for (const auto& [s, c] : nz) {
          std::uint64_t y = x + s;
          if (y >= dk) y -= dk;
          next[y] += prev[x] * c;
        }
      }
      partial.push_back(std::move(next));
    }
  } else {
    std::vector<CL> a = spectrum_F;
    plan.inverse(a);
    F_approx.resize(dk);
    for (std::size_t x = 0; x < dk; ++x) F_approx[x] = a[x].real();
  }

  detail::Neumaier<LD> phys;
  BigInt exact_sum = 0;
  u128 chunk = 0;
  std::optional<std::size_t> first_positive;
  for (std::size_t idx = 0; idx < ms.size(); ++idx) {
    const std::uint64_t x = mod_i64(values[idx], dk);
    if (rep.exact_convolution) {
      const u128 c = partial.back()[x];
      if (c != 0 && !first_positive) first_positive = idx;
      if (primes_mode) {
        phys.add(weight(idx) * static_cast<LD>(c));
      } else if (__builtin_add_overflow(chunk, c, &chunk)) {
        exact_sum += to_big(chunk) + (BigInt(1) << 128);
        chunk = 0;
      }
    } else {
      const LD v = F_approx[x] * norm;
      if (v > 0.5L && !first_positive) first_positive = idx;
      phys.add(weight(idx) * v);
    }
  }
  if (rep.exact_convolution && !primes_mode) {
    exact_sum += to_big(chunk);
    rep.exact_count = exact_sum.str();
    rep.physical = static_cast<double>(static_cast<LD>(dk) * exact_sum.convert_to<LD>() / norm);
  } else {
    rep.physical = static_cast<double>(static_cast<LD>(dk) * phys.value() / norm);
  }
  rep.positive = first_positive.has_value();

  // Spectral side: W(t) = sum_m w(m) e^{2 pi i h_q(m) t / d_k} = conj(H^(t)).
  std::vector<CL> hist(dk, CL(0, 0));
  for (std::size_t idx = 0; idx < ms.size(); ++idx) hist[mod_i64(values[idx], dk)] += CL(weight(idx), 0);
  plan.forward(hist);
  detail::Neumaier<LD> spec_re, spec_im, tail_re, tail_abs;
  for (std::size_t t = 0; t < dk; ++t) {
    const CL W = std::conj(hist[t]);
    const CL term = spectrum_F[t] * W;
    spec_re.add(term.real());
    spec_im.add(term.imag());
    if (t != 0) {
      tail_re.add(term.real());
      tail_abs.add(spectrum_F[t].real() * std::abs(W));
    }
  }
  rep.spectral = static_cast<double>(spec_re.value());
  rep.spectral_imag = static_cast<double>(spec_im.value());
  rep.main_term = static_cast<double>((spectrum_F[0] * std::conj(hist[0])).real());
  rep.tail_sum = static_cast<double>(tail_re.value());
  rep.tail_abs_sum = static_cast<double>(tail_abs.value());
  rep.difference = std::fabs(rep.physical - rep.spectral);
  rep.tolerance = 1e-6 * (std::fabs(rep.physical) + 1.0);
  rep.consistent = rep.difference <= rep.tolerance;

  if (first_positive && rep.exact_convolution) {
    const std::size_t idx = *first_positive;
    DetectionWitness w;
    w.m = ms[idx];
    w.coords.assign(k, 0);
    std::uint64_t target = mod_i64(values[idx], dk);
    BigInt rest = values[idx];
    for (std::size_t j = layers.size(); j-- > 0;) {
      const auto& L = layers[j];
      const std::uint64_t ds = mod_i64(L.step, dk);
      bool found = false;
      for (std::int64_t s = -2 * L.width; s <= 2 * L.width && !found; ++s) {
        const std::uint64_t shift = mulmod(mod_i64(s, dk), ds, dk);
        const std::uint64_t prev_x = target >= shift ? target - shift : target + dk - shift;
        if (partial[j][prev_x] != 0) {
          w.coords[layer_index[j]] = s;
          rest -= BigInt(s) * L.step;
          target = prev_x;
          found = true;
        }
      }
      if (!found) throw ConsistencyError("detection witness: backtracking failed");
    }
    if (target != 0 || rest % dk != 0) throw ConsistencyError("detection witness: residue mismatch");
    const BigInt xk = rest / dk;
    if (abs(xk) > inst.gap.widths[inst.major]) throw ConsistencyError("detection witness: major coordinate out of range");
    w.coords[inst.major] = xk.convert_to<std::int64_t>();
    w.input = static_cast<std::int64_t>(inst.r) + static_cast<std::int64_t>(inst.q) * w.m;
    w.value = evaluate(inst.h, BigInt(w.input));
    BigInt check = 0;
    for (std::size_t i = 0; i < k; ++i) check += BigInt(w.coords[i]) * inst.gap.steps[i];
    if (w.value == 0 || check != w.value || w.value != BigInt(inst.q) * values[idx]) {
      throw ConsistencyError("detection witness does not reproduce h(n)");
    }
    rep.witness = std::move(w);
  }
  return rep;
}

ExactRatio layer_convolution_at_zero(const DetectionInstance& inst) {
  const std::uint64_t dk = inst.dk;
  if (dk > scaled_guard(kModulusGuard)) throw GuardExceeded("d_k exceeds the detection guard");
  ExactRatio out{0, 1};
  std::vector<BigInt> acc(dk, 0);
  acc[0] = 1;
  for (std::size_t i = 0; i < inst.gap.dims(); ++i) {
    if (i == inst.major) continue;
    const LayerFunction L = layer_function(dk, inst.reduced_steps[i], inst.layer_widths[i]);
    out.denominator *= L.size;
    std::vector<std::uint64_t> support;
    for (std::uint64_t s = 0; s < dk; ++s) {
      if (L.gg[s] != 0) support.push_back(s);
    }
    std::vector<BigInt> next(dk, 0);
    for (std::uint64_t x = 0; x < dk; ++x) {
      if (acc[x] == 0) continue;
      for (std::uint64_t s : support) {
        std::uint64_t y = x + s;
        if (y >= dk) y -= dk;
        next[y] += acc[x] * L.gg[s];
      }
    }
    acc = std::move(next);
  }
  out.numerator = acc[0];
  return out;
}

}  // namespace gaplab
