#include "gaplab/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "fft_impl.hpp"
#include "gaplab/modarith.hpp"

namespace gaplab {

namespace {

constexpr std::int64_t kMaxTerms = 100'000'000;
constexpr std::uint64_t kMaxModulus = 1'000'000'000;
constexpr std::uint64_t kTableModulus = 1u << 20;
constexpr std::size_t kBlock = 1024;
constexpr std::uint64_t kDivisorGuard = 10'000'000;
constexpr std::uint64_t kPrimeSumGuard = 100'000'000;
constexpr std::uint64_t kMomentModulus = 100'000;

using LD = long double;
using CL = std::complex<LD>;

void check_weyl_args(std::int64_t n, std::uint64_t d) {
  if (d == 0) throw PreconditionError("modulus d must be positive");
  if (d > kMaxModulus) throw GuardExceeded("modulus exceeds 10^9");
  if (n > static_cast<std::int64_t>(scaled_guard(kMaxTerms))) throw GuardExceeded("range n exceeds the guard");
}

// P(m) = h(m) t mod d advanced by forward differences starting at m = 1.
class PhaseStepper {
 public:
  PhaseStepper(const IntPolynomial& h, std::uint64_t t, std::uint64_t d) : d_(d) {
    const int l = std::max(h.degree(), 0);
    const ModPoly hp(h, d);
    diff_.resize(static_cast<std::size_t>(l) + 1);
    for (int i = 0; i <= l; ++i) diff_[static_cast<std::size_t>(i)] = mulmod(hp(static_cast<std::uint64_t>(1 + i) % d), t, d);
    for (int j = 1; j <= l; ++j) {
      for (int i = l; i >= j; --i) {
        diff_[static_cast<std::size_t>(i)] = submod(diff_[static_cast<std::size_t>(i)], diff_[static_cast<std::size_t>(i - 1)], d);
      }
    }
  }
  std::uint64_t next() {
    const std::uint64_t phase = diff_[0];
    for (std::size_t j = 0; j + 1 < diff_.size(); ++j) diff_[j] = addmod(diff_[j], diff_[j + 1], d_);
    return phase;
  }

 private:
  std::uint64_t d_;
  std::vector<std::uint64_t> diff_;
};

double log_sum_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

double step_factor(const std::vector<ShapeRow>& rows, bool log_space) {
  double worst = rows.empty() ? 0.0 : 1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = rows[i - 1].envelope, b = rows[i].envelope;
    double f;
    if (log_space) {
      f = std::exp(std::fabs(b - a));
    } else if (a > 0 && b > 0) {
      f = std::max(a / b, b / a);
    } else {
      f = std::numeric_limits<double>::infinity();
    }
    worst = std::max(worst, f);
  }
  return worst;
}

}  // namespace

Complex weyl_sum(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d) {
  check_weyl_args(n, d);
  if (n <= 0) return {0, 0};
  PhaseStepper phases(h, mod_i64(t, d), d);
  const bool use_table = d <= kTableModulus && d <= 4 * static_cast<std::uint64_t>(n);
  std::vector<Complex> table;
  if (use_table) {
    table.resize(d);
    for (std::uint64_t j = 0; j < d; ++j) table[j] = detail::unit_root<double>(j, d, 1);
  }
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(d);
  LD total_re = 0, total_im = 0;
  std::int64_t m = 0;
  while (m < n) {
    const std::int64_t stop = std::min<std::int64_t>(n, m + static_cast<std::int64_t>(kBlock));
    double re = 0, im = 0;
    if (use_table) {
      for (; m < stop; ++m) {
        const Complex& z = table[phases.next()];
        re += z.real();
        im += z.imag();
      }
    } else {
      for (; m < stop; ++m) {
        const double angle = scale * static_cast<double>(phases.next());
        re += std::cos(angle);
        im += std::sin(angle);
      }
    }
    total_re += re;
    total_im += im;
  }
  return {static_cast<double>(total_re), static_cast<double>(total_im)};
}

Complex weyl_sum_direct(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d) {
  check_weyl_args(n, d);
  const ModPoly hp(h, d);
  const std::uint64_t tt = mod_i64(t, d);
  detail::Neumaier<LD> re, im;
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::uint64_t phase = mulmod(hp(static_cast<std::uint64_t>(m) % d), tt, d);
    const CL z = detail::unit_root<LD>(phase, d, 1);
    re.add(z.real());
    im.add(z.imag());
  }
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

std::uint64_t lemma1_reduced_modulus(std::uint64_t d, std::int64_t a2, std::int64_t t) {
  if (d == 0) throw PreconditionError("modulus d must be positive");
  // gcd(2 a2 t, d) = gcd(2 a2 t mod d, d), with gcd(0, d) = d.
  const std::uint64_t c = mulmod(mulmod(2 % d, mod_i64(a2, d), d), mod_i64(t, d), d);
  return d / std::gcd(c, d);
}

double lemma1_bound(std::int64_t n, std::uint64_t d, std::int64_t a2, std::int64_t t) {
  if (n < 1) throw PreconditionError("lemma1_bound: n must be positive");
  const double dp = static_cast<double>(lemma1_reduced_modulus(d, a2, t));
  const double nn = static_cast<double>(n);
  return std::sqrt(2.0 * nn * nn / dp + 7.0 * (nn + dp) * std::log(dp));
}

Lemma1Report verify_lemma1(const std::vector<Lemma1Instance>& instances, int threads) {
  std::vector<double> ratios(instances.size());
  std::vector<char> bad(instances.size(), 0);
  parallel_for(instances.size(), static_cast<unsigned>(std::max(1, threads)), [&](std::size_t i) {
    const auto& in = instances[i];
    const IntPolynomial h{0, in.a1, in.a2};
    const double w = std::abs(weyl_sum(h, in.n, in.t, in.d));
    const double b = lemma1_bound(in.n, in.d, in.a2, in.t);
    ratios[i] = w / b;
    bad[i] = w > b + Lemma1Report::kTolerance;
  });
  Lemma1Report rep;
  rep.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (ratios[i] > rep.max_ratio) {
      rep.max_ratio = ratios[i];
      rep.argmax = instances[i];
    }
    if (bad[i]) {
      ++rep.violations;
      if (rep.violating.size() < 20) rep.violating.push_back(instances[i]);
    }
  }
  return rep;
}

Lemma1Report verify_lemma1_box(std::int64_t nmax, std::uint64_t dmax, std::int64_t cmin, std::int64_t cmax,
                               int threads) {
  if (nmax < 1 || dmax < 1 || cmin > cmax) throw PreconditionError("verify_lemma1_box: empty box");
  check_weyl_args(nmax, dmax);
  const std::uint64_t span = static_cast<std::uint64_t>(cmax - cmin + 1);
  std::vector<Lemma1Report> per_d(dmax);
  parallel_for(dmax, static_cast<unsigned>(std::max(1, threads)), [&](std::size_t idx) {
    const std::uint64_t d = idx + 1;
    struct PairInfo {
      std::uint64_t multiplicity = 0;
      Lemma1Instance example;
    };
    std::map<std::pair<std::uint64_t, std::uint64_t>, PairInfo> pairs;
    for (std::int64_t a1 = cmin; a1 <= cmax; ++a1) {
      for (std::int64_t a2 = cmin; a2 <= cmax; ++a2) {
        for (std::int64_t t = cmin; t <= cmax; ++t) {
          const std::uint64_t al1 = mulmod(mod_i64(a1, d), mod_i64(t, d), d);
          const std::uint64_t al2 = mulmod(mod_i64(a2, d), mod_i64(t, d), d);
          auto& info = pairs[{al1, al2}];
          if (info.multiplicity++ == 0) info.example = {0, d, a1, a2, t};
        }
      }
    }
    std::vector<CL> roots(d);
    for (std::uint64_t j = 0; j < d; ++j) roots[j] = detail::unit_root<LD>(j, d, 1);
    Lemma1Report rep;
    for (const auto& [key, info] : pairs) {
      const auto [al1, al2] = key;
      // Bound depends on a2 t only through gcd(2 a2 t, d) = gcd(2 al2, d).
      const std::uint64_t dp = d / std::gcd(mulmod(2 % d, al2, d), d);
      const double dpd = static_cast<double>(dp);
      CL sum = 0;
      std::uint64_t phase = 0;  // al1 m + al2 m^2 mod d
      std::uint64_t incr = addmod(al1, al2, d);  // phase(m+1) - phase(m) = al1 + al2 (2m + 1)
      const std::uint64_t two_al2 = mulmod(2 % d, al2, d);
      for (std::int64_t n = 1; n <= nmax; ++n) {
        phase = addmod(phase, incr, d);
        incr = addmod(incr, two_al2, d);
        sum += roots[phase];
        const double nn = static_cast<double>(n);
        const double bound = std::sqrt(2.0 * nn * nn / dpd + 7.0 * (nn + dpd) * std::log(dpd));
        const double w = static_cast<double>(std::abs(sum));
        const double ratio = w / bound;
        if (ratio > rep.max_ratio) {
          rep.max_ratio = ratio;
          rep.argmax = info.example;
          rep.argmax.n = n;
        }
        if (w > bound + Lemma1Report::kTolerance) {
          rep.violations += info.multiplicity;
          if (rep.violating.size() < 20) {
            Lemma1Instance bad = info.example;
            bad.n = n;
            rep.violating.push_back(bad);
          }
        }
      }
    }
    rep.instances = static_cast<std::uint64_t>(nmax) * span * span * span;
    per_d[idx] = std::move(rep);
  });
  Lemma1Report total;
  for (auto& rep : per_d) {
    total.instances += rep.instances;
    total.violations += rep.violations;
    if (rep.max_ratio > total.max_ratio) {
      total.max_ratio = rep.max_ratio;
      total.argmax = rep.argmax;
    }
    for (const auto& v : rep.violating) {
      if (total.violating.size() < 20) total.violating.push_back(v);
    }
  }
  return total;
}

std::vector<Lemma1Instance> read_lemma1_grid(std::istream& in) {
  std::vector<Lemma1Instance> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    Lemma1Instance inst;
    long long n = 0, d = 0, a1 = 0, a2 = 0, t = 0;
    std::string extra;
    if (!(ss >> n >> d >> a1 >> a2 >> t) || (ss >> extra)) {
      throw PreconditionError("grid line " + std::to_string(lineno) + ": expected `n d a1 a2 t`");
    }
    if (n < 1 || d < 1) throw PreconditionError("grid line " + std::to_string(lineno) + ": n and d must be positive");
    inst.n = n;
    inst.d = static_cast<std::uint64_t>(d);
    inst.a1 = a1;
    inst.a2 = a2;
    inst.t = t;
    out.push_back(inst);
  }
  return out;
}

double lemma3_shape(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d) {
  if (h.degree() < 1 || h.leading() <= 0) throw PreconditionError("lemma3_shape needs a positive leading coefficient");
  if (n < 1 || d < 1) throw PreconditionError("lemma3_shape: n and d must be positive");
  const int l = h.degree();
  const double a = h.leading().convert_to<double>();
  const std::uint64_t tt = mod_i64(t, d);
  const double dd = static_cast<double>(d / std::gcd(tt, d));
  const double nn = static_cast<double>(n);
  const double L = std::max(1.0, std::log(a) + std::log(dd) + std::log(nn));
  const double bracket = 1.0 / dd + 1.0 / nn + std::exp(std::log(dd) - std::log(a) - l * std::log(nn));
  const double log_inner = std::log(a) + static_cast<double>(l * l) * std::log(L) + std::log(bracket);
  return std::exp(std::log(nn) + std::ldexp(log_inner, -l));
}

WeylReport weyl_report(const IntPolynomial& h, std::int64_t n, std::int64_t t, std::uint64_t d,
                       const std::string& bound_kind) {
  WeylReport rep;
  rep.poly = h.to_string();
  rep.n = n;
  rep.t = t;
  rep.d = d;
  rep.value = weyl_sum(h, n, t, d);
  rep.magnitude = std::abs(rep.value);
  rep.bound_kind = bound_kind;
  if (bound_kind == "lemma1") {
    if (h.degree() > 2) throw PreconditionError("the lemma1 bound applies to polynomials of degree at most 2");
    const auto a2 = to_i64(h.coeff(2));
    if (!a2) throw GuardExceeded("coefficient a2 does not fit 64 bits");
    rep.bound = lemma1_bound(n, d, *a2, t);
  } else if (bound_kind == "lemma3" || bound_kind == "lemma3_shape") {
    rep.bound_kind = "lemma3_shape";
    rep.bound = lemma3_shape(h, n, t, d);
  } else if (bound_kind != "none") {
    throw PreconditionError("unknown bound '" + bound_kind + "' (expected lemma1, lemma3 or none)");
  }
  if (rep.bound) rep.ratio = rep.magnitude / *rep.bound;
  return rep;
}

DivisorMomentReport divisor_moment(int j, std::uint64_t M) {
  if (j < 2 || j > 4) throw PreconditionError("divisor_moment: j must lie in [2, 4]");
  if (M < 1) throw PreconditionError("divisor_moment: M must be positive");
  if (M > scaled_guard(kDivisorGuard)) throw GuardExceeded("divisor_moment: M exceeds the guard");
  // d_j(p^a) = C(a + j - 1, j - 1)
  std::vector<std::uint64_t> binom(64);
  for (int a = 0; a < 64; ++a) {
    std::uint64_t c = 1;
    for (int i = 1; i <= j - 1; ++i) c = c * static_cast<std::uint64_t>(a + i) / static_cast<std::uint64_t>(i);
    binom[static_cast<std::size_t>(a)] = c;
  }
  std::vector<std::uint32_t> spf(M + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= M; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || static_cast<std::uint64_t>(p) * i > M) break;
      spf[p * i] = p;
    }
  }
  std::vector<std::uint64_t> dj(M + 1, 1);
  std::vector<std::uint8_t> expo(M + 1, 0);
  unsigned __int128 sum = 1;  // m = 1
  for (std::uint64_t m = 2; m <= M; ++m) {
    const std::uint32_t p = spf[m];
    const std::uint64_t m1 = m / p;
    if (m1 % p == 0) {
      const int e = expo[m1] + 1;
      expo[m] = static_cast<std::uint8_t>(e);
      dj[m] = dj[m1] / binom[static_cast<std::size_t>(e - 1)] * binom[static_cast<std::size_t>(e)];
    } else {
      expo[m] = 1;
      dj[m] = dj[m1] * binom[1];
    }
    sum += static_cast<unsigned __int128>(dj[m]) * dj[m];
  }
  DivisorMomentReport rep;
  rep.j = j;
  rep.M = M;
  rep.moment = (BigInt(static_cast<std::uint64_t>(sum >> 64)) << 64) + static_cast<std::uint64_t>(sum);
  if (M >= 2) {
    const double lm = std::log(static_cast<double>(M));
    rep.normalized = rep.moment.convert_to<double>() / (static_cast<double>(M) * std::pow(lm, j * j - 1));
  }
  return rep;
}

Complex prime_weyl_sum(const IntPolynomial& h, std::uint64_t q, std::uint64_t r, std::int64_t n, std::int64_t t,
                       std::uint64_t d, const PrimeTable* table) {
  if (q == 0 || d == 0) throw PreconditionError("prime_weyl_sum: q and d must be positive");
  if (n <= 0) return {0, 0};
  const unsigned __int128 top = static_cast<unsigned __int128>(q) * static_cast<std::uint64_t>(n) + r;
  if (top > scaled_guard(kPrimeSumGuard)) throw GuardExceeded("prime_weyl_sum: qn + r exceeds the sieve guard");
  std::optional<PrimeTable> storage;
  const PrimeTable& primes = (table != nullptr && table->limit() >= top) ? *table : storage.emplace(static_cast<std::uint64_t>(top));
  const ModPoly hp(h, d);
  const std::uint64_t tt = mod_i64(t, d);
  detail::Neumaier<LD> re, im;
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::uint64_t p = q * static_cast<std::uint64_t>(m) + r;
    if (!primes.is_prime(p)) continue;
    const LD w = std::log(static_cast<LD>(p));
    const CL z = detail::unit_root<LD>(mulmod(hp(static_cast<std::uint64_t>(m) % d), tt, d), d, 1);
    re.add(w * z.real());
    im.add(w * z.imag());
  }
  return {static_cast<double>(re.value()), static_cast<double>(im.value())};
}

Lemma4Report lemma4_report(const IntPolynomial& h, std::uint64_t q, std::uint64_t r, std::int64_t n, std::int64_t t,
                           std::uint64_t d, double U, const PrimeTable* table) {
  if (h.degree() < 1 || h.leading() <= 0) throw PreconditionError("lemma4 needs a positive leading coefficient");
  if (!(U >= 1.0)) throw PreconditionError("lemma4: U must be at least 1");
  if (n < 2) throw PreconditionError("lemma4: n must be at least 2");
  Lemma4Report rep;
  rep.ell = h.degree();
  const double l = rep.ell;
  rep.L = 64.0 * l * l * std::pow(4.0, l);
  rep.U = U;
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_U = std::log(U);
  rep.log_bound = log_sum_exp(ln_n - ln_U, rep.L * ln_U + (1.0 - std::pow(4.0, -l)) * ln_n);
  const double mag = std::abs(prime_weyl_sum(h, q, r, n, t, d, table));
  rep.log_magnitude = mag > 0 ? std::log(mag) : -std::numeric_limits<double>::infinity();
  rep.log_ratio = rep.log_magnitude - rep.log_bound;
  const double ln_d = std::log(static_cast<double>(d));
  const BigInt hn = evaluate(h, BigInt(n));
  const double ln_hn = hn > 0 ? std::log(hn.convert_to<double>()) : -std::numeric_limits<double>::infinity();
  const double ln_cap = l * ln_U;
  auto below_cap = [&](double v) { return v <= 0 || std::log(v) <= ln_cap + 1e-12; };
  rep.hypotheses_met = U >= ln_n && rep.L * ln_U <= ln_d && ln_d + rep.L * ln_U <= ln_hn &&
                       below_cap(static_cast<double>(q)) && below_cap(static_cast<double>(r)) &&
                       below_cap(h.leading().convert_to<double>());
  return rep;
}

MomentReport moment_sum(const IntPolynomial& h, std::uint64_t q, std::uint64_t r, std::int64_t n, std::uint64_t d,
                        double s, const PrimeTable* table) {
  if (h.degree() < 1) throw PreconditionError("moment_sum needs a nonconstant polynomial");
  if (!(s > std::ldexp(1.0, h.degree()))) throw PreconditionError("moment_sum requires s > 2^l");
  if (d == 0 || d > scaled_guard(kMomentModulus)) throw GuardExceeded("moment_sum: d must lie in [1, 10^5]");
  if (q == 0 || n < 1) throw PreconditionError("moment_sum: q and n must be positive");
  const unsigned __int128 top = static_cast<unsigned __int128>(q) * static_cast<std::uint64_t>(n) + r;
  if (top > scaled_guard(kPrimeSumGuard)) throw GuardExceeded("moment_sum: qn + r exceeds the sieve guard");
  std::optional<PrimeTable> storage;
  const PrimeTable& primes = (table != nullptr && table->limit() >= top) ? *table : storage.emplace(static_cast<std::uint64_t>(top));
  const ModPoly hp(h, d);
  std::vector<CL> hist(d, CL(0, 0));
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::uint64_t p = q * static_cast<std::uint64_t>(m) + r;
    if (primes.is_prime(p)) hist[hp(static_cast<std::uint64_t>(m) % d)] += CL(std::log(static_cast<LD>(p)), 0);
  }
  // V(t) = sum_x H(x) e^{2 pi i x t / d} = conj(H^(t)) for real H.
  detail::FftPlan<LD>(d).forward(hist);
  detail::Neumaier<LD> acc;
  for (const auto& v : hist) acc.add(std::pow(std::abs(v), static_cast<LD>(s)));
  MomentReport rep;
  rep.value = static_cast<double>(acc.value());
  const double nn = static_cast<double>(n);
  rep.shape = static_cast<double>(d) * std::pow(nn, s - h.degree()) + std::pow(nn, s);
  rep.ratio = rep.value / rep.shape;
  return rep;
}

ShapeFamilyReport lemma3_family(int ell, const std::vector<std::int64_t>& ns, int threads) {
  if (ell < 1) throw PreconditionError("lemma3_family: degree must be positive");
  ShapeFamilyReport rep;
  rep.name = "lemma3 h=x^" + std::to_string(ell) + " d=n";
  const IntPolynomial h = IntPolynomial::monomial(1, ell);
  for (std::int64_t n : ns) {
    const auto d = static_cast<std::uint64_t>(n);
    std::vector<double> ratios(d > 1 ? d - 1 : 0);
    parallel_for(ratios.size(), static_cast<unsigned>(std::max(1, threads)), [&](std::size_t i) {
      const auto t = static_cast<std::int64_t>(i + 1);
      ratios[i] = std::abs(weyl_sum(h, n, t, d)) / lemma3_shape(h, n, t, d);
    });
    ShapeRow row{n, d, 0, 0};
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      if (ratios[i] > row.envelope) {
        row.envelope = ratios[i];
        row.argmax_t = static_cast<std::int64_t>(i + 1);
      }
    }
    rep.rows.push_back(row);
  }
  rep.max_doubling_factor = step_factor(rep.rows, false);
  return rep;
}

ShapeFamilyReport lemma4_family(const std::vector<std::int64_t>& ns, double U, int threads) {
  ShapeFamilyReport rep;
  rep.name = "lemma4 h=x^2 q=1 r=0 d=n U=" + std::to_string(U);
  rep.log_space = true;
  const IntPolynomial h{0, 0, 1};
  const std::int64_t nmax = ns.empty() ? 2 : *std::max_element(ns.begin(), ns.end());
  const PrimeTable table(static_cast<std::uint64_t>(std::max<std::int64_t>(nmax, 2)));
  for (std::int64_t n : ns) {
    const auto d = static_cast<std::uint64_t>(n);
    std::vector<double> logs(d > 1 ? d - 1 : 0, -std::numeric_limits<double>::infinity());
    parallel_for(logs.size(), static_cast<unsigned>(std::max(1, threads)), [&](std::size_t i) {
      const auto t = static_cast<std::int64_t>(i + 1);
      if (std::gcd(static_cast<std::uint64_t>(t), d) != 1) return;
      logs[i] = lemma4_report(h, 1, 0, n, t, d, U, &table).log_ratio;
    });
    ShapeRow row{n, d, -std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < logs.size(); ++i) {
      if (logs[i] > row.envelope) {
        row.envelope = logs[i];
        row.argmax_t = static_cast<std::int64_t>(i + 1);
      }
    }
    rep.rows.push_back(row);
  }
  rep.max_doubling_factor = step_factor(rep.rows, true);
  return rep;
}

ShapeFamilyReport lemma5_family(const std::vector<std::int64_t>& ns, double s) {
  ShapeFamilyReport rep;
  rep.name = "lemma5 h=x^2 q=1 r=0 d=nextprime(n) s=" + std::to_string(s);
  const IntPolynomial h{0, 0, 1};
  const std::int64_t nmax = ns.empty() ? 2 : *std::max_element(ns.begin(), ns.end());
  const PrimeTable table(static_cast<std::uint64_t>(std::max<std::int64_t>(nmax, 2)));
  for (std::int64_t n : ns) {
    // Composite d = n lets every t on a denominator-8 arc pick up full weight,
    // so the family uses the next prime instead.
    auto d = static_cast<std::uint64_t>(n);
    while (!is_prime_u64(d)) ++d;
    rep.rows.push_back({n, d, moment_sum(h, 1, 0, n, d, s, &table).ratio, 0});
  }
  rep.max_doubling_factor = step_factor(rep.rows, false);
  return rep;
}

std::vector<std::int64_t> doubling_sequence(std::int64_t base, int count) {
  std::vector<std::int64_t> out;
  for (int j = 0; j < count; ++j) out.push_back(base << j);
  return out;
}

}  // namespace gaplab
