#include "gaplab/intersective.hpp"

#include <algorithm>
#include <numeric>

#include "gaplab/modarith.hpp"

namespace gaplab {

namespace {

constexpr std::uint64_t kRootsGuard = 10'000'000;
constexpr std::uint64_t kDirectGuard = 10'000'000;
constexpr std::uint64_t kTreeNodeGuard = 1'000'000;
constexpr int kHardDepthCap = 64;
constexpr std::uint64_t kBruteForcePrime = 2000;

// ---------------------------------------------------------------------------
// Polynomials over F_p, ascending coefficients, trimmed.

using Fp = std::vector<std::uint64_t>;

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_rem(Fp a, const Fp& m, std::uint64_t p) {
  const std::uint64_t inv = *invmod(m.back(), p);
  const std::size_t dm = m.size() - 1;
  while (a.size() >= m.size()) {
    const std::uint64_t c = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = submod(a[shift + i], mulmod(c, m[i], p), p);
    fp_trim(a);
  }
  return a;
}

Fp fp_mulrem(const Fp& a, const Fp& b, const Fp& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  fp_trim(c);
  return fp_rem(std::move(c), m, p);
}

Fp fp_powrem(Fp base, std::uint64_t e, const Fp& m, std::uint64_t p) {
  Fp result{1};
  result = fp_rem(result, m, p);
  base = fp_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = fp_mulrem(result, base, m, p);
    base = fp_mulrem(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Fp fp_monic(Fp a, std::uint64_t p) {
  const std::uint64_t inv = *invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : fp_monic(std::move(a), p);
}

Fp fp_quot(Fp a, const Fp& m, std::uint64_t p) {
  const std::uint64_t inv = *invmod(m.back(), p);
  Fp q(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
  while (a.size() >= m.size()) {
    const std::uint64_t c = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - m.size();
    q[shift] = c;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = submod(a[shift + i], mulmod(c, m[i], p), p);
    a.pop_back();
    fp_trim(a);
  }
  return q;
}

// f is monic and a product of distinct linear factors.
void fp_split(const Fp& f, std::uint64_t p, std::vector<std::uint64_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back((p - f[0]) % p);
    return;
  }
  for (std::uint64_t a = 1;; ++a) {
    Fp w = fp_powrem(Fp{a % p, 1}, (p - 1) / 2, f, p);
    if (w.empty()) w = {0};
    w[0] = submod(w[0], 1, p);
    fp_trim(w);
    Fp d = fp_gcd(f, w, p);
    if (d.size() > 1 && d.size() < f.size()) {
      fp_split(d, p, out);
      fp_split(fp_monic(fp_quot(f, d, p), p), p, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------

std::uint64_t pow_u64(std::uint64_t p, int k) {
  auto v = checked_pow(p, k);
  if (!v) throw GuardExceeded("prime power exceeds 2^62");
  return *v;
}

// Roots of h mod p^k, lifting one level at a time.
std::vector<std::uint64_t> roots_mod_prime_power(const IntPolynomial& h, std::uint64_t p, int k) {
  const std::uint64_t guard = scaled_guard(kRootsGuard);
  const std::uint64_t pk = pow_u64(p, k);
  const ModPoly hk(h, pk);
  const ModPoly dh(derivative(h), p);
  std::vector<std::uint64_t> level = roots_mod_prime(h, p);
  std::uint64_t pj = p;
  for (int j = 1; j < k; ++j) {
    const std::uint64_t pj1 = pj * p;
    std::vector<std::uint64_t> next;
    for (std::uint64_t r : level) {
      // h(r + t p^j) = h(r) + t p^j h'(r) (mod p^{j+1}) for j >= 1.
      const std::uint64_t c = (hk(r) % pj1) / pj;
      const std::uint64_t b = dh(r % p);
      if (b != 0) {
        const std::uint64_t t = mulmod(p - c % p, *invmod(b, p), p) % p;
        next.push_back(r + t * pj);
      } else if (c == 0) {
        for (std::uint64_t t = 0; t < p; ++t) next.push_back(r + t * pj);
      }
      if (next.size() > guard) throw GuardExceeded("number of roots exceeds the guard");
    }
    level = std::move(next);
    pj = pj1;
  }
  std::sort(level.begin(), level.end());
  return level;
}

}  // namespace

std::vector<std::uint64_t> roots_mod_prime(const IntPolynomial& h, std::uint64_t p) {
  if (p < 2) throw PreconditionError("roots_mod_prime: p must be prime");
  const ModPoly hp(h, p);
  Fp f = hp.coeffs();
  fp_trim(f);
  std::vector<std::uint64_t> roots;
  if (f.empty()) {
    if (p > scaled_guard(kRootsGuard)) throw GuardExceeded("polynomial vanishes mod p and p exceeds the root guard");
    roots.resize(p);
    std::iota(roots.begin(), roots.end(), std::uint64_t{0});
    return roots;
  }
  if (f.size() == 1) return roots;
  if (p <= kBruteForcePrime) {
    for (std::uint64_t r = 0; r < p; ++r) {
      if (hp(r) == 0) roots.push_back(r);
    }
    return roots;
  }
  f = fp_monic(std::move(f), p);
  Fp xp = fp_powrem(Fp{0, 1}, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = submod(xp[1], 1, p);
  fp_trim(xp);
  Fp g = xp.empty() ? f : fp_gcd(f, xp, p);
  fp_split(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::uint64_t> roots_mod(const IntPolynomial& h, std::uint64_t q, RootsMethod method) {
  if (q == 0) throw PreconditionError("roots_mod: q must be positive");
  if (q > (std::uint64_t{1} << 62)) throw GuardExceeded("modulus exceeds 2^62");
  if (q == 1) return {0};
  if (method == RootsMethod::direct) {
    if (q > scaled_guard(kDirectGuard)) throw GuardExceeded("modulus too large for direct mode");
    const ModPoly hq(h, q);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t r = 0; r < q; ++r) {
      if (hq(r) == 0) roots.push_back(r);
    }
    return roots;
  }
  const std::uint64_t guard = scaled_guard(kRootsGuard);
  std::vector<std::uint64_t> acc{0};
  std::uint64_t modulus = 1;
  for (const auto& [p, e] : factorize(q)) {
    const std::vector<std::uint64_t> part = roots_mod_prime_power(h, p, e);
    const std::uint64_t pe = pow_u64(p, e);
    if (part.empty()) return {};
    if (static_cast<unsigned __int128>(acc.size()) * part.size() > guard) {
      throw GuardExceeded("number of roots exceeds the guard");
    }
    std::vector<std::uint64_t> glued;
    glued.reserve(acc.size() * part.size());
    for (std::uint64_t a : acc) {
      for (std::uint64_t b : part) glued.push_back(crt_pair(a, modulus, b, pe));
    }
    acc = std::move(glued);
    modulus *= pe;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::string to_string(PadicVerdict v) {
  switch (v) {
    case PadicVerdict::has_root: return "has_root";
    case PadicVerdict::no_root: return "no_root";
    case PadicVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::verified: return "verified";
    case CertificateStatus::refuted: return "refuted";
    case CertificateStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Precomputed data shared by all primes in a certification run.
struct PadicContext {
  IntPolynomial h;
  IntPolynomial g;   // squarefree part
  IntPolynomial dg;  // g'
  IntPolynomial dh;  // h'
  BigInt disc;       // Res(g, g'), nonzero when deg g >= 1
  std::vector<BigInt> int_roots;
};

PadicContext make_context(const IntPolynomial& h) {
  if (h.is_zero()) throw PreconditionError("has_padic_root: h must be nonzero");
  PadicContext ctx;
  ctx.h = h;
  ctx.g = squarefree_part(h);
  ctx.dg = derivative(ctx.g);
  ctx.dh = derivative(h);
  if (ctx.g.degree() >= 1) ctx.disc = resultant(ctx.g, ctx.dg);
  if (h.degree() >= 1) ctx.int_roots = integer_roots(h);
  return ctx;
}

int valuation_or(const BigInt& v, std::uint64_t p, int if_zero) {
  return v == 0 ? if_zero : valuation(v, p);
}

BigInt big_pow(std::uint64_t p, int k) { return pow(BigInt(p), static_cast<unsigned>(k)); }

int max_exponent_fitting(std::uint64_t p) {
  int k = 0;
  while (checked_pow(p, k + 1)) ++k;
  return k;
}

PadicWitness make_witness(const IntPolynomial& h, const BigInt& r, int exponent, std::uint64_t p) {
  PadicWitness w;
  w.exponent = exponent;
  w.modulus = big_pow(p, exponent);
  w.r = r % w.modulus;
  if (w.r < 0) w.r += w.modulus;
  if (evaluate(h, w.r) % w.modulus != 0) throw ConsistencyError("p-adic witness does not satisfy p^k | h(r)");
  return w;
}

// Level-by-level search on h itself; fills the trace and the first empty level.
void refutation_trace(const PadicContext& ctx, std::uint64_t p, bool coprime, PadicRootResult& out) {
  const std::uint64_t guard = scaled_guard(kTreeNodeGuard);
  const IntPolynomial& h = ctx.h;
  std::vector<BigInt> level;
  if (h.degree() <= 0) {
    // Nonzero constant c: every residue is a root mod p^k for k <= v_p(c).
    const int v = valuation(h.leading(), p);
    for (int k = 1; k <= v; ++k) {
      auto pk = checked_pow(p, k);
      std::uint64_t count = pk ? *pk : 0;
      if (coprime && pk) count = *pk / p * (p - 1);
      out.trace.push_back({k, count});
    }
    out.trace.push_back({v + 1, 0});
    out.refuted_exponent = v + 1;
    return;
  }
  for (std::uint64_t r : roots_mod_prime(h, p)) {
    if (!(coprime && r % p == 0)) level.emplace_back(r);
  }
  BigInt pj = p;
  for (int j = 1; j <= kHardDepthCap; ++j) {
    out.trace.push_back({j, static_cast<std::uint64_t>(level.size())});
    if (level.empty()) {
      out.refuted_exponent = j;
      return;
    }
    std::vector<BigInt> next;
    for (const BigInt& r : level) {
      const std::uint64_t c = mod_u64(evaluate(h, r) / pj, p);
      const std::uint64_t b = mod_u64(evaluate(ctx.dh, r), p);
      if (b != 0) {
        const std::uint64_t t = mulmod((p - c) % p, *invmod(b, p), p);
        next.push_back(r + pj * t);
      } else if (c == 0) {
        for (std::uint64_t t = 0; t < p; ++t) next.push_back(r + pj * t);
      }
      if (next.size() > guard) {
        out.note = "refutation trace stopped: node guard exceeded at level " + std::to_string(j + 1);
        return;
      }
    }
    level = std::move(next);
    pj *= p;
  }
  out.note = "refutation trace stopped at depth " + std::to_string(kHardDepthCap);
}

PadicRootResult padic_search(const PadicContext& ctx, std::uint64_t p, bool coprime) {
  PadicRootResult out;
  const IntPolynomial& g = ctx.g;

  // Integer roots settle the question at once.
  for (const BigInt& z : ctx.int_roots) {
    if (coprime && mod_u64(z, p) == 0) continue;
    out.verdict = PadicVerdict::has_root;
    int k = 1;
    const int kmax = std::max(1, max_exponent_fitting(p));
    while (k < kmax && big_pow(p, k) <= abs(z)) ++k;
    out.witness = make_witness(ctx.h, z, k, p);
    out.note = "integer root " + z.str();
    return out;
  }

  if (g.degree() <= 0) {
    out.verdict = PadicVerdict::no_root;
    refutation_trace(ctx, p, coprime, out);
    return out;
  }

  const int e_disc = valuation(ctx.disc, p);
  out.discriminant_valuation = e_disc;
  out.depth_cap = std::min(2 * e_disc + 1, kHardDepthCap);
  const std::uint64_t guard = scaled_guard(kTreeNodeGuard);
  const ModPoly dg_p(ctx.dg, p);

  std::vector<BigInt> level;
  for (std::uint64_t r : roots_mod_prime(g, p)) {
    if (coprime && r % p == 0) continue;
    // Simple root mod p: Hensel applies immediately.
    if (dg_p(r) != 0) {
      out.verdict = PadicVerdict::has_root;
      const BigInt gr = evaluate(g, BigInt(r));
      const int k = std::clamp(valuation_or(gr, p, max_exponent_fitting(p)), 1, std::max(1, max_exponent_fitting(p)));
      out.witness = make_witness(ctx.h, BigInt(r), k, p);
      return out;
    }
    level.emplace_back(r);
  }

  BigInt pj = p;
  for (int j = 1;; ++j) {
    if (level.empty()) {
      out.verdict = PadicVerdict::no_root;
      refutation_trace(ctx, p, coprime, out);
      return out;
    }
    for (const BigInt& r : level) {
      const BigInt gr = evaluate(g, r);
      const BigInt dr = evaluate(ctx.dg, r);
      const int e = valuation_or(dr, p, kHardDepthCap * 4);
      const int vg = valuation_or(gr, p, kHardDepthCap * 4);
      if (vg > 2 * e) {
        // A p-adic root alpha exists with alpha = r mod p^(vg - e).
        out.verdict = PadicVerdict::has_root;
        const int k = std::clamp(vg - e, 1, std::max(1, max_exponent_fitting(p)));
        out.witness = make_witness(ctx.h, r, k, p);
        return out;
      }
    }
    if (j >= out.depth_cap) {
      out.verdict = PadicVerdict::inconclusive;
      out.note = "depth cap " + std::to_string(out.depth_cap) + " reached with live nodes";
      return out;
    }
    std::vector<BigInt> next;
    for (const BigInt& r : level) {
      const std::uint64_t c = mod_u64(evaluate(g, r) / pj, p);
      const std::uint64_t b = mod_u64(evaluate(ctx.dg, r), p);
      if (b != 0) {
        next.push_back(r + pj * mulmod((p - c) % p, *invmod(b, p), p));
      } else if (c == 0) {
        for (std::uint64_t t = 0; t < p; ++t) next.push_back(r + pj * t);
      }
      if (next.size() > guard) {
        out.verdict = PadicVerdict::inconclusive;
        out.note = "node guard exceeded at level " + std::to_string(j + 1);
        return out;
      }
    }
    level = std::move(next);
    pj *= p;
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<char> composite(bound + 1, 0);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace

PadicRootResult has_padic_root(const IntPolynomial& h, std::uint64_t p, bool coprime) {
  if (!is_prime_u64(p)) throw PreconditionError("has_padic_root: " + std::to_string(p) + " is not prime");
  return padic_search(make_context(h), p, coprime);
}

IntersectivityCertificate certify(const IntPolynomial& h, InputMode mode, std::uint64_t prime_bound, int threads) {
  if (prime_bound > 1'000'000) throw PreconditionError("certify: prime bound must be at most 10^6");
  if (h.is_zero()) throw PreconditionError("certify: h must be nonzero");
  const PadicContext ctx = make_context(h);
  const bool coprime = mode == InputMode::primes;
  const std::vector<std::uint64_t> primes = primes_up_to(prime_bound);

  IntersectivityCertificate cert;
  cert.mode = mode;
  cert.prime_bound = prime_bound;

  // A refutation is ranked by its modulus p^k, so the reported obstruction is
  // the smallest modulus without an admissible root. Chunks keep early exit
  // cheap while the reduction stays deterministic.
  constexpr std::size_t kChunk = 2048;
  std::optional<BigInt> best_modulus;
  for (std::size_t start = 0; start < primes.size(); start += kChunk) {
    if (best_modulus && BigInt(primes[start]) >= *best_modulus) break;
    const std::size_t len = std::min(kChunk, primes.size() - start);
    std::vector<PadicRootResult> results(len);
    parallel_for(len, static_cast<unsigned>(std::max(1, threads)),
                 [&](std::size_t i) { results[i] = padic_search(ctx, primes[start + i], coprime); });
    for (std::size_t i = 0; i < len; ++i) {
      const std::uint64_t p = primes[start + i];
      if (best_modulus && BigInt(p) >= *best_modulus) break;
      PadicRootResult& res = results[i];
      ++cert.primes_checked;
      if (res.verdict == PadicVerdict::no_root) {
        const BigInt modulus = big_pow(p, res.refuted_exponent.value_or(kHardDepthCap + 1));
        if (!best_modulus || modulus < *best_modulus) {
          best_modulus = modulus;
          cert.status = CertificateStatus::refuted;
          cert.failing_prime = p;
          cert.failing_exponent = res.refuted_exponent;
          cert.trace = std::move(res.trace);
        }
      } else if (res.verdict == PadicVerdict::inconclusive) {
        cert.inconclusive_primes.push_back(p);
      } else {
        cert.witnesses.emplace(p, std::move(*res.witness));
      }
    }
  }
  if (best_modulus) return cert;
  cert.status = cert.inconclusive_primes.empty() ? CertificateStatus::verified : CertificateStatus::inconclusive;
  return cert;
}

std::optional<std::uint64_t> coprime_root_for_gap(const IntPolynomial& h, std::uint64_t q) {
  for (std::uint64_t r : roots_mod(h, q)) {
    if (std::gcd(r, q) == 1) return r;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> root_for_gap(const IntPolynomial& h, std::uint64_t q) {
  const auto roots = roots_mod(h, q);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

}  // namespace gaplab
