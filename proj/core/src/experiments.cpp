#include "gaplab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "gaplab/fourier.hpp"
#include "gaplab/modarith.hpp"
#include "gaplab/primes.hpp"

namespace gaplab {

namespace {

constexpr std::uint64_t kValueScanGuard = 200'000'000;
constexpr std::uint64_t kDetectionModulus = 10'000;
constexpr int kStall = 256;
constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7};

// Nonzero values h(n), |h(n)| <= N, sorted by |v| then v.
std::vector<std::int64_t> small_values(const IntPolynomial& h, InputMode inputs, std::uint64_t N) {
  const std::uint64_t B = magnitude_cutoff(h, BigInt(N));
  if (B > scaled_guard(kValueScanGuard)) throw GuardExceeded("value scan bound exceeds the guard");
  const Int64Evaluator eval(h);
  std::vector<std::int64_t> out;
  auto take = [&](std::int64_t n) {
    const auto v = eval(n);
    if (v && *v != 0 && static_cast<std::uint64_t>(std::llabs(*v)) <= N) out.push_back(*v);
  };
  const auto b = static_cast<std::int64_t>(B);
  if (inputs == InputMode::integers) {
    for (std::int64_t n = -b; n <= b; ++n) take(n);
  } else {
    const PrimeTable table(std::max<std::uint64_t>(B, 2));
    for (std::uint32_t p : table.primes()) take(p);
  }
  std::sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t c) {
    return std::make_pair(std::llabs(a), a) < std::make_pair(std::llabs(c), c);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}
std::int64_t ceil_div(__int128 a, __int128 b) { return -floor_div(-a, b); }

// Membership for positive steps, O(1) in two dimensions.
bool member(const SymmetricGap& A, std::int64_t v) {
  if (A.dims() == 1) {
    const std::int64_t d = A.steps[0];
    return v % d == 0 && std::llabs(v / d) <= A.widths[0];
  }
  if (A.dims() == 2) {
    const std::int64_t d1 = A.steps[0], d2 = A.steps[1];
    const std::int64_t L1 = A.widths[0], L2 = A.widths[1];
    const std::int64_t g = std::gcd(d1, d2);
    if (v % g != 0) return false;
    const std::int64_t a = d1 / g, b = d2 / g, w = v / g;
    std::int64_t x1 = 0;
    if (b > 1) {
      const auto inv = invmod(static_cast<std::uint64_t>(a % b), static_cast<std::uint64_t>(b));
      x1 = static_cast<std::int64_t>(mulmod(mod_i64(w, static_cast<std::uint64_t>(b)), *inv, static_cast<std::uint64_t>(b)));
    }
    const std::int64_t x2 = static_cast<std::int64_t>((static_cast<__int128>(w) - static_cast<__int128>(x1) * a) / b);
    // x1 + j b in [-L1, L1], x2 - j a in [-L2, L2]
    const std::int64_t lo = std::max(ceil_div(-L1 - x1, b), ceil_div(static_cast<__int128>(x2) - L2, a));
    const std::int64_t hi = std::min(floor_div(L1 - x1, b), floor_div(static_cast<__int128>(x2) + L2, a));
    return lo <= hi;
  }
  return contains(A, v);
}

class AvoidChecker {
 public:
  AvoidChecker(const IntPolynomial& h, InputMode inputs, std::uint64_t N) : values_(small_values(h, inputs, N)) {}

  bool operator()(const SymmetricGap& A) const {
    const std::int64_t reach = A.reach();
    for (std::int64_t v : values_) {
      if (std::llabs(v) > reach) break;
      if (member(A, v)) return false;
    }
    return true;
  }
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
};

std::size_t major_index(const SymmetricGap& A) {
  std::size_t k = 0;
  __int128 best = -1;
  for (std::size_t i = 0; i < A.dims(); ++i) {
    const __int128 v = static_cast<__int128>(A.widths[i]) * A.steps[i];
    if (v >= best) {
      best = v;
      k = i;
    }
  }
  return k;
}

bool is_proper_fast(const SymmetricGap& A) {
  if (A.dims() == 1) return true;
  if (A.dims() == 2) return distinct_size(A) == A.box_size();
  return properness(A).is_proper();
}

bool passes_filters(const SymmetricGap& A, const SearchFilters& f) {
  if (f.prime_major_step && !is_prime_u64(static_cast<std::uint64_t>(A.steps[major_index(A)]))) return false;
  if (f.require_proper && !is_proper_fast(A)) return false;
  return true;
}

bool within(const SymmetricGap& A, std::uint64_t N) {
  __int128 s = 0;
  for (std::size_t i = 0; i < A.dims(); ++i) {
    if (A.steps[i] < 1 || A.widths[i] < 1) return false;
    s += static_cast<__int128>(A.steps[i]) * A.widths[i];
  }
  return s <= N;
}

// Larger |A| first, then lexicographically smaller (steps, widths).
bool better(std::uint64_t size_a, const SymmetricGap& a, std::uint64_t size_b, const SymmetricGap& b) {
  if (size_a != size_b) return size_a > size_b;
  return std::tie(a.steps, a.widths) < std::tie(b.steps, b.widths);
}

struct Candidate {
  std::optional<SymmetricGap> gap;
  std::uint64_t size = 0;
  std::uint64_t evaluations = 0;
  bool budget_exhausted = false;

  void offer(const SymmetricGap& A) {
    const std::uint64_t s = distinct_size(A);
    if (!gap || better(s, A, size, *gap)) {
      gap = A;
      size = s;
    }
  }
};

Candidate exhaustive_1d(std::uint64_t N, const AvoidChecker& check, const SearchFilters& filters,
                        std::int64_t& max_width) {
  Candidate c;
  max_width = 0;
  for (std::uint64_t d = 1; d <= N; ++d) {
    ++c.evaluations;
    auto L = static_cast<std::int64_t>(N / d);
    for (std::int64_t v : check.values()) {
      const auto av = static_cast<std::uint64_t>(std::llabs(v));
      if (av / d > static_cast<std::uint64_t>(L)) break;
      if (av % d == 0) L = std::min<std::int64_t>(L, static_cast<std::int64_t>(av / d) - 1);
    }
    if (L < 1) continue;
    max_width = std::max(max_width, L);
    const SymmetricGap A{{static_cast<std::int64_t>(d)}, {L}, 0};
    if (passes_filters(A, filters)) c.offer(A);
  }
  return c;
}

Candidate exhaustive_2d(std::uint64_t N, const AvoidChecker& check, const SearchFilters& filters) {
  Candidate c;
  const auto n = static_cast<std::int64_t>(N);
  for (std::int64_t d2 = 2; d2 < n; ++d2) {
    for (std::int64_t d1 = 1; d1 < d2 && d1 + d2 <= n; ++d1) {
      std::int64_t L2 = (n - d1) / d2;
      for (std::int64_t L1 = 1; L1 * d1 + d2 <= n; ++L1) {
        L2 = std::min(L2, (n - L1 * d1) / d2);
        SymmetricGap A{{d1, d2}, {L1, L2}, 0};
        // Avoidance and properness are both inherited by smaller widths.
        while (A.widths[1] >= 1) {
          ++c.evaluations;
          if (check(A) && (!filters.require_proper || is_proper_fast(A))) break;
          --A.widths[1];
        }
        L2 = A.widths[1];
        if (L2 < 1) break;
        while (A.widths[1] >= 1 && !passes_filters(A, filters)) --A.widths[1];
        if (A.widths[1] >= 1) c.offer(A);
      }
    }
  }
  return c;
}

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Climber {
 public:
  Climber(const SearchConfig& cfg, std::uint64_t N, const AvoidChecker& check, std::uint64_t budget, std::uint64_t stream)
      : cfg_(cfg), N_(N), check_(check), budget_(budget), rng_(mix(cfg.seed ^ mix(N) ^ mix(stream))) {}

  // Climbs from `seed` (or a random start) until no move helps for a while,
  // then starts over from a fresh random point until the budget is spent.
  Candidate run(const std::optional<SymmetricGap>& seed) {
    Candidate out;
    std::optional<SymmetricGap> cur = seed;
    if (cur && !(within(*cur, N_) && passes_filters(*cur, cfg_.filters) && eval(*cur))) cur.reset();
    while (!exhausted()) {
      for (int attempt = 0; !cur && attempt < 64 && !exhausted(); ++attempt) cur = random_start();
      if (!cur) break;
      climb(*cur, out);
      cur.reset();
    }
    out.evaluations = used_;
    out.budget_exhausted = exhausted();
    return out;
  }

 private:
  bool exhausted() const { return used_ >= budget_; }

  void climb(SymmetricGap cur, Candidate& out) {
    grow(cur);
    std::uint64_t size = distinct_size(cur);
    out.offer(cur);
    int stall = 0;
    while (stall < kStall && !exhausted()) {
      SymmetricGap next = cur;
      if (!perturb(next) || !passes_filters(next, cfg_.filters) || !eval(next)) {
        ++stall;
        continue;
      }
      grow(next);
      const std::uint64_t s = distinct_size(next);
      if (s > size) {
        cur = next;
        size = s;
        out.offer(next);
        stall = 0;
      } else {
        ++stall;
      }
    }
  }

  bool eval(const SymmetricGap& A) {
    ++used_;
    return check_(A);
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::optional<SymmetricGap> random_start() {
    const int k = cfg_.dims;
    const auto n = static_cast<std::int64_t>(N_);
    const std::int64_t top = std::max<std::int64_t>(2, n / (2 * k));
    SymmetricGap A;
    A.steps.assign(static_cast<std::size_t>(k), 1);
    A.widths.assign(static_cast<std::size_t>(k), 1);
    // A prime step in the last slot; the others below it.
    std::int64_t p = uniform(2, top);
    while (p > 2 && !is_prime_u64(static_cast<std::uint64_t>(p))) --p;
    A.steps.back() = p;
    for (int i = 0; i + 1 < k; ++i) A.steps[static_cast<std::size_t>(i)] = uniform(1, std::max<std::int64_t>(1, p - 1));
    if (!within(A, N_) || !passes_filters(A, cfg_.filters) || !eval(A)) return std::nullopt;
    return A;
  }

  // Widens each coordinate in turn as far as avoidance, the filters and the
  // ambient bound allow (all of which are monotone except the major-step filter).
  void grow(SymmetricGap& A) {
    for (std::size_t i = 0; i < A.dims() && !exhausted(); ++i) {
      std::int64_t lo = A.widths[i];
      std::int64_t step = 1;
      while (!exhausted()) {
        SymmetricGap B = A;
        B.widths[i] = lo + step;
        if (!within(B, N_) || !passes_filters(B, cfg_.filters) || !eval(B)) break;
        lo = B.widths[i];
        step *= 2;
      }
      for (step /= 2; step >= 1 && !exhausted(); step /= 2) {
        SymmetricGap B = A;
        B.widths[i] = lo + step;
        if (within(B, N_) && passes_filters(B, cfg_.filters) && eval(B)) lo = B.widths[i];
      }
      A.widths[i] = lo;
    }
  }

  bool perturb(SymmetricGap& A) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(A.dims()) - 1));
    const bool width = uniform(0, 1) == 1;
    std::int64_t& x = width ? A.widths[i] : A.steps[i];
    const auto op = uniform(0, 3);
    const auto p = static_cast<std::int64_t>(kSmallPrimes[uniform(0, 3)]);
    switch (op) {
      case 0: x += 1; break;
      case 1: x -= 1; break;
      case 2: x *= p; break;
      default:
        if (x % p != 0) return false;
        x /= p;
    }
    if (x < 1) return false;
    // Repair: shrink the widest other coordinate until the box fits in [-N, N].
    while (!within(A, N_)) {
      std::size_t j = A.dims();
      for (std::size_t m = 0; m < A.dims(); ++m) {
        if (m == i && A.dims() > 1) continue;
        if (A.widths[m] > 1 && (j == A.dims() || A.widths[m] > A.widths[j])) j = m;
      }
      if (j == A.dims()) return false;
      --A.widths[j];
    }
    return true;
  }

  const SearchConfig& cfg_;
  std::uint64_t N_;
  const AvoidChecker& check_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::mt19937_64 rng_;
};

// The 1-dim set {x d : |x| <= L} written with k coordinates.
std::optional<SymmetricGap> embed(const SymmetricGap& one, int k) {
  const std::int64_t L = one.widths[0];
  if (L < k) return std::nullopt;
  SymmetricGap A;
  A.steps.assign(static_cast<std::size_t>(k), one.steps[0]);
  A.widths.assign(static_cast<std::size_t>(k), 1);
  A.widths[0] = L - (k - 1);
  return A;
}

std::optional<bool> detection_check(const SymmetricGap& A, const SearchConfig& cfg) {
  if (A.dims() < 2 || cfg.h.leading() <= 0) return std::nullopt;
  try {
    const DetectionInstance inst = make_detection_instance(A, cfg.h, cfg.inputs);
    if (inst.dk > kDetectionModulus) return std::nullopt;
    return !detection_count(inst).positive;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(SearchStrategy s) {
  return s == SearchStrategy::exhaustive ? "exhaustive" : "hill_climb";
}

SearchStrategy parse_search_strategy(std::string_view text) {
  if (text == "exhaustive") return SearchStrategy::exhaustive;
  if (text == "hill_climb" || text == "hill-climb" || text == "random_restart_hill_climb") return SearchStrategy::hill_climb;
  throw PreconditionError("unknown strategy '" + std::string(text) + "' (expected exhaustive or hill_climb)");
}

void SearchConfig::validate() const {
  if (Ns.empty()) throw PreconditionError("search needs at least one N");
  for (auto N : Ns) {
    if (N < 2 || N > (std::uint64_t{1} << 40)) throw PreconditionError("N must lie in [2, 2^40]");
  }
  if (dims < 1 || dims > 6) throw PreconditionError("dims must lie in [1, 6]");
  if (h.degree() < 1) throw PreconditionError("h must be nonconstant");
  if (budget < 1) throw PreconditionError("budget must be at least 1");
  if (restarts < 1) throw PreconditionError("restarts must be at least 1");
  if (strategy == SearchStrategy::exhaustive) {
    if (dims > 2) throw PreconditionError("exhaustive search supports dims 1 and 2");
    for (auto N : Ns) {
      if (exhaustive_grid_cells(N, dims) > kExhaustiveCellLimit) {
        throw PreconditionError("exhaustive grid for N=" + std::to_string(N) + " exceeds 10^7 cells");
      }
    }
  }
}

std::uint64_t exhaustive_grid_cells(std::uint64_t N, int dims, std::uint64_t cap) {
  std::uint64_t cells = 0;
  if (dims == 1) {
    for (std::uint64_t d = 1; d <= N && cells < cap; ++d) cells += N / d;
    return std::min(cells, cap);
  }
  if (dims != 2) throw PreconditionError("cell count is defined for dims 1 and 2");
  for (std::uint64_t d2 = 2; d2 < N; ++d2) {
    for (std::uint64_t d1 = 1; d1 < d2 && d1 + d2 <= N; ++d1) {
      for (std::uint64_t L1 = 1; L1 * d1 + d2 <= N; ++L1) {
        cells += (N - L1 * d1) / d2;
        if (cells >= cap) return cap;
      }
    }
  }
  return cells;
}

std::uint64_t distinct_size(const SymmetricGap& A) {
  if (A.dims() == 1) return 2 * static_cast<std::uint64_t>(A.widths[0]) + 1;
  if (A.dims() == 2) {
    // Tuples differing by j (d2', -d1') collide; count the first of each chain.
    const std::uint64_t d1 = static_cast<std::uint64_t>(std::llabs(A.steps[0]));
    const std::uint64_t d2 = static_cast<std::uint64_t>(std::llabs(A.steps[1]));
    const std::uint64_t g = std::gcd(d1, d2);
    const std::uint64_t a = d1 / g, b = d2 / g;
    const std::uint64_t n1 = 2 * static_cast<std::uint64_t>(A.widths[0]) + 1;
    const std::uint64_t n2 = 2 * static_cast<std::uint64_t>(A.widths[1]) + 1;
    const std::uint64_t overlap = (n1 > b ? n1 - b : 0) * (n2 > a ? n2 - a : 0);
    return n1 * n2 - overlap;
  }
  return properness(A).distinct_size;
}

SearchReport extremal_search(const SearchConfig& cfg) {
  cfg.validate();
  SearchReport report;
  report.config = cfg;
  const auto threads = static_cast<unsigned>(std::max(1, cfg.threads));
  for (std::uint64_t N : cfg.Ns) {
    const AvoidChecker check(cfg.h, cfg.inputs, N);
    SearchResult res;
    res.N = N;
    Candidate best;
    if (cfg.strategy == SearchStrategy::exhaustive) {
      res.cells = exhaustive_grid_cells(N, cfg.dims);
      best = cfg.dims == 1 ? exhaustive_1d(N, check, cfg.filters, res.max_avoiding_width)
                           : exhaustive_2d(N, check, cfg.filters);
    } else {
      std::optional<SymmetricGap> seed;
      if (cfg.dims == 1) {
        if (N >= 16) {
          try {
            seed = construct_1d_extremal(N);
          } catch (const PreconditionError&) {
          }
        }
      } else if (exhaustive_grid_cells(N, 1) <= kExhaustiveCellLimit) {
        std::int64_t w = 0;
        const Candidate one = exhaustive_1d(N, check, {}, w);
        if (one.gap) seed = embed(*one.gap, cfg.dims);
        best.evaluations += one.evaluations;
      } else if (N >= 16) {
        seed = embed(construct_1d_extremal(N), cfg.dims);
      }
      const auto restarts = static_cast<std::size_t>(cfg.restarts);
      const std::uint64_t share = std::max<std::uint64_t>(1, cfg.budget / restarts);
      std::vector<Candidate> runs(restarts);
      parallel_for(restarts, threads, [&](std::size_t r) {
        Climber climber(cfg, N, check, share, r);
        runs[r] = climber.run(r == 0 ? seed : std::nullopt);
      });
      for (const auto& run : runs) {
        best.evaluations += run.evaluations;
        best.budget_exhausted = best.budget_exhausted || run.budget_exhausted;
        if (run.gap) best.offer(*run.gap);
      }
    }
    res.evaluations = best.evaluations;
    res.budget_exhausted = best.budget_exhausted;
    if (best.gap) {
      const AvoidanceResult oracle = avoids(*best.gap, cfg.h, cfg.inputs);
      if (!oracle.avoids) throw ConsistencyError("search produced a GAP containing h(" + std::to_string(*oracle.n) + ")");
      res.best = best.gap;
      res.size = best.size;
      res.proper = is_proper_fast(*best.gap);
      res.detection_consistent = detection_check(*best.gap, cfg);
    } else {
      res.note = "no avoiding GAP found";
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

std::string_view to_string(Envelope e) {
  switch (e) {
    case Envelope::t1: return "t1";
    case Envelope::t2: return "t2";
    case Envelope::t3: return "t3";
    case Envelope::eq27: return "eq27";
    case Envelope::sqrt: return "sqrt";
  }
  return "t1";
}

Envelope parse_envelope(std::string_view text) {
  if (text == "t1") return Envelope::t1;
  if (text == "t2") return Envelope::t2;
  if (text == "t3") return Envelope::t3;
  if (text == "eq27") return Envelope::eq27;
  if (text == "sqrt") return Envelope::sqrt;
  throw PreconditionError("unknown envelope '" + std::string(text) + "' (expected t1, t2, t3, eq27 or sqrt)");
}

double envelope_value(Envelope e, double N, const EnvelopeParams& p) {
  const double lnN = std::log(N);
  const double l = p.ell, k = p.dims;
  switch (e) {
    case Envelope::t1: return std::pow(N, 5.0 / 6.0) * std::cbrt(lnN);
    case Envelope::t2:
      return std::pow(N, 1.0 - 1.0 / (l * std::pow(std::pow(2.0, l + 2) + 1.0, k - 1))) * std::pow(6.0 * k, 2.0 * k) * lnN;
    case Envelope::t3: return std::pow(N, 1.0 - std::pow(p.c, k) * std::pow(5.0, -l * k));
    case Envelope::eq27: return std::pow(N, 1.0 - std::pow(p.c, l) / k);
    case Envelope::sqrt: return std::sqrt(N);
  }
  return 0;
}

EnvelopeReport envelope_report(const std::vector<SearchResult>& results, Envelope theorem, const EnvelopeParams& params) {
  EnvelopeReport rep;
  rep.theorem = theorem;
  rep.params = params;
  for (const auto& r : results) {
    if (!r.best) continue;
    EnvelopeRow row;
    row.N = r.N;
    row.best_size = r.size;
    row.envelope = envelope_value(theorem, static_cast<double>(r.N), params);
    const double measure = theorem == Envelope::sqrt ? (static_cast<double>(r.size) + 1.0) / 2.0 : static_cast<double>(r.size);
    row.ratio = measure / row.envelope;
    row.gap = r.best;
    rep.rows.push_back(std::move(row));
  }
  if (rep.rows.empty()) throw PreconditionError("envelope_report needs at least one search result with a GAP");
  std::sort(rep.rows.begin(), rep.rows.end(), [](const EnvelopeRow& a, const EnvelopeRow& b) { return a.N < b.N; });
  rep.fitted_constant = rep.rows[0].ratio;
  rep.min_ratio = rep.rows[0].ratio;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    rep.fitted_constant = std::max(rep.fitted_constant, rep.rows[i].ratio);
    rep.min_ratio = std::min(rep.min_ratio, rep.rows[i].ratio);
    if (i > 0 && rep.rows[i].ratio > rep.rows[i - 1].ratio) rep.ratio_nonincreasing = false;
  }
  return rep;
}

void write_envelope_csv(const EnvelopeReport& rep, std::ostream& out) {
  out << "N,best_size,envelope,ratio,gap\n";
  std::ostringstream num;
  num << std::setprecision(10);
  for (const auto& r : rep.rows) {
    num.str("");
    num << r.envelope << ',' << r.ratio;
    out << r.N << ',' << r.best_size << ',' << num.str() << ",\"" << (r.gap ? r.gap->to_string() : "") << "\"\n";
  }
}

void write_plot_data(const EnvelopeReport& rep, std::ostream& out) {
  out << "# N bestA envelope ratio (" << to_string(rep.theorem) << ")\n";
  std::ostringstream line;
  line << std::setprecision(10);
  for (const auto& r : rep.rows) {
    line.str("");
    line << r.N << ' ' << r.best_size << ' ' << r.envelope << ' ' << r.ratio << '\n';
    out << line.str();
  }
}

double SymbolicExponent::at(double c) const { return 1.0 - coefficient * std::pow(c, c_power); }

ExponentReport exponent_report(const IntPolynomial& h, int k, InputMode inputs) {
  const int l = h.degree();
  if (l < 1) throw PreconditionError("exponent_report: h must be nonconstant");
  if (k < 1) throw PreconditionError("exponent_report: k must be positive");
  ExponentReport rep;
  rep.ell = l;
  rep.k = k;
  rep.inputs = inputs;
  const BigInt base = (BigInt(1) << (l + 2)) + 1;
  BigInt den = l;
  for (int i = 1; i < k; ++i) den *= base;
  rep.t2_exact = BigInt(den - 1).str() + "/" + den.str();
  rep.t2 = 1.0 - 1.0 / den.convert_to<double>();
  const double ld = l, kd = k;
  rep.t3 = {"1 - c^k 5^(-l k)", std::pow(5.0, -ld * kd), k};
  rep.t5 = {"1 - c l^-1 (200 l^2 4^l)^(1-k)", std::pow(200.0 * ld * ld * std::pow(4.0, ld), 1.0 - kd) / ld, 1};
  rep.eq27 = {"1 - c^l / k", 1.0 / kd, l};
  return rep;
}

}  // namespace gaplab
