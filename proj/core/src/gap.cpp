#include "gaplab/gap.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "gaplab/modarith.hpp"
#include "gaplab/primes.hpp"

namespace gaplab {

namespace {
constexpr std::uint64_t kBoxGuard = 100'000'000;
constexpr std::uint64_t kScanGuard = 200'000'000;
constexpr std::int64_t kDenseRange = std::int64_t{1} << 22;
constexpr std::int64_t kMagnitudeLimit = std::int64_t{1} << 62;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }
}  // namespace

void SymmetricGap::validate() const {
  if (steps.empty()) throw PreconditionError("a GAP needs at least one dimension");
  if (steps.size() != widths.size()) throw PreconditionError("steps and widths must have equal length");
  BigInt total = abs(BigInt(offset));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == 0) throw PreconditionError("steps must be nonzero");
    if (widths[i] < 1) throw PreconditionError("widths must be at least 1");
    total += BigInt(widths[i]) * abs(BigInt(steps[i]));
  }
  if (total > kMagnitudeLimit) throw PreconditionError("GAP elements exceed 2^62 in magnitude");
}

BigInt SymmetricGap::box_size() const {
  BigInt b = 1;
  for (std::int64_t L : widths) b *= 2 * BigInt(L) + 1;
  return b;
}

std::int64_t SymmetricGap::reach() const {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) r += widths[i] * std::llabs(steps[i]);
  return r;
}

std::string SymmetricGap::to_string() const {
  std::string s = "{";
  if (offset != 0) s += std::to_string(offset) + " + ";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) s += " + ";
    s += std::to_string(steps[i]) + "*x" + std::to_string(i + 1);
  }
  s += " : ";
  for (std::size_t i = 0; i < widths.size(); ++i) {
    if (i > 0) s += ", ";
    s += "|x" + std::to_string(i + 1) + "| <= " + std::to_string(widths[i]);
  }
  return s + "}";
}

RepresentationTable representation_table(const SymmetricGap& A) {
  A.validate();
  if (A.box_size() > scaled_guard(kBoxGuard)) {
    throw GuardExceeded("GAP box has " + A.box_size().str() + " tuples, above the enumeration guard");
  }
  const std::int64_t R = A.reach();
  RepresentationTable table;
  if (2 * R + 1 <= kDenseRange) {
    const std::size_t range = static_cast<std::size_t>(2 * R + 1);
    std::vector<std::uint64_t> cur(range, 0), nxt(range, 0);
    std::vector<std::int64_t> support{0}, next_support;
    cur[static_cast<std::size_t>(R)] = 1;
    for (std::size_t i = 0; i < A.dims(); ++i) {
      const std::int64_t d = A.steps[i], L = A.widths[i];
      next_support.clear();
      for (std::int64_t v : support) {
        const std::uint64_t c = cur[static_cast<std::size_t>(v + R)];
        for (std::int64_t x = -L; x <= L; ++x) {
          const std::int64_t w = v + x * d;
          std::uint64_t& slot = nxt[static_cast<std::size_t>(w + R)];
          if (slot == 0) next_support.push_back(w);
          slot += c;
        }
      }
      for (std::int64_t v : support) cur[static_cast<std::size_t>(v + R)] = 0;
      std::swap(cur, nxt);
      std::swap(support, next_support);
    }
    std::sort(support.begin(), support.end());
    table.reserve(support.size());
    for (std::int64_t v : support) table.emplace_back(v + A.offset, cur[static_cast<std::size_t>(v + R)]);
    return table;
  }
  table.emplace_back(0, 1);
  for (std::size_t i = 0; i < A.dims(); ++i) {
    const std::int64_t d = A.steps[i], L = A.widths[i];
    RepresentationTable next;
    next.reserve(table.size() * static_cast<std::size_t>(2 * L + 1));
    for (const auto& [v, c] : table) {
      for (std::int64_t x = -L; x <= L; ++x) next.emplace_back(v + x * d, c);
    }
    std::sort(next.begin(), next.end());
    table.clear();
    for (const auto& [v, c] : next) {
      if (!table.empty() && table.back().first == v) {
        table.back().second += c;
      } else {
        table.emplace_back(v, c);
      }
    }
  }
  for (auto& entry : table) entry.first += A.offset;
  return table;
}

std::vector<std::int64_t> elements(const SymmetricGap& A) {
  const RepresentationTable table = representation_table(A);
  std::vector<std::int64_t> out;
  out.reserve(table.size());
  for (const auto& entry : table) out.push_back(entry.first);
  return out;
}

PropernessReport properness(const SymmetricGap& A) {
  const RepresentationTable table = representation_table(A);
  PropernessReport report;
  report.distinct_size = table.size();
  report.box_size = A.box_size();
  for (const auto& [v, c] : table) {
    const bool better = c > report.M ||
                        (c == report.M && (std::llabs(v) < std::llabs(report.witness_element) ||
                                           (std::llabs(v) == std::llabs(report.witness_element) && v < report.witness_element)));
    if (better) {
      report.M = c;
      report.witness_element = v;
    }
  }
  return report;
}

namespace {

// Suffix reaches: tail[i] = sum_{j >= i} L_j |d_j|.
std::vector<std::int64_t> tail_reach(const SymmetricGap& A) {
  std::vector<std::int64_t> tail(A.dims() + 1, 0);
  for (std::size_t i = A.dims(); i-- > 0;) tail[i] = tail[i + 1] + A.widths[i] * std::llabs(A.steps[i]);
  return tail;
}

// Coordinates x in [-L, L] with |rem - x d| <= slack.
std::pair<std::int64_t, std::int64_t> coordinate_range(std::int64_t rem, std::int64_t d, std::int64_t L,
                                                       std::int64_t slack) {
  std::int64_t lo, hi;
  if (d > 0) {
    lo = ceil_div(rem - slack, d);
    hi = floor_div(rem + slack, d);
  } else {
    lo = ceil_div(rem + slack, d);
    hi = floor_div(rem - slack, d);
  }
  return {std::max(lo, -L), std::min(hi, L)};
}

template <class Visit>
bool search(const SymmetricGap& A, const std::vector<std::int64_t>& tail, std::size_t i, std::int64_t rem,
            std::vector<std::int64_t>& x, Visit&& visit) {
  if (i == A.dims()) return rem == 0 ? visit(x) : false;
  const auto [lo, hi] = coordinate_range(rem, A.steps[i], A.widths[i], tail[i + 1]);
  for (std::int64_t xi = lo; xi <= hi; ++xi) {
    x[i] = xi;
    if (search(A, tail, i + 1, rem - xi * A.steps[i], x, visit)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<std::int64_t>> representations(const SymmetricGap& A, std::int64_t v, std::size_t limit) {
  A.validate();
  const auto tail = tail_reach(A);
  std::vector<std::vector<std::int64_t>> out;
  const BigInt target = BigInt(v) - A.offset;
  if (abs(target) > tail[0]) return out;
  std::vector<std::int64_t> x(A.dims(), 0);
  search(A, tail, 0, target.convert_to<std::int64_t>(), x, [&](const std::vector<std::int64_t>& t) {
    out.push_back(t);
    return out.size() >= limit;
  });
  return out;
}

bool contains(const SymmetricGap& A, std::int64_t v) {
  A.validate();
  const auto tail = tail_reach(A);
  const BigInt target = BigInt(v) - A.offset;
  if (abs(target) > tail[0]) return false;
  std::vector<std::int64_t> x(A.dims(), 0);
  return search(A, tail, 0, target.convert_to<std::int64_t>(), x, [](const std::vector<std::int64_t>&) { return true; });
}

AvoidanceResult avoids(const SymmetricGap& A, const IntPolynomial& h, InputMode inputs) {
  if (h.degree() < 1) throw PreconditionError("avoids: h must be nonconstant");
  const std::vector<std::int64_t> elems = elements(A);
  const std::int64_t max_abs = std::max(std::llabs(elems.front()), std::llabs(elems.back()));
  AvoidanceResult result;
  result.input_bound = magnitude_cutoff(h, max_abs);
  if (result.input_bound > scaled_guard(kScanGuard)) {
    throw GuardExceeded("input scan bound " + std::to_string(result.input_bound) + " exceeds the guard");
  }
  const Int64Evaluator eval(h);
  auto check = [&](std::int64_t n) {
    ++result.inputs_scanned;
    const auto v = eval(n);
    if (!v || *v == 0 || std::llabs(*v) > max_abs) return false;
    if (!std::binary_search(elems.begin(), elems.end(), *v)) return false;
    result.avoids = false;
    result.n = n;
    result.value = *v;
    return true;
  };
  const auto B = static_cast<std::int64_t>(result.input_bound);
  if (inputs == InputMode::integers) {
    if (check(0)) return result;
    for (std::int64_t n = 1; n <= B; ++n) {
      if (check(n) || check(-n)) return result;
    }
  } else {
    const PrimeTable table(static_cast<std::uint64_t>(std::max<std::int64_t>(B, 2)));
    for (std::uint32_t p : table.primes()) {
      if (check(p)) return result;
    }
  }
  return result;
}

SymmetricGap construct_1d_extremal(std::uint64_t N) {
  if (N < 16) throw PreconditionError("construct_1d_extremal requires N >= 16");
  if (N > (std::uint64_t{1} << 62)) throw PreconditionError("construct_1d_extremal: N too large");
  // p <= sqrt(N) and 2p >= sqrt(N), i.e. 4 p^2 >= N.
  for (std::uint64_t p = isqrt(N); p >= 2; --p) {
    if (4 * static_cast<unsigned __int128>(p) * p < N) break;
    if (!is_prime_u64(p)) continue;
    SymmetricGap A{{static_cast<std::int64_t>(p)}, {static_cast<std::int64_t>(p - 1)}, 0};
    if (!avoids(A, IntPolynomial{0, 0, 1}, InputMode::integers).avoids) {
      throw ConsistencyError("one-dimensional construction contains a nonzero square");
    }
    return A;
  }
  throw PreconditionError("no prime in [sqrt(N)/2, sqrt(N)]");
}

SymmetricGap negated(const SymmetricGap& A) {
  SymmetricGap B = A;
  for (auto& d : B.steps) d = -d;
  B.offset = -A.offset;
  return B;
}

SymmetricGap scaled(const SymmetricGap& A, std::int64_t t) {
  if (t < 1) throw PreconditionError("scale factor must be at least 1");
  SymmetricGap B = A;
  for (auto& d : B.steps) d *= t;
  B.validate();
  return B;
}

}  // namespace gaplab
