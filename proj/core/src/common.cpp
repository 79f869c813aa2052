#include "gaplab/common.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace gaplab {

namespace {
std::atomic<double> g_guard_scale{1.0};
}

std::string_view to_string(InputMode mode) {
  return mode == InputMode::integers ? "integers" : "primes";
}

InputMode parse_input_mode(std::string_view text) {
  if (text == "integers") return InputMode::integers;
  if (text == "primes") return InputMode::primes;
  throw PreconditionError("unknown input mode '" + std::string(text) +
                          "' (expected integers or primes)");
}

double guard_scale() { return g_guard_scale.load(std::memory_order_relaxed); }

void set_guard_scale(double scale) {
  if (!(scale >= 0.1 && scale <= 10.0)) {
    throw PreconditionError("guard scale must lie in [0.1, 10]");
  }
  g_guard_scale.store(scale, std::memory_order_relaxed);
}

std::uint64_t scaled_guard(std::uint64_t base) {
  const long double v = static_cast<long double>(base) * guard_scale();
  if (v >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(std::floor(v));
}

std::optional<std::int64_t> to_i64(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi) return std::nullopt;
  return value.convert_to<std::int64_t>();
}

std::int64_t to_i64_checked(const BigInt& value, std::string_view what) {
  auto v = to_i64(value);
  if (!v) throw GuardExceeded(std::string(what) + " does not fit a 64-bit integer");
  return *v;
}

std::uint64_t mod_u64(const BigInt& value, std::uint64_t q) {
  if (q == 1) return 0;
  BigInt r = value % q;
  if (r < 0) r += q;
  return r.convert_to<std::uint64_t>();
}

int valuation(const BigInt& value, std::uint64_t p) {
  if (value == 0) throw PreconditionError("valuation of zero is undefined");
  int v = 0;
  BigInt x = abs(value);
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace gaplab
