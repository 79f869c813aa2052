#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gaplab {

using BigInt = boost::multiprecision::cpp_int;

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale enumeration or size guard was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A computed identity failed to hold within its stated tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

enum class InputMode { integers, primes };

std::string_view to_string(InputMode mode);
InputMode parse_input_mode(std::string_view text);

// Multiplier applied to every enumeration guard. Process-wide, defaults to 1.
double guard_scale();
void set_guard_scale(double scale);
std::uint64_t scaled_guard(std::uint64_t base);

std::optional<std::int64_t> to_i64(const BigInt& value);
std::int64_t to_i64_checked(const BigInt& value, std::string_view what);

/// Nonnegative residue of `value` modulo `q` (q >= 1).
std::uint64_t mod_u64(const BigInt& value, std::uint64_t q);

/// p-adic valuation of a nonzero integer.
int valuation(const BigInt& value, std::uint64_t p);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
///
/// Work is split into contiguous blocks, so any body that writes only to slot i
/// produces results independent of the worker count. The exception thrown by the
/// lowest failing index is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::size_t> error_index(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      for (std::size_t i = begin; i < end; ++i) {
        try {
          body(i);
        } catch (...) {
          errors[w] = std::current_exception();
          error_index[w] = i;
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::size_t best = count;
  std::exception_ptr first;
  for (std::size_t w = 0; w < workers; ++w) {
    if (errors[w] && error_index[w] < best) {
      best = error_index[w];
      first = errors[w];
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace gaplab
