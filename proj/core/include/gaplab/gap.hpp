#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaplab/common.hpp"
#include "gaplab/poly.hpp"

namespace gaplab {

/// {a + x_1 d_1 + ... + x_k d_k : |x_i| <= L_i}. Symmetric when a = 0.
struct SymmetricGap {
  std::vector<std::int64_t> steps;
  std::vector<std::int64_t> widths;
  std::int64_t offset = 0;

  std::size_t dims() const { return steps.size(); }
  /// Throws PreconditionError unless k >= 1, d_i != 0, L_i >= 1, and
  /// |a| + sum L_i |d_i| <= 2^62. Negative steps describe the same set as
  /// positive ones and only arise from negated().
  void validate() const;
  /// prod (2 L_i + 1)
  BigInt box_size() const;
  /// sum L_i d_i
  std::int64_t reach() const;
  std::string to_string() const;

  friend bool operator==(const SymmetricGap&, const SymmetricGap&) = default;
};

/// Sorted (value, number of representing tuples) over the whole box.
using RepresentationTable = std::vector<std::pair<std::int64_t, std::uint64_t>>;

/// Guard: the box may hold at most 10^8 tuples (times the guard scale).
RepresentationTable representation_table(const SymmetricGap& A);

/// Distinct elements, ascending.
std::vector<std::int64_t> elements(const SymmetricGap& A);

struct PropernessReport {
  std::uint64_t M = 0;                // max representation count
  std::int64_t witness_element = 0;   // attains M; smallest |v|, then smallest v
  std::uint64_t distinct_size = 0;    // |A|
  BigInt box_size;                    // prod (2 L_i + 1)
  bool is_proper() const { return M == 1; }
};

PropernessReport properness(const SymmetricGap& A);

/// Every tuple x with a + sum x_i d_i = v, lexicographic order.
std::vector<std::vector<std::int64_t>> representations(const SymmetricGap& A, std::int64_t v,
                                                       std::size_t limit = 1'000'000);

/// Membership by a pruned search over the coordinates; no enumeration guard.
bool contains(const SymmetricGap& A, std::int64_t v);

struct AvoidanceResult {
  bool avoids = true;
  std::optional<std::int64_t> n;       // input with 0 != h(n) in A
  std::optional<std::int64_t> value;   // h(n)
  std::uint64_t inputs_scanned = 0;
  std::uint64_t input_bound = 0;       // every |n| > bound has |h(n)| > max |A|
};

/// Scans every input n (or positive prime p) with |h(n)| <= max |A| in the
/// order 0, 1, -1, 2, -2, ... (primes ascending) and reports the first nonzero
/// value of h that lies in A.
AvoidanceResult avoids(const SymmetricGap& A, const IntPolynomial& h, InputMode inputs);

/// {x p : |x| <= p - 1} for the largest prime p <= sqrt(N) with p >= sqrt(N)/2.
/// Requires N >= 16. The result is checked to avoid nonzero squares.
SymmetricGap construct_1d_extremal(std::uint64_t N);

SymmetricGap negated(const SymmetricGap& A);
/// Multiplies every step by t >= 1.
SymmetricGap scaled(const SymmetricGap& A, std::int64_t t);

}  // namespace gaplab
