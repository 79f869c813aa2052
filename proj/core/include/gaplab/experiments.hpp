#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gaplab/common.hpp"
#include "gaplab/gap.hpp"
#include "gaplab/poly.hpp"

namespace gaplab {

enum class SearchStrategy { exhaustive, hill_climb };

std::string_view to_string(SearchStrategy s);
SearchStrategy parse_search_strategy(std::string_view text);

struct SearchFilters {
  bool require_proper = false;
  bool prime_major_step = false;   // the step with the largest L_i d_i must be prime
};

struct SearchConfig {
  std::vector<std::uint64_t> Ns;   // ambient bounds: sum L_i d_i <= N
  int dims = 1;
  IntPolynomial h{0, 0, 1};
  InputMode inputs = InputMode::integers;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 20000;    // avoidance evaluations per N (hill climb)
  int restarts = 8;
  SearchFilters filters;
  int threads = 1;

  /// Throws PreconditionError on an unusable configuration.
  void validate() const;
};

/// Exhaustive search is refused above this many (d, L) cells.
inline constexpr std::uint64_t kExhaustiveCellLimit = 10'000'000;

/// Number of (steps, widths) cells with 1 <= d_1 < ... and sum L_i d_i <= N,
/// counted up to `cap`. Defined for dims 1 and 2.
std::uint64_t exhaustive_grid_cells(std::uint64_t N, int dims, std::uint64_t cap = kExhaustiveCellLimit + 1);

struct SearchResult {
  std::uint64_t N = 0;
  std::optional<SymmetricGap> best;    // verified by avoids() before inclusion
  std::uint64_t size = 0;              // |A|, distinct elements
  bool proper = false;
  std::uint64_t evaluations = 0;
  std::uint64_t cells = 0;             // exhaustive only
  bool budget_exhausted = false;
  std::int64_t max_avoiding_width = 0; // k = 1 exhaustive: largest L over all avoiding (d, L)
  std::optional<bool> detection_consistent;  // detection count is zero, when within guards
  std::string note;
};

struct SearchReport {
  SearchConfig config;
  std::vector<SearchResult> results;
};

/// Best-found avoiding GAP for each N. Deterministic for a fixed seed at any
/// thread count: restarts run in parallel, each from its own seeded stream,
/// and are merged by (|A| descending, steps, widths).
SearchReport extremal_search(const SearchConfig& cfg);

/// |{x_1 d_1 + ... + x_k d_k}|; closed form for k <= 2.
std::uint64_t distinct_size(const SymmetricGap& A);

enum class Envelope { t1, t2, t3, eq27, sqrt };

std::string_view to_string(Envelope e);
Envelope parse_envelope(std::string_view text);

struct EnvelopeParams {
  int ell = 2;
  int dims = 2;
  double c = 1.0;     // stand-in for an unspecified absolute constant
};

/// t1: N^{5/6} (ln N)^{1/3}
/// t2: N^{1 - 1/(l (2^{l+2}+1)^{k-1})} (6k)^{2k} ln N
/// t3: N^{1 - c^k 5^{-l k}}
/// eq27: N^{1 - c^l / k}
/// sqrt: sqrt(N), compared against (|A| + 1) / 2
double envelope_value(Envelope e, double N, const EnvelopeParams& params);

struct EnvelopeRow {
  std::uint64_t N = 0;
  std::uint64_t best_size = 0;
  double envelope = 0;
  double ratio = 0;
  std::optional<SymmetricGap> gap;
};

struct EnvelopeReport {
  Envelope theorem = Envelope::t1;
  EnvelopeParams params;
  std::vector<EnvelopeRow> rows;
  double fitted_constant = 0;      // max ratio over the sweep
  double min_ratio = 0;
  bool ratio_nonincreasing = true;
};

/// Requires at least one result with a GAP.
EnvelopeReport envelope_report(const std::vector<SearchResult>& results, Envelope theorem,
                               const EnvelopeParams& params = {});

/// N,best_size,envelope,ratio,gap
void write_envelope_csv(const EnvelopeReport& rep, std::ostream& out);
/// Whitespace columns N bestA envelope ratio, '#' header line.
void write_plot_data(const EnvelopeReport& rep, std::ostream& out);

/// exponent = 1 - coefficient * c^{c_power}, c left symbolic.
struct SymbolicExponent {
  std::string formula;
  double coefficient = 0;
  int c_power = 0;
  double at(double c) const;
};

struct ExponentReport {
  int ell = 1;
  int k = 1;
  InputMode inputs = InputMode::integers;
  std::string t2_exact;            // "num/den"
  double t2 = 0;
  SymbolicExponent t3, t5, eq27;
};

ExponentReport exponent_report(const IntPolynomial& h, int k, InputMode inputs);

}  // namespace gaplab
