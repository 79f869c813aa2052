#include "doctest.h"
#include "oracles.hpp"

#include <sstream>

#include "gaplab/experiments.hpp"

using namespace gaplab;

namespace {

SearchConfig one_dim(std::vector<std::uint64_t> Ns) {
  SearchConfig cfg;
  cfg.Ns = std::move(Ns);
  return cfg;
}

}  // namespace

TEST_CASE("exhaustive one-dimensional search at N = 100") {
  const auto rep = extremal_search(one_dim({100}));
  REQUIRE(rep.results.size() == 1);
  const auto& r = rep.results[0];
  REQUIRE(r.best);
  // {10x : |x| <= 9}: 10x = m^2 forces 10 | x, impossible for 0 < |x| <= 9
  CHECK(r.size == 19);
  CHECK(r.best->steps == std::vector<std::int64_t>{10});
  CHECK(r.best->widths == std::vector<std::int64_t>{9});
  CHECK(r.max_avoiding_width == 9);
  CHECK(r.max_avoiding_width * r.max_avoiding_width < 100);
  CHECK(avoids(*r.best, parse_poly("x^2"), InputMode::integers).avoids);
  // the prime construction is one of the candidates but not the best
  CHECK(elements(construct_1d_extremal(100)).size() == 13);
  CHECK(r.size >= 13);
}

TEST_CASE("exhaustive one-dimensional widths match brute force") {
  for (std::uint64_t N : {50, 100, 300, 1000}) {
    long long best_width = 0;
    std::uint64_t best_size = 0;
    for (long long d = 1; d <= static_cast<long long>(N); ++d)
      for (long long L = static_cast<long long>(N) / d; L >= 1; --L) {
        if (!oracle::find_value({d}, {L}, {0, 0, 1}, false).found) {
          best_width = std::max(best_width, L);
          best_size = std::max<std::uint64_t>(best_size, 2 * static_cast<std::uint64_t>(L) + 1);
          break;
        }
      }
    const auto rep = extremal_search(one_dim({N}));
    CHECK(rep.results[0].max_avoiding_width == best_width);
    CHECK(rep.results[0].size == best_size);
  }
}

TEST_CASE("two-dimensional search is at least as good as one dimension") {
  SearchConfig cfg;
  cfg.Ns = {200};
  cfg.dims = 2;
  const auto two = extremal_search(cfg);
  const auto one = extremal_search(one_dim({200}));
  REQUIRE(two.results[0].best);
  CHECK(two.results[0].size >= one.results[0].size);
  CHECK(two.results[0].cells == exhaustive_grid_cells(200, 2));
  CHECK(avoids(*two.results[0].best, parse_poly("x^2"), InputMode::integers).avoids);

  SearchConfig hc;
  hc.Ns = {10'000};
  hc.dims = 2;
  hc.strategy = SearchStrategy::hill_climb;
  hc.seed = 7;
  hc.budget = 3000;
  const auto climbed = extremal_search(hc);
  const auto base = extremal_search(one_dim({10'000}));
  REQUIRE(climbed.results[0].best);
  CHECK(climbed.results[0].size >= base.results[0].size);
}

TEST_CASE("configuration checks") {
  SearchConfig cfg;
  CHECK_THROWS_AS(extremal_search(cfg), PreconditionError);   // no N
  cfg.Ns = {1'000'000};
  cfg.dims = 2;
  CHECK_THROWS_AS(extremal_search(cfg), PreconditionError);   // grid too large for exhaustive
  cfg.strategy = SearchStrategy::hill_climb;
  cfg.budget = 0;
  CHECK_THROWS_AS(extremal_search(cfg), PreconditionError);
  CHECK(parse_search_strategy("random_restart_hill_climb") == SearchStrategy::hill_climb);
  CHECK(parse_search_strategy("hill-climb") == SearchStrategy::hill_climb);
  CHECK_THROWS_AS(parse_search_strategy("annealing"), PreconditionError);
}

TEST_CASE("property: hill climb is deterministic and verified") {
  SearchConfig cfg;
  cfg.Ns = {1000, 5000};
  cfg.dims = 2;
  cfg.strategy = SearchStrategy::hill_climb;
  cfg.seed = 99;
  cfg.budget = 2000;
  cfg.restarts = 6;
  cfg.filters.require_proper = true;
  cfg.filters.prime_major_step = true;
  std::vector<SearchReport> runs;
  for (int threads : {1, 3, 8}) {
    cfg.threads = threads;
    runs.push_back(extremal_search(cfg));
  }
  for (std::size_t i = 0; i < cfg.Ns.size(); ++i) {
    const auto& a = runs[0].results[i];
    REQUIRE(a.best);
    CHECK(avoids(*a.best, parse_poly("x^2"), InputMode::integers).avoids);
    CHECK(properness(*a.best).is_proper());
    CHECK(static_cast<std::uint64_t>(a.best->reach()) <= cfg.Ns[i]);
    for (std::size_t r = 1; r < runs.size(); ++r) {
      const auto& b = runs[r].results[i];
      CHECK(b.best == a.best);
      CHECK(b.size == a.size);
      CHECK(b.evaluations == a.evaluations);
    }
  }
}

TEST_CASE("property: distinct size matches enumeration") {
  oracle::Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    SymmetricGap A;
    const int k = static_cast<int>(rng.uniform(1, 3));
    for (int j = 0; j < k; ++j) {
      A.steps.push_back(rng.uniform(1, 40));
      A.widths.push_back(rng.uniform(1, 9));
    }
    CHECK(distinct_size(A) == oracle::representations(A.steps, A.widths).size());
  }
}

TEST_CASE("envelopes") {
  EnvelopeParams p;
  CHECK(envelope_value(Envelope::t1, 1e6, p) == doctest::Approx(1e5 * std::cbrt(std::log(1e6))));
  CHECK(envelope_value(Envelope::t1, 1e6, p) == doctest::Approx(2.40e5).epsilon(0.01));
  CHECK(envelope_value(Envelope::sqrt, 1e4, p) == doctest::Approx(100));

  // the one-dimensional construction against sqrt N
  std::vector<SearchResult> rows;
  for (std::uint64_t N : {100, 10'000, 1'000'000}) {
    SearchResult r;
    r.N = N;
    r.best = construct_1d_extremal(N);
    r.size = distinct_size(*r.best);
    rows.push_back(r);
  }
  const auto sq = envelope_report(rows, Envelope::sqrt);
  for (const auto& row : sq.rows) {
    CHECK(row.ratio >= 0.5);
    CHECK(row.ratio <= 1.0);
  }
  const auto t1 = envelope_report(rows, Envelope::t1);
  CHECK(t1.fitted_constant == doctest::Approx(std::max({t1.rows[0].ratio, t1.rows[1].ratio, t1.rows[2].ratio})));
  CHECK(t1.ratio_nonincreasing);

  std::ostringstream csv, plot;
  write_envelope_csv(t1, csv);
  write_plot_data(t1, plot);
  CHECK(csv.str().rfind("N,best_size,envelope,ratio,gap\n", 0) == 0);
  CHECK(csv.str().find("\n1000000,1993,") != std::string::npos);
  CHECK(plot.str().rfind("# N bestA envelope ratio", 0) == 0);

  CHECK_THROWS_AS(envelope_report({}, Envelope::t1), PreconditionError);
}

TEST_CASE("exponent reports") {
  const auto a = exponent_report(parse_poly("x^2"), 1, InputMode::integers);
  CHECK(a.t2_exact == "1/2");
  CHECK(a.t2 == doctest::Approx(0.5));
  const auto b = exponent_report(parse_poly("x^2"), 2, InputMode::integers);
  CHECK(b.t2_exact == "33/34");
  CHECK(b.t2 == doctest::Approx(33.0 / 34));
  // k = 1: 1 - c / l
  CHECK(a.t5.c_power == 1);
  CHECK(a.t5.coefficient == doctest::Approx(0.5));
  CHECK(a.t5.at(0.1) == doctest::Approx(0.95));
  // k = 2: 1 - c^2 5^{-4}
  CHECK(b.t3.c_power == 2);
  CHECK(b.t3.coefficient == doctest::Approx(1.0 / 625));
  CHECK(b.eq27.coefficient == doctest::Approx(0.5));
  CHECK(b.eq27.c_power == 2);
  const auto c = exponent_report(parse_poly("x^3"), 3, InputMode::primes);
  // 1 - 1/(3 * 33^2)
  CHECK(c.t2_exact == "3266/3267");
}
