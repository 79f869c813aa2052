#include "doctest.h"
#include "oracles.hpp"

#include "gaplab/gap.hpp"
#include "gaplab/intersective.hpp"

using namespace gaplab;

namespace {

SymmetricGap random_gap(oracle::Rng& rng, int max_dims, long long max_step, long long max_width) {
  SymmetricGap A;
  const int k = static_cast<int>(rng.uniform(1, max_dims));
  for (int i = 0; i < k; ++i) {
    A.steps.push_back(rng.uniform(1, max_step));
    A.widths.push_back(rng.uniform(1, max_width));
  }
  return A;
}

oracle::Coeffs coeffs_of(const IntPolynomial& h) {
  oracle::Coeffs c;
  for (const auto& a : h.coeffs()) c.push_back(a.convert_to<long long>());
  return c;
}

}  // namespace

TEST_CASE("elements and properness examples") {
  const SymmetricGap a{{3, 5}, {1, 1}};
  CHECK(elements(a) == std::vector<std::int64_t>{-8, -5, -3, -2, 0, 2, 3, 5, 8});
  CHECK(properness(a).M == 1);
  CHECK(properness(a).is_proper());

  const SymmetricGap b{{7}, {6}};
  const auto eb = elements(b);
  CHECK(eb.size() == 13);
  CHECK(eb.front() == -42);
  CHECK(eb.back() == 42);
  CHECK(properness(b).M == 1);

  const SymmetricGap c{{1, 2}, {2, 1}};
  CHECK(elements(c) == std::vector<std::int64_t>{-4, -3, -2, -1, 0, 1, 2, 3, 4});
  const auto pc = properness(c);
  CHECK(pc.M == 3);
  CHECK(pc.witness_element == 0);
  CHECK(pc.distinct_size == 9);
  CHECK(pc.box_size == 15);
  const auto reps = representations(c, 0);
  CHECK(reps == std::vector<std::vector<std::int64_t>>{{-2, 1}, {0, 0}, {2, -1}});
}

TEST_CASE("validation") {
  CHECK_THROWS_AS((SymmetricGap{{}, {}}).validate(), PreconditionError);
  CHECK_THROWS_AS((SymmetricGap{{0}, {3}}).validate(), PreconditionError);
  CHECK_THROWS_AS((SymmetricGap{{3}, {0}}).validate(), PreconditionError);
  CHECK_THROWS_AS((SymmetricGap{{3, 4}, {1}}).validate(), PreconditionError);
  CHECK_THROWS_AS((SymmetricGap{{1LL << 61}, {4}}).validate(), PreconditionError);
  CHECK_NOTHROW((SymmetricGap{{3, 4}, {1, 2}}).validate());
}

TEST_CASE("avoidance examples") {
  const auto sq = parse_poly("x^2");
  CHECK(avoids(SymmetricGap{{11}, {10}}, sq, InputMode::integers).avoids);
  CHECK(avoids(SymmetricGap{{3, 5}, {1, 1}}, sq, InputMode::integers).avoids);
  const auto hit = avoids(SymmetricGap{{1}, {9}}, sq, InputMode::integers);
  CHECK_FALSE(hit.avoids);
  CHECK(hit.n == 1);
  CHECK(hit.value == 1);
  // squares of primes only: 4, 9, 25, 49 against multiples of 3
  const auto pr = avoids(SymmetricGap{{3}, {20}}, sq, InputMode::primes);
  CHECK_FALSE(pr.avoids);
  CHECK(pr.n == 3);
  CHECK(avoids(SymmetricGap{{3}, {20}}, parse_poly("x^2+1"), InputMode::integers).avoids);
}

TEST_CASE("one-dimensional construction") {
  const auto a = construct_1d_extremal(100);
  CHECK(a.steps == std::vector<std::int64_t>{7});
  CHECK(a.widths == std::vector<std::int64_t>{6});
  CHECK(elements(a).size() == 13);
  const auto b = construct_1d_extremal(121);
  CHECK(b.steps == std::vector<std::int64_t>{11});
  CHECK(elements(b).size() == 21);
  const auto c = construct_1d_extremal(1'000'000);
  CHECK(c.steps == std::vector<std::int64_t>{997});
  CHECK(elements(c).size() == 1993);
  CHECK_THROWS_AS(construct_1d_extremal(15), PreconditionError);
}

TEST_CASE("property: construction avoids squares and is near sqrt N") {
  oracle::Rng rng(31);
  std::vector<std::uint64_t> Ns{100, 1000, 10'000, 100'000, 1'000'000};
  for (int i = 0; i < 30; ++i) Ns.push_back(static_cast<std::uint64_t>(rng.uniform(16, 1'000'000)));
  for (auto N : Ns) {
    const auto A = construct_1d_extremal(N);
    CHECK(avoids(A, parse_poly("x^2"), InputMode::integers).avoids);
    CHECK(static_cast<double>(elements(A).size()) >= std::sqrt(static_cast<double>(N)) - 2);
    CHECK(static_cast<std::uint64_t>(A.reach()) <= N);
  }
}

TEST_CASE("property: representation tables match enumeration") {
  oracle::Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    const auto A = random_gap(rng, 4, 30, 6);
    const auto ref = oracle::representations(A.steps, A.widths);
    const auto table = representation_table(A);
    REQUIRE(table.size() == ref.size());
    std::size_t j = 0;
    std::uint64_t M = 0;
    for (const auto& [v, cnt] : ref) {
      CHECK(table[j].first == v);
      CHECK(table[j].second == cnt);
      M = std::max(M, cnt);
      ++j;
    }
    const auto pr = properness(A);
    CHECK(pr.M == M);
    CHECK(pr.distinct_size == ref.size());
    CHECK(BigInt(pr.distinct_size) <= pr.box_size);
    CHECK((BigInt(pr.distinct_size) == pr.box_size) == pr.is_proper());
    for (int t = 0; t < 20; ++t) {
      const long long v = rng.uniform(-A.reach() - 3, A.reach() + 3);
      CHECK(contains(A, v) == (ref.count(v) > 0));
    }
  }
}

TEST_CASE("property: avoidance agrees with the enumeration oracle") {
  oracle::Rng rng(33);
  const char* polys[] = {"x^2", "x^2+1", "x^3-19", "x^2+x+1", "2x^2-3", "x", "x^3-x"};
  int hits = 0, clean = 0;
  for (int i = 0; i < 200; ++i) {
    const auto A = random_gap(rng, 3, 60, 8);
    const auto h = parse_poly(polys[i % 7]);
    for (auto mode : {InputMode::integers, InputMode::primes}) {
      const auto got = avoids(A, h, mode);
      const auto ref = oracle::find_value(A.steps, A.widths, coeffs_of(h), mode == InputMode::primes);
      CHECK(got.avoids == !ref.found);
      if (ref.found) {
        ++hits;
        CHECK(got.n == ref.n);
        CHECK(got.value == ref.value);
      } else {
        ++clean;
      }
      // negating every step describes the same set
      CHECK(avoids(negated(A), h, mode).avoids == got.avoids);
    }
  }
  CHECK(hits > 20);
  CHECK(clean > 20);
}

TEST_CASE("property: scaling by a step with no root of h creates no values") {
  // if h has no root mod t then t never divides h(n), so t*A holds no nonzero value of h
  oracle::Rng rng(34);
  const char* polys[] = {"x^2+1", "x^2+x+1", "x^2-2", "x^3-19", "x^2+3"};
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    const auto h = parse_poly(polys[i % 5]);
    const auto t = rng.uniform(2, 30);
    if (!roots_mod(h, static_cast<std::uint64_t>(t)).empty()) continue;
    const auto A = random_gap(rng, 2, 20, 6);
    const auto S = scaled(A, t);
    CHECK(avoids(S, h, InputMode::integers).avoids);
    CHECK_FALSE(oracle::find_value(S.steps, S.widths, coeffs_of(h), false).found);
    ++checked;
  }
  CHECK(checked > 30);
}
