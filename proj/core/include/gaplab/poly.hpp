#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaplab/common.hpp"

namespace gaplab {

/// Integer polynomial a_0 + a_1 x + ... + a_l x^l with exact coefficients.
///
/// Coefficients are stored in ascending degree and trimmed, so the leading
/// coefficient is nonzero. The zero polynomial stores no coefficients and
/// reports degree kZeroDegree.
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(int i) const;
  /// Leading coefficient; zero for the zero polynomial.
  BigInt leading() const;

  /// Canonical text, e.g. "2*x^3-19". Parses back to the same polynomial.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const BigInt& c, const IntPolynomial& a);
IntPolynomial negate(const IntPolynomial& h);

/// Syntax error raised by parse_poly; `position` indexes the input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  int max_degree = 30;
};

/// Parses signed terms `c`, `x`, `c*x^k`, `cx^k`, `x^k` joined by + and -.
/// Whitespace is ignored; like terms are combined; parentheses are rejected.
IntPolynomial parse_poly(std::string_view text, const ParseOptions& options = {});

BigInt evaluate(const IntPolynomial& h, const BigInt& x);

/// h(x) mod q in [0, q), Horner with reduction at every step. q in [1, 2^63].
std::uint64_t evaluate_mod(const IntPolynomial& h, const BigInt& x, std::uint64_t q);
std::uint64_t evaluate_mod(const IntPolynomial& h, std::int64_t x, std::uint64_t q);

/// Coefficients reduced modulo a fixed q, for repeated evaluation in hot loops.
class ModPoly {
 public:
  ModPoly(const IntPolynomial& h, std::uint64_t q);
  std::uint64_t operator()(std::uint64_t x) const;
  std::uint64_t modulus() const { return q_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

 private:
  std::uint64_t q_;
  std::vector<std::uint64_t> c_;
};

/// 64-bit evaluation that reports overflow instead of wrapping.
class Int64Evaluator {
 public:
  explicit Int64Evaluator(const IntPolynomial& h);
  /// nullopt if a coefficient or the value does not fit in int64.
  std::optional<std::int64_t> operator()(std::int64_t x) const;

 private:
  const IntPolynomial* h_;
  bool fits_ = true;
  std::vector<std::int64_t> c_;
};

IntPolynomial derivative(const IntPolynomial& h);

/// h_q(x) = h(r + q x) / q, with exact coefficient-wise division checked.
IntPolynomial aux_poly(const IntPolynomial& h, const BigInt& r, const BigInt& q);

/// gcd of the coefficients (nonnegative); zero for the zero polynomial.
BigInt content(const IntPolynomial& h);
/// h / content(h), sign chosen so the leading coefficient is positive.
IntPolynomial primitive_part(const IntPolynomial& h);

/// gcd over Q, returned primitive with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// q with a = q * b; throws if the division is not exact over Z.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// h / gcd(h, h') made primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& h);

/// Sylvester resultant, fraction-free Bareiss elimination.
BigInt resultant(const IntPolynomial& a, const IntPolynomial& b);

/// Integer roots of h in ascending order. Complete when the constant term of
/// h / x^v fits in 64 bits; otherwise only the root 0 (if any) is reported.
std::vector<BigInt> integer_roots(const IntPolynomial& h);

/// Some B >= 0 (Fujiwara-type, not minimal) such that |h(x)| > bound for every integer |x| > B.
/// h must be nonconstant.
std::uint64_t magnitude_cutoff(const IntPolynomial& h, const BigInt& bound);

}  // namespace gaplab
