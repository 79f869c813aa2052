#include "gaplab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "gaplab/modarith.hpp"

namespace gaplab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const BigInt mag = abs(c);
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial negate(const IntPolynomial& h) {
  std::vector<BigInt> c = h.coeffs();
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + negate(b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& a) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  IntPolynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    std::vector<BigInt> coeffs;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      auto [c, k] = parse_term();
      if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(k) + 1);
      coeffs[static_cast<std::size_t>(k)] += sign * c;
      first = false;
    }
    return IntPolynomial(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string read_digits() {
    std::string digits;
    while (true) {
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) break;
      digits += peek();
      ++pos_;
    }
    return digits;
  }

  std::pair<BigInt, int> parse_term() {
    skip_ws();
    if (at_end()) throw ParseError("expected a term after sign", pos_);
    BigInt c = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = BigInt(read_digits());
      has_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    if (at_end() || peek() != 'x') {
      if (has_coeff) return {c, 0};
      if (!at_end() && (peek() == '(' || peek() == ')')) {
        throw ParseError("parentheses are not supported; expand the polynomial", pos_);
      }
      throw ParseError(at_end() ? std::string("unexpected end of input")
                                : std::string("unexpected character '") + peek() + "'",
                       pos_);
    }
    ++pos_;  // 'x'
    skip_ws();
    int k = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t exp_pos = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent after '^'", exp_pos);
      if (digits.size() > 6 || std::stoi(digits) > options_.max_degree) {
        throw ParseError("degree exceeds the limit of " + std::to_string(options_.max_degree), exp_pos);
      }
      k = std::stoi(digits);
    }
    if (k > options_.max_degree) {
      throw ParseError("degree exceeds the limit of " + std::to_string(options_.max_degree), pos_);
    }
    return {c, k};
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_poly(std::string_view text, const ParseOptions& options) {
  return PolyParser(text, options).parse();
}

// ---------------------------------------------------------------------------
// Evaluation

BigInt evaluate(const IntPolynomial& h, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = h.coeffs().rbegin(); it != h.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t evaluate_mod(const IntPolynomial& h, const BigInt& x, std::uint64_t q) {
  if (q == 0) throw PreconditionError("modulus must be positive");
  return ModPoly(h, q)(mod_u64(x, q));
}

std::uint64_t evaluate_mod(const IntPolynomial& h, std::int64_t x, std::uint64_t q) {
  if (q == 0) throw PreconditionError("modulus must be positive");
  return ModPoly(h, q)(mod_i64(x, q));
}

ModPoly::ModPoly(const IntPolynomial& h, std::uint64_t q) : q_(q) {
  if (q == 0) throw PreconditionError("modulus must be positive");
  c_.reserve(h.coeffs().size());
  for (const auto& a : h.coeffs()) c_.push_back(mod_u64(a, q));
}

std::uint64_t ModPoly::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= q_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, x, q_), *it, q_);
  return acc;
}

Int64Evaluator::Int64Evaluator(const IntPolynomial& h) : h_(&h) {
  for (const auto& a : h.coeffs()) {
    auto v = to_i64(a);
    if (!v) {
      fits_ = false;
      return;
    }
    c_.push_back(*v);
  }
}

std::optional<std::int64_t> Int64Evaluator::operator()(std::int64_t x) const {
  if (!fits_) {
    return to_i64(evaluate(*h_, x));
  }
  __int128 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    __int128 next;
    if (__builtin_mul_overflow(acc, static_cast<__int128>(x), &next)) return std::nullopt;
    if (__builtin_add_overflow(next, static_cast<__int128>(*it), &acc)) return std::nullopt;
    // Keep the accumulator well inside 128 bits so the next multiply is meaningful.
    if (acc > std::numeric_limits<std::int64_t>::max() * static_cast<__int128>(1LL << 62) ||
        acc < std::numeric_limits<std::int64_t>::min() * static_cast<__int128>(1LL << 62)) {
      return to_i64(evaluate(*h_, x));
    }
  }
  if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(acc);
}

// ---------------------------------------------------------------------------
// Algebra

IntPolynomial derivative(const IntPolynomial& h) {
  if (h.degree() <= 0) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(h.degree()));
  for (int i = 1; i <= h.degree(); ++i) c[static_cast<std::size_t>(i - 1)] = h.coeff(i) * i;
  return IntPolynomial(std::move(c));
}

IntPolynomial aux_poly(const IntPolynomial& h, const BigInt& r, const BigInt& q) {
  if (q <= 0) throw PreconditionError("aux_poly: q must be positive");
  const IntPolynomial linear(std::vector<BigInt>{r, q});
  IntPolynomial shifted;
  for (int i = h.degree(); i >= 0; --i) shifted = shifted * linear + IntPolynomial::constant(h.coeff(i));
  if (shifted.coeff(0) % q != 0) {
    throw PreconditionError("aux_poly: q = " + q.str() + " does not divide h(" + r.str() + ")");
  }
  std::vector<BigInt> c = shifted.coeffs();
  for (auto& v : c) {
    if (v % q != 0) throw ConsistencyError("aux_poly: coefficient not divisible by q");
    v /= q;
  }
  return IntPolynomial(std::move(c));
}

BigInt content(const IntPolynomial& h) {
  BigInt g = 0;
  for (const auto& a : h.coeffs()) g = gcd(g, abs(a));
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& h) {
  if (h.is_zero()) return {};
  BigInt g = content(h);
  if (h.leading() < 0) g = -g;
  std::vector<BigInt> c = h.coeffs();
  for (auto& v : c) v /= g;
  return IntPolynomial(std::move(c));
}

namespace {

IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    a = lb * a - IntPolynomial::monomial(a.leading(), shift) * b;
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PreconditionError("exact_quotient: division is not exact");
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  IntPolynomial r = a;
  const BigInt lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (r.leading() % lb != 0) throw PreconditionError("exact_quotient: division is not exact");
    const BigInt c = r.leading() / lb;
    const int shift = r.degree() - b.degree();
    q[static_cast<std::size_t>(shift)] = c;
    r = r - IntPolynomial::monomial(c, shift) * b;
  }
  if (!r.is_zero()) throw PreconditionError("exact_quotient: division is not exact");
  return IntPolynomial(std::move(q));
}

IntPolynomial squarefree_part(const IntPolynomial& h) {
  if (h.is_zero()) throw PreconditionError("squarefree_part of the zero polynomial");
  if (h.degree() == 0) return IntPolynomial{1};
  const IntPolynomial g = poly_gcd(h, derivative(h));
  return primitive_part(exact_quotient(primitive_part(h), g));
}

BigInt resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (n == 0) return pow(b.leading(), static_cast<unsigned>(m));
  if (m == 0) return pow(a.leading(), static_cast<unsigned>(n));
  const int size = m + n;
  std::vector<std::vector<BigInt>> mat(static_cast<std::size_t>(size), std::vector<BigInt>(static_cast<std::size_t>(size)));
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) mat[row][row + i] = a.coeff(m - i);
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) mat[n + row][row + i] = b.coeff(n - i);
  }
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < size; ++i) {
        if (mat[i][k] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(mat[k], mat[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) / prev;
      }
    }
    prev = mat[k][k];
  }
  return sign * mat[size - 1][size - 1];
}

std::vector<BigInt> integer_roots(const IntPolynomial& h) {
  if (h.is_zero()) throw PreconditionError("integer_roots of the zero polynomial");
  std::vector<BigInt> roots;
  int v = 0;
  while (h.coeff(v) == 0) ++v;
  if (v > 0) roots.emplace_back(0);
  if (v == h.degree()) return roots;
  const IntPolynomial reduced(std::vector<BigInt>(h.coeffs().begin() + v, h.coeffs().end()));
  const BigInt c = abs(reduced.coeff(0));
  if (c > std::numeric_limits<std::uint64_t>::max()) return roots;
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [p, e] : factorize(c.convert_to<std::uint64_t>())) {
    const std::size_t base = divisors.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
    }
  }
  for (std::uint64_t d : divisors) {
    for (int s : {1, -1}) {
      const BigInt x = s * BigInt(d);
      if (evaluate(reduced, x) == 0) roots.push_back(x);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::uint64_t magnitude_cutoff(const IntPolynomial& h, const BigInt& bound) {
  const int l = h.degree();
  if (l < 1) throw PreconditionError("magnitude_cutoff requires a nonconstant polynomial");
  // Fujiwara: every complex root z of h(x) - c with |c| <= bound has
  // |z| <= 2 max_i (|a_i| / |a_l|)^(1/(l-i)), with a_0 replaced by |a_0| + bound.
  const long double lead = abs(h.leading()).convert_to<long double>();
  long double radius = 0;
  for (int i = 0; i < l; ++i) {
    BigInt a = abs(h.coeff(i));
    if (i == 0) a += abs(bound);
    if (a == 0) continue;
    const long double ratio = a.convert_to<long double>() / lead;
    radius = std::max(radius, std::pow(ratio, 1.0L / static_cast<long double>(l - i)));
  }
  const long double b = std::ceil(2.0L * radius * (1.0L + 1e-12L)) + 1.0L;
  if (b > static_cast<long double>(std::uint64_t{1} << 62)) {
    throw GuardExceeded("input range for polynomial values exceeds 2^62");
  }
  return static_cast<std::uint64_t>(b);
}

}  // namespace gaplab
