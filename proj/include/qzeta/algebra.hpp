#pragma once
// Exact arithmetic layer: arbitrary-precision integers/rationals, small
// combinatorial helpers (factorials, binomials, Bernoulli numbers, divisor
// power sums), and 2x2 integer matrices with formal rational-coefficient
// sums of matrices sharing one determinant.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A caller violated a documented precondition (bad argument, malformed input).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The request is well-formed but outside the supported range; `detail`
// carries whatever obstruction we can report (e.g. a characteristic
// polynomial whose roots are not rational).
struct UnsupportedRangeError : std::runtime_error {
  explicit UnsupportedRangeError(const std::string& what, std::string extra = {})
      : std::runtime_error(what), detail(std::move(extra)) {}
  std::string detail;
};

inline Int pow_int(const Int& base, int e) {
  if (e < 0) throw DomainError("pow_int: negative exponent");
  Int acc = 1, b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= b;
    if (k > 1) b *= b;
  }
  return acc;
}

inline const Int& factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  thread_local std::vector<Int> cache{1};
  while (static_cast<int>(cache.size()) <= n)
    cache.push_back(cache.back() * static_cast<int>(cache.size()));
  return cache[static_cast<std::size_t>(n)];
}

inline Int binomial(int n, int r) {
  if (n < 0) throw DomainError("binomial: negative row");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Int acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

// Bernoulli numbers with B_1 = +1/2, defined by sum_{i<=m} C(m+1,i) B_i = m+1.
inline Rational bernoulli_plus(int j) {
  if (j < 0) throw DomainError("bernoulli_plus: negative index");
  thread_local std::vector<Rational> cache{1};
  while (static_cast<int>(cache.size()) <= j) {
    int m = static_cast<int>(cache.size());
    Rational acc = m + 1;
    for (int i = 0; i < m; ++i)
      acc -= Rational(binomial(m + 1, i)) * cache[static_cast<std::size_t>(i)];
    acc /= m + 1;
    cache.push_back(acc);
  }
  return cache[static_cast<std::size_t>(j)];
}

// sum of d^p over positive divisors d of n
inline Int divisor_sigma(int p, long long n) {
  if (p < 0) throw DomainError("divisor_sigma: negative power");
  if (n <= 0) throw DomainError("divisor_sigma: argument must be positive");
  Int acc = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    acc += pow_int(Int(d), p);
    long long e = n / d;
    if (e != d) acc += pow_int(Int(e), p);
  }
  return acc;
}

// num/den as a canonical rational; any sign on the denominator is folded
// into the numerator (the underlying type rejects negative denominators)
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// Deterministic text form: "num" when the denominator is 1, else "num/den".
inline std::string rational_to_string(const Rational& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "[+-]digits" or "[+-]digits/digits" with a positive denominator.
inline Rational rational_from_string(const std::string& s) {
  auto parse_int = [](const std::string& t, bool allow_sign) -> Int {
    std::size_t i = 0;
    bool negate = false;
    if (allow_sign && i < t.size() && (t[i] == '+' || t[i] == '-')) {
      negate = t[i] == '-';
      ++i;
    }
    const std::string digits = t.substr(i);
    if (digits.empty())
      throw DomainError("rational_from_string: missing digits in '" + t + "'");
    for (char ch : digits)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw DomainError("rational_from_string: bad character in '" + t + "'");
    Int v(digits);
    return negate ? Int(-v) : v;
  };
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, true));
  if (s.find('/', slash + 1) != std::string::npos)
    throw DomainError("rational_from_string: multiple '/' in '" + s + "'");
  const Int num = parse_int(s.substr(0, slash), true);
  const Int den = parse_int(s.substr(slash + 1), false);
  if (den == 0) throw DomainError("rational_from_string: zero denominator in '" + s + "'");
  return make_rational(num, den);
}

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return Mat2{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  std::string to_string() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
           std::to_string(c) + "," + std::to_string(d) + "]]";
  }
};

// Formal rational-coefficient sum of integer matrices; every matrix in the
// sum must have determinant `det`.
struct HeckeElement {
  std::int64_t det = 1;
  std::vector<std::pair<Rational, Mat2>> terms;

  explicit HeckeElement(std::int64_t n) : det(n) {
    if (n < 1) throw DomainError("HeckeElement: determinant must be positive");
  }
  void add(const Rational& coeff, const Mat2& m) {
    if (m.det() != det)
      throw DomainError("HeckeElement: determinant mismatch for " + m.to_string());
    terms.emplace_back(coeff, m);
  }
  std::size_t size() const { return terms.size(); }
};

}  // namespace qzeta
