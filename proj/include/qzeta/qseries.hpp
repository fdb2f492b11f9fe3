#pragma once
// Truncated formal power series in q with exact rational coefficients, plus
// the series families used throughout: Eulerian-type numerator polynomials,
// single / double / parity-restricted q-zeta series, the weight-12
// discriminant cusp expansion, and Eisenstein series.

#include <stdexcept>
#include <utility>
#include <vector>

#include "qzeta/algebra.hpp"

namespace qzeta {

// Coefficients c[0..order] of a series truncated after q^order. All
// operations are exact; reading past the truncation throws.
class QSeries {
 public:
  explicit QSeries(int order) {
    if (order < 0) throw DomainError("QSeries: negative order");
    c_.resize(static_cast<std::size_t>(order) + 1);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& at(int n) const {
    check(n);
    return c_[static_cast<std::size_t>(n)];
  }
  Rational& at(int n) {
    check(n);
    return c_[static_cast<std::size_t>(n)];
  }

  const std::vector<Rational>& coeffs() const { return c_; }

 private:
  void check(int n) const {
    if (n < 0 || n >= static_cast<int>(c_.size()))
      throw std::out_of_range("QSeries: coefficient q^" + std::to_string(n) +
                              " beyond truncation order " + std::to_string(order()));
  }
  std::vector<Rational> c_;
};

namespace detail {
inline int common_order(const QSeries& a, const QSeries& b) {
  return a.order() < b.order() ? a.order() : b.order();
}
}  // namespace detail

inline QSeries series_add(const QSeries& a, const QSeries& b) {
  QSeries out(detail::common_order(a, b));
  for (int i = 0; i <= out.order(); ++i) out.at(i) = a.at(i) + b.at(i);
  return out;
}

inline QSeries series_sub(const QSeries& a, const QSeries& b) {
  QSeries out(detail::common_order(a, b));
  for (int i = 0; i <= out.order(); ++i) out.at(i) = a.at(i) - b.at(i);
  return out;
}

inline QSeries series_scale(const Rational& r, const QSeries& a) {
  QSeries out(a.order());
  for (int i = 0; i <= out.order(); ++i) out.at(i) = r * a.at(i);
  return out;
}

inline QSeries series_mul(const QSeries& a, const QSeries& b) {
  QSeries out(detail::common_order(a, b));
  for (int i = 0; i <= out.order(); ++i) {
    if (a.at(i) == 0) continue;
    for (int j = 0; i + j <= out.order(); ++j) {
      if (b.at(j) == 0) continue;
      out.at(i + j) += a.at(i) * b.at(j);
    }
  }
  return out;
}

// n c_n q^n: the operator q d/dq applied coefficientwise
inline QSeries q_derivative(const QSeries& a) {
  QSeries out(a.order());
  for (int i = 1; i <= out.order(); ++i) out.at(i) = i * a.at(i);
  return out;
}

inline bool series_is_zero(const QSeries& a) {
  for (int i = 0; i <= a.order(); ++i)
    if (a.at(i) != 0) return false;
  return true;
}

// index of the first nonzero coefficient, or -1 when identically zero
inline int first_nonzero(const QSeries& a) {
  for (int i = 0; i <= a.order(); ++i)
    if (a.at(i) != 0) return i;
  return -1;
}

// coefficientwise equality on the common truncation; on failure
// *first_mismatch (when non-null) receives the offending exponent
inline bool series_equal(const QSeries& a, const QSeries& b, int* first_mismatch = nullptr) {
  const int n = detail::common_order(a, b);
  for (int i = 0; i <= n; ++i)
    if (a.at(i) != b.at(i)) {
      if (first_mismatch) *first_mismatch = i;
      return false;
    }
  return true;
}

// Numerator polynomial Q_k(t) of the weighted geometric sum
//   Q_k(t) / (1-t)^k = 1/(k-1)! * sum_{d>0} d^{k-1} t^d.
// c[j] is the coefficient of t^j; the constant term is always zero, the
// degree is k-1 (1 for k = 1), and Q_k(1) = 1 for k >= 2.
struct EulerianPoly {
  int weight = 1;
  std::vector<Rational> c;

  Rational value_at_one() const {
    Rational acc = 0;
    for (const auto& v : c) acc += v;
    return acc;
  }
};

inline EulerianPoly eulerian_poly(int k) {
  if (k < 1) throw DomainError("eulerian_poly: weight must be >= 1");
  const int deg = k > 1 ? k - 1 : 1;
  const int guard = deg + k + 2;  // verify trailing coefficients vanish
  std::vector<Rational> series(static_cast<std::size_t>(guard) + 1);
  const Int kf = factorial(k - 1);
  for (int d = 1; d <= guard; ++d)
    series[static_cast<std::size_t>(d)] = Rational(pow_int(d, k - 1), kf);
  std::vector<Rational> prod(static_cast<std::size_t>(guard) + 1);
  for (int m = 0; m <= guard; ++m) {
    Rational acc = 0;
    for (int i = 0; i <= k && i <= m; ++i) {
      const Int sign_bin = ((i % 2) ? -1 : 1) * binomial(k, i);
      acc += Rational(sign_bin) * series[static_cast<std::size_t>(m - i)];
    }
    prod[static_cast<std::size_t>(m)] = acc;
  }
  for (int m = deg + 1; m <= guard; ++m)
    if (prod[static_cast<std::size_t>(m)] != 0)
      throw std::logic_error("eulerian_poly: numerator is not a polynomial");
  EulerianPoly out;
  out.weight = k;
  out.c.assign(prod.begin(), prod.begin() + deg + 1);
  return out;
}

// sum_{n>0} sigma_{k-1}(n)/(k-1)! q^n  (single q-zeta series, k >= 2)
inline QSeries zeta_q(int k, int N) {
  if (k < 2) throw DomainError("zeta_q: weight must be >= 2");
  std::vector<Int> num(static_cast<std::size_t>(N < 0 ? 0 : N) + 1);
  QSeries out(N);
  for (int d = 1; d <= N; ++d) {
    const Int dp = pow_int(d, k - 1);
    for (int n = d; n <= N; n += d) num[static_cast<std::size_t>(n)] += dp;
  }
  const Int kf = factorial(k - 1);
  for (int n = 1; n <= N; ++n) out.at(n) = Rational(num[static_cast<std::size_t>(n)], kf);
  return out;
}

enum class Parity { Even, Odd };

// like zeta_q but the divisor power sum runs over divisors of one parity;
// weight 1 is allowed here (bounded divisor counts)
inline QSeries zeta_q_parity(int k, Parity p, int N) {
  if (k < 1) throw DomainError("zeta_q_parity: weight must be >= 1");
  std::vector<Int> num(static_cast<std::size_t>(N < 0 ? 0 : N) + 1);
  QSeries out(N);
  const int start = (p == Parity::Odd) ? 1 : 2;
  for (int d = start; d <= N; d += 2) {
    const Int dp = pow_int(d, k - 1);
    for (int n = d; n <= N; n += d) num[static_cast<std::size_t>(n)] += dp;
  }
  const Int kf = factorial(k - 1);
  for (int n = 1; n <= N; ++n) out.at(n) = Rational(num[static_cast<std::size_t>(n)], kf);
  return out;
}

// Double q-zeta series: the normative quadruple sum
//   sum_{a>c>0} sum_{b,d>0} b^{r-1}/(r-1)! * d^{s-1}/(s-1)! * q^{(a+c)b + a d}.
inline QSeries zeta_hat_q(int r, int s, int N) {
  if (r < 1 || s < 1) throw DomainError("zeta_hat_q: both weights must be >= 1");
  if (N < 0) throw DomainError("zeta_hat_q: negative order");
  std::vector<Int> num(static_cast<std::size_t>(N) + 1);
  const int bmax = N / 3 > 0 ? N / 3 : 0;  // exponent >= 3b + a d >= 3b + 2
  const int dmax = N / 2 > 0 ? N / 2 : 0;  // exponent >= (a+c) b + 2d >= 2d + 3
  std::vector<Int> bpow(static_cast<std::size_t>(bmax) + 1);
  std::vector<Int> dpow(static_cast<std::size_t>(dmax) + 1);
  for (int b = 1; b <= bmax; ++b) bpow[static_cast<std::size_t>(b)] = pow_int(b, r - 1);
  for (int d = 1; d <= dmax; ++d) dpow[static_cast<std::size_t>(d)] = pow_int(d, s - 1);
  for (int a = 2; 2 * a + 1 <= N; ++a) {        // min exponent (a+1) + a at c=1,b=d=1
    for (int c = 1; c < a; ++c) {
      const int base = a + c;
      if (base + a > N) break;
      for (int b = 1; base * b + a <= N; ++b) {
        const Int& bp = bpow[static_cast<std::size_t>(b)];
        const int rem = N - base * b;
        for (int d = 1; a * d <= rem; ++d)
          num[static_cast<std::size_t>(base * b + a * d)] +=
              bp * dpow[static_cast<std::size_t>(d)];
      }
    }
  }
  const Int denom = factorial(r - 1) * factorial(s - 1);
  QSeries out(N);
  for (int n = 0; n <= N; ++n) out.at(n) = Rational(num[static_cast<std::size_t>(n)], denom);
  return out;
}

// q * prod_{n>0} (1-q^n)^24: the discriminant cusp expansion, computed from
// the Euler product followed by a square-and-multiply 24th power
inline QSeries eta_delta(int N) {
  QSeries out(N < 0 ? 0 : N);
  if (N < 1) return out;
  const int M = N - 1;
  std::vector<Int> euler(static_cast<std::size_t>(M) + 1);
  euler[0] = 1;
  for (int n = 1; n <= M; ++n)
    for (int i = M; i >= n; --i)
      euler[static_cast<std::size_t>(i)] -= euler[static_cast<std::size_t>(i - n)];
  auto mul = [M](const std::vector<Int>& x, const std::vector<Int>& y) {
    std::vector<Int> res(static_cast<std::size_t>(M) + 1);
    for (int i = 0; i <= M; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= M; ++j) {
        if (y[static_cast<std::size_t>(j)] == 0) continue;
        res[static_cast<std::size_t>(i + j)] +=
            x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      }
    }
    return res;
  };
  const auto p2 = mul(euler, euler);
  const auto p4 = mul(p2, p2);
  const auto p8 = mul(p4, p4);
  const auto p16 = mul(p8, p8);
  const auto p24 = mul(p16, p8);
  for (int n = 1; n <= N; ++n) out.at(n) = Rational(p24[static_cast<std::size_t>(n - 1)]);
  return out;
}

// -B_k/(2k) + sum_n sigma_{k-1}(n) q^n for even k >= 4
inline QSeries eisenstein_series(int k, int N) {
  if (k < 4 || k % 2 != 0) throw DomainError("eisenstein_series: weight must be even and >= 4");
  QSeries out(N);
  out.at(0) = -bernoulli_plus(k) / (2 * k);
  std::vector<Int> num(static_cast<std::size_t>(N < 0 ? 0 : N) + 1);
  for (int d = 1; d <= N; ++d) {
    const Int dp = pow_int(d, k - 1);
    for (int n = d; n <= N; n += d) num[static_cast<std::size_t>(n)] += dp;
  }
  for (int n = 1; n <= N; ++n) out.at(n) = Rational(num[static_cast<std::size_t>(n)]);
  return out;
}

}  // namespace qzeta
