#pragma once
// Independent reference implementations used only by the test suite. These
// deliberately take different computational routes than the library (direct
// factor-by-factor products, brute-force double loops) so agreement is
// meaningful.

#include <cmath>
#include <cstdint>
#include <vector>

#include "qzeta/algebra.hpp"
#include "qzeta/qseries.hpp"

namespace oracles {

// P(q^j) * (1 - q^j)^{-rr} truncated at order N, for a polynomial P with
// zero constant term (coefficient vector indexed by power of t).
inline std::vector<qzeta::Rational> geometric_factor(const std::vector<qzeta::Rational>& p,
                                                     int rr, int j, int N) {
  std::vector<qzeta::Rational> out(static_cast<std::size_t>(N) + 1);
  for (int t = 1; t < static_cast<int>(p.size()); ++t) {
    if (p[static_cast<std::size_t>(t)] == 0) continue;
    for (int i = 0; j * (t + i) <= N; ++i)
      out[static_cast<std::size_t>(j * (t + i))] +=
          p[static_cast<std::size_t>(t)] * qzeta::Rational(qzeta::binomial(i + rr - 1, rr - 1));
  }
  return out;
}

// Single q-zeta from its product representation: sum_n Q_k(q^n)/(1-q^n)^k.
inline qzeta::QSeries zeta_q_product_form(int k, int N) {
  qzeta::QSeries out(N);
  const qzeta::EulerianPoly qk = qzeta::eulerian_poly(k);
  for (int n = 1; n <= N; ++n) {
    auto f = geometric_factor(qk.c, k, n, N);
    for (int i = 0; i <= N; ++i) out.at(i) += f[static_cast<std::size_t>(i)];
  }
  return out;
}

// Double q-zeta from its product representation:
//   sum_{0<n<m} Q_r(q^{n+m})/(1-q^{n+m})^r * Q_s(q^m)/(1-q^m)^s.
inline qzeta::QSeries zeta_hat_q_product_form(int r, int s, int N) {
  qzeta::QSeries out(N);
  const qzeta::EulerianPoly qr = qzeta::eulerian_poly(r);
  const qzeta::EulerianPoly qs = qzeta::eulerian_poly(s);
  for (int m = 2; 1 + 2 * m <= N; ++m) {
    auto f2 = geometric_factor(qs.c, s, m, N);
    for (int n = 1; n < m && n + 2 * m <= N; ++n) {
      auto f1 = geometric_factor(qr.c, r, n + m, N);
      for (int i = n + m; i <= N; ++i) {
        if (f1[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = m; i + j <= N; ++j)
          out.at(i + j) += f1[static_cast<std::size_t>(i)] * f2[static_cast<std::size_t>(j)];
      }
    }
  }
  return out;
}

// q * prod (1-q^n)^24, multiplying the 24th-power factors one at a time.
inline qzeta::QSeries eta24_factorwise(int N) {
  std::vector<qzeta::Int> acc{1};
  acc.resize(static_cast<std::size_t>(N) + 1, 0);
  const int M = N > 0 ? N - 1 : 0;
  for (int n = 1; n <= M; ++n) {
    std::vector<qzeta::Int> next(static_cast<std::size_t>(M) + 1, 0);
    for (int j = 0; 24 * 0 + n * j <= M && j <= 24; ++j) {
      const qzeta::Int cj = ((j % 2) ? -1 : 1) * qzeta::binomial(24, j);
      for (int i = 0; i + n * j <= M; ++i)
        if (acc[static_cast<std::size_t>(i)] != 0)
          next[static_cast<std::size_t>(i + n * j)] += cj * acc[static_cast<std::size_t>(i)];
    }
    acc.swap(next);
  }
  qzeta::QSeries out(N);
  for (int i = 0; i < N; ++i) out.at(i + 1) = qzeta::Rational(acc[static_cast<std::size_t>(i)]);
  return out;
}

// double-precision brute force for the shifted double zeta
// sum_{0<m<n} (m+n)^{-r} n^{-s}, truncated at n <= M, with a crude tail bound
struct BruteValue {
  double value = 0.0;
  double bound = 0.0;
};

inline BruteValue zeta_hat_brute(int r, int s, long long M) {
  double acc = 0.0;
  for (long long n = 2; n <= M; ++n) {
    double inner = 0.0;
    for (long long m = 1; m < n; ++m)
      inner += std::pow(static_cast<double>(m + n), -r);
    acc += inner * std::pow(static_cast<double>(n), -s);
  }
  // inner sum < n * n^{-r} for r >= 1 and < ln 2 + 1/M for r = 1; keep the
  // generic bound sum_{n>M} n^{1-r-s} <= M^{2-r-s}/(r+s-2)
  BruteValue out;
  out.value = acc;
  if (r == 1)
    out.bound = 0.6932 * std::pow(static_cast<double>(M), 1.0 - s) / (s - 1);
  else
    out.bound = std::pow(static_cast<double>(M), 2.0 - r - s) / (r + s - 2);
  return out;
}

enum class BrutePar { Any, Even, Odd };

inline bool par_ok(BrutePar p, long long v) {
  if (p == BrutePar::Any) return true;
  if (p == BrutePar::Even) return v % 2 == 0;
  return v % 2 != 0;
}

// classical double zeta sum_{0<m<n} m^{-r} n^{-s} with parity restrictions
inline BruteValue dzeta_brute(int r, int s, BrutePar mp, BrutePar np, long long M) {
  double prefix = 0.0, acc = 0.0;
  for (long long n = 2; n <= M; ++n) {
    if (par_ok(mp, n - 1)) prefix += std::pow(static_cast<double>(n - 1), -r);
    if (par_ok(np, n)) acc += prefix * std::pow(static_cast<double>(n), -s);
  }
  BruteValue out;
  out.value = acc;
  const double pinf = 1.7;  // > zeta(2) >= any inner prefix limit for r >= 2
  const double cap = (r == 1) ? std::log(static_cast<double>(M)) + 1.0 : pinf;
  out.bound = cap * std::pow(static_cast<double>(M), 1.0 - s) / (s - 1);
  return out;
}

// alternating double polylog sum_{0<m<n} m^{-r} n^{-s} (-1)^n by direct
// partial sums; the midpoint of the final bracket is returned
inline BruteValue li_minus1_brute(int r, int s, long long M) {
  double prefix = 0.0, acc = 0.0, prev = 0.0;
  for (long long n = 2; n <= M; ++n) {
    prefix += std::pow(static_cast<double>(n - 1), -r);
    prev = acc;
    acc += ((n % 2 == 0) ? 1.0 : -1.0) * prefix * std::pow(static_cast<double>(n), -s);
  }
  BruteValue out;
  out.value = 0.5 * (acc + prev);
  out.bound = 0.6 * std::abs(acc - prev);
  return out;
}

}  // namespace oracles
