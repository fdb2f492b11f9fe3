#pragma once
// The even period space W_k^ev: rational basis extraction, diagonalization of
// the n = 2 combined-element action into Eisenstein and cuspidal eigenlines,
// the coefficient tables and correction series appearing in the closed-form
// evaluations of the three matrix-family pairings, and the two assembled
// identities relating eigenform expansions / single q-zetas to double
// q-zeta series.

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qzeta/algebra.hpp"
#include "qzeta/periodpoly.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/report.hpp"

namespace qzeta {

// dim of the weight-k space the even period space mirrors:
// floor(k/12) + (0 if k = 2 mod 12 else 1), for even k >= 4
inline int expected_even_period_dim(int k) {
  if (k < 4 || k % 2 != 0) throw DomainError("expected_even_period_dim: weight must be even, >= 4");
  return k / 12 + (k % 12 == 2 ? 0 : 1);
}

// An even element of W_k together with its leading coefficient
// L1 = [X^{k-2}] P (which the period relations force to equal -[Y^{k-2}] P).
struct PeriodData {
  HomPoly poly;
  Rational L1;

  int weight() const { return poly.weight; }
};

inline PeriodData make_period_data(HomPoly p) {
  if (!is_even_poly(p)) throw DomainError("make_period_data: polynomial must be even in Y");
  if (!is_in_Wk(p)) throw DomainError("make_period_data: polynomial fails the period relations");
  const Rational l1 = p.c.front();
  if (p.c.back() != -l1)
    throw DomainError("make_period_data: end coefficients must be antisymmetric");
  return PeriodData{std::move(p), l1};
}

// P minus its extremal part: restricted(P) = P - L1 (X^{k-2} - Y^{k-2})
inline HomPoly restricted(const PeriodData& pd) {
  HomPoly out = pd.poly;
  out.c.front() -= pd.L1;
  out.c.back() += pd.L1;
  return out;
}

// X^{k-2} - Y^{k-2}: the even period polynomial of the weight-k Eisenstein
// eigenline, normalized to leading coefficient 1
inline HomPoly eisenstein_period_poly(int k) {
  HomPoly p(k);
  p.c.front() = 1;
  p.c.back() = -1;
  return p;
}

// Coefficients q_{r,s} (r + s = k, r = 1..k-1) defined by expanding the
// restricted polynomial P0 via
//   P0(X+Y, X) = sum_{r+s=k} C(k-2, r-1) q_{r,s} X^{r-1} Y^{s-1}.
struct QrsTable {
  int k = 4;
  std::vector<Rational> v;  // v[r-1] = q_{r, k-r}

  const Rational& at(int r) const {
    if (r < 1 || r > k - 1) throw DomainError("QrsTable: index out of range");
    return v[static_cast<std::size_t>(r - 1)];
  }
};

inline QrsTable qrs_coeffs(const PeriodData& pd) {
  const int k = pd.weight();
  const HomPoly p0 = restricted(pd);
  const HomPoly a = act_matrix(p0, Mat2{1, 1, 1, 0});  // P0(X+Y, X)
  QrsTable t;
  t.k = k;
  t.v.resize(static_cast<std::size_t>(k) - 1);
  for (int r = 1; r <= k - 1; ++r) {
    const int i = k - 1 - r;  // Y-exponent of the X^{r-1} Y^{s-1} monomial
    t.v[static_cast<std::size_t>(r - 1)] =
        a.c[static_cast<std::size_t>(i)] / Rational(binomial(k - 2, r - 1));
  }
  return t;
}

// lambda = (k-1)/2 ( sum_{r+s=k, r,s odd} c_{r,s} / (r 2^{r-1})  -  L1 )
// where c_{r,s} are the monomial coefficients of the restricted polynomial
inline Rational lambda_coefficient(const PeriodData& pd) {
  const int k = pd.weight();
  const HomPoly p0 = restricted(pd);
  Rational sum = 0;
  for (int r = 3; r <= k - 3; r += 2) {
    const Rational& c = p0.c[static_cast<std::size_t>(k - r - 1)];  // X^{r-1} Y^{s-1}
    if (c == 0) continue;
    sum += c / Rational(Int(r) * pow_int(2, r - 1));
  }
  return Rational(k - 1, 2) * (sum - pd.L1);
}

// The correction series R paired with the upper-triangular family:
//   sum_{r,s odd} c_{r,s} [ sum_{j=1}^{r-1} C(r,j) B_j (k-j-1)!
//                             / (r 2^{r-j} (k-2)!) zq(k-j)
//                           - 2^{-r} zq^even(k-1) ]
// + sum_{r,s odd} c_{r,s} sum_{j=0}^{r-1} sum_{l=1}^{r-j}
//       C(r,j) C(r-j,l) (-1)^l B_j (k-j-l-1)! / (r 2^{r-j} (k-2)!) zq^odd(k-j-l)
inline QSeries correction_series(const PeriodData& pd, int N) {
  const int k = pd.weight();
  const HomPoly p0 = restricted(pd);
  const Int km2f = factorial(k - 2);
  std::map<int, Rational> plain;  // weight -> coefficient of zeta_q(weight)
  std::map<int, Rational> odd;    // weight -> coefficient of the odd-parity series
  Rational even_km1 = 0;          // coefficient of the even-parity series at k-1
  for (int r = 3; r <= k - 3; r += 2) {
    const Rational& c = p0.c[static_cast<std::size_t>(k - r - 1)];
    if (c == 0) continue;
    for (int j = 1; j <= r - 1; ++j) {
      const Rational bj = bernoulli_plus(j);
      if (bj == 0) continue;
      plain[k - j] += c * Rational(binomial(r, j)) * bj *
                      make_rational(factorial(k - j - 1), Int(r) * pow_int(2, r - j) * km2f);
    }
    even_km1 += c * make_rational(1, pow_int(2, r));
    for (int j = 0; j <= r - 1; ++j) {
      const Rational bj = bernoulli_plus(j);
      if (bj == 0) continue;
      for (int l = 1; l <= r - j; ++l) {
        const Int sign = (l % 2) ? -1 : 1;
        odd[k - j - l] += c * Rational(sign * binomial(r, j) * binomial(r - j, l)) * bj *
                          make_rational(factorial(k - j - l - 1), Int(r) * pow_int(2, r - j) * km2f);
      }
    }
  }
  QSeries out(N);
  for (const auto& [w, coef] : plain)
    if (coef != 0) out = series_add(out, series_scale(coef, zeta_q(w, N)));
  if (even_km1 != 0)
    out = series_sub(out, series_scale(even_km1, zeta_q_parity(k - 1, Parity::Even, N)));
  for (const auto& [w, coef] : odd)
    if (coef != 0) out = series_add(out, series_scale(coef, zeta_q_parity(w, Parity::Odd, N)));
  return out;
}

// The single-zeta correction in the 2^{k-1}-weighted sum identity:
//   E = 2^{k-2} zq(k-1) - 2^{k-2}/(k-2) q d/dq zq(k-2)
//       + sum_{j=2}^{k-2} 2^j B_j / j! zq(k-j)
//       + sum_{j=0}^{k-2} sum_{l=1}^{k-1-j, (j,l) != (0,1)}
//             (-1)^l 2^j B_j / (j! l!) zq^odd(k-j-l)
inline QSeries qsum_correction(int k, int N) {
  if (k < 4 || k % 2 != 0) throw DomainError("qsum_correction: weight must be even and >= 4");
  QSeries out = series_scale(Rational(pow_int(2, k - 2)), zeta_q(k - 1, N));
  out = series_sub(out, series_scale(make_rational(pow_int(2, k - 2), k - 2),
                                     q_derivative(zeta_q(k - 2, N))));
  for (int j = 2; j <= k - 2; ++j) {
    const Rational bj = bernoulli_plus(j);
    if (bj == 0) continue;
    out = series_add(out, series_scale(bj * make_rational(pow_int(2, j), factorial(j)),
                                       zeta_q(k - j, N)));
  }
  std::map<int, Rational> odd;
  for (int j = 0; j <= k - 2; ++j) {
    const Rational bj = bernoulli_plus(j);
    if (bj == 0) continue;
    for (int l = 1; l <= k - 1 - j; ++l) {
      if (j == 0 && l == 1) continue;
      const Int sign = (l % 2) ? -1 : 1;
      odd[k - j - l] += bj * make_rational(sign * pow_int(2, j), factorial(j) * factorial(l));
    }
  }
  for (const auto& [w, coef] : odd)
    if (coef != 0) out = series_add(out, series_scale(coef, zeta_q_parity(w, Parity::Odd, N)));
  return out;
}

// ---- closed forms for the per-family pairing series ------------------

// determinant family against a restricted polynomial:
//   sum_n <P0, T1_n> q^n = -2 (k-2)! sum_{r,s>=2} q_{r,s} zhat(r,s)
inline QSeries t1_series_closed(const PeriodData& pd, int N) {
  const int k = pd.weight();
  const QrsTable q = qrs_coeffs(pd);
  QSeries acc(N);
  for (int r = 2; r <= k - 2; ++r) {
    if (q.at(r) == 0) continue;
    acc = series_add(acc, series_scale(q.at(r), zeta_hat_q(r, k - r, N)));
  }
  return series_scale(Rational(-2 * factorial(k - 2)), acc);
}

// upper-triangular family against a restricted polynomial:
//   sum_n <P0, T2_n> q^n = (sum_{r,s odd} c_{r,s}/(r 2^{r-1})) (k-1)! zq(k)
//                          + 2 (k-2)! R
inline QSeries t2_series_closed(const PeriodData& pd, int N) {
  const int k = pd.weight();
  const HomPoly p0 = restricted(pd);
  Rational head = 0;
  for (int r = 3; r <= k - 3; r += 2) {
    const Rational& c = p0.c[static_cast<std::size_t>(k - r - 1)];
    if (c == 0) continue;
    head += c / Rational(Int(r) * pow_int(2, r - 1));
  }
  QSeries out = series_scale(head * Rational(factorial(k - 1)), zeta_q(k, N));
  return series_add(out, series_scale(Rational(2 * factorial(k - 2)),
                                      correction_series(pd, N)));
}

// determinant family against the power difference Y^{k-2} - X^{k-2}:
//   sum_n <Y^{k-2} - X^{k-2}, T1_n> q^n = 2 (k-2)! sum_{r>=1, s>=2} zhat(r,s)
inline QSeries t1_series_closed_power_diff(int k, int N) {
  if (k < 4 || k % 2 != 0) throw DomainError("t1_series_closed_power_diff: bad weight");
  QSeries acc(N);
  for (int r = 1; r <= k - 2; ++r) acc = series_add(acc, zeta_hat_q(r, k - r, N));
  return series_scale(Rational(2 * factorial(k - 2)), acc);
}

// upper-triangular family against the power difference:
//   (k-1)! zq(k) minus the generating series of sum_{b in (-d/2, d/2]} b^{k-2}
// summed over divisor pairs, expressed through parity zetas via the
// Bernoulli closed form of power sums
inline QSeries t2_series_closed_power_diff(int k, int N) {
  if (k < 4 || k % 2 != 0) throw DomainError("t2_series_closed_power_diff: bad weight");
  QSeries out = series_scale(Rational(factorial(k - 1)), zeta_q(k, N));
  // even d: window sum = 2 F(d/2) - (d/2)^{k-2} with F the power-sum polynomial
  std::map<int, Rational> even_coef;
  for (int j = 0; j <= k - 2; ++j) {
    const Rational bj = bernoulli_plus(j);
    if (bj == 0) continue;
    even_coef[k - j] += Rational(binomial(k - 1, j)) * bj *
                        make_rational(factorial(k - j - 1), Int(k - 1) * pow_int(2, k - 2 - j));
  }
  even_coef[k - 1] -= make_rational(factorial(k - 2), pow_int(2, k - 2));
  for (const auto& [w, coef] : even_coef)
    if (coef != 0)
      out = series_sub(out, series_scale(coef, zeta_q_parity(w, Parity::Even, N)));
  // odd d: window sum = 2 F((d-1)/2)
  std::map<int, Rational> odd_coef;
  for (int j = 0; j <= k - 2; ++j) {
    const Rational bj = bernoulli_plus(j);
    if (bj == 0) continue;
    for (int l = 0; l <= k - 1 - j; ++l) {
      const Int sign = (l % 2) ? -1 : 1;
      odd_coef[k - j - l] += Rational(sign * binomial(k - 1, j) * binomial(k - 1 - j, l)) * bj *
                             make_rational(factorial(k - j - l - 1),
                                           Int(k - 1) * pow_int(2, k - 2 - j));
    }
  }
  for (const auto& [w, coef] : odd_coef)
    if (coef != 0)
      out = series_sub(out, series_scale(coef, zeta_q_parity(w, Parity::Odd, N)));
  return out;
}

// lower-triangular family against the power difference:
//   (k-3)! q d/dq zq(k-2) - (k-2)! zq(k-1)
inline QSeries t3_series_closed_power_diff(int k, int N) {
  if (k < 4 || k % 2 != 0) throw DomainError("t3_series_closed_power_diff: bad weight");
  return series_sub(series_scale(Rational(factorial(k - 3)), q_derivative(zeta_q(k - 2, N))),
                    series_scale(Rational(factorial(k - 2)), zeta_q(k - 1, N)));
}

// a_n = -<P, T_n>/L1; a_1 = 1 automatically since <P, T_1> = P(0,1) = -L1
inline QSeries fourier_from_pairing(const PeriodData& pd, int N) {
  if (pd.L1 == 0) throw DomainError("fourier_from_pairing: leading coefficient is zero");
  QSeries out(N);
  for (int n = 1; n <= N; ++n)
    out.at(n) = -pairing(pd.poly, hecke_element(n)) / pd.L1;
  return out;
}

// ---- eigen decomposition of the n = 2 action -------------------------

enum class EigenSource { Eisenstein, CuspRational, File };

inline const char* to_string(EigenSource s) {
  switch (s) {
    case EigenSource::Eisenstein: return "eisenstein";
    case EigenSource::CuspRational: return "cusp-rational";
    case EigenSource::File: return "file";
  }
  return "file";
}

struct EigenformRecord {
  EigenSource source = EigenSource::File;
  PeriodData pd;
  Rational a2;      // eigenvalue of the n = 2 combined element
  QSeries fourier;  // normalized eigenvalue sequence, a_1 = 1

  int weight() const { return pd.weight(); }
};

namespace detail {

using RatMatrix = std::vector<std::vector<Rational>>;

// in-place reduced row echelon form; returns the pivot column of each
// pivot row in order
inline std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

// scale a rational vector to primitive integer entries, first nonzero > 0;
// returns the multiplier used
inline Rational primitive_scale(const std::vector<Rational>& v) {
  Int lcm_den = 1, gcd_num = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    lcm_den = boost::multiprecision::lcm(lcm_den, Int(boost::multiprecision::denominator(x)));
  }
  for (const auto& x : v) {
    if (x == 0) continue;
    Int scaled = Int(boost::multiprecision::numerator(x)) *
                 (lcm_den / Int(boost::multiprecision::denominator(x)));
    gcd_num = boost::multiprecision::gcd(gcd_num, scaled);
  }
  if (gcd_num == 0) throw DomainError("primitive_scale: zero vector");
  Rational mult = make_rational(lcm_den, gcd_num);
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x * mult < 0) mult = -mult;
    break;
  }
  return mult;
}

// characteristic polynomial (monic, c[i] multiplies x^i) via the
// trace-recursion method
inline std::vector<Rational> char_poly(const RatMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix acc(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1;  // N_0 = I
  auto mat_mul = [n](const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) {
        if (a[i][t] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][t] * b[t][j];
      }
    return r;
  };
  for (std::size_t step = 1; step <= n; ++step) {
    acc = mat_mul(m, acc);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += acc[i][i];
    const Rational coef = -tr / Rational(static_cast<int>(step));
    c[n - step] = coef;
    if (step < n)
      for (std::size_t i = 0; i < n; ++i) acc[i][i] += coef;
  }
  return c;
}

inline std::string poly_to_string(const std::vector<Rational>& c) {
  std::string out;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Rational& v = c[static_cast<std::size_t>(i)];
    if (v == 0 && !(i == 0 && out.empty())) continue;
    const bool neg = v < 0;
    const Rational av = neg ? Rational(-v) : v;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    const bool unit = av == 1 && i > 0;
    if (!unit) out += rational_to_string(av);
    if (i > 0) {
      if (!unit) out += "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

// divide a monic polynomial by (x - root); throws if the division leaves a
// remainder
inline std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& root) {
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) {
    carry = c[static_cast<std::size_t>(i)] + carry * root;
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  const Rational rem = c[0] + carry * root;
  if (rem != 0) throw std::logic_error("deflate: expected eigenvalue is not a root");
  return q;
}

}  // namespace detail

// Deterministic rational basis of the even part of W_k, each vector scaled
// to primitive integer coefficients with positive leading entry. Throws if
// the dimension differs from the expected one.
inline std::vector<HomPoly> wk_even_basis(int k) {
  const int expected = expected_even_period_dim(k);
  const int deg = k - 2;
  std::vector<int> slots;  // even Y-exponents
  for (int i = 0; i <= deg; i += 2) slots.push_back(i);
  const std::size_t m = slots.size();
  // constraint rows: coefficients of P|(1+S) and P|(1+U+U^2) per basis slot
  detail::RatMatrix a(2 * static_cast<std::size_t>(deg + 1),
                      std::vector<Rational>(m, 0));
  const Mat2 u2 = kMatU * kMatU;
  for (std::size_t j = 0; j < m; ++j) {
    HomPoly e(k);
    e.c[static_cast<std::size_t>(slots[j])] = 1;
    const HomPoly r1 = poly_add(e, act_matrix(e, kMatS));
    const HomPoly r2 = poly_add(e, poly_add(act_matrix(e, kMatU), act_matrix(e, u2)));
    for (int i = 0; i <= deg; ++i) {
      a[static_cast<std::size_t>(i)][j] = r1.c[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(deg + 1 + i)][j] = r2.c[static_cast<std::size_t>(i)];
    }
  }
  const std::vector<int> pivots = detail::rref(a);
  std::vector<bool> is_pivot(m, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<HomPoly> basis;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> coords(m, 0);
    coords[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      coords[static_cast<std::size_t>(pivots[r])] = -a[r][f];
    const Rational mult = detail::primitive_scale(coords);
    HomPoly p(k);
    for (std::size_t j = 0; j < m; ++j)
      p.c[static_cast<std::size_t>(slots[j])] = coords[j] * mult;
    if (!is_in_Wk(p)) throw std::logic_error("wk_even_basis: candidate fails the relations");
    basis.push_back(std::move(p));
  }
  if (static_cast<int>(basis.size()) != expected)
    throw std::logic_error("wk_even_basis: dimension " + std::to_string(basis.size()) +
                           " does not match expected " + std::to_string(expected));
  return basis;
}

// Split W_k^ev into the action's eigenlines for even 4 <= k <= 22 (the range
// where all eigenvalues are rational). The Eisenstein record comes first,
// normalized to leading coefficient 1; the cuspidal record (when present) is
// scaled so its restricted part is primitive-integer with positive leading
// coefficient. Each record carries the eigenvalue sequence to order nmax.
inline std::vector<EigenformRecord> eigen_split(int k, int nmax = 30) {
  if (k < 4 || k % 2 != 0) throw DomainError("eigen_split: weight must be even and >= 4");
  if (nmax < 1) throw DomainError("eigen_split: nmax must be >= 1");
  const std::vector<HomPoly> basis = wk_even_basis(k);
  const std::size_t dim = basis.size();
  const int deg = k - 2;
  const HeckeElement t2 = hecke_element(2);

  // action matrix in basis coordinates: solve [basis columns | image columns]
  detail::RatMatrix aug(static_cast<std::size_t>(deg + 1),
                        std::vector<Rational>(2 * dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    const HomPoly img = act_element(basis[j], t2);
    for (int i = 0; i <= deg; ++i) {
      aug[static_cast<std::size_t>(i)][j] = basis[j].c[static_cast<std::size_t>(i)];
      aug[static_cast<std::size_t>(i)][dim + j] = img.c[static_cast<std::size_t>(i)];
    }
  }
  const std::vector<int> pivots = detail::rref(aug);
  if (pivots.size() != dim)
    throw std::logic_error("eigen_split: basis is not independent");
  for (int p : pivots)
    if (p >= static_cast<int>(dim))
      throw std::logic_error("eigen_split: action does not preserve the space");
  detail::RatMatrix action(dim, std::vector<Rational>(dim, 0));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t j = 0; j < dim; ++j)
      action[static_cast<std::size_t>(pivots[r])][j] = aug[r][dim + j];

  const std::vector<Rational> charpoly = detail::char_poly(action);
  const Rational eis_eigenvalue = Rational(1) + Rational(pow_int(2, k - 1));
  const std::vector<Rational> deflated = detail::deflate(charpoly, eis_eigenvalue);
  if (k > 22)
    throw UnsupportedRangeError(
        "eigen_split: weight " + std::to_string(k) +
            " is beyond the supported range (cuspidal eigenvalues are irrational); "
            "deflated characteristic polynomial: " + detail::poly_to_string(deflated),
        detail::poly_to_string(deflated));

  auto eigenvector = [&](const Rational& lambda) {
    detail::RatMatrix m = action;
    for (std::size_t i = 0; i < dim; ++i) m[i][i] -= lambda;
    const std::vector<int> pv = detail::rref(m);
    if (pv.size() != dim - 1)
      throw std::logic_error("eigen_split: eigenspace is not one-dimensional");
    std::vector<bool> used(dim, false);
    for (int p : pv) used[static_cast<std::size_t>(p)] = true;
    std::size_t free_col = 0;
    while (free_col < dim && used[free_col]) ++free_col;
    std::vector<Rational> coords(dim, 0);
    coords[free_col] = 1;
    for (std::size_t r = 0; r < pv.size(); ++r)
      coords[static_cast<std::size_t>(pv[r])] = -m[r][free_col];
    HomPoly p(k);
    for (std::size_t j = 0; j < dim; ++j)
      p = poly_add(p, scale_poly(coords[j], basis[j]));
    return p;
  };

  std::vector<EigenformRecord> records;

  // Eisenstein eigenline
  {
    HomPoly p = eigenvector(eis_eigenvalue);
    if (p.c.front() == 0) throw std::logic_error("eigen_split: Eisenstein leading term vanished");
    p = scale_poly(Rational(1) / p.c.front(), p);
    if (!(p == eisenstein_period_poly(k)))
      throw std::logic_error("eigen_split: unexpected Eisenstein eigenvector");
    if (!(act_element(p, t2) == scale_poly(eis_eigenvalue, p)))
      throw std::logic_error("eigen_split: Eisenstein eigen relation failed");
    PeriodData pd = make_period_data(std::move(p));
    QSeries fourier = fourier_from_pairing(pd, nmax);
    if (fourier.at(1) != 1) throw std::logic_error("eigen_split: normalization broke a_1 = 1");
    records.push_back(EigenformRecord{EigenSource::Eisenstein, std::move(pd), eis_eigenvalue,
                                      std::move(fourier)});
  }

  // cuspidal eigenline (dimension 2 cases)
  if (dim == 2) {
    const Rational a2 = -deflated[0];  // root of the deflated monic linear factor
    HomPoly p = eigenvector(a2);
    PeriodData pd0 = make_period_data(std::move(p));
    if (pd0.L1 == 0) throw std::logic_error("eigen_split: cuspidal leading value vanished");
    const HomPoly rest = restricted(pd0);
    const Rational mult = detail::primitive_scale(rest.c);
    HomPoly scaled = scale_poly(mult, pd0.poly);
    if (scaled.c.front() < 0) scaled = scale_poly(Rational(-1), scaled);
    if (!(act_element(scaled, t2) == scale_poly(a2, scaled)))
      throw std::logic_error("eigen_split: cuspidal eigen relation failed");
    PeriodData pd = make_period_data(std::move(scaled));
    QSeries fourier = fourier_from_pairing(pd, nmax);
    if (fourier.at(1) != 1) throw std::logic_error("eigen_split: normalization broke a_1 = 1");
    records.push_back(EigenformRecord{EigenSource::CuspRational, std::move(pd), a2,
                                      std::move(fourier)});
  } else if (dim > 2) {
    throw std::logic_error("eigen_split: unexpected dimension for supported weight");
  }
  return records;
}

// ---- assembled identities --------------------------------------------

// L1/(2 (k-2)!) f(q) = sum_{r,s>=2} q_{r,s} zhat(r,s) - lambda zq(k) - R
inline RelationReport check_eigenform_identity(const EigenformRecord& rec, int N) {
  Stopwatch watch;
  RelationReport rep;
  rep.check = "eigenform-expansion-identity";
  const int k = rec.weight();
  rep.params["k"] = std::to_string(k);
  rep.params["terms"] = std::to_string(N);
  rep.params["source"] = to_string(rec.source);
  const QSeries fourier =
      rec.fourier.order() >= N ? rec.fourier : fourier_from_pairing(rec.pd, N);
  QSeries lhs(N);
  for (int n = 1; n <= N; ++n) lhs.at(n) = fourier.at(n);
  lhs = series_scale(rec.pd.L1 / Rational(2 * factorial(k - 2)), lhs);

  const QrsTable q = qrs_coeffs(rec.pd);
  QSeries rhs(N);
  for (int r = 2; r <= k - 2; ++r) {
    if (q.at(r) == 0) continue;
    rhs = series_add(rhs, series_scale(q.at(r), zeta_hat_q(r, k - r, N)));
  }
  rhs = series_sub(rhs, series_scale(lambda_coefficient(rec.pd), zeta_q(k, N)));
  rhs = series_sub(rhs, correction_series(rec.pd, N));

  int bad = -1;
  if (series_equal(lhs, rhs, &bad)) {
    rep.status = CheckStatus::Pass;
  } else {
    rep.status = CheckStatus::Fail;
    rep.detail = "first mismatch at q^" + std::to_string(bad) + ": lhs=" +
                 rational_to_string(lhs.at(bad)) + " rhs=" + rational_to_string(rhs.at(bad));
  }
  rep.runtime_ms = watch.ms();
  return rep;
}

// zq(k) = 2^{k-1} sum_{r+s=k, s>=2} zhat(r,s) - E_k
inline RelationReport check_qsum_identity(int k, int N) {
  Stopwatch watch;
  RelationReport rep;
  rep.check = "weighted-sum-identity";
  rep.params["k"] = std::to_string(k);
  rep.params["terms"] = std::to_string(N);
  if (k < 4 || k % 2 != 0) throw DomainError("check_qsum_identity: weight must be even and >= 4");
  QSeries hat_sum(N);
  for (int r = 1; r <= k - 2; ++r) hat_sum = series_add(hat_sum, zeta_hat_q(r, k - r, N));
  const QSeries rhs =
      series_sub(series_scale(Rational(pow_int(2, k - 1)), hat_sum), qsum_correction(k, N));
  const QSeries lhs = zeta_q(k, N);
  int bad = -1;
  if (series_equal(lhs, rhs, &bad)) {
    rep.status = CheckStatus::Pass;
  } else {
    rep.status = CheckStatus::Fail;
    rep.detail = "first mismatch at q^" + std::to_string(bad) + ": lhs=" +
                 rational_to_string(lhs.at(bad)) + " rhs=" + rational_to_string(rhs.at(bad));
  }
  rep.runtime_ms = watch.ms();
  return rep;
}

// beta = -1/2 ( (k-1)/2 L1 + sum_{r,s odd} q_{r,s} )
inline Rational odd_relation_beta(const PeriodData& pd) {
  const int k = pd.weight();
  const QrsTable q = qrs_coeffs(pd);
  Rational sum = 0;
  for (int r = 3; r <= k - 3; r += 2) sum += q.at(r);
  return Rational(-1, 2) * (Rational(k - 1, 2) * pd.L1 + sum);
}

// coefficient data for double-precision verification of the q -> 1 limits
struct RelationCoefficients {
  int k = 4;
  std::vector<std::tuple<int, int, Rational>> terms;  // (r, s, q_{r,s}), r,s >= 2
  Rational lambda;
};

inline RelationCoefficients numeric_relation_coefficients(const PeriodData& pd) {
  RelationCoefficients rc;
  rc.k = pd.weight();
  const QrsTable q = qrs_coeffs(pd);
  for (int r = 2; r <= rc.k - 2; ++r)
    if (q.at(r) != 0) rc.terms.emplace_back(r, rc.k - r, q.at(r));
  rc.lambda = lambda_coefficient(pd);
  return rc;
}

// exact check of the two printed low-weight instances of the sum identity
inline RelationReport check_low_weight_examples(int N) {
  Stopwatch watch;
  RelationReport rep;
  rep.check = "low-weight-printed-examples";
  rep.params["terms"] = std::to_string(N);
  // weight 4: zq(4) = 8 (zhat(1,3) + zhat(2,2)) - 1/3 zq(2) - 4 zq(3)
  //                   + 1/2 zq^odd(2) + 2 q d/dq zq(2)
  QSeries rhs4 = series_scale(Rational(8),
                              series_add(zeta_hat_q(1, 3, N), zeta_hat_q(2, 2, N)));
  rhs4 = series_sub(rhs4, series_scale(Rational(1, 3), zeta_q(2, N)));
  rhs4 = series_sub(rhs4, series_scale(Rational(4), zeta_q(3, N)));
  rhs4 = series_add(rhs4, series_scale(Rational(1, 2), zeta_q_parity(2, Parity::Odd, N)));
  rhs4 = series_add(rhs4, series_scale(Rational(2), q_derivative(zeta_q(2, N))));
  // weight 6: zq(6) = 32 sum_{r=1..4} zhat(r,6-r) + 1/45 zq(2) - 1/3 zq(4)
  //                   - 16 zq(5) - 1/24 zq^odd(2) + 1/2 zq^odd(4) + 4 q d/dq zq(4)
  QSeries hat6(N);
  for (int r = 1; r <= 4; ++r) hat6 = series_add(hat6, zeta_hat_q(r, 6 - r, N));
  QSeries rhs6 = series_scale(Rational(32), hat6);
  rhs6 = series_add(rhs6, series_scale(Rational(1, 45), zeta_q(2, N)));
  rhs6 = series_sub(rhs6, series_scale(Rational(1, 3), zeta_q(4, N)));
  rhs6 = series_sub(rhs6, series_scale(Rational(16), zeta_q(5, N)));
  rhs6 = series_sub(rhs6, series_scale(Rational(1, 24), zeta_q_parity(2, Parity::Odd, N)));
  rhs6 = series_add(rhs6, series_scale(Rational(1, 2), zeta_q_parity(4, Parity::Odd, N)));
  rhs6 = series_add(rhs6, series_scale(Rational(4), q_derivative(zeta_q(4, N))));
  int bad4 = -1, bad6 = -1;
  const bool ok4 = series_equal(zeta_q(4, N), rhs4, &bad4);
  const bool ok6 = series_equal(zeta_q(6, N), rhs6, &bad6);
  if (ok4 && ok6) {
    rep.status = CheckStatus::Pass;
  } else {
    rep.status = CheckStatus::Fail;
    if (!ok4) rep.detail = "weight-4 form: first mismatch at q^" + std::to_string(bad4);
    if (!ok6) {
      if (!rep.detail.empty()) rep.detail += "; ";
      rep.detail += "weight-6 form: first mismatch at q^" + std::to_string(bad6);
    }
  }
  rep.runtime_ms = watch.ms();
  return rep;
}

}  // namespace qzeta
