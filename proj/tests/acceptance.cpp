// Acceptance suite: one line per shipped criterion, each with pinned
// tolerances, truncation orders, and runtime budgets.  Exit code 0 iff all
// criteria pass.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qzeta/numerics.hpp"
#include "qzeta/polyio.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

namespace {

int g_failures = 0;

void line(int idx, const std::string& name, bool ok, std::int64_t ms) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name << " (" << ms
            << " ms)" << std::endl;
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int idx, const std::string& name, std::int64_t budget_ms, Fn&& fn) {
  Stopwatch watch;
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  const std::int64_t ms = watch.ms();
  if (ms > budget_ms) ok = false;
  line(idx, name, ok, ms);
  if (!note.empty()) std::cout << "      exception: " << note << std::endl;
}

HomPoly weight12_example() {
  HomPoly p(12);
  p.c[0] = make_rational(36, 691);
  p.c[2] = -1;
  p.c[4] = 3;
  p.c[6] = -3;
  p.c[8] = 1;
  p.c[10] = make_rational(-36, 691);
  return p;
}

bool cusp_of(std::vector<EigenformRecord>& recs, EigenformRecord** out) {
  if (recs.size() != 2 || recs[1].source != EigenSource::CuspRational) return false;
  *out = &recs[1];
  return true;
}

}  // namespace

int main() {
  // ------------------------------------------------------------------ 1
  criterion(1, "weight-12 eigenform expansion identity, exact to q^200", 60000, [] {
    const int N = 200;
    std::vector<EigenformRecord> recs = eigen_split(12, N);
    EigenformRecord* cusp = nullptr;
    if (!cusp_of(recs, &cusp)) return false;
    bool ok = cusp->pd.poly == weight12_example();
    // identity as shipped by the library
    ok = ok && check_eigenform_identity(*cusp, N).passed();
    // eigenvalue sequence is the eta-product discriminant series
    ok = ok && series_equal(cusp->fourier, eta_delta(N));
    // assembled right-hand side, rescaled by 2(k-2)!/L1, reproduces it too
    const QrsTable q = qrs_coeffs(cusp->pd);
    QSeries rhs(N);
    for (int r = 2; r <= 10; ++r)
      if (q.at(r) != 0) rhs = series_add(rhs, series_scale(q.at(r), zeta_hat_q(r, 12 - r, N)));
    rhs = series_sub(rhs, series_scale(lambda_coefficient(cusp->pd), zeta_q(12, N)));
    rhs = series_sub(rhs, correction_series(cusp->pd, N));
    const Rational rescale = Rational(2 * factorial(10)) / cusp->pd.L1;
    ok = ok && series_equal(series_scale(rescale, rhs), eta_delta(N));
    // printed constants
    ok = ok && Rational(-630) * lambda_coefficient(cusp->pd) == make_rational(1639, 176896);
    QSeries combo = series_scale(make_rational(1, 5), zeta_q(4, N));
    combo = series_add(combo, series_scale(make_rational(40, 21), zeta_q(6, N)));
    combo = series_add(combo, series_scale(Rational(21), zeta_q(8, N)));
    combo = series_sub(combo, series_scale(make_rational(51, 128),
                                           zeta_q_parity(4, Parity::Odd, N)));
    combo = series_sub(combo, series_scale(make_rational(15, 4),
                                           zeta_q_parity(6, Parity::Odd, N)));
    combo = series_sub(combo, series_scale(make_rational(315, 8),
                                           zeta_q_parity(8, Parity::Odd, N)));
    ok = ok && series_equal(series_scale(Rational(7257600), correction_series(cusp->pd, N)),
                            combo);
    return ok;
  });

  // ------------------------------------------------------------------ 2
  criterion(2, "weighted-sum identity, exact to q^200 for k = 4..16", 120000, [] {
    const int N = 200;
    bool ok = true;
    for (int k = 4; k <= 16; k += 2) ok = ok && check_qsum_identity(k, N).passed();
    ok = ok && check_low_weight_examples(N).passed();
    return ok;
  });

  // ------------------------------------------------------------------ 3
  criterion(3, "operator eigen-relations (divisor sums and discriminant)", 60000, [] {
    bool ok = true;
    for (int k = 4; k <= 16; k += 2) {
      std::vector<EigenformRecord> recs = eigen_split(k, 20);
      if (recs.empty() || recs[0].source != EigenSource::Eisenstein) return false;
      for (int n = 1; n <= 20; ++n) {
        const HomPoly acted = act_element(recs[0].pd.poly, hecke_element(n));
        const Rational an(divisor_sigma(k - 1, n));
        ok = ok && recs[0].fourier.at(n) == an &&
             poly_is_zero(poly_sub(acted, scale_poly(an, recs[0].pd.poly)));
      }
    }
    std::vector<EigenformRecord> recs = eigen_split(12, 30);
    EigenformRecord* cusp = nullptr;
    if (!cusp_of(recs, &cusp)) return false;
    const QSeries tau = oracles::eta24_factorwise(30);
    for (int n = 1; n <= 30; ++n) {
      const HomPoly acted = act_element(cusp->pd.poly, hecke_element(n));
      ok = ok && cusp->fourier.at(n) == tau.at(n) &&
           poly_is_zero(poly_sub(acted, scale_poly(tau.at(n), cusp->pd.poly)));
    }
    ok = ok && tau.at(2) == -24 && tau.at(3) == 252 && tau.at(4) == -1472 &&
         tau.at(5) == 4830;
    return ok;
  });

  // ------------------------------------------------------------------ 4
  criterion(4, "pairing with the power difference yields divisor sums, n <= 200", 60000, [] {
    bool ok = true;
    for (int k = 4; k <= 16; k += 2) {
      const HomPoly diff = scale_poly(Rational(-1), eisenstein_period_poly(k));
      for (int n = 1; n <= 200; ++n)
        ok = ok && pairing(diff, hecke_element(n)) == Rational(divisor_sigma(k - 1, n));
    }
    return ok;
  });

  // ------------------------------------------------------------------ 5
  criterion(5, "per-family pairing series match their closed forms", 120000, [] {
    bool ok = true;
    // restricted weight-12 cusp polynomial, exact to q^200
    {
      const int N = 200;
      std::vector<EigenformRecord> recs = eigen_split(12, 2);
      EigenformRecord* cusp = nullptr;
      if (!cusp_of(recs, &cusp)) return false;
      const HomPoly p0 = restricted(cusp->pd);
      ok = ok && series_equal(pairing_series(p0, HeckePart::One, N),
                              t1_series_closed(cusp->pd, N));
      ok = ok && series_equal(pairing_series(p0, HeckePart::Two, N),
                              t2_series_closed(cusp->pd, N));
      ok = ok && series_is_zero(pairing_series(p0, HeckePart::Three, N));
    }
    // power-difference polynomial for k = 4..16, exact to q^120
    for (int k = 4; k <= 16; k += 2) {
      const int N = 120;
      const HomPoly diff = scale_poly(Rational(-1), eisenstein_period_poly(k));
      ok = ok && series_equal(pairing_series(diff, HeckePart::One, N),
                              t1_series_closed_power_diff(k, N));
      ok = ok && series_equal(pairing_series(diff, HeckePart::Two, N),
                              t2_series_closed_power_diff(k, N));
      ok = ok && series_equal(pairing_series(diff, HeckePart::Three, N),
                              t3_series_closed_power_diff(k, N));
    }
    return ok;
  });

  // ------------------------------------------------------------------ 6
  criterion(6, "numeric double zeta relation (weight 12 at 1e-8; 16..22 at 1e-6)", 60000, [] {
    RelationCoefficients frozen;
    frozen.k = 12;
    frozen.terms = {
        {3, 9, make_rational(-14, 630)}, {4, 8, make_rational(-42, 630)},
        {5, 7, make_rational(-75, 630)}, {6, 6, make_rational(-95, 630)},
        {7, 5, make_rational(-84, 630)}, {8, 4, make_rational(-42, 630)},
    };
    frozen.lambda = make_rational(-1639, 111444480);
    bool ok = verify_relation(frozen, 1e-8).passed();
    for (int k : {16, 18, 20, 22}) {
      std::vector<EigenformRecord> recs = eigen_split(k, 2);
      EigenformRecord* cusp = nullptr;
      if (!cusp_of(recs, &cusp)) return false;
      ok = ok && verify_relation(numeric_relation_coefficients(cusp->pd), 1e-6).passed();
    }
    return ok;
  });

  // ------------------------------------------------------------------ 7
  criterion(7, "numeric sum formula for k = 3..12 at 1e-6", 60000, [] {
    bool ok = true;
    for (int k = 3; k <= 12; ++k) ok = ok && sum_formula_check(k, 1e-6).passed();
    return ok;
  });

  // ------------------------------------------------------------------ 8
  criterion(8, "classical double zeta checks (odd-pair, harmonic, full sums)", 60000, [] {
    bool ok = gkz_check(12, 1e-6).passed();
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}})
      ok = ok && harmonic_product_check(a, b, 1e-7).passed();
    for (int k = 4; k <= 10; ++k) ok = ok && double_zeta_sum_check(k, 1e-7).passed();
    return ok;
  });

  // ------------------------------------------------------------------ 9
  criterion(9, "structural property suite", 120000, [] {
    bool ok = true;
    // period-space dimensions across the supported range
    for (int k = 4; k <= 22; k += 2)
      ok = ok && static_cast<int>(wk_even_basis(k).size()) == expected_even_period_dim(k);
    // the inner-sum numerator polynomials evaluate to 1 at t = 1
    for (int k = 1; k <= 12; ++k) ok = ok && eulerian_poly(k).value_at_one() == 1;
    // substitution-coefficient boundary vanishing and antisymmetry
    {
      std::vector<EigenformRecord> recs = eigen_split(12, 2);
      EigenformRecord* cusp = nullptr;
      if (!cusp_of(recs, &cusp)) return false;
      const QrsTable q = qrs_coeffs(cusp->pd);
      ok = ok && q.at(1) == 0 && q.at(2) == 0 && q.at(9) == 0 && q.at(10) == 0 &&
           q.at(11) == 0;
      const HomPoly p0 = restricted(cusp->pd);
      ok = ok && poly_is_zero(poly_add(act_matrix(p0, Mat2{1, 1, 1, 0}),
                                       act_matrix(p0, Mat2{1, 0, 1, 1})));
      // the expansion identity is invariant under rescaling the polynomial
      const PeriodData pd7 = make_period_data(scale_poly(Rational(7), cusp->pd.poly));
      QSeries fourier7 = fourier_from_pairing(pd7, 40);
      ok = ok && series_equal(fourier7, fourier_from_pairing(cusp->pd, 40));
      Rational a2 = fourier7.at(2);
      EigenformRecord rec7{EigenSource::File, pd7, std::move(a2), std::move(fourier7)};
      ok = ok && check_eigenform_identity(rec7, 40).passed();
    }
    // alternating polylog identity across the full small grid
    for (int r = 1; r <= 7; ++r)
      for (int s = 2; r + s <= 10; ++s) ok = ok && polylog_identity_check(r, s, 1e-8).passed();
    // level-2 parity identity
    ok = ok && level2_check(2, 3, 1e-8).passed();
    // term-budget doubling soundness of the numeric evaluators
    {
      const NumResult a = zeta_hat_num_budget(2, 3, 8192);
      const NumResult b = zeta_hat_num_budget(2, 3, 16384);
      ok = ok && std::abs(a.value - b.value) <= a.error_bound + b.error_bound + 1e-13;
      for (NumParity mp : {NumParity::Any, NumParity::Even, NumParity::Odd})
        for (NumParity np : {NumParity::Any, NumParity::Even, NumParity::Odd}) {
          const NumResult c = dzeta_num_budget(2, 3, mp, np, 8192);
          const NumResult d = dzeta_num_budget(2, 3, mp, np, 16384);
          ok = ok && std::abs(c.value - d.value) <= c.error_bound + d.error_bound + 1e-13;
          const NumResult e = dzeta_num_budget(1, 3, mp, np, 8192);
          const NumResult f = dzeta_num_budget(1, 3, mp, np, 16384);
          ok = ok && std::abs(e.value - f.value) <= e.error_bound + f.error_bound + 1e-13;
        }
      const NumResult g = li_rs_minus1_budget(1, 3, 1024);
      const NumResult h = li_rs_minus1_budget(1, 3, 2048);
      ok = ok && std::abs(g.value - h.value) <= g.error_bound + h.error_bound + 1e-13;
    }
    return ok;
  });

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed" << std::endl;
  return 1;
}
