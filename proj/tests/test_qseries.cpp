#include <catch2/catch_amalgamated.hpp>

#include "qzeta/qseries.hpp"
#include "support/oracles.hpp"

using namespace qzeta;

TEST_CASE("truncated series container basics") {
  QSeries a(4);
  CHECK(a.order() == 4);
  for (int i = 0; i <= 4; ++i) CHECK(a.at(i) == 0);
  a.at(2) = Rational(3, 2);
  CHECK(a.at(2) == Rational(3, 2));
  CHECK_THROWS_AS(a.at(5), std::out_of_range);
  CHECK_THROWS_AS(a.at(-1), std::out_of_range);
  CHECK_THROWS_AS(QSeries(-1), DomainError);
}

TEST_CASE("series arithmetic") {
  QSeries one(5), q(5);
  one.at(0) = 1;
  q.at(1) = 1;
  QSeries p = series_add(one, q);       // 1 + q
  QSeries m = series_sub(one, q);       // 1 - q
  QSeries prod = series_mul(p, m);      // 1 - q^2
  CHECK(prod.at(0) == 1);
  CHECK(prod.at(1) == 0);
  CHECK(prod.at(2) == -1);
  CHECK(prod.at(3) == 0);

  QSeries s = series_scale(Rational(-3, 7), p);
  CHECK(s.at(0) == Rational(-3, 7));
  CHECK(s.at(1) == Rational(-3, 7));

  // multiplication truncates to the shorter operand
  QSeries shorter(2);
  shorter.at(0) = 1;
  CHECK(series_mul(p, shorter).order() == 2);
  CHECK(series_add(p, shorter).order() == 2);

  CHECK(series_is_zero(series_sub(p, p)));
  CHECK(!series_is_zero(p));
  CHECK(first_nonzero(q) == 1);
  CHECK(first_nonzero(series_sub(p, p)) == -1);

  int idx = -2;
  CHECK(series_equal(p, p, &idx));
  QSeries pp = p;
  pp.at(1) += 1;
  CHECK(!series_equal(p, pp, &idx));
  CHECK(idx == 1);
}

TEST_CASE("q-derivative multiplies the nth coefficient by n") {
  QSeries a(4);
  for (int i = 0; i <= 4; ++i) a.at(i) = Rational(i + 1, 3);
  QSeries d = q_derivative(a);
  for (int i = 0; i <= 4; ++i) CHECK(d.at(i) == Rational(i * (i + 1), 3));
}

TEST_CASE("Eulerian-type numerator polynomials match frozen values") {
  // frozen: Q_1 = t, Q_2 = t, Q_3 = (t + t^2)/2, Q_4 = (t + 4t^2 + t^3)/6,
  //         Q_5 = (t + 11t^2 + 11t^3 + t^4)/24
  auto q1 = eulerian_poly(1);
  REQUIRE(q1.c.size() == 2);
  CHECK(q1.c[0] == 0);
  CHECK(q1.c[1] == 1);

  auto q2 = eulerian_poly(2);
  REQUIRE(q2.c.size() == 2);
  CHECK(q2.c[1] == 1);

  auto q3 = eulerian_poly(3);
  REQUIRE(q3.c.size() == 3);
  CHECK(q3.c[1] == Rational(1, 2));
  CHECK(q3.c[2] == Rational(1, 2));

  auto q4 = eulerian_poly(4);
  REQUIRE(q4.c.size() == 4);
  CHECK(q4.c[1] == Rational(1, 6));
  CHECK(q4.c[2] == Rational(4, 6));
  CHECK(q4.c[3] == Rational(1, 6));

  auto q5 = eulerian_poly(5);
  REQUIRE(q5.c.size() == 5);
  CHECK(q5.c[1] == Rational(1, 24));
  CHECK(q5.c[2] == Rational(11, 24));
  CHECK(q5.c[3] == Rational(11, 24));
  CHECK(q5.c[4] == Rational(1, 24));

  // constant term zero and value 1 at t = 1 for k >= 2
  for (int k = 2; k <= 20; ++k) {
    auto qk = eulerian_poly(k);
    CHECK(static_cast<int>(qk.c.size()) == k);
    CHECK(qk.c[0] == 0);
    Rational sum = 0;
    for (const auto& v : qk.c) sum += v;
    CHECK(sum == 1);
  }
  CHECK_THROWS_AS(eulerian_poly(0), DomainError);
}

TEST_CASE("single q-zeta series: frozen coefficients") {
  QSeries z2 = zeta_q(2, 6);
  CHECK(z2.at(0) == 0);
  CHECK(z2.at(1) == 1);
  CHECK(z2.at(2) == 3);
  CHECK(z2.at(3) == 4);
  CHECK(z2.at(4) == 7);
  CHECK(z2.at(5) == 6);
  CHECK(z2.at(6) == 12);

  CHECK(zeta_q(4, 2).at(2) == Rational(3, 2));
  CHECK(zeta_q(12, 1).at(1) == Rational(1, Int(39916800)));  // 1/11!
  CHECK_THROWS_AS(zeta_q(1, 5), DomainError);
}

TEST_CASE("single q-zeta equals its product representation") {
  for (int k : {2, 3, 4, 12}) {
    int idx = -2;
    CHECK(series_equal(zeta_q(k, 40), oracles::zeta_q_product_form(k, 40), &idx));
  }
}

TEST_CASE("double q-zeta series: frozen leading behaviour") {
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s) {
      QSeries z = zeta_hat_q(r, s, 5);
      for (int i = 0; i <= 4; ++i) CHECK(z.at(i) == 0);
    }
  CHECK(zeta_hat_q(2, 2, 5).at(5) == 1);
  CHECK(zeta_hat_q(1, 1, 5).at(5) == 1);
  CHECK(zeta_hat_q(1, 2, 7).at(7) == 3);
  CHECK_THROWS_AS(zeta_hat_q(0, 1, 5), DomainError);
}

TEST_CASE("double q-zeta equals its product representation") {
  const int N = 40;
  for (auto [r, s] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 9}}) {
    int idx = -2;
    INFO("r=" << r << " s=" << s);
    CHECK(series_equal(zeta_hat_q(r, s, N), oracles::zeta_hat_q_product_form(r, s, N), &idx));
    INFO("first mismatch at " << idx);
  }
}

TEST_CASE("parity-restricted q-zeta series") {
  QSeries zo = zeta_q_parity(2, Parity::Odd, 6);
  CHECK(zo.at(1) == 1);
  CHECK(zo.at(2) == 1);
  CHECK(zo.at(3) == 4);
  CHECK(zo.at(4) == 1);
  CHECK(zo.at(5) == 6);
  CHECK(zo.at(6) == 4);

  QSeries ze = zeta_q_parity(2, Parity::Even, 6);
  CHECK(ze.at(1) == 0);
  CHECK(ze.at(2) == 2);
  CHECK(ze.at(3) == 0);
  CHECK(ze.at(4) == 6);
  CHECK(ze.at(5) == 0);
  CHECK(ze.at(6) == 8);

  // the two parity pieces add to the full series
  for (int k = 2; k <= 6; ++k) {
    auto total = series_add(zeta_q_parity(k, Parity::Odd, 30),
                            zeta_q_parity(k, Parity::Even, 30));
    int idx = -2;
    CHECK(series_equal(total, zeta_q(k, 30), &idx));
  }

  // weight 1 is allowed for the parity pieces (odd-divisor counting)
  QSeries z1 = zeta_q_parity(1, Parity::Odd, 6);
  CHECK(z1.at(4) == 1);   // divisors of 4: only 1 is odd
  CHECK(z1.at(6) == 2);   // 1 and 3
  CHECK_THROWS_AS(zeta_q_parity(0, Parity::Odd, 5), DomainError);
}

TEST_CASE("discriminant cusp expansion: frozen coefficients and oracle") {
  QSeries d = eta_delta(6);
  CHECK(d.at(0) == 0);
  CHECK(d.at(1) == 1);
  CHECK(d.at(2) == -24);
  CHECK(d.at(3) == 252);
  CHECK(d.at(4) == -1472);
  CHECK(d.at(5) == 4830);
  CHECK(d.at(6) == -6048);

  int idx = -2;
  CHECK(series_equal(eta_delta(60), oracles::eta24_factorwise(60), &idx));

  // multiplicativity spot checks on coprime indices
  QSeries d35 = eta_delta(35);
  CHECK(d35.at(6) == d35.at(2) * d35.at(3));
  CHECK(d35.at(10) == d35.at(2) * d35.at(5));
  CHECK(d35.at(35) == d35.at(5) * d35.at(7));
}

TEST_CASE("Eisenstein series expansions") {
  QSeries e4 = eisenstein_series(4, 5);
  CHECK(e4.at(0) == Rational(1, 240));
  CHECK(e4.at(1) == 1);
  CHECK(e4.at(2) == 9);
  CHECK(e4.at(3) == 28);
  CHECK(e4.at(4) == 73);
  CHECK(e4.at(5) == 126);

  QSeries e6 = eisenstein_series(6, 2);
  CHECK(e6.at(0) == Rational(-1, 504));
  CHECK(e6.at(1) == 1);
  CHECK(e6.at(2) == 33);

  CHECK_THROWS_AS(eisenstein_series(3, 5), DomainError);
  CHECK_THROWS_AS(eisenstein_series(2, 5), DomainError);
}
