#pragma once
// Homogeneous polynomials in (X, Y) of degree k-2 with the weight-k right
// action P|g (X,Y) = P(aX + bY, cX + dY), the period relations cutting out
// the subspace W_k, the three triangular/determinant matrix families whose
// union acts like the nth Hecke operator, and the evaluation pairing
// <P, sum a_g g> = sum a_g P(b_g, d_g).

#include <cstdint>
#include <vector>

#include "qzeta/algebra.hpp"
#include "qzeta/qseries.hpp"

namespace qzeta {

inline constexpr Mat2 kMatS{0, -1, 1, 0};
inline constexpr Mat2 kMatU{1, -1, 1, 0};

// c[i] multiplies X^{k-2-i} Y^i; the modular weight k is even and >= 4.
struct HomPoly {
  int weight = 4;
  std::vector<Rational> c;

  explicit HomPoly(int k) : weight(k) {
    if (k < 4 || k % 2 != 0) throw DomainError("HomPoly: weight must be even and >= 4");
    c.resize(static_cast<std::size_t>(k) - 1);
  }
  int degree() const { return weight - 2; }
  friend bool operator==(const HomPoly&, const HomPoly&) = default;
};

inline HomPoly scale_poly(const Rational& r, const HomPoly& p) {
  HomPoly out = p;
  for (auto& v : out.c) v *= r;
  return out;
}

inline HomPoly poly_add(const HomPoly& a, const HomPoly& b) {
  if (a.weight != b.weight) throw DomainError("poly_add: weight mismatch");
  HomPoly out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

inline HomPoly poly_sub(const HomPoly& a, const HomPoly& b) {
  if (a.weight != b.weight) throw DomainError("poly_sub: weight mismatch");
  HomPoly out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
  return out;
}

inline bool poly_is_zero(const HomPoly& p) {
  for (const auto& v : p.c)
    if (v != 0) return false;
  return true;
}

// only even powers of Y appear
inline bool is_even_poly(const HomPoly& p) {
  for (std::size_t i = 1; i < p.c.size(); i += 2)
    if (p.c[i] != 0) return false;
  return true;
}

inline Rational eval_poly(const HomPoly& p, const Int& x, const Int& y) {
  const int deg = p.degree();
  std::vector<Int> xp(static_cast<std::size_t>(deg) + 1), yp(xp.size());
  xp[0] = 1;
  yp[0] = 1;
  for (int i = 1; i <= deg; ++i) {
    xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * x;
    yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
  }
  Rational acc = 0;
  for (int i = 0; i <= deg; ++i) {
    const Rational& ci = p.c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    acc += ci * Rational(xp[static_cast<std::size_t>(deg - i)] * yp[static_cast<std::size_t>(i)]);
  }
  return acc;
}

// P|g (X,Y) = P(aX + bY, cX + dY)
inline HomPoly act_matrix(const HomPoly& p, const Mat2& g) {
  const int deg = p.degree();
  auto powers = [deg](std::int64_t v) {
    std::vector<Int> out(static_cast<std::size_t>(deg) + 1);
    out[0] = 1;
    for (int i = 1; i <= deg; ++i) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i - 1)] * v;
    return out;
  };
  const auto pa = powers(g.a), pb = powers(g.b), pc = powers(g.c), pd = powers(g.d);
  HomPoly out(p.weight);
  for (int i = 0; i <= deg; ++i) {
    const Rational& ci = p.c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    const int m = deg - i;  // power of the first argument
    for (int u = 0; u <= m; ++u) {
      const Int f1 = binomial(m, u) * pa[static_cast<std::size_t>(m - u)] * pb[static_cast<std::size_t>(u)];
      if (f1 == 0) continue;
      for (int v = 0; v <= i; ++v) {
        const Int f2 = binomial(i, v) * pc[static_cast<std::size_t>(i - v)] * pd[static_cast<std::size_t>(v)];
        if (f2 == 0) continue;
        out.c[static_cast<std::size_t>(u + v)] += ci * Rational(f1 * f2);
      }
    }
  }
  return out;
}

inline HomPoly act_element(const HomPoly& p, const HeckeElement& t) {
  HomPoly acc(p.weight);
  for (const auto& [coeff, m] : t.terms)
    acc = poly_add(acc, scale_poly(coeff, act_matrix(p, m)));
  return acc;
}

// membership in W_k: P|(1 + S) = 0 and P|(1 + U + U^2) = 0
inline bool is_in_Wk(const HomPoly& p) {
  const HomPoly ps = poly_add(p, act_matrix(p, kMatS));
  if (!poly_is_zero(ps)) return false;
  const Mat2 u2 = kMatU * kMatU;
  const HomPoly pu = poly_add(p, poly_add(act_matrix(p, kMatU), act_matrix(p, u2)));
  return poly_is_zero(pu);
}

// <P, sum a_g g> = sum a_g P(b_g, d_g): evaluation at the second column
inline Rational pairing(const HomPoly& p, const HeckeElement& t) {
  Rational acc = 0;
  for (const auto& [coeff, m] : t.terms) acc += coeff * eval_poly(p, Int(m.b), Int(m.d));
  return acc;
}

// determinant family: pairs [[a,b],[c,d]] + [[a,-b],[-c,d]] with
// a d - b c = n, a > c > 0 and d > -b > 0 (so b < 0 in the first member)
inline HeckeElement hecke_t1(std::int64_t n) {
  HeckeElement t(n);
  for (std::int64_t c = 1; 3 * c + 2 <= n; ++c) {
    for (std::int64_t beta = 1;; ++beta) {  // beta = -b of the first member
      const std::int64_t m = n - beta * c;  // = a d
      if (m < (c + 1) * (beta + 1)) break;
      for (std::int64_t a = c + 1; a * (beta + 1) <= m; ++a) {
        if (m % a != 0) continue;
        const std::int64_t d = m / a;
        t.add(1, Mat2{a, -beta, c, d});
        t.add(1, Mat2{a, beta, -c, d});
      }
    }
  }
  return t;
}

// upper-triangular family: [[a,b],[0,d]] with a d = n and -d/2 < b <= d/2
inline HeckeElement hecke_t2(std::int64_t n) {
  HeckeElement t(n);
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::int64_t a = n / d;
    for (std::int64_t b = -((d - 1) / 2); b <= d / 2; ++b) t.add(1, Mat2{a, b, 0, d});
  }
  return t;
}

// lower-triangular family: [[a,0],[c,d]] with a d = n, -a/2 < c <= a/2, c != 0
inline HeckeElement hecke_t3(std::int64_t n) {
  HeckeElement t(n);
  for (std::int64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const std::int64_t d = n / a;
    for (std::int64_t c = -((a - 1) / 2); c <= a / 2; ++c) {
      if (c == 0) continue;
      t.add(1, Mat2{a, 0, c, d});
    }
  }
  return t;
}

enum class HeckePart { One, Two, Three, Full };

inline HeckeElement hecke_part(HeckePart part, std::int64_t n) {
  switch (part) {
    case HeckePart::One: return hecke_t1(n);
    case HeckePart::Two: return hecke_t2(n);
    case HeckePart::Three: return hecke_t3(n);
    case HeckePart::Full: break;
  }
  HeckeElement t = hecke_t1(n);
  for (const auto& [coeff, m] : hecke_t2(n).terms) t.add(coeff, m);
  for (const auto& [coeff, m] : hecke_t3(n).terms) t.add(coeff, m);
  return t;
}

inline HeckeElement hecke_element(std::int64_t n) { return hecke_part(HeckePart::Full, n); }

// sum_{n=1..N} <P, family_n> q^n
inline QSeries pairing_series(const HomPoly& p, HeckePart part, int N) {
  QSeries out(N);
  for (int n = 1; n <= N; ++n) out.at(n) = pairing(p, hecke_part(part, n));
  return out;
}

}  // namespace qzeta
