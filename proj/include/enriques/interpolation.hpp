// Fat-point interpolation: h^0 of a plane curve system of given degree with
// multiplicity conditions at rational points and at a shape-represented
// conjugate block, computed as (number of monomials) - (rank of the exact
// condition matrix). A modular-prime oracle cross-checks the rank.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enriques/lattice.hpp"
#include "enriques/matrix.hpp"
#include "enriques/pencil.hpp"
#include "enriques/rational.hpp"

namespace enriques {

struct FatPointSystem {
  int degree = 0;  // negative degree means the system is empty, h^0 = 0
  std::vector<std::pair<ProjPointQ, int>> rational_points;  // (point, mult >= 1)
  std::vector<std::pair<ConjugateOrbit, int>> orbit_points;
};

// Exponent triples (a, b, c), a + b + c = d, in graded-lex order with
// x > y > z: a descending, then b descending. Column order of all matrices.
inline std::vector<std::array<int, 3>> monomial_exponents(int d) {
  std::vector<std::array<int, 3>> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

// Translate a divisor class on the blowup into the corresponding fat-point
// system using the point configuration. Coefficients of E1..E8 must agree
// (one uniform multiplicity on the conjugate block); nonnegative
// multiplicity requests impose no condition and are dropped.
inline FatPointSystem divisor_to_system(const DivisorClass& d,
                                        const PointConfig& cfg) {
  FatPointSystem sys;
  sys.degree = static_cast<int>(d[basis::H]);
  for (int k = 2; k <= 8; ++k)
    if (d[basis::E(k)] != d[basis::E(1)])
      throw std::invalid_argument(
          "divisor_to_system: coefficients of E1..E8 differ (the conjugate "
          "block carries one uniform multiplicity)");
  if (sys.degree < 0) {
    sys.degree = -1;
    return sys;
  }
  auto add_rational = [&](const ProjPointQ& p, long coeff) {
    if (coeff < 0) sys.rational_points.emplace_back(p, static_cast<int>(-coeff));
  };
  long orbit_mult = d[basis::E(1)];
  if (orbit_mult < 0)
    sys.orbit_points.emplace_back(cfg.orbit, static_cast<int>(-orbit_mult));
  add_rational(cfg.e9, d[basis::E(9)]);
  add_rational(cfg.e0, d[basis::E0]);
  add_rational(cfg.node1, d[basis::B1]);
  add_rational(cfg.node2, d[basis::B2]);
  return sys;
}

// Rows expressing vanishing to order m at a rational point: all partial
// derivatives of order < m of the degree-d monomials, in the point's
// canonical affine chart.
inline std::vector<std::vector<Rat>> condition_rows_rational(const ProjPointQ& p,
                                                             int m, int d) {
  auto mons = monomial_exponents(d);
  int ch = p.chart();
  int u = (ch == 0) ? 1 : 0;
  int v = (ch == 2) ? 1 : 2;
  Rat scale(p[ch]);
  Rat u0 = Rat(p[u]) / scale, v0 = Rat(p[v]) / scale;
  std::vector<std::vector<Rat>> rows;
  auto power = [](const Rat& x, int n) {
    Rat r(1);
    for (int k = 0; k < n; ++k) r *= x;
    return r;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) {
      std::vector<Rat> row;
      row.reserve(mons.size());
      for (const auto& e : mons) {
        int alpha = e[u], beta = e[v];
        if (alpha < i || beta < j) {
          row.emplace_back(0);
          continue;
        }
        Rat val(falling_factorial(alpha, i) * falling_factorial(beta, j));
        val *= power(u0, alpha - i) * power(v0, beta - j);
        row.push_back(val);
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

// Rows expressing vanishing to order m along the conjugate block: each
// derivative condition, evaluated at (xi(t), eta(t), 1) modulo the minimal
// polynomial, yields deg(f) rows by extracting t-power coefficients.
inline std::vector<std::vector<Rat>> condition_rows_orbit(const ConjugateOrbit& orb,
                                                          int m, int d) {
  const UniPoly& f = orb.minpoly;
  int n = f.degree();
  auto mons = monomial_exponents(d);
  // xi^a * eta^b mod f for all a + b <= d
  std::vector<std::vector<UniPoly>> pw(d + 1, std::vector<UniPoly>(d + 1));
  std::vector<UniPoly> xp(d + 1), yp(d + 1);
  xp[0] = UniPoly::constant(1);
  yp[0] = UniPoly::constant(1);
  for (int k = 1; k <= d; ++k) {
    xp[k] = mulmod(xp[k - 1], orb.xi, f);
    yp[k] = mulmod(yp[k - 1], orb.eta, f);
  }
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) pw[a][b] = mulmod(xp[a], yp[b], f);

  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) {
      // one residue per column; expand into n coefficient rows
      std::vector<UniPoly> vals;
      vals.reserve(mons.size());
      for (const auto& e : mons) {
        int a = e[0], b = e[1];
        if (a < i || b < j) {
          vals.emplace_back();
          continue;
        }
        Rat c(falling_factorial(a, i) * falling_factorial(b, j));
        vals.push_back(c * pw[a - i][b - j]);
      }
      for (int k = 0; k < n; ++k) {
        std::vector<Rat> row;
        row.reserve(mons.size());
        for (const UniPoly& vp : vals) row.push_back(vp.coeff(k));
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

inline RatMatrix condition_matrix(const FatPointSystem& sys) {
  int cols = static_cast<int>(monomial_exponents(sys.degree).size());
  RatMatrix m(0, cols);
  for (const auto& [p, mult] : sys.rational_points)
    for (auto& row : condition_rows_rational(p, mult, sys.degree))
      m.append_row(row);
  for (const auto& [orb, mult] : sys.orbit_points)
    for (auto& row : condition_rows_orbit(orb, mult, sys.degree))
      m.append_row(row);
  return m;
}

// Exact h^0 of the fat-point system.
inline int h0(const FatPointSystem& sys) {
  if (sys.degree < 0) return 0;
  RatMatrix m = condition_matrix(sys);
  return m.cols() - rank(m);
}

struct H0ModularResult {
  int value = 0;
  std::vector<std::uint64_t> primes;
  bool primes_agree = true;
};

// Independent h^0 check: rank modulo three deterministically seeded random
// primes. Modular rank only underestimates, so the value is the best (max)
// rank seen; disagreement between primes is reported, not resolved.
inline H0ModularResult h0_modular_oracle(const FatPointSystem& sys,
                                         std::uint64_t seed = 0x1f3a9d2c) {
  H0ModularResult out;
  if (sys.degree < 0) return out;
  RatMatrix m = condition_matrix(sys);
  auto cleared = m.cleared_rows();
  // denominators were cleared row-wise; still avoid primes dividing any
  // original denominator so each residue row is a unit multiple
  std::vector<Int> denoms;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (denom(m.at(i, j)) != 1) denoms.push_back(denom(m.at(i, j)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist((1ULL << 30) + 1,
                                                    (1ULL << 31) - 1);
  while (out.primes.size() < 3) {
    std::uint64_t cand = dist(rng) | 1;
    Int z(static_cast<unsigned long>(cand));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) <= 0) continue;
    bool bad = false;
    for (const Int& dn : denoms)
      if (dn % z == 0) bad = true;
    if (bad) continue;
    out.primes.push_back(cand);
  }
  int best = 0;
  bool first = true;
  int prev_rank = 0;
  for (std::uint64_t p : out.primes) {
    int r = modular::rank_mod_p(cleared, p);
    if (!first && r != prev_rank) out.primes_agree = false;
    prev_rank = r;
    first = false;
    best = std::max(best, r);
  }
  out.value = m.cols() - best;
  return out;
}

// Whether three points of P^2(Q) lie on a common line (3x3 determinant).
// Coincident points are rejected: the test is only meaningful for distinct
// points.
inline bool colinear(const ProjPointQ& p1, const ProjPointQ& p2,
                     const ProjPointQ& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw std::invalid_argument("colinear: points must be distinct");
  Int det = 0;
  const ProjPointQ* ps[3] = {&p1, &p2, &p3};
  det = (*ps[0])[0] * ((*ps[1])[1] * (*ps[2])[2] - (*ps[1])[2] * (*ps[2])[1]) -
        (*ps[0])[1] * ((*ps[1])[0] * (*ps[2])[2] - (*ps[1])[2] * (*ps[2])[0]) +
        (*ps[0])[2] * ((*ps[1])[0] * (*ps[2])[1] - (*ps[1])[1] * (*ps[2])[0]);
  return det == 0;
}

}  // namespace enriques
