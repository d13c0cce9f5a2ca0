// The Picard lattice of the thrice-marked rational elliptic surface Y
// (Z^13 with intersection form diag(+1, -1 x12)), the named divisor
// classes, the gluing parity test, and the intersection calculus for the
// classes that descend to the smoothed surface S.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques {

// Basis order: (p*H, E0, E1, ..., E9, B1, B2).
struct DivisorClass {
  std::array<long, 13> coords{};

  long& operator[](int i) { return coords[i]; }
  long operator[](int i) const { return coords[i]; }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r;
    for (int i = 0; i < 13; ++i) r.coords[i] = a.coords[i] + b.coords[i];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r;
    for (int i = 0; i < 13; ++i) r.coords[i] = a.coords[i] - b.coords[i];
    return r;
  }
  DivisorClass operator-() const {
    DivisorClass r;
    for (int i = 0; i < 13; ++i) r.coords[i] = -coords[i];
    return r;
  }
  friend DivisorClass operator*(long s, const DivisorClass& a) {
    DivisorClass r;
    for (int i = 0; i < 13; ++i) r.coords[i] = s * a.coords[i];
    return r;
  }
};

namespace basis {
inline constexpr int H = 0;
inline constexpr int E0 = 1;
inline constexpr int B1 = 11;
inline constexpr int B2 = 12;
inline constexpr int E(int k) { return 1 + k; }  // E(0) = E0, ..., E(9) = E9
}  // namespace basis

inline DivisorClass unit(int i) {
  DivisorClass d;
  d[i] = 1;
  return d;
}

// Named classes. A1, A2 are the proper transforms of the two nodal cubics:
// 3H - sum(E1..E9) - 2*Bi, fixed by the incidence data of the dual graph.
inline DivisorClass class_H() { return unit(basis::H); }
inline DivisorClass class_E(int k) { return unit(basis::E(k)); }
inline DivisorClass class_B(int i) { return unit(i == 1 ? basis::B1 : basis::B2); }

inline DivisorClass class_A(int i) {
  DivisorClass d;
  d[basis::H] = 3;
  for (int k = 1; k <= 9; ++k) d[basis::E(k)] = -1;
  d[i == 1 ? basis::B1 : basis::B2] = -2;
  return d;
}

inline DivisorClass class_Q() {
  DivisorClass d;
  d[basis::H] = 2;
  return d;
}

inline DivisorClass class_ell(int i) {  // p*H - E_i, i = 1..9
  DivisorClass d;
  d[basis::H] = 1;
  d[basis::E(i)] = -1;
  return d;
}

// Canonical class of the 12-fold blowup of the plane.
inline DivisorClass class_KY() {
  DivisorClass d;
  d[basis::H] = -3;
  for (int k = 0; k <= 9; ++k) d[basis::E(k)] = 1;
  d[basis::B1] = 1;
  d[basis::B2] = 1;
  return d;
}

// The collection classes D_0, ..., D_12.
inline DivisorClass class_D(int i) {
  if (i < 0 || i > 12) throw std::out_of_range("D index out of range");
  if (i == 0) return DivisorClass{};
  if (i <= 9) {
    // -ell_i + E0 + B1
    DivisorClass d = -class_ell(i);
    d[basis::E0] += 1;
    d[basis::B1] += 1;
    return d;
  }
  if (i == 10) {
    DivisorClass d;
    d[basis::E0] = 1;
    d[basis::B1] = -1;
    return d;
  }
  DivisorClass d;  // D11 = -Q + 3E0 + 2B1
  d[basis::H] = -2;
  d[basis::E0] = 3;
  d[basis::B1] = 2;
  if (i == 12) return 2 * d;
  return d;
}

// Intersection number under diag(+1, -1 x12).
inline long pairing(const DivisorClass& a, const DivisorClass& b) {
  long s = a[0] * b[0];
  for (int i = 1; i < 13; ++i) s -= a[i] * b[i];
  return s;
}

// chi(D) = 1 + (D^2 - D.K_Y)/2 on Y.
inline long chi_on_Y(const DivisorClass& d) {
  long num = pairing(d, d) - pairing(d, class_KY());
  if (num % 2 != 0) throw std::logic_error("Riemann-Roch parity violated");
  return 1 + num / 2;
}

struct GluedClass {
  DivisorClass rep;
  long d1 = 0;
  long d2 = 0;
};

struct ParityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Lift test: D descends to the smoothing iff (D.A_i) is even for i = 1, 2.
inline GluedClass glue(const DivisorClass& d) {
  long p1 = pairing(d, class_A(1));
  long p2 = pairing(d, class_A(2));
  if (p1 % 2 != 0 || p2 % 2 != 0)
    throw ParityError("class does not lift: (D.A_i) odd");
  return GluedClass{d, p1 / 2, p2 / 2};
}

inline bool is_glueable(const DivisorClass& d) {
  return pairing(d, class_A(1)) % 2 == 0 && pairing(d, class_A(2)) % 2 == 0;
}

// chi of the deformed class on S: chi(D) + d1(d1-1)/2 + d2(d2-1)/2.
inline long chi_glued(const GluedClass& g) {
  return chi_on_Y(g.rep) + g.d1 * (g.d1 - 1) / 2 + g.d2 * (g.d2 - 1) / 2;
}

// (D^g)^2 = (D.E0) + 2 chi(D) + d1(d1-1) + d2(d2-1) - 2.
inline long glued_square(const GluedClass& g) {
  return pairing(g.rep, class_E(0)) + 2 * chi_on_Y(g.rep) +
         g.d1 * (g.d1 - 1) + g.d2 * (g.d2 - 1) - 2;
}

// Bilinear pairing on S: D1.D2 + d1 d1' + d2 d2'.
inline long glued_pair(const GluedClass& a, const GluedClass& b) {
  return pairing(a.rep, b.rep) + a.d1 * b.d1 + a.d2 * b.d2;
}

// (D^g . K_S) = (D . E0).
inline long glued_K_pairing(const GluedClass& g) {
  return pairing(g.rep, class_E(0));
}

struct GramResult {
  std::array<std::array<long, 11>, 11> gram{};
  bool ks_relation_holds = false;
};

// Gram matrix of D_1^g..D_11^g and the numerical relation
// K_S = D_1^g + ... + D_10^g - 3 D_11^g, tested as glued-pairing equality
// against E0^g on the 13 glueable probe classes D_0..D_12.
inline GramResult gram_and_KS_check() {
  GramResult out;
  std::array<GluedClass, 13> D;
  for (int i = 0; i <= 12; ++i) D[i] = glue(class_D(i));
  for (int i = 1; i <= 11; ++i)
    for (int j = 1; j <= 11; ++j) out.gram[i - 1][j - 1] = glued_pair(D[i], D[j]);
  DivisorClass ks_rep;
  for (int i = 1; i <= 10; ++i) ks_rep = ks_rep + class_D(i);
  ks_rep = ks_rep - 3 * class_D(11);
  GluedClass ks = glue(ks_rep);
  GluedClass e0 = glue(class_E(0));
  out.ks_relation_holds = true;
  for (int i = 0; i <= 12; ++i)
    if (glued_pair(ks, D[i]) != glued_pair(e0, D[i])) out.ks_relation_holds = false;
  return out;
}

// chi of the glued class of -D_i + D_j; zero for all i != j.
inline long chi_glued_difference(int i, int j) {
  if (i == j) throw std::invalid_argument("chi_glued_difference requires i != j");
  return chi_glued(glue(class_D(j) - class_D(i)));
}

struct CongruenceWitness {
  long a = 0;  // multiple of A1
  long b = 0;  // multiple of A2
  long t = 0;  // multiple of B1 - B2 (torsion twist), normalized to {0, 1}
};

struct CongruenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Solve rep - target = a*A1 + b*A2 + t*(B1 - B2) over Z. The solution set,
// when nonempty, is a coset of Z*(A1 - A2 + 2(B1-B2)) = 0; the witness is
// normalized by t in {0, 1}. t = 1 marks a torsion twist.
inline CongruenceWitness congruence_check(const DivisorClass& rep,
                                          const DivisorClass& target) {
  DivisorClass delta = rep - target;
  if (delta[basis::E0] != 0)
    throw CongruenceError("congruence failure: E0 coefficient mismatch");
  long s_times3 = delta[basis::H];
  if (s_times3 % 3 != 0)
    throw CongruenceError("congruence failure: H coefficient not divisible by 3");
  long s = s_times3 / 3;  // s = a + b
  for (int k = 1; k <= 9; ++k)
    if (delta[basis::E(k)] != -s)
      throw CongruenceError("congruence failure: E" + std::to_string(k) +
                            " coefficient inconsistent");
  // delta_B1 = -2a + t, delta_B2 = -2b - t
  long t = ((delta[basis::B1] % 2) + 2) % 2;
  if ((t - delta[basis::B1]) % 2 != 0)
    throw CongruenceError("congruence failure: B1 parity");
  long a = (t - delta[basis::B1]) / 2;
  long b = s - a;
  if (delta[basis::B2] != -2 * b - t)
    throw CongruenceError("congruence failure: B2 coefficient inconsistent");
  return CongruenceWitness{a, b, t};
}

inline std::optional<CongruenceWitness> try_congruence(const DivisorClass& rep,
                                                       const DivisorClass& target) {
  try {
    return congruence_check(rep, target);
  } catch (const CongruenceError&) {
    return std::nullopt;
  }
}

}  // namespace enriques
