#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "enriques/lattice.hpp"
#include "enriques/verifier.hpp"

using namespace enriques;

TEST_CASE("intersection form is diag(+1, -1 x 12)") {
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j)
      REQUIRE(pairing(unit(i), unit(j)) == (i != j ? 0 : (i == 0 ? 1 : -1)));
}

TEST_CASE("chi on Y of named classes") {
  REQUIRE(chi_on_Y(DivisorClass{}) == 1);
  REQUIRE(chi_on_Y(class_KY()) == 1);
  REQUIRE(chi_on_Y(class_E(3)) == 1);
  // elliptic fiber class 3H - E1..E9 has chi = 1 + (0 - 0)/2
  DivisorClass fib = class_A(1) + 2 * class_B(1);
  REQUIRE(pairing(fib, fib) == 0);
  REQUIRE(chi_on_Y(fib) == 1);
}

TEST_CASE("gluing parity") {
  REQUIRE_THROWS_AS(glue(class_E(1)), ParityError);
  REQUIRE(is_glueable(class_Q()));
  REQUIRE(is_glueable(class_B(1)));
  REQUIRE_FALSE(is_glueable(class_H()));
  for (int i = 0; i <= 12; ++i) REQUIRE(is_glueable(class_D(i)));
  GluedClass q = glue(class_Q());
  REQUIRE(q.d1 == 3);
  REQUIRE(q.d2 == 3);
}

TEST_CASE("component intersection table") {
  auto t = component_table();
  // (Q^g)^2 = 22, l^2 = 2, cross l = 3, Q.B1 = 3, B1^2 = 0, E0^2 = -1
  REQUIRE(t[0][0] == 22);
  REQUIRE(t[1][1] == 2);
  REQUIRE(t[2][2] == 2);
  REQUIRE(t[1][2] == 3);
  REQUIRE(t[0][3] == 3);
  REQUIRE(t[3][3] == 0);
  REQUIRE(t[4][4] == -1);
  for (int a = 0; a < 4; ++a) REQUIRE(t[a][4] == 0);
  // Q.l: the printed table says 10, but three independent routes force 8;
  // see the consistency checks below
  REQUIRE(t[0][1] == 8);
}

TEST_CASE("Q.l = 8 cross-checks") {
  // route 1: polarization of glued squares, Q.l = (sq(Q+l) - sq(Q) - sq(l))/2
  GluedClass q = glue(class_Q());
  GluedClass l = glue(class_ell(1));
  GluedClass ql = glue(class_Q() + class_ell(1));
  long via_square = (glued_square(ql) - glued_square(q) - glued_square(l)) / 2;
  REQUIRE(via_square == glued_pair(q, l));
  REQUIRE(via_square == 8);
  // route 2: chi additivity, chi(D+E) = chi(D) + chi(E) + D.E - chi(O)
  long via_chi = chi_glued(ql) - chi_glued(q) - chi_glued(l) + 1;
  REQUIRE(via_chi == 8);
  // route 3: sum of l_i^g equals 3Q^g + 2B1^g numerically, so
  // Q.sum(l_i) = 3 Q^2 + 2 Q.B1 = 72 = 9 * Q.l
  long total = 0;
  for (int i = 1; i <= 9; ++i) total += glued_pair(q, glue(class_ell(i)));
  REQUIRE(total == 3 * glued_square(q) + 2 * glued_pair(q, glue(class_B(1))));
  REQUIRE(total == 72);
}

TEST_CASE("Gram matrix and K_S relation") {
  auto g = gram_and_KS_check();
  for (int a = 0; a < 11; ++a)
    for (int b = 0; b < 11; ++b)
      REQUIRE(g.gram[a][b] == (a != b ? 0 : (a == 10 ? 1 : -1)));
  REQUIRE(g.ks_relation_holds);
}

TEST_CASE("chi closure on all pairs") {
  for (int i = 1; i <= 12; ++i)
    for (int j = 0; j < i; ++j) REQUIRE(chi_glued_difference(i, j) == 0);
}

TEST_CASE("numerically trivial classes") {
  GluedClass a1 = glue(class_A(1));
  GluedClass diff = glue(class_B(1) - class_B(2));
  for (int i = 0; i <= 12; ++i) {
    GluedClass d = glue(class_D(i));
    REQUIRE(glued_pair(a1, d) == 0);
    REQUIRE(glued_pair(diff, d) == 0);
  }
  REQUIRE(glued_square(a1) == 0);
  REQUIRE(glued_square(diff) == 0);
}

static DivisorClass random_glueable(std::mt19937& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  while (true) {
    DivisorClass d;
    for (int i = 0; i < 13; ++i) d[i] = coeff(rng);
    if (is_glueable(d)) return d;
  }
}

TEST_CASE("glued square is invariant under adding A1, A2") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    DivisorClass d = random_glueable(rng);
    long sq = glued_square(glue(d));
    REQUIRE(glued_square(glue(d + class_A(1))) == sq);
    REQUIRE(glued_square(glue(d + class_A(2))) == sq);
    REQUIRE(glued_square(glue(d - 2 * class_A(1) + class_A(2))) == sq);
    // chi of the glued class is likewise representative-invariant
    long chi = chi_glued(glue(d));
    REQUIRE(chi_glued(glue(d + class_A(1))) == chi);
    REQUIRE(chi_glued(glue(d + class_A(2))) == chi);
  }
}

TEST_CASE("glued pairing is bilinear and symmetric") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    DivisorClass a = random_glueable(rng), b = random_glueable(rng),
                 c = random_glueable(rng);
    REQUIRE(glued_pair(glue(a), glue(b)) == glued_pair(glue(b), glue(a)));
    REQUIRE(glued_pair(glue(a + b), glue(c)) ==
            glued_pair(glue(a), glue(c)) + glued_pair(glue(b), glue(c)));
    REQUIRE(glued_pair(glue(a), glue(a)) == glued_square(glue(a)));
  }
}

TEST_CASE("congruence witnesses") {
  // known representative rows
  auto w = congruence_check(representative_for({11, 0, 0}).rep, task_target({11, 0, 0}));
  REQUIRE((w.a == 0 && w.b == 1 && w.t == 0));
  w = congruence_check(representative_for({12, 0, 0}).rep, task_target({12, 0, 0}));
  REQUIRE((w.a == 1 && w.b == 3 && w.t == 0));
  auto rc = representative_for({12, 9, 0});
  REQUIRE(rc.printed_failed);
  REQUIRE((rc.witness.a == 1 && rc.witness.b == 2 && rc.witness.t == 0));
  rc = representative_for({12, 10, 0});
  REQUIRE(rc.printed_failed);
  REQUIRE((rc.witness.a == 0 && rc.witness.b == 3 && rc.witness.t == 0));
  // torsion twist in the Serre-dual row
  rc = representative_for({10, 9, 2});
  REQUIRE_FALSE(rc.printed_failed);
  REQUIRE(rc.witness.t == 1);
  // mismatched class has no witness
  REQUIRE_FALSE(try_congruence(class_H(), DivisorClass{}).has_value());
}

TEST_CASE("congruence roundtrip on random offsets") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<long> bit(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    DivisorClass target = random_glueable(rng);
    long a = coeff(rng), b = coeff(rng), t = bit(rng);
    DivisorClass rep = target + a * class_A(1) + b * class_A(2) +
                       t * (class_B(1) - class_B(2));
    CongruenceWitness w = congruence_check(rep, target);
    // the witness reproduces the offset exactly
    DivisorClass back = target + w.a * class_A(1) + w.b * class_A(2) +
                        w.t * (class_B(1) - class_B(2));
    REQUIRE(back == rep);
    REQUIRE((w.t == 0 || w.t == 1));
  }
}
