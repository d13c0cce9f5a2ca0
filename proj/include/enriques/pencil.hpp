// Analysis of the concrete cubic pencil: node finding, base-locus
// decomposition into the rational base point at infinity and a
// shape-represented residual point block, and assembly of the full plane
// point configuration.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enriques/multipoly.hpp"
#include "enriques/rational.hpp"
#include "enriques/unipoly.hpp"

namespace enriques {

inline const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

struct PencilError : std::domain_error {
  using std::domain_error::domain_error;
};

// A point of P^2(Q) in canonical primitive integer form: coprime integer
// coordinates with the first nonzero one positive.
class ProjPointQ {
 public:
  ProjPointQ(const Rat& a, const Rat& b, const Rat& c) {
    std::vector<Rat> v{a, b, c};
    Int l = denominator_lcm(v);
    Int g = 0;
    std::array<Int, 3> w;
    for (int i = 0; i < 3; ++i) {
      w[i] = numer(v[i] * Rat(l));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    if (g == 0) throw std::invalid_argument("projective point: all coordinates zero");
    int first = (w[0] != 0) ? 0 : (w[1] != 0 ? 1 : 2);
    if (w[first] < 0) g = -g;
    for (int i = 0; i < 3; ++i) c_[i] = w[i] / g;
  }
  ProjPointQ(long a, long b, long c) : ProjPointQ(Rat(a), Rat(b), Rat(c)) {}

  const Int& operator[](int i) const { return c_[i]; }
  friend bool operator==(const ProjPointQ& a, const ProjPointQ& b) {
    return a.c_ == b.c_;
  }
  friend bool operator<(const ProjPointQ& a, const ProjPointQ& b) {
    for (int i = 0; i < 3; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  // index of the canonical affine chart (first nonzero coordinate)
  int chart() const { return c_[0] != 0 ? 0 : (c_[1] != 0 ? 1 : 2); }

  std::vector<Rat> as_rats() const {
    return {Rat(c_[0]), Rat(c_[1]), Rat(c_[2])};
  }

  std::string str() const {
    return "[" + c_[0].get_str() + "," + c_[1].get_str() + "," + c_[2].get_str() + "]";
  }

 private:
  std::array<Int, 3> c_;
};

struct Cubic {
  MultiPoly form;  // homogeneous of degree 3 in x, y, z, integer coefficients

  explicit Cubic(MultiPoly f) : form(std::move(f)) {
    if (form.is_zero()) throw std::invalid_argument("cubic: zero form");
    if (form.variables() != plane_vars())
      throw std::invalid_argument("cubic: expected variables x, y, z");
    if (form.total_degree() != 3 || !form.is_homogeneous())
      throw std::invalid_argument("cubic: form must be homogeneous of degree 3");
    for (const auto& [e, c] : form.terms())
      if (denom(c) != 1)
        throw std::invalid_argument("cubic: integer coefficients required");
  }

  Rat eval_at(const ProjPointQ& p) const { return form.eval(p.as_rats()); }
  bool contains(const ProjPointQ& p) const { return eval_at(p) == 0; }

  std::array<MultiPoly, 3> gradient() const {
    return {partial_derivative(form, "x"), partial_derivative(form, "y"),
            partial_derivative(form, "z")};
  }

  bool singular_at(const ProjPointQ& p) const {
    auto pt = p.as_rats();
    for (const auto& g : gradient())
      if (g.eval(pt) != 0) return false;
    return true;
  }
};

// A Galois-stable block of base points in the chart z = 1, in shape
// representation: t runs over the roots of the squarefree minimal
// polynomial f, the block is { (xi(t), eta(t), 1) : f(t) = 0 }.
// f need not be irreducible; all arithmetic stays in Q[t]/(f).
struct ConjugateOrbit {
  UniPoly minpoly;  // monic, squarefree
  UniPoly xi;       // x-coordinate mod minpoly
  UniPoly eta;      // y-coordinate mod minpoly
  int chart = 2;    // homogeneous coordinate set to 1 (z)

  int degree() const { return minpoly.degree(); }
};

namespace detail_pencil {

// h(x, t - lambda*x, 1) as a polynomial in {x, t}.
inline MultiPoly shear_dehomogenize(const MultiPoly& h, int lambda) {
  std::vector<std::string> xt{"x", "t"};
  MultiPoly x = MultiPoly(xt, {{{1, 0}, 1}});
  MultiPoly y = MultiPoly(xt, {{{0, 1}, 1}}) - Rat(lambda) * x;
  MultiPoly out(xt);
  for (const auto& [e, c] : h.terms()) {
    MultiPoly term = MultiPoly::constant(xt, c) * x.pow(e[0]) * y.pow(e[1]);
    out = out + term;
  }
  return out;
}

// substitute t = value into a {x, t} polynomial, returning a UniPoly in x
inline UniPoly at_t(const MultiPoly& p, const Rat& t0) {
  return p.eval_partial(1, t0).as_unipoly_in(0);
}

inline bool is_squarefree(const UniPoly& f) {
  return gcd(f, f.derivative()).degree() == 0;
}

// Evaluate a plane form at (xi(t), eta(t), 1) modulo f.
inline UniPoly eval_on_orbit(const MultiPoly& form, const ConjugateOrbit& orb) {
  const UniPoly& f = orb.minpoly;
  int d = form.total_degree();
  std::vector<UniPoly> xp(d + 1), yp(d + 1);
  xp[0] = UniPoly::constant(1);
  yp[0] = UniPoly::constant(1);
  for (int i = 1; i <= d; ++i) {
    xp[i] = mulmod(xp[i - 1], orb.xi, f);
    yp[i] = mulmod(yp[i - 1], orb.eta, f);
  }
  UniPoly acc;
  for (const auto& [e, c] : form.terms())
    acc = acc + c * mulmod(xp[e[0]], yp[e[1]], f);
  return acc % f;
}

}  // namespace detail_pencil

// All rational singular points of the cubic. Throws on a positive-
// dimensional singular locus (non-reduced or otherwise degenerate cubic).
inline std::vector<ProjPointQ> singular_locus(const Cubic& c) {
  auto grad = c.gradient();
  std::vector<ProjPointQ> found;
  auto push = [&](const ProjPointQ& p) {
    if (c.singular_at(p) &&
        std::find(found.begin(), found.end(), p) == found.end())
      found.push_back(p);
  };

  // Affine chart z = 1.
  std::vector<MultiPoly> aff;
  for (const auto& g : grad) aff.push_back(g.eval_partial(2, Rat(1)));
  std::vector<int> with_x, without_x;
  for (int i = 0; i < 3; ++i) {
    if (aff[i].is_zero()) continue;
    (aff[i].degree_in(0) >= 1 ? with_x : without_x).push_back(i);
  }
  auto scan_y_candidates = [&](const UniPoly& ey) {
    for (const Rat& y0 : rational_roots(ey)) {
      // common rational x-roots of all gradient components at y = y0
      std::optional<UniPoly> g;
      bool whole_line = true;
      for (const auto& a : aff) {
        UniPoly u = a.eval_partial(1, y0).as_unipoly_in(0);
        if (u.is_zero()) continue;
        whole_line = false;
        g = g ? gcd(*g, u) : u.monic();
      }
      if (whole_line)
        throw PencilError("positive-dimensional singular locus");
      if (!g || g->degree() < 0) continue;
      if (g->degree() == 0) continue;
      for (const Rat& x0 : rational_roots(*g)) push(ProjPointQ(x0, y0, Rat(1)));
    }
  };
  if (with_x.size() >= 2) {
    bool got = false;
    for (size_t a = 0; a < with_x.size() && !got; ++a)
      for (size_t b = a + 1; b < with_x.size() && !got; ++b) {
        MultiPoly r = resultant(aff[with_x[a]], aff[with_x[b]], "x");
        if (r.is_zero()) continue;
        UniPoly ey = r.as_unipoly_in(1);
        scan_y_candidates(ey);
        got = true;
      }
    if (!got) throw PencilError("positive-dimensional singular locus");
  } else if (with_x.size() == 1 && !without_x.empty()) {
    std::optional<UniPoly> ey;
    for (int i : without_x) {
      UniPoly u = aff[i].as_unipoly_in(1);
      ey = ey ? gcd(*ey, u) : u.monic();
    }
    if (ey && ey->degree() >= 1) scan_y_candidates(*ey);
  } else if (with_x.empty() && !without_x.empty()) {
    // all x-free: any common root gives a whole line of singular points
    std::optional<UniPoly> ey;
    for (int i : without_x) {
      UniPoly u = aff[i].as_unipoly_in(1);
      ey = ey ? gcd(*ey, u) : u.monic();
    }
    if (ey && ey->degree() >= 1)
      throw PencilError("positive-dimensional singular locus");
  } else {
    throw PencilError("positive-dimensional singular locus");
  }

  // Line at infinity z = 0: points [m, 1, 0] and [1, 0, 0].
  {
    std::optional<UniPoly> g;
    bool all_zero = true;
    for (const auto& gr : grad) {
      MultiPoly b = gr.eval_partial(2, Rat(0)).eval_partial(1, Rat(1));
      if (b.is_zero()) continue;
      all_zero = false;
      UniPoly u = b.as_unipoly_in(0);
      g = g ? gcd(*g, u) : u.monic();
    }
    if (all_zero) throw PencilError("positive-dimensional singular locus");
    if (g && g->degree() >= 1)
      for (const Rat& m : rational_roots(*g)) push(ProjPointQ(m, Rat(1), Rat(0)));
    push(ProjPointQ(1, 0, 0));
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Node test: nonzero 2x2 Hessian determinant of the dehomogenized cubic at
// the singular point, in the point's canonical chart.
inline bool is_node(const Cubic& c, const ProjPointQ& p) {
  if (!c.contains(p) || !c.singular_at(p))
    throw PencilError("is_node: point is not a singular point of the cubic");
  int ch = p.chart();
  auto pt = p.as_rats();
  Rat scale = pt[ch];
  std::vector<Rat> aff(3);
  for (int i = 0; i < 3; ++i) aff[i] = pt[i] / scale;
  MultiPoly g = c.form.eval_partial(ch, Rat(1));
  std::vector<std::string> uv;
  for (int i = 0; i < 3; ++i)
    if (i != ch) uv.push_back(plane_vars()[i]);
  MultiPoly guu = partial_derivative(g, uv[0], 2);
  MultiPoly gvv = partial_derivative(g, uv[1], 2);
  MultiPoly guv = partial_derivative(partial_derivative(g, uv[0]), uv[1]);
  std::vector<Rat> q(3, Rat(0));
  for (int i = 0; i < 3; ++i) q[i] = (i == ch) ? Rat(1) : aff[i];
  Rat det = guu.eval(q) * gvv.eval(q) - guv.eval(q) * guv.eval(q);
  return det != 0;
}

struct BaseLocus {
  std::vector<ProjPointQ> rational_points;
  std::vector<ConjugateOrbit> orbits;
  int shear = 0;  // separating coordinate was t = y + shear * x
};

// Shape representation of the affine residual locus for a fixed shear.
// Returns nullopt when the shear does not separate or the degree-1
// subresultant is missing.
inline std::optional<ConjugateOrbit> shape_representation_sheared(
    const Cubic& h1, const Cubic& h2, int lambda, int expected_degree) {
  using namespace detail_pencil;
  MultiPoly A = shear_dehomogenize(h1.form, lambda);
  MultiPoly B = shear_dehomogenize(h2.form, lambda);
  if (A.degree_in(0) < 1 || B.degree_in(0) < 1) return std::nullopt;
  auto prs = detail::subresultant_prs(A, B, 0);
  if (prs.resultant.is_zero())
    throw PencilError("base locus: cubics share a common component");
  UniPoly E = prs.resultant.as_unipoly_in(1);
  if (E.degree() != expected_degree || !is_squarefree(E)) return std::nullopt;
  UniPoly f = E.monic();
  // degree-1 member of the remainder sequence: S1(t) x + S0(t)
  const detail::CoeffVec* lin = nullptr;
  for (const auto& seq : prs.sequence)
    if (seq.size() == 2) lin = &seq;
  if (!lin) return std::nullopt;
  UniPoly S1 = (*lin)[1].as_unipoly_in(1);
  UniPoly S0 = (*lin)[0].as_unipoly_in(1);
  UniPoly xi;
  try {
    xi = mulmod(-S0 % f, mod_inverse(S1, f), f);
  } catch (const std::domain_error&) {
    return std::nullopt;  // zero divisor: this shear cannot represent the block
  }
  UniPoly eta = (UniPoly::monomial(1) - Rat(lambda) * xi) % f;
  ConjugateOrbit orb{f, xi, eta, 2};
  for (const Cubic* c : {&h1, &h2})
    if (!eval_on_orbit(c->form, orb).is_zero())
      throw PencilError("shape representation failed validation");
  return orb;
}

// Public entry point matching the analysis pipeline: tries shears
// t = y + lambda*x for lambda = 0..6.
inline ConjugateOrbit shape_representation(const Cubic& h1, const Cubic& h2,
                                           const std::vector<ProjPointQ>& rational_pts,
                                           int expected_degree = 8) {
  (void)rational_pts;
  for (int lambda = 0; lambda <= 6; ++lambda)
    if (auto orb = shape_representation_sheared(h1, h2, lambda, expected_degree))
      return *orb;
  throw PencilError("shape representation: no separating shear found");
}

// Decompose the base locus of the pencil. Rational points on the line at
// infinity are extracted exactly; the affine locus is either fully rational
// (returned as points) or carried whole as one shape-represented block.
// Factoring the block into Galois orbits is deliberately not attempted.
inline BaseLocus base_locus(const Cubic& h1, const Cubic& h2) {
  using namespace detail_pencil;
  BaseLocus out;

  // Points at infinity: common zeros of the restrictions to z = 0.
  MultiPoly b1 = h1.form.eval_partial(2, Rat(0));
  MultiPoly b2 = h2.form.eval_partial(2, Rat(0));
  if (b1.is_zero() && b2.is_zero())
    throw PencilError("base locus: cubics share the line at infinity");
  int inf_count = 0;
  if (b1.is_zero() || b2.is_zero()) {
    throw PencilError("base locus: a cubic contains the line at infinity");
  }
  UniPoly u1 = b1.eval_partial(1, Rat(1)).as_unipoly_in(0);
  UniPoly u2 = b2.eval_partial(1, Rat(1)).as_unipoly_in(0);
  // [1, 0, 0] is common iff both binary forms lack the x^3 monomial.
  if (u1.degree() < 3 && u2.degree() < 3) {
    out.rational_points.emplace_back(1, 0, 0);
    ++inf_count;
  }
  UniPoly ginf = gcd(u1, u2);
  if (ginf.degree() >= 1) {
    auto roots = rational_roots(ginf);
    if (static_cast<int>(roots.size()) != squarefree_part(ginf).degree())
      throw PencilError("base locus: irrational common point at infinity");
    for (const Rat& m : roots) {
      out.rational_points.emplace_back(m, Rat(1), Rat(0));
      ++inf_count;
    }
  }

  int affine_expected = 9 - inf_count;

  for (int lambda = 0; lambda <= 6; ++lambda) {
    MultiPoly A = shear_dehomogenize(h1.form, lambda);
    MultiPoly B = shear_dehomogenize(h2.form, lambda);
    if (A.is_zero() || B.is_zero())
      throw PencilError("base locus: degenerate dehomogenization");
    if (A.degree_in(0) < 1 || B.degree_in(0) < 1) continue;
    auto prs = detail::subresultant_prs(A, B, 0);
    if (prs.resultant.is_zero())
      throw PencilError("base locus: cubics share a common component");
    UniPoly E = prs.resultant.as_unipoly_in(1);
    if (E.degree() != affine_expected || !is_squarefree(E)) continue;

    auto troots = rational_roots(E);
    std::vector<ProjPointQ> affine_rational;
    bool ok = true;
    for (const Rat& t0 : troots) {
      UniPoly a0 = at_t(A, t0), b0 = at_t(B, t0);
      UniPoly g = a0.is_zero() ? b0.monic() : (b0.is_zero() ? a0.monic() : gcd(a0, b0));
      if (g.degree() != 1) {
        ok = false;  // simple eliminant root must carry exactly one point
        break;
      }
      Rat x0 = -g.coeff(0) / g.coeff(1);
      affine_rational.emplace_back(x0, t0 - Rat(lambda) * x0, Rat(1));
    }
    if (!ok) continue;

    if (static_cast<int>(troots.size()) == E.degree()) {
      // fully rational affine locus
      out.rational_points.insert(out.rational_points.end(),
                                 affine_rational.begin(), affine_rational.end());
      out.shear = lambda;
      return out;
    }
    auto orb = shape_representation_sheared(h1, h2, lambda, affine_expected);
    if (!orb) continue;
    out.orbits.push_back(*orb);
    out.shear = lambda;
    return out;
  }
  throw PencilError("base locus: fewer than nine distinct base points, or no separating shear");
}

struct PointConfig {
  ProjPointQ e9;     // the rational base point (image of E9)
  ProjPointQ e0;     // the extra blown-up point (image of E0)
  ProjPointQ node1;  // image of B1
  ProjPointQ node2;  // image of B2
  ConjugateOrbit orbit;
  std::pair<Cubic, Cubic> cubics;
  bool nodes_swapped = false;  // node_assignment override applied
};

// Assemble and validate the full configuration for a cubic pair and a
// choice of p(E0). node assignment: node of h1 -> B1 by default.
inline PointConfig build_config(const Cubic& h1, const Cubic& h2,
                                const ProjPointQ& e0, bool swap_nodes = false) {
  auto s1 = singular_locus(h1);
  if (s1.size() != 1 || !is_node(h1, s1[0]))
    throw PencilError("build_config: h1 is not a one-node nodal cubic");
  auto s2 = singular_locus(h2);
  if (s2.size() != 1 || !is_node(h2, s2[0]))
    throw PencilError("build_config: h2 is not a one-node nodal cubic");
  ProjPointQ n1 = s1[0], n2 = s2[0];
  if (swap_nodes) std::swap(n1, n2);
  if (n1 == n2) throw PencilError("build_config: the two nodes coincide");
  if (h2.contains(s1[0]) || h1.contains(s2[0]))
    throw PencilError("build_config: a node lies on the other cubic");

  BaseLocus bl = base_locus(h1, h2);
  if (bl.rational_points.size() != 1 || bl.orbits.size() != 1 ||
      bl.orbits[0].degree() != 9 - 1)
    throw PencilError(
        "build_config: base locus shape unexpected (need one rational base "
        "point and a residual block of degree 8)");
  ProjPointQ e9 = bl.rational_points[0];
  if (h1.singular_at(e9) || h2.singular_at(e9))
    throw PencilError("build_config: rational base point is singular on a cubic");

  if (h1.contains(e0) || h2.contains(e0))
    throw PencilError("build_config: e0 lies on a cubic of the pencil");
  for (const ProjPointQ& p : {e9, n1, n2})
    if (e0 == p) throw PencilError("build_config: e0 coincides with a marked point");
  if (e9 == n1 || e9 == n2)
    throw PencilError("build_config: marked points not distinct");

  return PointConfig{e9, e0, n1, n2, bl.orbits[0], {h1, h2}, swap_nodes};
}

}  // namespace enriques
