// Dense univariate polynomials over Q: Euclidean arithmetic, gcd and
// extended gcd, squarefree part, inverses in Q[t]/(f), rational root
// extraction. Coefficients are stored in ascending degree; the leading
// coefficient is nonzero unless the polynomial is zero.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& a) { return UniPoly({a}); }
  // t^k
  static UniPoly monomial(int k, const Rat& a = 1) {
    std::vector<Rat> c(k + 1);
    c[k] = a;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
  }
  const Rat& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(std::move(c));
  }
  UniPoly operator-() const {
    std::vector<Rat> c(c_);
    for (Rat& x : c) x = -x;
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const Rat& s, const UniPoly& a) {
    std::vector<Rat> c(a.c_);
    for (Rat& x : c) x *= s;
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  // Euclidean division; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rat> quo(a.degree() - db + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
      Rat q = rem[k + db] / b.c_.back();
      quo[k] = q;
      if (q != 0)
        for (int j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
    }
    rem.resize(db > 0 ? db : 0);
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
  }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) {
    return divmod(a, b).second;
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    return divmod(a, b).first;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return Rat(1) / leading() * (*this);
  }

  // Integer-coefficient form with content removed; sign of leading
  // coefficient made positive.
  UniPoly primitive() const {
    if (is_zero()) return *this;
    std::vector<Rat> v(c_);
    Int l = denominator_lcm(v);
    Int g = 0;
    for (Rat& q : v) {
      q *= Rat(l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), numer(q).get_mpz_t());
    }
    if (g == 0) g = 1;
    Rat scale(g);
    if (v.back() < 0) scale = -scale;
    for (Rat& q : v) q /= scale;
    return UniPoly(std::move(v));
  }

  void swap(UniPoly& o) noexcept { c_.swap(o.c_); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // ascending degree
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a.swap(b);
    b.swap(r);
  }
  return a.monic();
}

// f / gcd(f, f'): same roots, multiplicity one, returned primitive.
inline UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
  UniPoly g = gcd(f, f.derivative());
  return (f / g).primitive();
}

// Extended Euclid: returns (g, u, v) monic g = gcd with u*a + v*b = g.
inline std::tuple<UniPoly, UniPoly, UniPoly> extended_gcd(const UniPoly& a,
                                                          const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(1), u1;
  UniPoly v0, v1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly::divmod(r0, r1);
    r0 = r1;
    r1 = r;
    UniPoly u = u0 - q * u1;
    u0 = u1;
    u1 = u;
    UniPoly v = v0 - q * v1;
    v0 = v1;
    v1 = v;
  }
  if (!r0.is_zero()) {
    Rat s = Rat(1) / r0.leading();
    r0 = s * r0;
    u0 = s * u0;
    v0 = s * v0;
  }
  return {r0, u0, v0};
}

// Inverse of g in Q[t]/(f). Throws when gcd(g, f) is not constant: g is a
// zero divisor in the quotient ring.
inline UniPoly mod_inverse(const UniPoly& g, const UniPoly& f) {
  if (f.degree() < 1) throw std::domain_error("mod_inverse: modulus must have positive degree");
  UniPoly gr = g % f;
  if (gr.is_zero()) throw std::domain_error("mod_inverse: zero divisor (g divisible by f)");
  auto [d, u, v] = extended_gcd(gr, f);
  if (d.degree() != 0)
    throw std::domain_error("mod_inverse: zero divisor (nontrivial gcd with modulus)");
  return u % f;
}

inline UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& f) {
  return (a * b) % f;
}

// All rational roots, obtained from the primitive integer form by divisor
// enumeration on the constant and leading coefficients. Intended for the
// small eliminants of the pencil analysis.
inline std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  UniPoly p = f.primitive();
  std::vector<Rat> roots;
  // factor out t^k
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    std::vector<Rat> c(p.coeffs().begin() + low, p.coeffs().end());
    p = UniPoly(std::move(c));
  }
  if (p.degree() < 1) return roots;
  Int a0, an;
  a0 = numer(p.coeff(0));
  an = numer(p.leading());
  if (a0 < 0) a0 = -a0;
  if (an < 0) an = -an;
  auto divisors = [](const Int& n) {
    std::vector<Int> ds;
    for (Int d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  std::vector<Int> ps = divisors(a0), qs = divisors(an);
  for (const Int& pn : ps)
    for (const Int& qn : qs) {
      for (int sgn : {1, -1}) {
        Rat cand(sgn * pn, qn);
        cand.canonicalize();
        if (p.eval(cand) == 0) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace enriques
