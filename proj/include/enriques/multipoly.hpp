// Sparse multivariate polynomials over Q with graded lexicographic term
// order (x > y > z for the standard plane variables), plus the subresultant
// polynomial-remainder sequence and resultants used by the pencil analysis.
#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "enriques/rational.hpp"
#include "enriques/unipoly.hpp"

namespace enriques {

// Graded lex, leading term first: higher total degree wins, ties broken
// lexicographically on the exponent of the earlier variable.
struct GradedLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rat, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  MultiPoly(std::vector<std::string> vars,
            std::vector<std::pair<std::vector<int>, Rat>> terms)
      : vars_(std::move(vars)) {
    for (auto& [e, c] : terms) add_term(e, c);
  }
  static MultiPoly constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(std::vector<int>(p.vars_.size(), 0), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable name: " + name);
  }

  void add_term(const std::vector<int>& exps, const Rat& c) {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("exponent tuple length mismatch");
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int total_degree() const {  // -1 for the zero polynomial
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool is_homogeneous() const {
    int d = total_degree();
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.vars_);
    std::vector<int> e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const Rat& s, const MultiPoly& a) {
    MultiPoly r(a.vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int n) const {
    MultiPoly r = constant(vars_, 1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

  // Substitute one variable by a rational value.
  MultiPoly eval_partial(int var, const Rat& value) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Rat cc = c;
      for (int k = 0; k < e[var]; ++k) cc *= value;
      std::vector<int> ee = e;
      ee[var] = 0;
      r.add_term(ee, cc);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
      throw std::invalid_argument("evaluation point arity mismatch");
    Rat v = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      v += t;
    }
    return v;
  }

  // View as a univariate polynomial in vars_[var]; coefficients are
  // polynomials in the remaining variables (exponent of var zeroed).
  UniPoly as_unipoly_in(int var) const {
    for (const auto& [e, c] : terms_)
      for (size_t i = 0; i < e.size(); ++i)
        if (static_cast<int>(i) != var && e[i] != 0)
          throw std::domain_error("as_unipoly_in: polynomial is not univariate");
    std::vector<Rat> cs(degree_in(var) + 1);
    for (const auto& [e, c] : terms_) cs[e[var]] = c;
    return UniPoly(std::move(cs));
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// d^order p / d var^order, exact.
inline MultiPoly partial_derivative(const MultiPoly& p, const std::string& var,
                                    int order = 1) {
  int v = p.var_index(var);
  MultiPoly r = p;
  for (int step = 0; step < order; ++step) {
    MultiPoly d(p.variables());
    for (const auto& [e, c] : r.terms()) {
      if (e[v] == 0) continue;
      std::vector<int> ee = e;
      ee[v] -= 1;
      d.add_term(ee, Rat(e[v]) * c);
    }
    r = d;
  }
  return r;
}

// Exact multivariate division (throws if not exact). Used by the
// subresultant sequence, where all divisions are exact by construction.
inline MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide by zero");
  MultiPoly rem = a;
  MultiPoly quo(a.variables());
  const auto& bl = *b.terms().begin();
  std::vector<int> e(a.variables().size());
  while (!rem.is_zero()) {
    const auto& rl = *rem.terms().begin();
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = rl.first[i] - bl.first[i];
      if (e[i] < 0) throw std::domain_error("exact_divide: division is not exact");
    }
    Rat c = rl.second / bl.second;
    quo.add_term(e, c);
    MultiPoly t(a.variables());
    t.add_term(e, c);
    rem = rem - t * b;
  }
  return quo;
}

namespace detail {

// Polynomial in one distinguished variable with MultiPoly coefficients,
// ascending degree; the coefficients do not involve the variable.
using CoeffVec = std::vector<MultiPoly>;

inline CoeffVec to_coeffs(const MultiPoly& p, int var) {
  int d = p.degree_in(var);
  CoeffVec cs(std::max(d + 1, 0), MultiPoly(p.variables()));
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ee = e;
    int k = ee[var];
    ee[var] = 0;
    cs[k].add_term(ee, c);
  }
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

inline MultiPoly from_coeffs(const CoeffVec& cs, int var,
                             const std::vector<std::string>& vars) {
  MultiPoly p(vars);
  for (size_t k = 0; k < cs.size(); ++k)
    for (const auto& [e, c] : cs[k].terms()) {
      std::vector<int> ee = e;
      ee[var] = static_cast<int>(k);
      p.add_term(ee, c);
    }
  return p;
}

inline void trim(CoeffVec& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline CoeffVec scale(const CoeffVec& v, const MultiPoly& s) {
  CoeffVec r = v;
  for (auto& c : r) c = c * s;
  return r;
}

inline CoeffVec divide(const CoeffVec& v, const MultiPoly& s) {
  CoeffVec r = v;
  for (auto& c : r)
    if (!c.is_zero()) c = exact_divide(c, s);
  return r;
}

// Pseudo-remainder prem(A, B) = lc(B)^(degA-degB+1) * A mod B.
inline CoeffVec prem(CoeffVec a, const CoeffVec& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  const MultiPoly& lb = b.back();
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) {
    // still multiply by lc(B)^(da-db+1)? convention: degA >= degB assumed
    return a;
  }
  int e = da - db + 1;
  for (auto& c : a) c = c * lb.pow(e);
  // now reduce
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int d = static_cast<int>(a.size()) - 1;
    MultiPoly q = exact_divide(a.back(), lb);
    // a -= q * x^(d-db) * b
    for (int j = 0; j <= db; ++j) a[d - db + j] = a[d - db + j] - q * b[j];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

struct SubresultantResult {
  std::vector<CoeffVec> sequence;  // the remainder sequence, decreasing degree
  MultiPoly resultant;             // Res_var(p, q)
};

// Subresultant PRS (Ducos/Cohen style bookkeeping with g, h), returning both
// the sequence and the resultant with correct sign and normalization.
inline SubresultantResult subresultant_prs(const MultiPoly& p, const MultiPoly& q,
                                           int var) {
  const auto& vars = p.variables();
  MultiPoly one = MultiPoly::constant(vars, 1);
  CoeffVec A = to_coeffs(p, var), B = to_coeffs(q, var);
  int sign = 1;
  if (static_cast<int>(A.size()) < static_cast<int>(B.size())) {
    int da = static_cast<int>(A.size()) - 1, db = static_cast<int>(B.size()) - 1;
    if ((da & 1) && (db & 1)) sign = -sign;
    std::swap(A, B);
  }
  SubresultantResult out{{A, B}, MultiPoly(vars)};
  if (B.empty()) {
    out.resultant = MultiPoly(vars);  // Res(A, 0) = 0 for deg A > 0
    return out;
  }
  if (B.size() == 1) {
    int da = static_cast<int>(A.size()) - 1;
    out.resultant = (sign == 1 ? one : -one) * B[0].pow(da);
    return out;
  }
  MultiPoly g = one, h = one;
  while (true) {
    int da = static_cast<int>(A.size()) - 1;
    int db = static_cast<int>(B.size()) - 1;
    int d = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    CoeffVec R = prem(A, B);
    A = B;
    MultiPoly divisor = g * h.pow(d);
    B = divide(R, divisor);
    trim(B);
    if (!B.empty()) out.sequence.push_back(B);
    g = A.back();
    if (d >= 1) h = (d == 1) ? g : exact_divide(g.pow(d), h.pow(d - 1));
    if (B.empty()) {
      out.resultant = MultiPoly(vars);  // common factor of positive degree
      return out;
    }
    if (B.size() == 1) break;
  }
  int da = static_cast<int>(A.size()) - 1;
  MultiPoly res = B[0].pow(da);
  if (da >= 1) res = exact_divide(res, h.pow(da - 1));
  out.resultant = (sign == 1 ? res : -res);
  return out;
}

}  // namespace detail

// Res_var(p, q) via the subresultant polynomial-remainder sequence.
// Errors when either input is zero or constant in var.
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q,
                           const std::string& var) {
  int v = p.var_index(var);
  if (p.degree_in(v) < 1 || q.degree_in(v) < 1)
    throw std::domain_error("resultant: inputs must have positive degree in " + var);
  return detail::subresultant_prs(p, q, v).resultant;
}

}  // namespace enriques
