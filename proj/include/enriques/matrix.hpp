// Exact rational matrices and rank computation: fraction-free Bareiss
// elimination over the integers (after clearing row denominators) and an
// independent modular-prime rank oracle for cross-checking.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "enriques/rational.hpp"

namespace enriques {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  void append_row(const std::vector<Rat>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("row length mismatch");
    e_.insert(e_.end(), row.begin(), row.end());
    ++rows_;
  }

  // Integer matrix obtained by scaling each row by its denominator lcm.
  // Rank-preserving.
  std::vector<std::vector<Int>> cleared_rows() const {
    std::vector<std::vector<Int>> m(rows_);
    for (int i = 0; i < rows_; ++i) {
      std::vector<Rat> row(e_.begin() + static_cast<size_t>(i) * cols_,
                           e_.begin() + static_cast<size_t>(i + 1) * cols_);
      Int l = denominator_lcm(row);
      m[i].resize(cols_);
      for (int j = 0; j < cols_; ++j) {
        Rat v = row[j] * Rat(l);
        m[i][j] = numer(v);
      }
    }
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

// Exact rank over Q: fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix, choosing the largest-magnitude entry
// in each column as pivot. Deterministic for fixed input.
inline int rank(const RatMatrix& mat) {
  auto m = mat.cleared_rows();
  int rows = mat.rows(), cols = mat.cols();
  int r = 0;
  Int prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0 &&
          (piv < 0 || mpz_cmpabs(m[i][c].get_mpz_t(), m[piv][c].get_mpz_t()) > 0))
        piv = i;
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

namespace modular {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

// Deterministically seeded stream of primes in (2^30, 2^31).
inline std::vector<std::uint64_t> random_primes(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist((1ULL << 30) + 1,
                                                    (1ULL << 31) - 1);
  std::vector<std::uint64_t> primes;
  while (static_cast<int>(primes.size()) < count) {
    std::uint64_t cand = dist(rng) | 1;
    Int z(static_cast<unsigned long>(cand));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) primes.push_back(cand);
  }
  return primes;
}

inline std::uint64_t reduce(const Int& n, std::uint64_t p) {
  Int r = n % Int(static_cast<unsigned long>(p));
  if (r < 0) r += Int(static_cast<unsigned long>(p));
  return r.get_ui();
}

// Rank of an integer matrix modulo p; a lower bound for the rank over Q,
// with equality for all but finitely many primes.
inline int rank_mod_p(const std::vector<std::vector<Int>>& m, std::uint64_t p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = reduce(m[i][j], p);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    std::uint64_t inv = invmod(a[r][c], p);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv, p);
      for (int j = c; j < cols; ++j) {
        std::uint64_t s = mulmod(f, a[r][j], p);
        a[i][j] = (a[i][j] >= s) ? a[i][j] - s : a[i][j] + p - s;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace modular

}  // namespace enriques
