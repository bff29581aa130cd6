#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// dense rational matrices, probability vectors, and the basic counting
// functions (binomials, Eulerian numbers of type A and B, Irwin-Hall CDF).
// Everything in this header is exact; doubles appear only when the caller
// explicitly converts.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace carries {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

// Exact rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const BigInt& n) : v_(n) {}      // NOLINT
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  Rational pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational out;
    out.v_ = std::move(r);  // lowest terms is preserved under powers
    return out;
  }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  int sign() const { return sgn(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T init = T())
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix c(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned long e) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: pow needs square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  // Exact determinant by fraction-free-ish Gaussian elimination (T must be a field).
  T determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant needs square matrix");
    Matrix a = *this;
    T det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t pivot = col;
      while (pivot < rows_ && a(pivot, col) == T(0)) ++pivot;
      if (pivot == rows_) return T(0);
      if (pivot != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(col, j));
        det = -det;
      }
      det *= a(col, col);
      T inv_pivot = T(1) / a(col, col);
      for (std::size_t i = col + 1; i < rows_; ++i) {
        if (a(i, col) == T(0)) continue;
        T factor = a(i, col) * inv_pivot;
        for (std::size_t j = col; j < cols_; ++j) a(i, j) -= factor * a(col, j);
      }
    }
    return det;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;

inline bool is_row_stochastic(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < Rational(0)) return false;
      s += m(i, j);
    }
    if (s != Rational(1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ProbVector
// ---------------------------------------------------------------------------

// Exact distribution over a finite state space: entries >= 0, sum exactly 1.
class ProbVector {
 public:
  ProbVector() = default;
  explicit ProbVector(std::vector<Rational> entries) : p_(std::move(entries)) {
    Rational s(0);
    for (const auto& x : p_) {
      if (x < Rational(0)) throw std::invalid_argument("ProbVector: negative entry");
      s += x;
    }
    if (s != Rational(1)) throw std::invalid_argument("ProbVector: entries must sum to 1");
  }

  std::size_t size() const { return p_.size(); }
  const Rational& operator[](std::size_t i) const { return p_[i]; }
  const std::vector<Rational>& entries() const { return p_; }

  // Left action p -> pM on a row-stochastic matrix.
  ProbVector apply(const ExactMatrix& m) const {
    if (m.rows() != p_.size()) throw std::invalid_argument("ProbVector: dimension mismatch");
    std::vector<Rational> out(m.cols(), Rational(0));
    for (std::size_t i = 0; i < p_.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out[j] += p_[i] * m(i, j);
    return ProbVector(std::move(out));
  }

 private:
  std::vector<Rational> p_;
};

// (1/2) sum |p - q|.  Equals max_A |p(A) - q(A)|; the subset form is checked
// exhaustively in the test suite for small dimensions.
inline Rational tv_distance(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("tv_distance: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]).abs();
  return s / Rational(2);
}

inline Rational tv_distance(const ProbVector& p, const ProbVector& q) {
  return tv_distance(p.entries(), q.entries());
}

// ---------------------------------------------------------------------------
// Counting functions
// ---------------------------------------------------------------------------

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Binomial coefficient with the convention C(top, bottom) = 0 whenever
// top < bottom, including negative top.  This makes the alternating sums
// used throughout valid with unrestricted upper limits.
inline BigInt binomial(const BigInt& top, long bottom) {
  if (bottom < 0) throw std::invalid_argument("binomial: bottom must be >= 0");
  if (top < bottom) return BigInt(0);
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(bottom));
  return r;
}

inline BigInt binomial(long top, long bottom) { return binomial(BigInt(top), bottom); }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Eulerian number A(n, j): permutations of S_n with exactly j descents,
// computed by Euler's alternating-sum identity
//   A(n,j) = sum_{l=0}^{j} (-1)^l C(n+1, l) (j+1-l)^n.
inline BigInt eulerian(unsigned long n, long j) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be >= 1");
  if (j < 0 || j > static_cast<long>(n) - 1) return BigInt(0);
  BigInt acc(0);
  for (long l = 0; l <= j; ++l) {
    BigInt term = binomial(BigInt(n + 1), l) * pow_int(BigInt(j + 1 - l), n);
    if (l % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Type-B Eulerian number: signed permutations of B_n with exactly j descents
// (descents taken in the order 1 < 2 < ... < n < -n < ... < -1, with a
// descent at position n when the last entry is negative):
//   Abar(n,j) = sum_{l=0}^{j} (-1)^l C(n+1, l) (2j-2l+1)^n.
inline BigInt eulerian_type_b(unsigned long n, long j) {
  if (n < 1) throw std::invalid_argument("eulerian_type_b: n must be >= 1");
  if (j < 0 || j > static_cast<long>(n)) return BigInt(0);
  BigInt acc(0);
  for (long l = 0; l <= j; ++l) {
    BigInt term = binomial(BigInt(n + 1), l) * pow_int(BigInt(2 * j - 2 * l + 1), n);
    if (l % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// P(U_1 + ... + U_n < x) for i.i.d. uniforms on [0,1], exact for rational x:
//   (1/n!) sum_{k=0}^{floor(x)} (-1)^k C(n,k) (x-k)^n  on [0, n],
// clamped to 0 and 1 outside.
inline Rational irwin_hall_cdf(unsigned long n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("irwin_hall_cdf: n must be >= 1");
  if (x <= Rational(0)) return Rational(0);
  if (x >= Rational(BigInt(n))) return Rational(1);
  BigInt fx = x.floor();
  Rational acc(0);
  for (BigInt k(0); k <= fx; ++k) {
    Rational term = Rational(binomial(BigInt(n), k.get_si())) *
                    (x - Rational(k)).pow(n);
    if (mpz_even_p(k.get_mpz_t()))
      acc += term;
    else
      acc -= term;
  }
  return acc / Rational(factorial(n));
}

}  // namespace carries
