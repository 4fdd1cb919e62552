#pragma once

// Exact integer linear algebra: dense big-integer matrices, integer
// polynomials, characteristic polynomials and a few number-theoretic helpers.
// Nothing in here ever touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncspec {

using Integer = mpz_class;
using Rational = mpq_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  Integer trace() const;
  bool is_symmetric() const;
  std::vector<Integer> row_sums() const;
  std::vector<Integer> apply(std::span<const Integer> v) const;

  // Principal submatrix on the index range [first, first + count).
  IntMatrix block(std::size_t first, std::size_t count) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Block-diagonal direct sum of a and b.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

// Polynomial in one indeterminate with big-integer coefficients, stored in
// ascending degree. The representation is kept normalized: no trailing zero
// coefficients, and the zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(std::size_t degree);
  // lambda - root
  static IntPolynomial linear(const Integer& root);
  // lambda^2 - sum*lambda + product
  static IntPolynomial monic_quadratic(const Integer& sum, const Integer& product);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const;
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Integer evaluate(const Integer& x) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_pow(const IntPolynomial& p, unsigned long k);
bool poly_eq(const IntPolynomial& p, const IntPolynomial& q);

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

// Long division by a monic divisor; stays in the integers.
PolyDivision poly_divmod(const IntPolynomial& p, const IntPolynomial& monic_divisor);

// Quotient when monic_divisor divides p exactly, nothing otherwise.
std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& p,
                                               const IntPolynomial& monic_divisor);

// Largest k with factor^k | p, capped at `limit`; p is replaced by p / factor^k.
unsigned long divide_out(IntPolynomial& p, const IntPolynomial& monic_factor,
                         unsigned long limit);

unsigned long root_multiplicity(const IntPolynomial& p, const Integer& root);

struct IntegerRootFactorization {
  std::vector<std::pair<Integer, unsigned long>> roots;  // ascending
  IntPolynomial residual;  // no integer roots inside the searched window
};

// Splits off every integer root r with |r| <= bound by repeated synthetic
// division. For a symmetric matrix the maximal absolute row sum is a valid
// bound on every eigenvalue.
IntegerRootFactorization factor_integer_roots(const IntPolynomial& p, const Integer& bound);

// det(lambda*I - m) by Faddeev-LeVerrier. Step k divides a trace by k, and
// that division is exact over the integers.
IntPolynomial char_poly(const IntMatrix& m);

// det(lambda*I - m) by evaluating at lambda = 0..n with fraction-free
// determinants and interpolating in the falling-factorial basis.
IntPolynomial char_poly_interpolated(const IntMatrix& m);

// Fraction-free Gaussian elimination with row pivoting.
Integer bareiss_determinant(IntMatrix m);

// Rank over the rationals, computed fraction-free.
std::size_t exact_rank(std::span<const std::vector<Integer>> rows);

// Newton iteration on integers. Input must be nonnegative.
Integer integer_sqrt(const Integer& v);

std::optional<Integer> is_perfect_square(const Integer& v);

// Both roots of a*x^2 + b*x + c when the discriminant is a perfect square,
// ordered (-b + r) / 2a then (-b - r) / 2a. Throws DegenerateQuadratic for a == 0.
std::optional<std::pair<Rational, Rational>> rational_roots_of_quadratic(const Integer& a,
                                                                         const Integer& b,
                                                                         const Integer& c);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace ncspec
