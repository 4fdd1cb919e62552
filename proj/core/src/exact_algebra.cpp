#include "ncspec/exact_algebra.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

#include "ncspec/errors.hpp"

namespace ncspec {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntMatrix: rows must form a square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<Integer> IntMatrix::row_sums() const {
  std::vector<Integer> sums(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) sums[i] += (*this)(i, j);
  return sums;
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != n_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  std::vector<Integer> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::block(std::size_t first, std::size_t count) const {
  if (first + count > n_) throw std::out_of_range("IntMatrix::block");
  IntMatrix b(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(first + i, first + j);
  return b;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw std::invalid_argument("IntMatrix multiply: order mismatch");
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t p = a.order();
  IntMatrix s(p + b.order());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.order(); ++i)
    for (std::size_t j = 0; j < b.order(); ++j) s(p + i, p + j) = b(i, j);
  return s;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  std::vector<Integer> c(degree + 1, 0);
  c[degree] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::linear(const Integer& root) {
  return IntPolynomial({Integer(-root), Integer(1)});
}

IntPolynomial IntPolynomial::monic_quadratic(const Integer& sum, const Integer& product) {
  return IntPolynomial({product, Integer(-sum), Integer(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Integer> c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Integer> c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Integer> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_pow(const IntPolynomial& p, unsigned long k) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (k > 0) {
    if (k & 1UL) result = poly_mul(result, base);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

bool poly_eq(const IntPolynomial& p, const IntPolynomial& q) { return p == q; }

PolyDivision poly_divmod(const IntPolynomial& p, const IntPolynomial& monic_divisor) {
  if (!monic_divisor.is_monic())
    throw std::invalid_argument("poly_divmod: divisor must be monic");
  const long dd = monic_divisor.degree();
  if (p.degree() < dd) return {IntPolynomial{}, p};
  std::vector<Integer> rem = p.coefficients();
  const auto& d = monic_divisor.coefficients();
  std::vector<Integer> quot(rem.size() - d.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer lead = rem[k + dd];
    quot[k] = lead;
    if (sgn(lead) == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[k + j] -= lead * d[j];
  }
  rem.resize(dd);
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& p,
                                               const IntPolynomial& monic_divisor) {
  auto [q, r] = poly_divmod(p, monic_divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

unsigned long divide_out(IntPolynomial& p, const IntPolynomial& monic_factor,
                         unsigned long limit) {
  unsigned long k = 0;
  while (k < limit && !p.is_zero()) {
    auto q = poly_divide_exact(p, monic_factor);
    if (!q) break;
    p = std::move(*q);
    ++k;
  }
  return k;
}

unsigned long root_multiplicity(const IntPolynomial& p, const Integer& root) {
  if (p.is_zero()) throw std::invalid_argument("root_multiplicity: zero polynomial");
  IntPolynomial rest = p;
  return divide_out(rest, IntPolynomial::linear(root), ULONG_MAX);
}

IntegerRootFactorization factor_integer_roots(const IntPolynomial& p, const Integer& bound) {
  IntegerRootFactorization out;
  out.residual = p;
  if (p.is_zero()) return out;
  for (Integer r = -abs(bound); r <= abs(bound); ++r) {
    if (out.residual.degree() < 1) break;
    if (sgn(out.residual.evaluate(r)) != 0) continue;
    const unsigned long k = divide_out(out.residual, IntPolynomial::linear(r), ULONG_MAX);
    out.roots.emplace_back(r, k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic polynomials

namespace {

// Coefficient matrix for the Faddeev-LeVerrier products. Distance-type
// matrices have tiny entries, so the hot loop multiplies big integers by
// machine words whenever every entry fits.
class CoefficientMatrix {
 public:
  explicit CoefficientMatrix(const IntMatrix& m) : n_(m.order()), big_(m) {
    small_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (!m(i, j).fits_slong_p()) {
          small_.clear();
          small_ok_ = false;
          return;
        }
        small_.push_back(m(i, j).get_si());
      }
  }

  // out_row[j] += a(i,l) * row[j] for j in [from, n)
  void accumulate(std::size_t i, std::size_t l, const Integer* row, Integer* out_row,
                  std::size_t from) const {
    if (small_ok_) {
      const long a = small_[i * n_ + l];
      if (a == 0) return;
      const unsigned long mag = a < 0 ? 0UL - static_cast<unsigned long>(a)
                                      : static_cast<unsigned long>(a);
      if (a > 0) {
        for (std::size_t j = from; j < n_; ++j)
          mpz_addmul_ui(out_row[j].get_mpz_t(), row[j].get_mpz_t(), mag);
      } else {
        for (std::size_t j = from; j < n_; ++j)
          mpz_submul_ui(out_row[j].get_mpz_t(), row[j].get_mpz_t(), mag);
      }
      return;
    }
    const Integer& a = big_(i, l);
    if (sgn(a) == 0) return;
    for (std::size_t j = from; j < n_; ++j)
      mpz_addmul(out_row[j].get_mpz_t(), row[j].get_mpz_t(), a.get_mpz_t());
  }

 private:
  std::size_t n_;
  const IntMatrix& big_;
  std::vector<long> small_;
  bool small_ok_ = true;
};

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  if (n == 0) return IntPolynomial(std::move(c));

  const bool symmetric = m.is_symmetric();
  const CoefficientMatrix a(m);

  // current = M_k, starts at M_1 = I. product = A * M_k.
  IntMatrix current = IntMatrix::identity(n);
  IntMatrix product(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n) {
      // Only the trace of A * M_n is needed.
      Integer t = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) t += m(i, l) * current(l, i);
      c[0] = -t;
      mpz_divexact_ui(c[0].get_mpz_t(), c[0].get_mpz_t(), k);
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Integer* out_row = &product(i, 0);
      const std::size_t from = symmetric ? i : 0;
      for (std::size_t j = from; j < n; ++j) out_row[j] = 0;
      for (std::size_t l = 0; l < n; ++l) a.accumulate(i, l, &current(l, 0), out_row, from);
    }
    if (symmetric)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) product(i, j) = product(j, i);

    Integer t = product.trace();
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), t.get_mpz_t(), k);
    if (sgn(r) != 0) throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
    Integer coeff = -t;
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k);
    c[n - k] = coeff;

    std::swap(current, product);
    for (std::size_t i = 0; i < n; ++i) current(i, i) += coeff;
  }
  return IntPolynomial(std::move(c));
}

Integer bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

IntPolynomial char_poly_interpolated(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return IntPolynomial::constant(1);

  // Values of det(x I - m) for x = 0..n.
  std::vector<Integer> diffs(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = -m(i, j);
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += static_cast<unsigned long>(x);
    diffs[x] = bareiss_determinant(std::move(shifted));
  }
  // In-place forward differences: diffs[k] becomes Delta^k p(0).
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t x = n; x >= k; --x) diffs[x] -= diffs[x - 1];

  // Newton coefficients a_k = Delta^k p(0) / k!, integral for integer polynomials.
  Integer factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    if (!mpz_divisible_p(diffs[k].get_mpz_t(), factorial.get_mpz_t()))
      throw std::logic_error("char_poly_interpolated: non-integral Newton coefficient");
    mpz_divexact(diffs[k].get_mpz_t(), diffs[k].get_mpz_t(), factorial.get_mpz_t());
  }
  // Horner in the falling-factorial basis: p = a_0 + x(a_1 + (x-1)(a_2 + ...)).
  IntPolynomial p = IntPolynomial::constant(diffs[n]);
  for (std::size_t k = n; k-- > 0;) {
    p = poly_mul(p, IntPolynomial::linear(Integer(static_cast<unsigned long>(k))));
    p = p + IntPolynomial::constant(diffs[k]);
  }
  return p;
}

std::size_t exact_rank(std::span<const std::vector<Integer>> rows) {
  std::vector<std::vector<Integer>> work(rows.begin(), rows.end());
  if (work.empty()) return 0;
  const std::size_t cols = work.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < work.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < work.size() && sgn(work[pivot][col]) == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[rank], work[pivot]);
    for (std::size_t i = rank + 1; i < work.size(); ++i) {
      if (sgn(work[i][col]) == 0) continue;
      const Integer f = work[i][col];
      const Integer g = work[rank][col];
      for (std::size_t j = col; j < cols; ++j) work[i][j] = work[i][j] * g - work[rank][j] * f;
      // Keep rows primitive so entries do not balloon.
      Integer content = 0;
      for (const auto& v : work[i]) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
      if (content > 1)
        for (auto& v : work[i]) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Number theory helpers

Integer integer_sqrt(const Integer& v) {
  if (sgn(v) < 0) throw std::invalid_argument("integer_sqrt: negative input");
  if (v < 2) return v;
  // Start above the root: 2^ceil(bits/2) >= sqrt(v).
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  Integer x = 1;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    Integer y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::optional<Integer> is_perfect_square(const Integer& v) {
  if (sgn(v) < 0) return std::nullopt;
  Integer r = integer_sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

std::optional<std::pair<Rational, Rational>> rational_roots_of_quadratic(const Integer& a,
                                                                         const Integer& b,
                                                                         const Integer& c) {
  if (sgn(a) == 0) throw DegenerateQuadratic("quadratic has zero leading coefficient");
  const Integer disc = b * b - 4 * a * c;
  const auto root = is_perfect_square(disc);
  if (!root) return std::nullopt;
  Rational first(Integer(-b + *root), Integer(2 * a));
  Rational second(Integer(-b - *root), Integer(2 * a));
  first.canonicalize();
  second.canonicalize();
  return std::pair{first, second};
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ncspec
