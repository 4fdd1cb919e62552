#include "ncspec/closed_form.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "ncspec/errors.hpp"

namespace ncspec {

std::string kind_tag(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Distance: return "d";
    case MatrixKind::DistanceLaplacian: return "dl";
    case MatrixKind::DistanceSignlessLaplacian: return "dq";
  }
  return "?";
}

std::optional<MatrixKind> parse_kind(const std::string& tag) {
  if (tag == "d") return MatrixKind::Distance;
  if (tag == "dl") return MatrixKind::DistanceLaplacian;
  if (tag == "dq") return MatrixKind::DistanceSignlessLaplacian;
  return std::nullopt;
}

std::string to_string(const EigenvalueDesc& e) {
  if (const auto* i = std::get_if<IntegerEigenvalue>(&e)) return i->value.get_str();
  const auto& q = std::get<QuadraticPair>(e);
  return "(" + q.sum.get_str() + " +- sqrt(" + q.discriminant().get_str() + "))/2";
}

IntPolynomial factor_of(const EigenvalueDesc& e) {
  if (const auto* i = std::get_if<IntegerEigenvalue>(&e)) return IntPolynomial::linear(i->value);
  const auto& q = std::get<QuadraticPair>(e);
  return IntPolynomial::monic_quadratic(q.sum, q.product);
}

long SpectrumSpec::counted_multiplicity() const {
  long total = 0;
  for (const auto& e : entries)
    total += std::holds_alternative<QuadraticPair>(e.desc) ? 2 * e.multiplicity : e.multiplicity;
  return total;
}

Integer SpectrumSpec::eigenvalue_sum() const {
  Integer s = 0;
  for (const auto& e : entries) {
    if (const auto* i = std::get_if<IntegerEigenvalue>(&e.desc))
      s += i->value * e.multiplicity;
    else
      s += std::get<QuadraticPair>(e.desc).sum * e.multiplicity;
  }
  return s;
}

// ---------------------------------------------------------------------------
// SpectrumBuilder

SpectrumBuilder& SpectrumBuilder::add(const Integer& value, long multiplicity) {
  return add(IntegerEigenvalue{value}, multiplicity);
}

SpectrumBuilder& SpectrumBuilder::add_pair(const Integer& sum, const Integer& product,
                                           long multiplicity) {
  return add(QuadraticPair{sum, product}, multiplicity);
}

SpectrumBuilder& SpectrumBuilder::add(const EigenvalueDesc& desc, long multiplicity) {
  if (multiplicity < 0)
    throw std::logic_error("negative multiplicity " + std::to_string(multiplicity) + " for " +
                           to_string(desc));
  raw_.push_back({desc, multiplicity});
  return *this;
}

SpectrumSpec SpectrumBuilder::build() const {
  std::map<Integer, long> integers;
  std::map<std::pair<Integer, Integer>, long> pairs;
  for (const auto& [desc, mult] : raw_) {
    if (mult == 0) continue;
    if (const auto* i = std::get_if<IntegerEigenvalue>(&desc)) {
      integers[i->value] += mult;
      continue;
    }
    const auto& q = std::get<QuadraticPair>(desc);
    const Integer disc = q.discriminant();
    if (const auto r = is_perfect_square(disc)) {
      // s and r share parity because s^2 - r^2 = 4p.
      integers[Integer((q.sum + *r) / 2)] += mult;
      integers[Integer((q.sum - *r) / 2)] += mult;
    } else {
      pairs[{q.sum, q.product}] += mult;
    }
  }
  SpectrumSpec out;
  out.order = order_;
  out.kind = kind_;
  for (const auto& [v, mult] : integers) out.entries.push_back({IntegerEigenvalue{v}, mult});
  for (const auto& [sp, mult] : pairs) out.entries.push_back({QuadraticPair{sp.first, sp.second}, mult});
  return out;
}

QuadraticPair surd_pair(const Integer& a, const Integer& b, const Integer& d, const Integer& denom) {
  const Integer sum_num = 2 * a;
  const Integer prod_num = a * a - b * b * d;
  const Integer denom_sq = denom * denom;
  if (!mpz_divisible_p(sum_num.get_mpz_t(), denom.get_mpz_t()) ||
      !mpz_divisible_p(prod_num.get_mpz_t(), denom_sq.get_mpz_t()))
    throw NonIntegralSpectrum("surd pair (" + a.get_str() + " +- " + b.get_str() + "*sqrt(" +
                              d.get_str() + "))/" + denom.get_str() +
                              " has non-integral symmetric functions");
  return {Integer(sum_num / denom), Integer(prod_num / denom_sq)};
}

QuadraticPair affine_image_of_roots(const Integer& A, const Integer& B, const Integer& C,
                                    const Integer& alpha, const Integer& beta) {
  if (sgn(A) == 0) throw DegenerateQuadratic("t-quadratic has zero leading coefficient");
  if (sgn(alpha) == 0) throw std::invalid_argument("affine_image_of_roots: alpha must be nonzero");
  // Substituting t = (mu - beta)/alpha and clearing alpha^2:
  //   A mu^2 + (B alpha - 2 A beta) mu + (A beta^2 - B alpha beta + C alpha^2) = 0
  const Integer sum_num = 2 * A * beta - B * alpha;
  const Integer prod_num = A * beta * beta - B * alpha * beta + C * alpha * alpha;
  if (!mpz_divisible_p(sum_num.get_mpz_t(), A.get_mpz_t()) ||
      !mpz_divisible_p(prod_num.get_mpz_t(), A.get_mpz_t()))
    throw NonIntegralSpectrum("eliminated quadratic is not monic-integral");
  return {Integer(sum_num / A), Integer(prod_num / A)};
}

// ---------------------------------------------------------------------------
// Complete multipartite distance polynomial

IntPolynomial multipartite_distance_charpoly(const std::vector<std::size_t>& part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("multipartite_distance_charpoly: no parts");
  std::size_t total = 0;
  std::vector<IntPolynomial> linear;
  for (std::size_t s : part_sizes) {
    if (s == 0) throw std::invalid_argument("multipartite_distance_charpoly: empty part");
    total += s;
    // lambda - n_i + 2
    linear.push_back(IntPolynomial::linear(Integer(static_cast<unsigned long>(s)) - 2));
  }
  const std::size_t k = part_sizes.size();
  IntPolynomial all = IntPolynomial::constant(1);
  for (const auto& f : linear) all = poly_mul(all, f);
  IntPolynomial correction;
  for (std::size_t i = 0; i < k; ++i) {
    IntPolynomial others = IntPolynomial::constant(Integer(static_cast<unsigned long>(part_sizes[i])));
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) others = poly_mul(others, linear[j]);
    correction = correction + others;
  }
  return poly_mul(poly_pow(IntPolynomial::linear(Integer(-2)), total - k), all - correction);
}

IntPolynomial multipartite_distance_charpoly(const PartitionStructure& partition) {
  return multipartite_distance_charpoly(partition.sizes());
}

// ---------------------------------------------------------------------------
// Family spectra

namespace {

Integer Z(long v) { return Integer(v); }

Integer pow2(long e) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw InvalidParameters("multiplicity " + v.get_str() + " exceeds a machine word");
  return v.get_si();
}

}  // namespace

SpectrumSpec spectrum_q4n(MatrixKind kind, long n) {
  const GroupSpec spec = GroupSpec::quaternion(n);
  SpectrumBuilder b(kind, to_long(graph_order(spec)));
  switch (kind) {
    case MatrixKind::Distance:
      b.add(Z(-2), 3 * n - 3);
      b.add(Z(0), n - 1);
      b.add(surd_pair(Z(3 * (n - 1)), Z(1), Z(5 * n * n - 10 * n + 9)), 1);
      break;
    case MatrixKind::DistanceLaplacian:
      b.add(Z(0), 1);
      b.add(Z(4 * n - 2), n);
      b.add(Z(4 * n), n);
      b.add(Z(6 * n - 4), 2 * n - 3);
      break;
    case MatrixKind::DistanceSignlessLaplacian:
      b.add(Z(4 * n - 4), n);
      b.add(Z(6 * n - 8), 2 * n - 3);
      b.add(Z(4 * n - 2), n - 1);
      // mu = t(2n-2) + (6n-2), t a root of (2n-2)x^2 + (10-4n)x - 2n
      b.add(affine_image_of_roots(Z(2 * n - 2), Z(10 - 4 * n), Z(-2 * n), Z(2 * n - 2), Z(6 * n - 2)), 1);
      break;
  }
  return b.build();
}

SpectrumSpec spectrum_qd(MatrixKind kind, long n) {
  const GroupSpec spec = GroupSpec::quasidihedral(n);
  if (n > 62) throw InvalidParameters("qd spectra are limited to n <= 62 (multiplicities are machine words)");
  const Integer quarter = pow2(n - 2);  // 2^(n-2)
  const Integer half = pow2(n - 1);     // 2^(n-1)
  const Integer full = pow2(n);         // 2^n
  SpectrumBuilder b(kind, to_long(graph_order(spec)));
  switch (kind) {
    case MatrixKind::Distance:
      b.add(Z(-2), to_long(3 * quarter - 3));
      b.add(Z(0), to_long(quarter - 1));
      b.add(surd_pair(Integer(3 * (quarter - 1)), Z(1), Integer(5 * quarter * quarter - 10 * quarter + 9)), 1);
      break;
    case MatrixKind::DistanceLaplacian:
      b.add(Z(0), 1);
      b.add(Integer(full - 2), to_long(quarter));
      b.add(full, to_long(quarter));
      b.add(Integer(full + half - 4), to_long(half - 3));
      break;
    case MatrixKind::DistanceSignlessLaplacian:
      b.add(Integer(full - 4), to_long(quarter));
      b.add(Integer(full - 2), to_long(quarter - 1));
      b.add(Integer(full + half - 8), to_long(half - 3));
      // Constant term 3(2^(n-1) - 2).
      b.add(affine_image_of_roots(Integer(half - 2), Integer(-(full - 10)), Integer(-half),
                                  Integer(half - 2), Integer(3 * (half - 2))),
            1);
      break;
  }
  return b.build();
}

SpectrumSpec spectrum_u6n(MatrixKind kind, long n) {
  const GroupSpec spec = GroupSpec::u6n(n);
  SpectrumBuilder b(kind, to_long(graph_order(spec)));
  switch (kind) {
    case MatrixKind::Distance:
      b.add(Z(-2), 5 * n - 4);
      b.add(Z(n - 2), 2);
      b.add(surd_pair(Z(4 * n - 2), Z(n), Z(6)), 1);
      break;
    case MatrixKind::DistanceLaplacian:
      b.add(Z(0), 1);
      b.add(Z(5 * n), 3);
      b.add(Z(6 * n), 3 * (n - 1));
      b.add(Z(7 * n), 2 * n - 1);
      break;
    case MatrixKind::DistanceSignlessLaplacian:
      b.add(Z(6 * n - 4), 3 * (n - 1));
      b.add(Z(7 * n - 4), 2 * n + 1);
      b.add(Z(8 * n - 4), 1);
      b.add(Z(13 * n - 4), 1);
      break;
  }
  return b.build();
}

SpectrumSpec spectrum_metacyclic(MatrixKind kind, long m, long n) {
  const GroupSpec spec = GroupSpec::metacyclic(m, n);
  SpectrumBuilder b(kind, to_long(graph_order(spec)));
  const bool odd = m % 2 == 1;
  switch (kind) {
    case MatrixKind::Distance:
      if (odd) {
        b.add(Z(-2), 2 * m * n - (m + n) - 1);
        b.add(Z(n - 2), m - 1);
        b.add(surd_pair(Z(-(4 + n - 3 * m * n)), Z(n), Z(5 * m * m - 10 * m + 9), Z(2)), 1);
      } else {
        b.add(Z(-2), 2 * n * (m - 1) - m / 2 - 1);
        b.add(Z(2 * n - 2), m / 2 - 1);
        b.add(surd_pair(Z(-(2 * n - 3 * m * n + 4)), Z(n), Z(5 * m * m - 20 * m + 36), Z(2)), 1);
      }
      break;
    case MatrixKind::DistanceLaplacian:
      b.add(Z(0), 1);
      if (odd) {
        b.add(Z(n * (2 * m - 1)), m);
        b.add(Z(2 * m * n), m * (n - 1));
        b.add(Z((3 * m - 2) * n), (m - 1) * n - 1);
      } else {
        b.add(Z(2 * n * (m - 1)), m / 2);
        b.add(Z(2 * m * n), (2 * n - 1) * m / 2);
        b.add(Z((3 * m - 4) * n), (m / 2 - 1) * 2 * n - 1);
      }
      break;
    case MatrixKind::DistanceSignlessLaplacian:
      if (odd) {
        b.add(Z(2 * m * n - 4), m * (n - 1));
        b.add(Z((2 * m + 1) * n - 4), m - 1);
        b.add(Z((3 * m - 2) * n - 4), (m - 1) * n - 1);
        // t a root of (m-1)x^2 - (2m-5)x - m, middle term read with x.
        b.add(affine_image_of_roots(Z(m - 1), Z(-(2 * m - 5)), Z(-m), Z(n * (m - 1)),
                                    Z(3 * m * n + n - 4)),
              1);
      } else if (m == 4) {
        b.add(Z(8 * n - 4), 3 * (2 * n - 1));
        b.add(Z(10 * n - 4), 2);
        b.add(Z(16 * n - 4), 1);
      } else {
        b.add(Z(3 * m * n - 4 * n - 4), (m - 2) * n - 1);
        b.add(Z(4 * m * n - 4 * n - 4), (2 * n - 1) * m / 2);
        b.add(Z(2 * m * n - 4), m / 2 - 1);
        // t a root of (m-2)x^2 - 2(m-5)x - m
        b.add(affine_image_of_roots(Z(m - 2), Z(-2 * (m - 5)), Z(-m), Z(n * (m - 2)),
                                    Z(3 * m * n + 2 * n - 4)),
              1);
      }
      break;
  }
  return b.build();
}

SpectrumSpec closed_form_spectrum(const GroupSpec& spec, MatrixKind kind) {
  switch (spec.kind()) {
    case Family::GeneralizedQuaternion: return spectrum_q4n(kind, spec.n());
    case Family::Quasidihedral: return spectrum_qd(kind, spec.n());
    case Family::USixN: return spectrum_u6n(kind, spec.n());
    case Family::Metacyclic: return spectrum_metacyclic(kind, spec.m(), spec.n());
  }
  throw std::logic_error("unknown family");
}

Integer graph_order(const GroupSpec& spec) {
  const long n = spec.n();
  switch (spec.kind()) {
    case Family::GeneralizedQuaternion: return Z(4 * n - 2);
    case Family::Quasidihedral: return Integer(pow2(n) - 2);
    case Family::USixN: return Z(5 * n);
    case Family::Metacyclic: {
      const long m = spec.m();
      return m % 2 == 1 ? Z((2 * m - 1) * n) : Z(2 * n * (m - 1));
    }
  }
  throw std::logic_error("unknown family");
}

std::string claim_id(const GroupSpec& spec, MatrixKind kind) {
  std::string family = spec.tag();
  if (spec.kind() == Family::Metacyclic) {
    const long m = spec.m();
    if (m % 2 == 1)
      family = "metacyclic-odd";
    else if (kind == MatrixKind::DistanceSignlessLaplacian)
      family = m == 4 ? "metacyclic-m4" : "metacyclic-even";
    else
      family = "metacyclic-even";
  }
  return family + "/" + kind_tag(kind);
}

IntPolynomial spectrum_to_polynomial(const SpectrumSpec& spec) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& e : spec.entries)
    p = poly_mul(p, poly_pow(factor_of(e.desc), static_cast<unsigned long>(e.multiplicity)));
  return p;
}

bool is_integral(const SpectrumSpec& spec) {
  return std::all_of(spec.entries.begin(), spec.entries.end(), [](const SpectrumEntry& e) {
    return std::holds_alternative<IntegerEigenvalue>(e.desc);
  });
}

// ---------------------------------------------------------------------------
// Generalized quaternion eigenvectors

std::size_t Eigenbasis::vector_count() const {
  std::size_t c = 0;
  for (const auto& f : families) c += f.vectors.size();
  return c;
}

bool is_eigenpair(const IntMatrix& m, const std::vector<Integer>& v, const Integer& lambda) {
  const auto image = m.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (image[i] != lambda * v[i]) return false;
  return true;
}

Eigenbasis eigenbasis_q4n(MatrixKind kind, long n) {
  if (kind == MatrixKind::Distance)
    throw InvalidParameters("eigenbasis_q4n covers the distance Laplacian and signless Laplacian only");
  const FiniteGroup group = enumerate_elements(GroupSpec::quaternion(n));
  const NCGraph graph = non_commuting_graph(group);
  const PartitionStructure partition = partition_structure(graph);
  const NCGraph ordered = part_major(graph, partition);
  const IntMatrix distances = distance_matrix(ordered.graph);

  Eigenbasis basis{kind, n,
                   kind == MatrixKind::DistanceLaplacian ? dl_matrix(distances) : dq_matrix(distances),
                   {}, false};

  const std::size_t order = static_cast<std::size_t>(4 * n - 2);
  const std::size_t big = static_cast<std::size_t>(2 * n - 2);
  const std::size_t pairs = static_cast<std::size_t>(n);
  auto pair_start = [&](std::size_t p) { return big + 2 * p; };
  auto zero = [&] { return std::vector<Integer>(order, 0); };

  auto within_pairs = [&](long eigenvalue) {
    EigenFamily f{"within-pair", Z(eigenvalue), {}};
    for (std::size_t p = 0; p < pairs; ++p) {
      auto v = zero();
      v[pair_start(p)] = -1;
      v[pair_start(p) + 1] = 1;
      f.vectors.push_back(std::move(v));
    }
    return f;
  };
  auto within_big = [&](long eigenvalue) {
    EigenFamily f{"within-big", Z(eigenvalue), {}};
    for (std::size_t j = 1; j < big; ++j) {
      auto v = zero();
      v[0] = -1;
      v[j] = 1;
      f.vectors.push_back(std::move(v));
    }
    return f;
  };

  if (kind == MatrixKind::DistanceLaplacian) {
    basis.families.push_back({"all-ones", Z(0), {std::vector<Integer>(order, 1)}});
    EigenFamily big_vs_pair{"big-vs-pair", Z(4 * n - 2), {}};
    for (std::size_t p = 0; p < pairs; ++p) {
      auto v = zero();
      for (std::size_t i = 0; i < big; ++i) v[i] = -1;
      v[pair_start(p)] = n - 1;
      v[pair_start(p) + 1] = n - 1;
      big_vs_pair.vectors.push_back(std::move(v));
    }
    basis.families.push_back(std::move(big_vs_pair));
    basis.families.push_back(within_pairs(4 * n));
    basis.families.push_back(within_big(6 * n - 4));
  } else {
    basis.families.push_back(within_pairs(4 * n - 4));
    basis.families.push_back(within_big(6 * n - 8));
    EigenFamily pair_vs_pair{"pair-vs-pair", Z(4 * n - 2), {}};
    for (std::size_t p = 1; p < pairs; ++p) {
      auto v = zero();
      v[pair_start(0)] = -1;
      v[pair_start(0) + 1] = -1;
      v[pair_start(p)] = 1;
      v[pair_start(p) + 1] = 1;
      pair_vs_pair.vectors.push_back(std::move(v));
    }
    basis.families.push_back(std::move(pair_vs_pair));

    const auto roots = rational_roots_of_quadratic(Z(2 * n - 2), Z(10 - 4 * n), Z(-2 * n));
    if (!roots) {
      basis.irrational_t_vector = true;
    } else {
      for (const Rational& t : {roots->first, roots->second}) {
        // Scaled by the denominator: numerator on the big part, denominator elsewhere.
        const Integer num = t.get_num();
        const Integer den = t.get_den();
        Rational mu = Rational(Z(2 * n - 2)) * t + Rational(Z(6 * n - 2));
        mu.canonicalize();
        if (mu.get_den() != 1) throw std::logic_error("t-vector eigenvalue is not an integer");
        auto v = std::vector<Integer>(order, den);
        for (std::size_t i = 0; i < big; ++i) v[i] = num;
        basis.families.push_back({"t-vector", mu.get_num(), {std::move(v)}});
      }
    }
  }
  for (auto& f : basis.families)
    f.verified = std::all_of(f.vectors.begin(), f.vectors.end(),
                             [&](const auto& v) { return is_eigenpair(basis.matrix, v, f.eigenvalue); });
  return basis;
}

}  // namespace ncspec
