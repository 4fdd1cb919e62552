#pragma once

// Closed-form distance, distance Laplacian and distance signless Laplacian
// spectra of the non-commuting graphs of the four families. These are claims;
// the verifier compares them against exact characteristic polynomials.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncspec/exact_algebra.hpp"
#include "ncspec/graph.hpp"
#include "ncspec/group.hpp"

namespace ncspec {

enum class MatrixKind { Distance, DistanceLaplacian, DistanceSignlessLaplacian };

inline constexpr MatrixKind kAllKinds[] = {MatrixKind::Distance, MatrixKind::DistanceLaplacian,
                                           MatrixKind::DistanceSignlessLaplacian};

// "d", "dl", "dq"
std::string kind_tag(MatrixKind kind);
std::optional<MatrixKind> parse_kind(const std::string& tag);

struct IntegerEigenvalue {
  Integer value;
  friend bool operator==(const IntegerEigenvalue&, const IntegerEigenvalue&) = default;
};

// The two roots of x^2 - sum*x + product.
struct QuadraticPair {
  Integer sum;
  Integer product;
  Integer discriminant() const { return sum * sum - 4 * product; }
  friend bool operator==(const QuadraticPair&, const QuadraticPair&) = default;
};

using EigenvalueDesc = std::variant<IntegerEigenvalue, QuadraticPair>;

std::string to_string(const EigenvalueDesc& e);
// lambda - v, or lambda^2 - s*lambda + p
IntPolynomial factor_of(const EigenvalueDesc& e);

struct SpectrumEntry {
  EigenvalueDesc desc;
  long multiplicity;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SpectrumSpec {
  long order = 0;
  MatrixKind kind = MatrixKind::Distance;
  // Canonical: ascending integers first, then pairs ascending by (sum, product);
  // no duplicates, no zero multiplicities, no pair with square discriminant.
  std::vector<SpectrumEntry> entries;

  // Number of eigenvalues counted with multiplicity (pairs count twice).
  long counted_multiplicity() const;
  // Exact sum of all eigenvalues with multiplicity.
  Integer eigenvalue_sum() const;

  friend bool operator==(const SpectrumSpec&, const SpectrumSpec&) = default;
};

// Accumulates raw (eigenvalue, multiplicity) claims and canonicalizes them.
class SpectrumBuilder {
 public:
  SpectrumBuilder(MatrixKind kind, long order) : kind_(kind), order_(order) {}

  SpectrumBuilder& add(const Integer& value, long multiplicity);
  SpectrumBuilder& add_pair(const Integer& sum, const Integer& product, long multiplicity = 1);
  SpectrumBuilder& add(const EigenvalueDesc& desc, long multiplicity);

  SpectrumSpec build() const;

 private:
  MatrixKind kind_;
  long order_;
  std::vector<SpectrumEntry> raw_;
};

// Pair (a +- b*sqrt(d)) / denom expressed by its integer sum and product.
// Throws NonIntegralSpectrum if either is not an integer.
QuadraticPair surd_pair(const Integer& a, const Integer& b, const Integer& d,
                        const Integer& denom = 1);

// Eigenvalues mu = alpha*t + beta where t runs over the roots of
// A t^2 + B t + C = 0, as the monic quadratic in mu obtained by eliminating t.
// Throws NonIntegralSpectrum if that quadratic is not integral after dividing by A.
QuadraticPair affine_image_of_roots(const Integer& A, const Integer& B, const Integer& C,
                                    const Integer& alpha, const Integer& beta);

IntPolynomial multipartite_distance_charpoly(const std::vector<std::size_t>& part_sizes);
IntPolynomial multipartite_distance_charpoly(const PartitionStructure& partition);

SpectrumSpec spectrum_q4n(MatrixKind kind, long n);
SpectrumSpec spectrum_qd(MatrixKind kind, long n);
SpectrumSpec spectrum_u6n(MatrixKind kind, long n);
SpectrumSpec spectrum_metacyclic(MatrixKind kind, long m, long n);
SpectrumSpec closed_form_spectrum(const GroupSpec& spec, MatrixKind kind);

// Order of the non-commuting graph, computed without building the group.
Integer graph_order(const GroupSpec& spec);

// Identifies the published statement covering (family, kind), e.g.
// "q4n/dq" or "metacyclic-odd/d". Metacyclic D^Q splits into
// "metacyclic-odd/dq", "metacyclic-m4/dq" and "metacyclic-even/dq".
std::string claim_id(const GroupSpec& spec, MatrixKind kind);

IntPolynomial spectrum_to_polynomial(const SpectrumSpec& spec);
bool is_integral(const SpectrumSpec& spec);

// ---------------------------------------------------------------------------
// Explicit eigenvectors of D^L and D^Q for the generalized quaternion graph.

struct EigenFamily {
  std::string name;
  Integer eigenvalue;
  std::vector<std::vector<Integer>> vectors;
  bool verified = false;  // every vector satisfies M v = eigenvalue * v exactly
};

struct Eigenbasis {
  MatrixKind kind;
  long n;
  IntMatrix matrix;  // part-major, big part first
  std::vector<EigenFamily> families;
  // Set for D^Q when the t-quadratic has irrational roots; the two t-vectors
  // are then missing from `families`.
  bool irrational_t_vector = false;

  std::size_t vector_count() const;
};

bool is_eigenpair(const IntMatrix& m, const std::vector<Integer>& v, const Integer& lambda);

// Throws InvalidParameters for n < 2 or kind == Distance.
Eigenbasis eigenbasis_q4n(MatrixKind kind, long n);

}  // namespace ncspec
