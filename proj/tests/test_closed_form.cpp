#include <gtest/gtest.h>

#include "ncspec/closed_form.hpp"
#include "ncspec/errors.hpp"
#include "ncspec/verifier.hpp"
#include "oracles.hpp"

using namespace ncspec;

namespace {

SpectrumSpec ints(MatrixKind kind, long order, std::initializer_list<std::pair<long, long>> entries) {
  SpectrumBuilder b(kind, order);
  for (auto [v, m] : entries) b.add(Integer(v), m);
  return b.build();
}

IntMatrix matrix_of(const GroupSpec& spec, MatrixKind kind) { return build_oracle(spec).matrix(kind); }

}  // namespace

TEST(Kinds, TagsRoundTrip) {
  for (MatrixKind k : kAllKinds) EXPECT_EQ(parse_kind(kind_tag(k)), k);
  EXPECT_FALSE(parse_kind("x"));
  EXPECT_EQ(kind_tag(MatrixKind::DistanceSignlessLaplacian), "dq");
}

TEST(SpectrumBuilder, MergesAndOrders) {
  SpectrumSpec s = SpectrumBuilder(MatrixKind::Distance, 6).add(6, 1).add(-2, 2).add(0, 2).add(-2, 1).build();
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0], (SpectrumEntry{IntegerEigenvalue{-2}, 3}));
  EXPECT_EQ(s.entries[2], (SpectrumEntry{IntegerEigenvalue{6}, 1}));
  EXPECT_EQ(s.counted_multiplicity(), 6);
  EXPECT_EQ(s.eigenvalue_sum(), 0);
}

TEST(SpectrumBuilder, DropsZeroMultiplicity) {
  SpectrumSpec s = SpectrumBuilder(MatrixKind::Distance, 1).add(3, 0).add(5, 1).add_pair(1, -1, 0).build();
  ASSERT_EQ(s.entries.size(), 1u);
  EXPECT_EQ(s.entries[0].multiplicity, 1);
}

TEST(SpectrumBuilder, SplitsPairWithSquareDiscriminant) {
  // x^2 - 5x + 6 = (x - 2)(x - 3)
  SpectrumSpec s = SpectrumBuilder(MatrixKind::Distance, 3).add_pair(5, 6, 1).add(3, 1).build();
  EXPECT_EQ(s, ints(MatrixKind::Distance, 3, {{2, 1}, {3, 2}}));
  EXPECT_TRUE(is_integral(s));
}

TEST(SpectrumBuilder, IntegersPrecedePairs) {
  SpectrumSpec s = SpectrumBuilder(MatrixKind::Distance, 5).add_pair(4, -2).add(-1, 2).add(-2, 1).build();
  ASSERT_EQ(s.entries.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<IntegerEigenvalue>(s.entries[1].desc));
  EXPECT_TRUE(std::holds_alternative<QuadraticPair>(s.entries[2].desc));
  EXPECT_FALSE(is_integral(s));
  EXPECT_EQ(s.counted_multiplicity(), 5);
}

TEST(SpectrumBuilder, NegativeMultiplicityIsALogicError) {
  SpectrumBuilder b(MatrixKind::Distance, 2);
  EXPECT_THROW(b.add(1, -1), std::logic_error);
}

TEST(Surds, PairFromSurd) {
  // 2 +- sqrt(6)
  EXPECT_EQ(surd_pair(2, 1, 6), (QuadraticPair{4, -2}));
  // (3 +- sqrt(5)) / 2
  EXPECT_EQ(surd_pair(3, 1, 5, 2), (QuadraticPair{3, 1}));
  EXPECT_EQ(surd_pair(1, 1, 5, 2), (QuadraticPair{1, -1}));
  EXPECT_THROW(surd_pair(1, 1, 3, 2), NonIntegralSpectrum);
  EXPECT_EQ((QuadraticPair{4, -2}).discriminant(), 24);
}

TEST(Surds, AffineImageOfQuadraticRoots) {
  // t^2 - 3t + 1 = 0, mu = 2t + 1: mu^2 - 8mu + 11
  EXPECT_EQ(affine_image_of_roots(1, -3, 1, 2, 1), (QuadraticPair{8, 11}));
  // 2t^2 - 4t - 6 = 0 has roots 3, -1; mu = t + 5 gives 8 and 4
  EXPECT_EQ(affine_image_of_roots(2, -4, -6, 1, 5), (QuadraticPair{12, 32}));
  EXPECT_THROW(affine_image_of_roots(2, 1, 1, 1, 0), NonIntegralSpectrum);
}

TEST(Surds, ToStringAndFactor) {
  EXPECT_EQ(to_string(EigenvalueDesc{QuadraticPair{4, -2}}), "(4 +- sqrt(24))/2");
  EXPECT_EQ(to_string(EigenvalueDesc{IntegerEigenvalue{-7}}), "-7");
  EXPECT_EQ(factor_of(EigenvalueDesc{QuadraticPair{4, -2}}), IntPolynomial({-2, -4, 1}));
}

TEST(MultipartiteDistance, SmallCases) {
  EXPECT_EQ(multipartite_distance_charpoly(std::vector<std::size_t>{1}), IntPolynomial({0, 1}));
  EXPECT_EQ(multipartite_distance_charpoly(std::vector<std::size_t>{1, 1}), IntPolynomial({-1, 0, 1}));
}

TEST(MultipartiteDistance, MatchesDirectCharPoly) {
  for (const auto& sizes : std::vector<std::vector<std::size_t>>{{2, 2, 2}, {3, 1}, {2, 1, 1, 1}, {4, 2, 2}}) {
    IntMatrix d = distance_matrix(complete_multipartite(sizes));
    IntPolynomial ref = d.order() <= 7 ? oracle::leibniz_char_poly(d) : char_poly_interpolated(d);
    EXPECT_EQ(multipartite_distance_charpoly(sizes), ref);
  }
  IntMatrix d333 = distance_matrix(complete_multipartite({3, 3, 3}));
  EXPECT_EQ(multipartite_distance_charpoly(std::vector<std::size_t>{3, 3, 3}), char_poly_interpolated(d333));
}

TEST(ClosedForm, OctahedronSpectra) {
  EXPECT_EQ(spectrum_q4n(MatrixKind::Distance, 2), ints(MatrixKind::Distance, 6, {{-2, 3}, {0, 2}, {6, 1}}));
  EXPECT_EQ(spectrum_q4n(MatrixKind::DistanceLaplacian, 2),
            ints(MatrixKind::DistanceLaplacian, 6, {{0, 1}, {6, 2}, {8, 3}}));
  EXPECT_EQ(spectrum_q4n(MatrixKind::DistanceSignlessLaplacian, 2),
            ints(MatrixKind::DistanceSignlessLaplacian, 6, {{4, 3}, {6, 2}, {12, 1}}));
}

TEST(ClosedForm, OctahedronAgreesWithLeibniz) {
  for (MatrixKind k : kAllKinds) {
    IntMatrix m = matrix_of(GroupSpec::quaternion(2), k);
    EXPECT_EQ(spectrum_to_polynomial(spectrum_q4n(k, 2)), oracle::leibniz_char_poly(m)) << kind_tag(k);
  }
}

TEST(ClosedForm, Q8DistanceCharPoly) {
  IntPolynomial expected =
      poly_mul(poly_mul(poly_pow(IntPolynomial::linear(-2), 3), poly_pow(IntPolynomial::monomial(1), 2)),
               IntPolynomial::linear(6));
  EXPECT_EQ(char_poly(matrix_of(GroupSpec::quaternion(2), MatrixKind::Distance)), expected);
}

TEST(ClosedForm, U6DistanceSpectrum) {
  SpectrumSpec s = spectrum_u6n(MatrixKind::Distance, 1);
  SpectrumSpec expected = SpectrumBuilder(MatrixKind::Distance, 5).add(-2, 1).add(-1, 2).add_pair(4, -2).build();
  EXPECT_EQ(s, expected);
  EXPECT_EQ(spectrum_to_polynomial(s), oracle::leibniz_char_poly(matrix_of(GroupSpec::u6n(1), MatrixKind::Distance)));
}

TEST(ClosedForm, QuasidihedralDistanceOfOrder16) {
  // Oracle-derived: K_{6,2,2,2,2}.
  SpectrumSpec expected = ints(MatrixKind::Distance, 14, {{-2, 9}, {0, 3}, {2, 1}, {16, 1}});
  EXPECT_EQ(spectrum_qd(MatrixKind::Distance, 4), expected);
  OracleSpectrum os = oracle_spectrum(build_oracle(GroupSpec::quasidihedral(4)), MatrixKind::Distance);
  EXPECT_TRUE(os.complete);
  EXPECT_EQ(os.spectrum, expected);
}

TEST(ClosedForm, MultiplicitiesSumToGraphOrder) {
  for (const auto& range : default_grid(true))
    for (const auto& spec : range.expand())
      for (MatrixKind k : kAllKinds) {
        SpectrumSpec s = closed_form_spectrum(spec, k);
        EXPECT_EQ(s.counted_multiplicity(), s.order) << spec.display_name() << " " << kind_tag(k);
        EXPECT_EQ(Integer(s.order), graph_order(spec));
      }
}

TEST(ClosedForm, CoincidingEigenvaluesAreMerged) {
  SpectrumSpec s = spectrum_metacyclic(MatrixKind::DistanceSignlessLaplacian, 4, 2);
  for (std::size_t i = 0; i + 1 < s.entries.size(); ++i) EXPECT_NE(s.entries[i].desc, s.entries[i + 1].desc);
  EXPECT_EQ(s.counted_multiplicity(), 12);
}

TEST(ClosedForm, QuasidihedralLimit) {
  EXPECT_NO_THROW(spectrum_qd(MatrixKind::DistanceLaplacian, 62));
  EXPECT_THROW(spectrum_qd(MatrixKind::DistanceLaplacian, 63), InvalidParameters);
}

TEST(ClosedForm, ClaimIds) {
  EXPECT_EQ(claim_id(GroupSpec::quaternion(3), MatrixKind::Distance), "q4n/d");
  EXPECT_EQ(claim_id(GroupSpec::metacyclic(5, 1), MatrixKind::DistanceSignlessLaplacian), "metacyclic-odd/dq");
  EXPECT_EQ(claim_id(GroupSpec::metacyclic(4, 1), MatrixKind::DistanceSignlessLaplacian), "metacyclic-m4/dq");
  EXPECT_EQ(claim_id(GroupSpec::metacyclic(6, 1), MatrixKind::DistanceSignlessLaplacian), "metacyclic-even/dq");
  EXPECT_EQ(claim_id(GroupSpec::u6n(2), MatrixKind::DistanceLaplacian), "u6n/dl");
}

TEST(ClosedForm, GraphOrders) {
  EXPECT_EQ(graph_order(GroupSpec::quaternion(5)), 18);
  EXPECT_EQ(graph_order(GroupSpec::quasidihedral(8)), 254);
  EXPECT_EQ(graph_order(GroupSpec::u6n(4)), 20);
  EXPECT_EQ(graph_order(GroupSpec::metacyclic(5, 2)), 18);
  EXPECT_EQ(graph_order(GroupSpec::metacyclic(6, 2)), 20);
}

TEST(Eigenbasis, LaplacianFamiliesAreExactEigenvectors) {
  for (long n = 2; n <= 8; ++n) {
    Eigenbasis b = eigenbasis_q4n(MatrixKind::DistanceLaplacian, n);
    EXPECT_EQ(b.vector_count(), static_cast<std::size_t>(4 * n - 2)) << n;
    for (const auto& f : b.families) {
      EXPECT_TRUE(f.verified) << f.name;
      for (const auto& v : f.vectors) EXPECT_TRUE(is_eigenpair(b.matrix, v, f.eigenvalue)) << f.name;
    }
  }
}

TEST(Eigenbasis, SignlessFamiliesAreExactEigenvectors) {
  for (long n = 2; n <= 8; ++n) {
    Eigenbasis b = eigenbasis_q4n(MatrixKind::DistanceSignlessLaplacian, n);
    EXPECT_GE(b.vector_count(), static_cast<std::size_t>(4 * n - 4)) << n;
    for (const auto& f : b.families)
      for (const auto& v : f.vectors) EXPECT_TRUE(is_eigenpair(b.matrix, v, f.eigenvalue)) << f.name;
  }
}

TEST(Eigenbasis, MatrixIsTheOracleMatrix) {
  Eigenbasis b = eigenbasis_q4n(MatrixKind::DistanceSignlessLaplacian, 4);
  EXPECT_EQ(b.matrix, matrix_of(GroupSpec::quaternion(4), MatrixKind::DistanceSignlessLaplacian));
}

TEST(Eigenbasis, RationalTVectorsAppearWhenRootsAreRational) {
  // At n = 2 the t-quadratic is 2t^2 + 2t - 4 = 0 with roots 1 and -2.
  Eigenbasis b = eigenbasis_q4n(MatrixKind::DistanceSignlessLaplacian, 2);
  EXPECT_FALSE(b.irrational_t_vector);
  EXPECT_EQ(b.vector_count(), 6u);
  // n = 3: 4t^2 - 2t - 6 = 0 has roots 3/2 and -1.
  Eigenbasis b3 = eigenbasis_q4n(MatrixKind::DistanceSignlessLaplacian, 3);
  EXPECT_FALSE(b3.irrational_t_vector);
  EXPECT_EQ(b3.vector_count(), 10u);
  Eigenbasis b4 = eigenbasis_q4n(MatrixKind::DistanceSignlessLaplacian, 4);
  EXPECT_TRUE(b4.irrational_t_vector);
  EXPECT_EQ(b4.vector_count(), 12u);
}

TEST(Eigenbasis, Errors) {
  EXPECT_THROW(eigenbasis_q4n(MatrixKind::Distance, 3), InvalidParameters);
  EXPECT_THROW(eigenbasis_q4n(MatrixKind::DistanceLaplacian, 1), InvalidParameters);
}
