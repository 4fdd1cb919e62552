#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ncspec/errors.hpp"
#include "ncspec/group.hpp"
#include "oracles.hpp"

using namespace ncspec;

namespace {

std::vector<GroupSpec> sample_specs() {
  std::vector<GroupSpec> out;
  for (long n = 2; n <= 6; ++n) out.push_back(GroupSpec::quaternion(n));
  for (long n = 4; n <= 6; ++n) out.push_back(GroupSpec::quasidihedral(n));
  for (long n = 1; n <= 5; ++n) out.push_back(GroupSpec::u6n(n));
  for (long m = 3; m <= 7; ++m)
    for (long n = 1; n <= 3; ++n) out.push_back(GroupSpec::metacyclic(m, n));
  return out;
}

template <typename F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const InvalidParameters& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(GroupSpec, RejectsOutOfRangeParameters) {
  EXPECT_THROW(GroupSpec::quaternion(1), InvalidParameters);
  EXPECT_THROW(GroupSpec::quasidihedral(3), InvalidParameters);
  EXPECT_THROW(GroupSpec::u6n(0), InvalidParameters);
  EXPECT_THROW(GroupSpec::metacyclic(2, 1), InvalidParameters);
  EXPECT_THROW(GroupSpec::metacyclic(3, 0), InvalidParameters);
  EXPECT_NO_THROW(GroupSpec::quaternion(2));
  EXPECT_NO_THROW(GroupSpec::metacyclic(3, 1));
}

TEST(GroupSpec, MessagesNameTheBound) {
  EXPECT_NE(thrown_message([] { GroupSpec::quaternion(0); }).find("n >= 2"), std::string::npos);
  EXPECT_NE(thrown_message([] { GroupSpec::quasidihedral(2); }).find("n >= 4"), std::string::npos);
  EXPECT_NE(thrown_message([] { GroupSpec::metacyclic(1, 1); }).find("m > 2"), std::string::npos);
}

TEST(GroupSpec, Orders) {
  EXPECT_EQ(GroupSpec::quaternion(2).order(), 8);
  EXPECT_EQ(GroupSpec::quasidihedral(4).order(), 16);
  EXPECT_EQ(GroupSpec::u6n(3).order(), 18);
  EXPECT_EQ(GroupSpec::metacyclic(5, 2).order(), 20);
  EXPECT_EQ(GroupSpec::quasidihedral(4).tag(), "qd");
  EXPECT_EQ(GroupSpec::metacyclic(5, 2).m(), 5);
}

TEST(Group, ExampleProductInU6) {
  GroupSpec s = GroupSpec::u6n(1);
  EXPECT_EQ(multiply(s, {0, 1}, {1, 0}), (GroupElement{1, 2}));
}

TEST(Group, QuaternionRelations) {
  FiniteGroup g = enumerate_elements(GroupSpec::quaternion(3));
  GroupElement a{1, 0}, b{0, 1};
  GroupElement b2 = g.multiply(b, b);
  EXPECT_EQ(b2, (GroupElement{3, 0}));  // b^2 = a^n
  EXPECT_EQ(g.element_order(b), 4);
  EXPECT_EQ(g.element_order(a), 6);
  EXPECT_EQ(g.multiply(g.multiply(g.inverse(b), a), b), g.inverse(a));
}

TEST(Group, MultiplicationAgreesWithFaithfulRepresentation) {
  for (const auto& spec : sample_specs()) {
    oracle::Representation rep(spec);
    FiniteGroup g = enumerate_elements(spec);
    ASSERT_EQ(rep.all().size(), g.order()) << spec.display_name();
    for (const auto& x : g.elements())
      for (const auto& y : g.elements())
        ASSERT_EQ(g.multiply(x, y), rep.multiply(x, y))
            << spec.display_name() << " " << to_string(x) << " * " << to_string(y);
  }
}

TEST(Group, ElementsAreCanonicallyOrdered) {
  FiniteGroup g = enumerate_elements(GroupSpec::metacyclic(4, 2));
  EXPECT_EQ(g.order(), 16u);
  EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
  EXPECT_EQ(g.elements().front(), identity_element());
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index_of(g.elements()[i]), i);
}

TEST(Group, AxiomsHold) {
  for (const auto& spec : sample_specs()) {
    auto check = check_group_axioms(enumerate_elements(spec));
    EXPECT_TRUE(check.ok()) << spec.display_name();
    EXPECT_GT(check.triples_checked, 0u);
  }
}

TEST(Group, SampledAxiomCheckAboveLimit) {
  auto check = check_group_axioms(enumerate_elements(GroupSpec::quasidihedral(6)), 16);
  EXPECT_TRUE(check.ok());
  EXPECT_LT(check.triples_checked, 64u * 64u * 64u);
}

TEST(Group, LagrangeForElementOrdersAndCentralizers) {
  for (const auto& spec : sample_specs()) {
    FiniteGroup g = enumerate_elements(spec);
    const long order = static_cast<long>(g.order());
    for (const auto& x : g.elements()) {
      EXPECT_EQ(order % g.element_order(x), 0) << spec.display_name();
      EXPECT_EQ(order % static_cast<long>(centralizer(g, x).size()), 0) << spec.display_name();
      EXPECT_EQ(g.multiply(x, g.inverse(x)), identity_element());
    }
  }
}

TEST(Group, CenterIsIntersectionOfCentralizers) {
  for (const auto& spec : sample_specs()) {
    FiniteGroup g = enumerate_elements(spec);
    std::set<GroupElement> inter(g.elements().begin(), g.elements().end());
    for (const auto& x : g.elements()) {
      auto c = centralizer(g, x);
      std::set<GroupElement> cs(c.begin(), c.end()), next;
      std::set_intersection(inter.begin(), inter.end(), cs.begin(), cs.end(), std::inserter(next, next.end()));
      inter = std::move(next);
    }
    auto z = center(g);
    EXPECT_EQ(std::set<GroupElement>(z.begin(), z.end()), inter) << spec.display_name();
  }
}

TEST(Group, CenterSizes) {
  for (long n = 2; n <= 8; ++n) EXPECT_EQ(center(enumerate_elements(GroupSpec::quaternion(n))).size(), 2u);
  for (long n = 4; n <= 7; ++n) EXPECT_EQ(center(enumerate_elements(GroupSpec::quasidihedral(n))).size(), 2u);
  for (long n = 1; n <= 6; ++n)
    EXPECT_EQ(center(enumerate_elements(GroupSpec::u6n(n))).size(), static_cast<std::size_t>(n));
  for (long m = 3; m <= 10; ++m)
    for (long n = 1; n <= 4; ++n)
      EXPECT_EQ(center(enumerate_elements(GroupSpec::metacyclic(m, n))).size(),
                static_cast<std::size_t>(m % 2 ? n : 2 * n))
          << m << "," << n;
}

TEST(Group, CenterOfU12) {
  auto z = center(enumerate_elements(GroupSpec::u6n(2)));
  EXPECT_EQ(z, (std::vector<GroupElement>{{0, 0}, {2, 0}}));
}

TEST(Group, AllFamiliesAreCAGroups) {
  for (const auto& spec : sample_specs()) EXPECT_TRUE(is_ca_group(enumerate_elements(spec))) << spec.display_name();
}

TEST(Group, AbelianSubsets) {
  FiniteGroup g = enumerate_elements(GroupSpec::quaternion(2));
  EXPECT_TRUE(is_abelian_subset(g, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}));
  EXPECT_FALSE(is_abelian_subset(g, {{1, 0}, {0, 1}}));
}

TEST(Group, OversizedGroupIsRejected) {
  EXPECT_THROW(enumerate_elements(GroupSpec::quasidihedral(40)), InvalidParameters);
  EXPECT_THROW(GroupSpec::quasidihedral(80).order(), InvalidParameters);
}
