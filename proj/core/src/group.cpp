#include "ncspec/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncspec/errors.hpp"

namespace ncspec {

namespace {

// Largest quasidihedral exponent whose order 2^n still fits a long.
constexpr long kMaxEnumerableQuasidihedral = 62;

long mod(long v, long m) {
  const long r = v % m;
  return r < 0 ? r + m : r;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

GroupSpec::GroupSpec(Variant family) : family_(family) {
  std::visit(
      Overloaded{
          [&](const GeneralizedQuaternion& g) {
            if (g.n < 2) throw InvalidParameters("q4n requires n >= 2 (got " + std::to_string(g.n) + ")");
            a_order_ = 2 * g.n;
            b_order_ = 2;
          },
          [&](const Quasidihedral& g) {
            if (g.n < 4) throw InvalidParameters("qd requires n >= 4 (got " + std::to_string(g.n) + ")");
            a_order_ = g.n - 1 <= kMaxEnumerableQuasidihedral - 1 ? (1L << (g.n - 1)) : 0;
            b_order_ = 2;
          },
          [&](const USixN& g) {
            if (g.n < 1) throw InvalidParameters("u6n requires n >= 1 (got " + std::to_string(g.n) + ")");
            a_order_ = 2 * g.n;
            b_order_ = 3;
          },
          [&](const Metacyclic& g) {
            if (g.m <= 2) throw InvalidParameters("metacyclic requires m > 2 (got " + std::to_string(g.m) + ")");
            if (g.n < 1) throw InvalidParameters("metacyclic requires n >= 1 (got " + std::to_string(g.n) + ")");
            a_order_ = g.m;
            b_order_ = 2 * g.n;
          },
      },
      family_);
}

long GroupSpec::n() const {
  return std::visit(Overloaded{[](const Metacyclic& g) { return g.n; },
                               [](const auto& g) { return g.n; }},
                    family_);
}

long GroupSpec::m() const {
  if (const auto* g = std::get_if<Metacyclic>(&family_)) return g->m;
  return 0;
}

long GroupSpec::order() const {
  if (a_order_ == 0)
    throw InvalidParameters("group order of " + display_name() + " does not fit a machine word");
  return a_order_ * b_order_;
}

std::string GroupSpec::tag() const {
  switch (kind()) {
    case Family::GeneralizedQuaternion: return "q4n";
    case Family::Quasidihedral: return "qd";
    case Family::USixN: return "u6n";
    case Family::Metacyclic: return "metacyclic";
  }
  return "?";
}

std::string GroupSpec::display_name() const {
  switch (kind()) {
    case Family::GeneralizedQuaternion: return "Q_" + std::to_string(4 * n());
    case Family::Quasidihedral: return "QD_2^" + std::to_string(n());
    case Family::USixN: return "U_" + std::to_string(6 * n());
    case Family::Metacyclic:
      return "M_" + std::to_string(2 * m() * n()) + "(m=" + std::to_string(m()) +
             ",n=" + std::to_string(n()) + ")";
  }
  return "?";
}

std::string to_string(const GroupElement& g) {
  return "a^" + std::to_string(g.a_exp) + " b^" + std::to_string(g.b_exp);
}

GroupElement identity_element() { return {0, 0}; }

GroupElement multiply(const GroupSpec& spec, const GroupElement& x, const GroupElement& y) {
  const long am = spec.a_order();
  const long bm = spec.b_order();
  return std::visit(
      Overloaded{
          // y x = x^-1 y and y^2 = x^n.
          [&](const GeneralizedQuaternion& g) -> GroupElement {
            if (x.b_exp == 0) return {mod(x.a_exp + y.a_exp, am), y.b_exp};
            if (y.b_exp == 0) return {mod(x.a_exp - y.a_exp, am), 1};
            return {mod(x.a_exp - y.a_exp + g.n, am), 0};
          },
          // b a = a^r b with r = 2^(n-2) - 1, b^2 = 1.
          [&](const Quasidihedral&) -> GroupElement {
            if (x.b_exp == 0) return {mod(x.a_exp + y.a_exp, am), y.b_exp};
            const long r = am / 2 - 1;
            // r * y.a_exp may exceed a long for large groups; reduce stepwise.
            const __int128 twisted = static_cast<__int128>(r) * y.a_exp;
            const long shifted = static_cast<long>(twisted % am);
            return {mod(x.a_exp + shifted, am), mod(1 + y.b_exp, 2)};
          },
          // b a = a b^-1, so b^j a^k = a^k b^((-1)^k j).
          [&](const USixN&) -> GroupElement {
            const long twisted = (y.a_exp % 2 == 0) ? x.b_exp : -x.b_exp;
            return {mod(x.a_exp + y.a_exp, am), mod(twisted + y.b_exp, bm)};
          },
          // b a = a^-1 b, so b^j a^k = a^((-1)^j k) b^j.
          [&](const Metacyclic&) -> GroupElement {
            const long twisted = (x.b_exp % 2 == 0) ? y.a_exp : -y.a_exp;
            return {mod(x.a_exp + twisted, am), mod(x.b_exp + y.b_exp, bm)};
          },
      },
      spec.family());
}

FiniteGroup::FiniteGroup(GroupSpec spec) : spec_(spec) {
  const long total = spec_.order();
  elements_.reserve(static_cast<std::size_t>(total));
  for (long j = 0; j < spec_.b_order(); ++j)
    for (long i = 0; i < spec_.a_order(); ++i) elements_.push_back({i, j});
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  if (g.a_exp < 0 || g.a_exp >= spec_.a_order() || g.b_exp < 0 || g.b_exp >= spec_.b_order())
    throw std::out_of_range("element " + to_string(g) + " is not in normal form");
  return static_cast<std::size_t>(g.b_exp * spec_.a_order() + g.a_exp);
}

GroupElement FiniteGroup::inverse(const GroupElement& g) const {
  for (const auto& h : elements_)
    if (multiply(g, h) == identity_element()) return h;
  throw std::logic_error("element without inverse: " + to_string(g));
}

long FiniteGroup::element_order(const GroupElement& g) const {
  GroupElement power = g;
  long k = 1;
  while (power != identity_element()) {
    power = multiply(power, g);
    if (++k > static_cast<long>(order())) throw std::logic_error("element of unbounded order");
  }
  return k;
}

FiniteGroup enumerate_elements(const GroupSpec& spec) {
  if (spec.a_order() == 0 || spec.order() > 1'000'000)
    throw InvalidParameters(spec.display_name() + " is too large to enumerate");
  return FiniteGroup(spec);
}

std::vector<GroupElement> center(const FiniteGroup& group) {
  std::vector<GroupElement> z;
  for (const auto& g : group.elements()) {
    const bool central = std::all_of(group.elements().begin(), group.elements().end(),
                                     [&](const GroupElement& h) { return group.commute(g, h); });
    if (central) z.push_back(g);
  }
  return z;
}

std::vector<GroupElement> centralizer(const FiniteGroup& group, const GroupElement& x) {
  std::vector<GroupElement> c;
  for (const auto& g : group.elements())
    if (group.commute(g, x)) c.push_back(g);
  return c;
}

bool is_abelian_subset(const FiniteGroup& group, const std::vector<GroupElement>& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!group.commute(subset[i], subset[j])) return false;
  return true;
}

bool is_ca_group(const FiniteGroup& group) {
  const auto z = center(group);
  for (const auto& x : group.elements()) {
    if (std::find(z.begin(), z.end(), x) != z.end()) continue;
    if (!is_abelian_subset(group, centralizer(group, x))) return false;
  }
  return true;
}

GroupAxiomCheck check_group_axioms(const FiniteGroup& group, std::size_t exhaustive_limit) {
  GroupAxiomCheck result;
  const auto& els = group.elements();
  const std::size_t n = els.size();
  const long am = group.spec().a_order();
  const long bm = group.spec().b_order();
  auto in_normal_form = [&](const GroupElement& g) {
    return g.a_exp >= 0 && g.a_exp < am && g.b_exp >= 0 && g.b_exp < bm;
  };

  for (const auto& x : els)
    for (const auto& y : els)
      if (!in_normal_form(group.multiply(x, y))) result.closed = false;

  for (const auto& x : els)
    if (group.multiply(identity_element(), x) != x || group.multiply(x, identity_element()) != x)
      result.has_identity = false;

  for (const auto& x : els) {
    const bool found = std::any_of(els.begin(), els.end(), [&](const GroupElement& y) {
      return group.multiply(x, y) == identity_element() && group.multiply(y, x) == identity_element();
    });
    if (!found) result.has_inverses = false;
  }

  const std::size_t stride = n <= exhaustive_limit ? 1 : (n + exhaustive_limit - 1) / exhaustive_limit;
  for (std::size_t i = 0; i < n; i += stride)
    for (const auto& y : els)
      for (const auto& w : els) {
        const auto& x = els[i];
        if (group.multiply(group.multiply(x, y), w) != group.multiply(x, group.multiply(y, w)))
          result.associative = false;
        ++result.triples_checked;
      }
  return result;
}

}  // namespace ncspec
