#pragma once

// The four presented group families, realized as concrete finite groups on
// normal forms a^i b^j.

#include <compare>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace ncspec {

struct GeneralizedQuaternion {
  long n;  // order 4n, n >= 2
  friend bool operator==(const GeneralizedQuaternion&, const GeneralizedQuaternion&) = default;
};
struct Quasidihedral {
  long n;  // order 2^n, n >= 4
  friend bool operator==(const Quasidihedral&, const Quasidihedral&) = default;
};
struct USixN {
  long n;  // order 6n, n >= 1
  friend bool operator==(const USixN&, const USixN&) = default;
};
struct Metacyclic {
  long m;  // m > 2
  long n;  // order 2mn, n >= 1
  friend bool operator==(const Metacyclic&, const Metacyclic&) = default;
};

enum class Family { GeneralizedQuaternion, Quasidihedral, USixN, Metacyclic };

class GroupSpec {
 public:
  using Variant = std::variant<GeneralizedQuaternion, Quasidihedral, USixN, Metacyclic>;

  // Throws InvalidParameters when the family's parameter bounds are violated.
  explicit GroupSpec(Variant family);

  static GroupSpec quaternion(long n) { return GroupSpec(GeneralizedQuaternion{n}); }
  static GroupSpec quasidihedral(long n) { return GroupSpec(Quasidihedral{n}); }
  static GroupSpec u6n(long n) { return GroupSpec(USixN{n}); }
  static GroupSpec metacyclic(long m, long n) { return GroupSpec(Metacyclic{m, n}); }

  const Variant& family() const { return family_; }
  Family kind() const { return static_cast<Family>(family_.index()); }

  // n for every family; the exponent n for the quasidihedral family.
  long n() const;
  // m for the metacyclic family, 0 otherwise.
  long m() const;

  long order() const;
  long a_order() const { return a_order_; }
  long b_order() const { return b_order_; }

  // Short tag used on the command line and in output records: q4n, qd, u6n, metacyclic.
  std::string tag() const;
  std::string display_name() const;

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) { return x.family_ == y.family_; }

 private:
  Variant family_;
  long a_order_ = 0;
  long b_order_ = 0;
};

struct GroupElement {
  long a_exp = 0;
  long b_exp = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Canonical order is lexicographic in (b_exp, a_exp).
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
    if (auto c = x.b_exp <=> y.b_exp; c != 0) return c;
    return x.a_exp <=> y.a_exp;
  }
};

std::string to_string(const GroupElement& g);

GroupElement identity_element();

// Normal form of x*y. Inputs must already be in normal form for spec.
GroupElement multiply(const GroupSpec& spec, const GroupElement& x, const GroupElement& y);

class FiniteGroup {
 public:
  explicit FiniteGroup(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  // Position of g in elements().
  std::size_t index_of(const GroupElement& g) const;

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const {
    return ncspec::multiply(spec_, x, y);
  }
  bool commute(const GroupElement& x, const GroupElement& y) const {
    return multiply(x, y) == multiply(y, x);
  }

  GroupElement inverse(const GroupElement& g) const;
  long element_order(const GroupElement& g) const;

 private:
  GroupSpec spec_;
  std::vector<GroupElement> elements_;
};

// All normal forms of spec, lexicographic by (b_exp, a_exp).
FiniteGroup enumerate_elements(const GroupSpec& spec);

std::vector<GroupElement> center(const FiniteGroup& group);
std::vector<GroupElement> centralizer(const FiniteGroup& group, const GroupElement& x);
bool is_abelian_subset(const FiniteGroup& group, const std::vector<GroupElement>& subset);
bool is_ca_group(const FiniteGroup& group);

struct GroupAxiomCheck {
  bool closed = true;
  bool associative = true;
  bool has_identity = true;
  bool has_inverses = true;
  std::size_t triples_checked = 0;
  bool ok() const { return closed && associative && has_identity && has_inverses; }
};

// Full associativity scan up to `exhaustive_limit` elements; above it, only
// triples whose first factor lies in a strided sample are checked.
GroupAxiomCheck check_group_axioms(const FiniteGroup& group, std::size_t exhaustive_limit = 200);

}  // namespace ncspec
