#pragma once

// Cayley-table models of the cyclic, dihedral and dicyclic families, their
// conjugacy classes, and exhaustive subgroup enumeration.
//
// Dihedral and dicyclic elements are stored in the normal form b^j a^i with
// j in {0, 1}; element index is j * R + i where R is the order of a
// (n for D_2n, 2n for Dic_4n). The relation b^2 = a^n of Dic_4n removes
// every higher power of b, and a^n itself is labelled "b^2".

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgp/error.hpp"

namespace sgp {

enum class Family { Cyclic, Dihedral, Dicyclic, Product };

struct FamilyTag {
  Family family = Family::Cyclic;
  // Cyclic: the group order. Dihedral: n for D_2n. Dicyclic: n for Dic_4n.
  // Unused for products.
  int n = 1;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

std::string family_name(Family family);
/// |G| of the family member with parameter n (not defined for products).
long family_order(Family family, int n);
Family parse_family(std::string_view name);

struct ConjugacyClasses {
  std::vector<int> class_of;  // element -> class index
  std::vector<int> reps;      // minimal element of each class
  std::vector<int> sizes;

  int count() const { return static_cast<int>(reps.size()); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Default bound on |G| for constructions and subgroup enumeration.
inline constexpr int kDefaultMaxOrder = 256;

class FiniteGroup {
 public:
  static GroupPtr cyclic(int n);
  static GroupPtr dihedral(int n);
  static GroupPtr dicyclic(int n);
  static GroupPtr product(GroupPtr left, GroupPtr right);
  static GroupPtr construct(Family family, int n);

  int order() const noexcept { return order_; }
  int identity() const noexcept { return 0; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * order_ + y]; }
  int inv(int x) const { return inv_[x]; }
  int conjugate(int x, int g) const { return mul(mul(x, g), inv_[x]); }  // x g x^-1
  int power(int x, long k) const;
  int element_order(int x) const { return element_order_[x]; }

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Parses a word such as `ba^2`, `b^2`, `a^-1b` or `(a,b)` into an element.
  int parse(std::string_view word) const;

  const FamilyTag& tag() const noexcept { return tag_; }
  /// Display name: C5, D10, Dic12, C2xC2.
  std::string name() const;

  /// a, then b where the family has one. Products: the factors' generators.
  const std::vector<int>& generators() const noexcept { return generators_; }
  /// Element a of the presentation (identity for D_2 and C_1).
  int a() const { return generators_.front(); }
  int b() const;
  /// Order of a: n for cyclic and dihedral, 2n for dicyclic.
  int rotation_order() const;
  /// True when x lies in <a>.
  bool in_rotations(int x) const;

  const ConjugacyClasses& classes() const noexcept { return classes_; }
  bool is_abelian() const;

  const GroupPtr& left_factor() const noexcept { return left_; }
  const GroupPtr& right_factor() const noexcept { return right_; }

 private:
  FiniteGroup() = default;
  static GroupPtr finish(std::unique_ptr<FiniteGroup> g);
  static GroupPtr metacyclic(FamilyTag tag, int rotation_order, int b_square);
  void verify_axioms() const;

  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> element_order_;
  std::vector<std::string> labels_;
  std::vector<int> generators_;
  FamilyTag tag_;
  GroupPtr left_, right_;
  ConjugacyClasses classes_;
};

/// Orbits of g -> x g x^-1, ordered by minimal element.
ConjugacyClasses conjugacy_classes(const FiniteGroup& group);

/// Closed subset of a parent group, members kept sorted.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<int>& members() const noexcept { return members_; }
  int order() const noexcept { return static_cast<int>(members_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(int x) const { return (bits_[x >> 6] >> (x & 63)) & 1U; }
  bool is_subset_of(const Subgroup& other) const;
  /// Identity, closure under products and inverses, Lagrange.
  bool is_closed() const;
  std::string to_string() const;  // {1, b, ...}

  friend bool operator==(const Subgroup& lhs, const Subgroup& rhs) {
    return lhs.parent_ == rhs.parent_ && lhs.members_ == rhs.members_;
  }
  friend bool operator<(const Subgroup& lhs, const Subgroup& rhs);

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<std::uint64_t> bits_;
};

Subgroup generated_subgroup(const GroupPtr& group, const std::vector<int>& gens);

/// Every subgroup exactly once, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const GroupPtr& group, int max_order = kDefaultMaxOrder);

bool are_conjugate_subgroups(const GroupPtr& group, const Subgroup& h1, const Subgroup& h2);

struct SubgroupDescriptor {
  enum class Kind { Trivial, Rotation, Reflection, Dihedral, Dicyclic, Unclassified };
  Kind kind = Kind::Unclassified;
  int order = 1;
  // For Reflection: the i of <ba^i>, smallest choice.
  int shift = 0;

  /// "trivial", "C<d>", "D<2m>", "Dic<4k>", "<ba^i>", "unclassified".
  std::string to_string() const;
  /// Kind and order only; <ba^i> subgroups with different i compare equal.
  bool same_structure(const SubgroupDescriptor& other) const {
    return kind == other.kind && order == other.order;
  }
};

SubgroupDescriptor describe_subgroup(const Subgroup& subgroup);

/// A subgroup together with an isomorphic family group and the isomorphism.
struct SubgroupModel {
  Subgroup subgroup;
  GroupPtr model;
  std::vector<int> to_parent;    // model element -> parent element
  std::vector<int> from_parent;  // parent element -> model element, -1 outside
};

/// Identifies H as cyclic, dihedral or dicyclic and builds the isomorphism.
/// Throws UnsupportedError for any other isomorphism type.
SubgroupModel realize(const Subgroup& subgroup);

}  // namespace sgp
