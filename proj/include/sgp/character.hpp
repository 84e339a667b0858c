#pragma once

// Class functions, the closed-form character tables of the cyclic, dihedral
// and dicyclic families, an independent constructive reconstruction of those
// tables, and the induction / restriction / inner-product calculus.

#include <string>
#include <vector>

#include "sgp/cyclo.hpp"
#include "sgp/group.hpp"

namespace sgp {

struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;  // indexed by conjugacy class
  std::string name;
  bool irreducible = false;

  const Cyclotomic& at(int element) const { return values.at(group->classes().class_of.at(element)); }
  const Cyclotomic& degree() const { return values.at(group->classes().class_of.at(group->identity())); }
};

enum class TableProvenance { ClosedForm, Constructive };

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;
  TableProvenance provenance = TableProvenance::ClosedForm;

  int size() const { return static_cast<int>(irreducibles.size()); }
  const ClassFunction& operator[](int i) const { return irreducibles.at(i); }
};

/// (1/|G|) sum over classes of size * f * conj(g).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// f evaluated on the subgroup, expressed as a class function of its model.
ClassFunction restrict_to(const ClassFunction& f, const SubgroupModel& subgroup);

/// Frobenius induction of a class function on the subgroup's model, summed
/// over all of G: (f^G)(g) = (1/|H|) sum_x f0(x g x^-1), f0 = 0 off H.
ClassFunction induce(const ClassFunction& f, const SubgroupModel& subgroup);

/// Closed-form table for a group built by FiniteGroup's family constructors.
CharacterTable family_table(const GroupPtr& group);

/// All pairwise products of rows, on `product` = left x right.
CharacterTable tensor_table(const CharacterTable& left, const CharacterTable& right, const GroupPtr& product);
CharacterTable tensor_table(const CharacterTable& left, const CharacterTable& right);

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Row count, sum of squared degrees, and both orthogonality relations, exactly.
ValidationReport validate_table(const CharacterTable& table);

/// Multiplicities <f, chi> for each row, certified nonnegative integers
/// summing (with degrees) to deg f. Throws IntegralityError otherwise.
std::vector<long> decompose(const ClassFunction& f, const CharacterTable& table);

/// Homomorphisms to the roots of unity, found by assigning each generator a
/// root of unity of order dividing its own and checking every Cayley-graph
/// edge.
std::vector<ClassFunction> linear_characters_bruteforce(const GroupPtr& group);

/// Linear characters by brute force plus the irreducible inductions from <a>.
CharacterTable constructive_family_table(const GroupPtr& group);

/// Row multisets equal and classes aligned.
bool same_up_to_row_permutation(const CharacterTable& lhs, const CharacterTable& rhs);

/// Character of the regular representation.
ClassFunction regular_character(const GroupPtr& group);

}  // namespace sgp
