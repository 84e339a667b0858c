#pragma once

// Multiplicity matrices <psi^G, chi>, the Gelfand and strong Gelfand tests,
// exhaustive subgroup classification, the closed-form classification rules for
// the dihedral and dicyclic families, and the audit comparing the two.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgp/character.hpp"
#include "sgp/group.hpp"

namespace sgp {

/// A pair (psi in Irr(H), chi in Irr(G)) with <psi^G, chi> >= 2.
struct Witness {
  std::string psi;
  std::string chi;
  long multiplicity = 0;
  int row = 0;
  int col = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct MultiplicityMatrix {
  GroupPtr group;
  std::vector<int> members;  // of H
  std::vector<std::string> rows;  // Irr(H)
  std::vector<std::string> cols;  // Irr(G)
  std::vector<long> row_degrees;
  std::vector<long> col_degrees;
  std::vector<std::vector<long>> entries;
  int trivial_row = 0;

  /// First entry >= 2 in row-major order.
  std::optional<Witness> first_witness() const;
};

struct StrongGelfandResult {
  bool strong = true;
  std::optional<Witness> witness;
};

struct SubgroupRecord {
  Subgroup subgroup;
  SubgroupDescriptor descriptor;
  bool gelfand = false;
  bool strong_gelfand = false;
  std::optional<Witness> witness;
};

struct ClassificationReport {
  GroupPtr group;
  std::vector<SubgroupRecord> records;
};

/// Caches the character table of G and one multiplicity matrix per subgroup.
/// Not thread-safe; give each worker its own analyzer.
class GelfandAnalyzer {
 public:
  explicit GelfandAnalyzer(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  const CharacterTable& table() const noexcept { return table_; }

  /// Computed through induce + decompose and through restrict + inner
  /// product; throws InternalConsistencyError if the two disagree.
  const MultiplicityMatrix& multiplicity_matrix(const Subgroup& subgroup);
  bool is_gelfand(const Subgroup& subgroup);
  StrongGelfandResult is_strong_gelfand(const Subgroup& subgroup);
  ClassificationReport classify(int max_order = kDefaultMaxOrder);

  /// Recomputes <psi^G, chi> from scratch along both paths and returns the
  /// common value; throws InternalConsistencyError if they differ.
  long recompute_entry(const Subgroup& subgroup, int row, int col) const;

 private:
  GroupPtr group_;
  CharacterTable table_;
  std::map<std::vector<int>, MultiplicityMatrix> cache_;
};

MultiplicityMatrix multiplicity_matrix(const GroupPtr& group, const Subgroup& subgroup);
bool is_gelfand(const GroupPtr& group, const Subgroup& subgroup);
StrongGelfandResult is_strong_gelfand(const GroupPtr& group, const Subgroup& subgroup);
ClassificationReport classify_subgroups(const GroupPtr& group, int max_order = kDefaultMaxOrder);

/// Which closed-form rule a prediction follows.
enum class PredictionRule {
  Abelian,       // D_2, D_4, Dic_4 and cyclic groups: every subgroup
  Dihedral,      // reflection or dihedral subgroups, <a>, and <a^2> for even n
  Dicyclic,      // <ba^i>, dicyclic subgroups, cyclic of order n or 2n inside <a>
};

struct Prediction {
  Family family = Family::Dihedral;
  int n = 1;
  PredictionRule rule = PredictionRule::Abelian;

  bool predicts_strong_gelfand(const SubgroupDescriptor& descriptor) const;
};

Prediction predict(Family family, int n);

struct Discrepancy {
  std::size_t record = 0;  // index into the classification records
  bool predicted = false;
  bool computed = false;
};

struct AuditEntry {
  Family family = Family::Dihedral;
  int n = 1;
  ClassificationReport report;
  std::vector<bool> predicted;
  std::vector<Discrepancy> discrepancies;

  int total() const { return static_cast<int>(report.records.size()); }
  int disagree() const { return static_cast<int>(discrepancies.size()); }
  int agree() const { return total() - disagree(); }
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  std::size_t discrepancy_count() const;
};

/// Classifies every n and diffs the result against predict(family, n). Every
/// witness of a non-strong pair is re-verified along both paths.
AuditEntry audit_one(Family family, int n, int max_order = kDefaultMaxOrder);
AuditReport audit(Family family, const std::vector<int>& ns, int max_order = kDefaultMaxOrder,
                  bool parallel = true);

}  // namespace sgp
