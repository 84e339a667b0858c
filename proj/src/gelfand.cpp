#include "sgp/gelfand.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace sgp {

namespace {

long certified_entry(const Cyclotomic& value, const std::string& what) {
  const auto m = value.as_integer();
  if (!m || sgn(*m) < 0 || !m->fits_slong_p()) {
    throw InternalConsistencyError(what + " = " + value.to_string() + " is not a nonnegative integer");
  }
  return m->get_si();
}

bool is_trivial_character(const ClassFunction& f) {
  for (const auto& v : f.values) {
    if (!(v == Cyclotomic(1L))) return false;
  }
  return true;
}

}  // namespace

std::optional<Witness> MultiplicityMatrix::first_witness() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (entries[i][j] >= 2) {
        return Witness{rows[i], cols[j], entries[i][j], static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  return std::nullopt;
}

GelfandAnalyzer::GelfandAnalyzer(GroupPtr group) : group_(std::move(group)), table_(family_table(group_)) {}

const MultiplicityMatrix& GelfandAnalyzer::multiplicity_matrix(const Subgroup& subgroup) {
  if (subgroup.parent() != group_) throw DomainError("subgroup does not belong to " + group_->name());
  if (auto it = cache_.find(subgroup.members()); it != cache_.end()) return it->second;

  const SubgroupModel model = realize(subgroup);
  const CharacterTable sub_table = family_table(model.model);

  MultiplicityMatrix m;
  m.group = group_;
  m.members = subgroup.members();
  for (const auto& chi : table_.irreducibles) {
    m.cols.push_back(chi.name);
    m.col_degrees.push_back(chi.degree().as_integer()->get_si());
  }
  for (int i = 0; i < sub_table.size(); ++i) {
    const auto& psi = sub_table[i];
    m.rows.push_back(psi.name);
    m.row_degrees.push_back(psi.degree().as_integer()->get_si());
    if (is_trivial_character(psi)) m.trivial_row = i;
    m.entries.push_back(decompose(induce(psi, model), table_));
  }

  // Frobenius reciprocity as a runtime check: <psi, chi|H> must reproduce
  // every entry of the induced decomposition.
  for (int j = 0; j < table_.size(); ++j) {
    const ClassFunction restricted = restrict_to(table_[j], model);
    for (int i = 0; i < sub_table.size(); ++i) {
      const long value = certified_entry(inner_product(sub_table[i], restricted),
                                         "<" + sub_table[i].name + ", " + restricted.name + ">");
      if (value != m.entries[i][j]) {
        throw InternalConsistencyError("induce and restrict paths disagree at (" + m.rows[i] + ", " + m.cols[j] +
                                       ") for " + subgroup.to_string() + " in " + group_->name());
      }
    }
  }
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    long total = 0;
    for (std::size_t j = 0; j < m.cols.size(); ++j) total += m.entries[i][j] * m.col_degrees[j];
    if (total != subgroup.index() * m.row_degrees[i]) {
      throw InternalConsistencyError("degree of " + m.rows[i] + " induced to " + group_->name() +
                                     " does not equal index times degree");
    }
  }
  return cache_.emplace(subgroup.members(), std::move(m)).first->second;
}

bool GelfandAnalyzer::is_gelfand(const Subgroup& subgroup) {
  const auto& m = multiplicity_matrix(subgroup);
  for (long e : m.entries[m.trivial_row]) {
    if (e > 1) return false;
  }
  return true;
}

StrongGelfandResult GelfandAnalyzer::is_strong_gelfand(const Subgroup& subgroup) {
  auto witness = multiplicity_matrix(subgroup).first_witness();
  return {!witness.has_value(), std::move(witness)};
}

ClassificationReport GelfandAnalyzer::classify(int max_order) {
  ClassificationReport report{group_, {}};
  for (auto& h : all_subgroups(group_, max_order)) {
    SubgroupRecord record{h, describe_subgroup(h), is_gelfand(h), false, std::nullopt};
    auto strong = is_strong_gelfand(h);
    record.strong_gelfand = strong.strong;
    record.witness = std::move(strong.witness);
    report.records.push_back(std::move(record));
  }
  return report;
}

long GelfandAnalyzer::recompute_entry(const Subgroup& subgroup, int row, int col) const {
  const SubgroupModel model = realize(subgroup);
  const CharacterTable sub_table = family_table(model.model);
  const auto& psi = sub_table[row];
  const auto& chi = table_[col];
  const long induced = certified_entry(inner_product(induce(psi, model), chi), "<" + psi.name + "^G, " + chi.name + ">");
  const long restricted =
      certified_entry(inner_product(psi, restrict_to(chi, model)), "<" + psi.name + ", " + chi.name + "|H>");
  if (induced != restricted) {
    throw InternalConsistencyError("Frobenius reciprocity fails for (" + psi.name + ", " + chi.name + ") on " +
                                   subgroup.to_string());
  }
  return induced;
}

MultiplicityMatrix multiplicity_matrix(const GroupPtr& group, const Subgroup& subgroup) {
  GelfandAnalyzer analyzer(group);
  return analyzer.multiplicity_matrix(subgroup);
}

bool is_gelfand(const GroupPtr& group, const Subgroup& subgroup) {
  GelfandAnalyzer analyzer(group);
  return analyzer.is_gelfand(subgroup);
}

StrongGelfandResult is_strong_gelfand(const GroupPtr& group, const Subgroup& subgroup) {
  GelfandAnalyzer analyzer(group);
  return analyzer.is_strong_gelfand(subgroup);
}

ClassificationReport classify_subgroups(const GroupPtr& group, int max_order) {
  GelfandAnalyzer analyzer(group);
  return analyzer.classify(max_order);
}

bool Prediction::predicts_strong_gelfand(const SubgroupDescriptor& d) const {
  using Kind = SubgroupDescriptor::Kind;
  switch (rule) {
    case PredictionRule::Abelian:
      return true;
    case PredictionRule::Dihedral:
      if (d.kind == Kind::Reflection || d.kind == Kind::Dihedral) return true;
      if (d.kind == Kind::Rotation) return d.order == n || (n % 2 == 0 && 2 * d.order == n);
      return false;
    case PredictionRule::Dicyclic:
      if (d.kind == Kind::Reflection || d.kind == Kind::Dicyclic) return true;
      if (d.kind == Kind::Rotation) return d.order == n || d.order == 2 * n;
      return false;
  }
  return false;
}

Prediction predict(Family family, int n) {
  if (n < 1) throw InvalidParameter("predict needs n >= 1");
  switch (family) {
    case Family::Cyclic: return {family, n, PredictionRule::Abelian};
    case Family::Dihedral: return {family, n, n <= 2 ? PredictionRule::Abelian : PredictionRule::Dihedral};
    case Family::Dicyclic: return {family, n, n == 1 ? PredictionRule::Abelian : PredictionRule::Dicyclic};
    case Family::Product: break;
  }
  throw UnsupportedError("no classification rule for family " + family_name(family));
}

std::size_t AuditReport::discrepancy_count() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.discrepancies.size();
  return total;
}

namespace {

Prediction checked_prediction(Family family, int n, int max_order) {
  Prediction prediction = predict(family, n);
  if (family_order(family, n) > max_order) {
    throw SizeLimitError(family_name(family) + " " + std::to_string(n) + " exceeds the order bound " +
                         std::to_string(max_order));
  }
  return prediction;
}

}  // namespace

AuditEntry audit_one(Family family, int n, int max_order) {
  const Prediction prediction = checked_prediction(family, n, max_order);
  const GroupPtr group = FiniteGroup::construct(family, n);
  GelfandAnalyzer analyzer(group);
  AuditEntry entry{family, n, analyzer.classify(max_order), {}, {}};
  for (std::size_t i = 0; i < entry.report.records.size(); ++i) {
    const auto& record = entry.report.records[i];
    if (record.witness) {
      const auto& w = *record.witness;
      const long again = analyzer.recompute_entry(record.subgroup, w.row, w.col);
      if (again != w.multiplicity || again < 2) {
        throw InternalConsistencyError("witness (" + w.psi + ", " + w.chi + ") for " + record.subgroup.to_string() +
                                       " does not re-verify");
      }
    } else if (!record.strong_gelfand) {
      throw InternalConsistencyError("non-strong pair without a witness");
    }
    const bool predicted = prediction.predicts_strong_gelfand(record.descriptor);
    entry.predicted.push_back(predicted);
    if (predicted != record.strong_gelfand) entry.discrepancies.push_back({i, predicted, record.strong_gelfand});
  }
  return entry;
}

AuditReport audit(Family family, const std::vector<int>& ns, int max_order, bool parallel) {
  AuditReport report;
  for (int n : ns) checked_prediction(family, n, max_order);
  if (!parallel || ns.size() < 2) {
    for (int n : ns) report.entries.push_back(audit_one(family, n, max_order));
    return report;
  }
  // Workers pull n values from a shared counter; results land in input order.
  std::vector<std::optional<AuditEntry>> results(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::min<std::size_t>(ns.size(), std::max(1U, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < ns.size(); i = next++) {
          try {
            results[i] = audit_one(family, ns[i], max_order);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    report.entries.push_back(std::move(*results[i]));
  }
  return report;
}

}  // namespace sgp
