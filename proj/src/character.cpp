#include "sgp/character.hpp"

#include <numeric>

namespace sgp {

namespace {

int value_order(const std::vector<Cyclotomic>& values, int start = 1) {
  int order = start;
  for (const auto& v : values) order = lcm_order(order, v.order());
  return order;
}

void require_same_group(const ClassFunction& f, const GroupPtr& group, const char* what) {
  if (f.group != group) {
    throw DomainError(std::string(what) + ": class function '" + f.name + "' lives on " +
                      (f.group ? f.group->name() : std::string("<none>")) + ", expected " + group->name());
  }
  if (static_cast<int>(f.values.size()) != group->classes().count()) {
    throw DomainError(std::string(what) + ": class function '" + f.name + "' has the wrong length");
  }
}

}  // namespace

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (!f.group || f.group != g.group) throw DomainError("inner product of class functions on different groups");
  require_same_group(f, f.group, "inner_product");
  require_same_group(g, f.group, "inner_product");
  const auto& classes = f.group->classes();
  const int order = value_order(g.values, value_order(f.values));
  CyclotomicSum sum(order);
  for (int c = 0; c < classes.count(); ++c) {
    if (f.values[c].is_zero() || g.values[c].is_zero()) continue;
    sum.add_conj_product(f.values[c], g.values[c], classes.sizes[c]);
  }
  return sum.result().divided_by(Rational(f.group->order()));
}

ClassFunction restrict_to(const ClassFunction& f, const SubgroupModel& subgroup) {
  require_same_group(f, subgroup.subgroup.parent(), "restrict");
  const auto& model = subgroup.model;
  ClassFunction out{model, {}, f.name + "↓" + model->name(), false};
  for (int rep : model->classes().reps) out.values.push_back(f.at(subgroup.to_parent.at(rep)));
  return out;
}

ClassFunction induce(const ClassFunction& f, const SubgroupModel& subgroup) {
  require_same_group(f, subgroup.model, "induce");
  const GroupPtr& group = subgroup.subgroup.parent();
  const auto& g = *group;
  const auto& model_classes = subgroup.model->classes();
  ClassFunction out{group, {}, f.name + "↑" + g.name(), false};
  const int target = value_order(f.values);
  std::vector<long> hits(model_classes.count());
  for (int rep : g.classes().reps) {
    std::fill(hits.begin(), hits.end(), 0);
    for (int x = 0; x < g.order(); ++x) {
      const int y = g.conjugate(x, rep);
      const int m = subgroup.from_parent[y];
      if (m >= 0) ++hits[model_classes.class_of[m]];
    }
    CyclotomicSum sum(target);
    for (int c = 0; c < model_classes.count(); ++c) {
      if (hits[c] != 0) sum.add(f.values[c], hits[c]);
    }
    out.values.push_back(sum.result().divided_by(Rational(subgroup.subgroup.order())));
  }
  return out;
}

CharacterTable tensor_table(const CharacterTable& left, const CharacterTable& right, const GroupPtr& product) {
  if (!product || product->tag().family != Family::Product || product->left_factor() != left.group ||
      product->right_factor() != right.group) {
    throw DomainError("tensor_table: product group does not match the factor tables");
  }
  const int nl = left.group->order();
  CharacterTable out{product, {}, left.provenance};
  for (const auto& r : right.irreducibles) {
    for (const auto& l : left.irreducibles) {
      ClassFunction row{product, {}, l.name + "⊗" + r.name, l.irreducible && r.irreducible};
      for (int rep : product->classes().reps) row.values.push_back(l.at(rep % nl) * r.at(rep / nl));
      out.irreducibles.push_back(std::move(row));
    }
  }
  return out;
}

CharacterTable tensor_table(const CharacterTable& left, const CharacterTable& right) {
  return tensor_table(left, right, FiniteGroup::product(left.group, right.group));
}

ValidationReport validate_table(const CharacterTable& table) {
  ValidationReport report;
  const auto& g = *table.group;
  const auto& classes = g.classes();
  const int k = classes.count();
  if (table.size() != k) {
    report.failures.push_back("row count " + std::to_string(table.size()) + " != class count " +
                              std::to_string(k));
    return report;
  }
  int order = 1;
  for (const auto& row : table.irreducibles) {
    if (static_cast<int>(row.values.size()) != k) {
      report.failures.push_back("row " + row.name + " has " + std::to_string(row.values.size()) + " values");
      return report;
    }
    order = value_order(row.values, order);
  }

  Integer degree_squares = 0;
  for (const auto& row : table.irreducibles) {
    auto d = row.degree().as_integer();
    if (!d || sgn(*d) <= 0) {
      report.failures.push_back("degree of " + row.name + " is not a positive integer");
    } else {
      degree_squares += *d * *d;
    }
  }
  if (degree_squares != g.order()) {
    report.failures.push_back("sum of squared degrees " + degree_squares.get_str() + " != |G| = " +
                              std::to_string(g.order()));
  }

  std::vector<std::vector<Cyclotomic>> conj(k);
  for (int i = 0; i < k; ++i) {
    for (const auto& v : table[i].values) conj[i].push_back(v.conj());
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      CyclotomicSum sum(order);
      for (int c = 0; c < k; ++c) sum.add_product(table[i].values[c], conj[j][c], classes.sizes[c]);
      const Cyclotomic expected(i == j ? g.order() : 0L);
      if (!(sum.result() == expected)) {
        report.failures.push_back("row orthogonality: <" + table[i].name + ", " + table[j].name + "> = " +
                                  sum.result().divided_by(Rational(g.order())).to_string());
      }
    }
  }
  for (int c = 0; c < k; ++c) {
    for (int d = c; d < k; ++d) {
      CyclotomicSum sum(order);
      for (int i = 0; i < k; ++i) sum.add_product(table[i].values[c], conj[i][d]);
      const Cyclotomic expected(c == d ? g.order() / classes.sizes[c] : 0L);
      if (!(sum.result() == expected)) {
        report.failures.push_back("column orthogonality: classes " + g.label(classes.reps[c]) + ", " +
                                  g.label(classes.reps[d]) + " give " + sum.result().to_string());
      }
    }
  }
  return report;
}

std::vector<long> decompose(const ClassFunction& f, const CharacterTable& table) {
  require_same_group(f, table.group, "decompose");
  std::vector<long> out;
  Integer total = 0;
  for (const auto& chi : table.irreducibles) {
    const Cyclotomic ip = inner_product(f, chi);
    const auto m = ip.as_integer();
    if (!m || sgn(*m) < 0 || !m->fits_slong_p()) {
      throw IntegralityError("<" + f.name + ", " + chi.name + "> = " + ip.to_string() +
                             " is not a nonnegative integer");
    }
    out.push_back(m->get_si());
    total += *m * *chi.degree().as_integer();
  }
  const auto deg = f.degree().as_integer();
  if (!deg || *deg != total) {
    throw IntegralityError("decomposition of " + f.name + " does not add up to its degree");
  }
  return out;
}

std::vector<ClassFunction> linear_characters_bruteforce(const GroupPtr& group) {
  const auto& g = *group;
  const auto& gens = g.generators();
  int lcm = 1;
  for (int s : gens) lcm = std::lcm(lcm, g.element_order(s));

  std::vector<int> choice(gens.size(), 0);
  std::vector<int> exponent(g.order());
  std::vector<ClassFunction> out;
  while (true) {
    // Image of generator k is zeta_lcm^(choice[k] * lcm / order(gen_k)).
    std::vector<int> image(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) image[k] = choice[k] * (lcm / g.element_order(gens[k]));

    std::fill(exponent.begin(), exponent.end(), -1);
    exponent[g.identity()] = 0;
    std::vector<int> queue{g.identity()};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const int x = queue[head];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int y = g.mul(x, gens[k]);
        const int e = (exponent[x] + image[k]) % lcm;
        if (exponent[y] < 0) {
          exponent[y] = e;
          queue.push_back(y);
        } else if (exponent[y] != e) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      ClassFunction chi{group, {}, "λ_" + std::to_string(out.size()), true};
      for (int rep : g.classes().reps) chi.values.push_back(Cyclotomic::zeta(lcm, exponent[rep]));
      out.push_back(std::move(chi));
    }

    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == g.element_order(gens[k])) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  return out;
}

CharacterTable constructive_family_table(const GroupPtr& group) {
  const Family family = group->tag().family;
  if (family == Family::Product) throw UnsupportedError("constructive table needs a family group");
  CharacterTable table{group, linear_characters_bruteforce(group), TableProvenance::Constructive};

  if (family != Family::Cyclic) {
    const SubgroupModel rotations = realize(generated_subgroup(group, {group->a()}));
    const auto cyclic_chars = linear_characters_bruteforce(rotations.model);
    for (std::size_t k = 0; k < cyclic_chars.size(); ++k) {
      ClassFunction induced = induce(cyclic_chars[k], rotations);
      if (!(inner_product(induced, induced) == Cyclotomic(1L))) continue;
      bool duplicate = false;
      for (const auto& row : table.irreducibles) {
        if (row.values == induced.values) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      induced.name = "μ_" + std::to_string(k) + "↑" + group->name();
      induced.irreducible = true;
      table.irreducibles.push_back(std::move(induced));
    }
  }

  if (table.size() != group->classes().count()) {
    throw OracleFailure("constructive table of " + group->name() + " found " + std::to_string(table.size()) +
                        " irreducibles for " + std::to_string(group->classes().count()) + " classes");
  }
  if (auto report = validate_table(table); !report.ok()) {
    throw OracleFailure("constructive table of " + group->name() + " fails validation: " + report.failures.front());
  }
  return table;
}

bool same_up_to_row_permutation(const CharacterTable& lhs, const CharacterTable& rhs) {
  if (lhs.group != rhs.group || lhs.size() != rhs.size()) return false;
  std::vector<char> used(rhs.size(), 0);
  for (const auto& row : lhs.irreducibles) {
    bool matched = false;
    for (int j = 0; j < rhs.size(); ++j) {
      if (!used[j] && row.values == rhs[j].values) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

ClassFunction regular_character(const GroupPtr& group) {
  ClassFunction out{group, {}, "ρ_" + group->name(), false};
  for (int rep : group->classes().reps) out.values.emplace_back(rep == group->identity() ? group->order() : 0L);
  return out;
}

}  // namespace sgp
