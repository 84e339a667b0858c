// Closed-form character tables of the cyclic, dihedral and dicyclic families.
// Rows appear in the conventional printed order: linear characters first
// (chi or theta), then the two-dimensional ones (psi, or pi before gamma).

#include <algorithm>
#include <functional>

#include "sgp/character.hpp"

namespace sgp {

namespace {

// Value of a row at the element b^j a^i.
using Formula = std::function<Cyclotomic(int j, int i)>;

std::string indexed(const char* symbol, int k) { return std::string(symbol) + "_" + std::to_string(k); }

Cyclotomic sign(int k) { return Cyclotomic(k % 2 == 0 ? 1L : -1L); }

// zeta_N^(k) + zeta_N^(-k)
Cyclotomic two_cos(int order, long k) { return Cyclotomic::zeta(order, k) + Cyclotomic::zeta(order, -k); }

void add_row(CharacterTable& table, std::string name, const Formula& formula) {
  const auto& g = *table.group;
  const int r = g.rotation_order();
  ClassFunction row{table.group, {}, std::move(name), true};
  for (int rep : g.classes().reps) row.values.push_back(formula(rep / r, rep % r));
  table.irreducibles.push_back(std::move(row));
}

// Carries a table of an isomorphic group across `to_model`.
CharacterTable transport(const CharacterTable& model_table, const GroupPtr& group,
                         const std::vector<int>& to_model) {
  CharacterTable out{group, {}, model_table.provenance};
  for (const auto& row : model_table.irreducibles) {
    ClassFunction moved{group, {}, row.name, row.irreducible};
    for (int rep : group->classes().reps) moved.values.push_back(row.at(to_model.at(rep)));
    out.irreducibles.push_back(std::move(moved));
  }
  return out;
}

CharacterTable cyclic_table(const GroupPtr& group) {
  const int n = group->order();
  CharacterTable table{group, {}, TableProvenance::ClosedForm};
  for (int k = 0; k < n; ++k) {
    ClassFunction row{group, {}, indexed("μ", k), true};
    for (int rep : group->classes().reps) row.values.push_back(Cyclotomic::zeta(n, static_cast<long>(k) * rep));
    table.irreducibles.push_back(std::move(row));
  }
  return table;
}

// D_4 = C2 x C2 via a -> (a, 1), b -> (1, b); rows renamed chi_1..chi_4 by
// their values at (a, b).
CharacterTable klein_dihedral_table(const GroupPtr& group) {
  const auto c2 = FiniteGroup::cyclic(2);
  const auto v4 = FiniteGroup::product(c2, c2);
  const auto c2_table = cyclic_table(c2);
  const auto tensor = tensor_table(c2_table, c2_table, v4);
  // b^j a^i in D_4 and a^i b^j in C2 x C2 share the index i + 2j.
  CharacterTable table = transport(tensor, group, {0, 1, 2, 3});

  const int a_class = group->classes().class_of[group->a()];
  const int b_class = group->classes().class_of[group->b()];
  for (auto& row : table.irreducibles) {
    const bool a_neg = row.values[a_class] == Cyclotomic(-1L);
    const bool b_neg = row.values[b_class] == Cyclotomic(-1L);
    row.name = indexed("χ", 1 + (b_neg ? 1 : 0) + (a_neg ? 2 : 0));
  }
  std::sort(table.irreducibles.begin(), table.irreducibles.end(),
            [](const ClassFunction& x, const ClassFunction& y) { return x.name < y.name; });
  return table;
}

CharacterTable dihedral_table(const GroupPtr& group) {
  const int n = group->tag().n;
  if (n == 1) {
    // D_2 = <b> = C_2.
    return transport(cyclic_table(FiniteGroup::cyclic(2)), group, {0, 1});
  }
  if (n == 2) return klein_dihedral_table(group);

  CharacterTable table{group, {}, TableProvenance::ClosedForm};
  add_row(table, "χ_1", [](int, int) { return Cyclotomic(1L); });
  add_row(table, "χ_2", [](int j, int) { return sign(j); });
  int top = (n - 1) / 2;
  if (n % 2 == 0) {
    add_row(table, "χ_3", [](int, int i) { return sign(i); });
    add_row(table, "χ_4", [](int j, int i) { return j == 0 ? sign(i) : -sign(i); });
    top = n / 2 - 1;
  }
  for (int k = 1; k <= top; ++k) {
    add_row(table, indexed("ψ", k),
            [n, k](int j, int i) { return j == 0 ? two_cos(n, static_cast<long>(k) * i) : Cyclotomic(); });
  }
  return table;
}

CharacterTable dicyclic_table(const GroupPtr& group) {
  const int n = group->tag().n;
  if (n == 1) {
    // Dic_4 = <b> = C_4.
    std::vector<int> to_model(4);
    for (int k = 0; k < 4; ++k) to_model[group->power(group->b(), k)] = k;
    return transport(cyclic_table(FiniteGroup::cyclic(4)), group, to_model);
  }

  CharacterTable table{group, {}, TableProvenance::ClosedForm};
  const int r = 2 * n;
  if (n % 2 == 1) {
    const Cyclotomic i_unit = Cyclotomic::zeta(4, 1);
    add_row(table, "θ_1", [](int, int) { return Cyclotomic(1L); });
    add_row(table, "θ_2", [](int j, int) { return sign(j); });
    add_row(table, "θ_3", [&](int j, int i) { return j == 0 ? sign(i) : i_unit * sign(i); });
    add_row(table, "θ_4", [&](int j, int i) { return j == 0 ? sign(i) : -i_unit * sign(i); });
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      add_row(table, indexed("π", k),
              [n, k](int j, int i) { return j == 0 ? two_cos(n, static_cast<long>(k) * i) : Cyclotomic(); });
    }
    // Faithful two-dimensional rows use the odd exponents 1, 3, ..., n - 2 of
    // zeta_2n, so that gamma(b^2) = gamma(a^n) = -2.
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      const long h = 2L * k - 1;
      add_row(table, indexed("γ", k),
              [r, h](int j, int i) { return j == 0 ? two_cos(r, h * i) : Cyclotomic(); });
    }
    return table;
  }

  // n even: the D_4n layout with b^2 = a^n in the place of the central rotation.
  add_row(table, "χ_1", [](int, int) { return Cyclotomic(1L); });
  add_row(table, "χ_2", [](int j, int) { return sign(j); });
  add_row(table, "χ_3", [](int, int i) { return sign(i); });
  add_row(table, "χ_4", [](int j, int i) { return j == 0 ? sign(i) : -sign(i); });
  for (int k = 1; k <= n - 1; ++k) {
    add_row(table, indexed("ψ", k),
            [r, k](int j, int i) { return j == 0 ? two_cos(r, static_cast<long>(k) * i) : Cyclotomic(); });
  }
  return table;
}

}  // namespace

CharacterTable family_table(const GroupPtr& group) {
  switch (group->tag().family) {
    case Family::Cyclic: return cyclic_table(group);
    case Family::Dihedral: return dihedral_table(group);
    case Family::Dicyclic: return dicyclic_table(group);
    case Family::Product:
      if (group->left_factor() && group->right_factor()) {
        return tensor_table(family_table(group->left_factor()), family_table(group->right_factor()), group);
      }
      break;
  }
  throw UnsupportedError("no closed-form table for " + group->name());
}

}  // namespace sgp
