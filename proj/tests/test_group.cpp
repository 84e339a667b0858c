#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "sgp/group.hpp"

using namespace sgp;

namespace {

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

int divisor_sum(int n) {
  int s = 0;
  for (int d = 1; d <= n; ++d) s += n % d == 0 ? d : 0;
  return s;
}

// Every subset containing the identity, tested for closure. Independent of the
// seed-and-join enumeration.
std::set<std::vector<int>> subgroups_by_subset_search(const FiniteGroup& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  for (unsigned mask = 1; mask < (1U << n); mask += 2) {
    if (n % std::popcount(mask)) continue;
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!((mask >> x) & 1U)) continue;
      for (int y = 0; y < n && closed; ++y) {
        if ((mask >> y) & 1U) closed = (mask >> g.mul(x, y)) & 1U;
      }
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if ((mask >> x) & 1U) members.push_back(x);
    out.insert(members);
  }
  return out;
}

std::vector<GroupPtr> small_groups() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 30; ++n) {
    out.push_back(FiniteGroup::cyclic(n));
    out.push_back(FiniteGroup::dihedral(n));
    out.push_back(FiniteGroup::dicyclic(n));
  }
  return out;
}

}  // namespace

TEST_CASE("construction examples") {
  const auto d6 = FiniteGroup::dihedral(3);
  CHECK(d6->order() == 6);
  const int ba = d6->parse("ba");
  CHECK(d6->mul(ba, ba) == d6->identity());

  const auto dic12 = FiniteGroup::dicyclic(3);
  CHECK(dic12->order() == 12);
  CHECK(dic12->element_order(dic12->b()) == 4);
  CHECK(dic12->power(dic12->b(), 2) == dic12->power(dic12->a(), 3));
  CHECK(dic12->label(dic12->power(dic12->b(), 2)) == "b^2");

  const auto v4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(v4->labels() == std::vector<std::string>{"1", "a", "b", "ab"});
  CHECK(v4->is_abelian());

  CHECK_THROWS_AS(FiniteGroup::dihedral(0), InvalidParameter);
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), InvalidParameter);
  CHECK_THROWS_AS(FiniteGroup::dicyclic(0), InvalidParameter);

  const auto dic4 = FiniteGroup::dicyclic(1);
  CHECK(dic4->order() == 4);
  CHECK(dic4->is_abelian());
  CHECK(dic4->element_order(dic4->b()) == 4);
}

TEST_CASE("presentation relations") {
  for (int n = 1; n <= 30; ++n) {
    CAPTURE(n);
    const auto d = FiniteGroup::dihedral(n);
    const int a = d->a(), b = d->b();
    CHECK(d->power(a, n) == 0);
    CHECK(d->mul(b, b) == 0);
    CHECK(d->mul(d->mul(b, a), b) == d->inv(a));

    const auto q = FiniteGroup::dicyclic(n);
    const int qa = q->a(), qb = q->b();
    CHECK(q->power(qa, 2 * n) == 0);
    CHECK(q->element_order(qa) == 2 * n);
    CHECK(q->mul(qb, qb) == q->power(qa, n));
    CHECK(q->power(qb, 4) == 0);
    CHECK(q->mul(q->mul(q->inv(qb), qa), qb) == q->inv(qa));
  }
}

TEST_CASE("labels are unique and round-trip through the parser") {
  auto groups = small_groups();
  groups.push_back(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  groups.push_back(FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::dihedral(3)));
  for (const auto& g : groups) {
    CAPTURE(g->name());
    std::set<std::string> seen(g->labels().begin(), g->labels().end());
    CHECK(seen.size() == static_cast<std::size_t>(g->order()));
    for (int x = 0; x < g->order(); ++x) CHECK(g->parse(g->label(x)) == x);
  }
  const auto d12 = FiniteGroup::dihedral(6);
  CHECK(d12->parse("ab") == d12->parse("ba^5"));
  CHECK(d12->parse("a^-1") == d12->parse("a^5"));
  CHECK(d12->parse("b^3") == d12->parse("b"));
  const auto dic12 = FiniteGroup::dicyclic(3);
  CHECK(dic12->parse("b^3") == dic12->parse("ba^3"));
  CHECK_THROWS_AS(d12->parse("c"), ParseError);
}

TEST_CASE("group axioms on the Cayley tables") {
  for (const auto& g : small_groups()) {
    const int n = g->order();
    CAPTURE(g->name());
    for (int x = 0; x < n; ++x) {
      std::vector<bool> row(n), col(n);
      for (int y = 0; y < n; ++y) {
        row[g->mul(x, y)] = true;
        col[g->mul(y, x)] = true;
      }
      CHECK(std::all_of(row.begin(), row.end(), [](bool v) { return v; }));
      CHECK(std::all_of(col.begin(), col.end(), [](bool v) { return v; }));
      CHECK(g->mul(x, g->inv(x)) == 0);
    }
    if (n <= 40) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) REQUIRE(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
    }
  }
}

TEST_CASE("conjugacy classes") {
  auto reps = [](const GroupPtr& g) {
    std::vector<std::string> out;
    for (int r : g->classes().reps) out.push_back(g->label(r));
    return out;
  };
  CHECK(reps(FiniteGroup::dihedral(3)) == std::vector<std::string>{"1", "a", "b"});
  CHECK(FiniteGroup::dihedral(3)->classes().sizes == std::vector<int>{1, 2, 3});
  CHECK(reps(FiniteGroup::dihedral(6)) == std::vector<std::string>{"1", "a", "a^2", "a^3", "b", "ba"});
  CHECK(FiniteGroup::dicyclic(2)->classes().count() == 5);

  for (const auto& g : small_groups()) {
    const auto& c = g->classes();
    CAPTURE(g->name());
    CHECK(std::accumulate(c.sizes.begin(), c.sizes.end(), 0) == g->order());
    for (int s : c.sizes) CHECK(g->order() % s == 0);
    CHECK(c.sizes[c.class_of[0]] == 1);
    CHECK(std::is_sorted(c.reps.begin(), c.reps.end()));
    // brute-force orbit oracle
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y) CHECK(c.class_of[g->conjugate(y, x)] == c.class_of[x]);
    const int n = g->tag().n;
    if (g->tag().family == Family::Dihedral && n >= 3) CHECK(c.count() == (n % 2 ? (n + 3) / 2 : n / 2 + 3));
    if (g->tag().family == Family::Dicyclic && n >= 2) CHECK(c.count() == n + 3);
    if (g->tag().family == Family::Cyclic) CHECK(c.count() == n);
  }
}

TEST_CASE("generated subgroups") {
  const auto d10 = FiniteGroup::dihedral(5);
  const auto hb = generated_subgroup(d10, {d10->b()});
  CHECK(hb.to_string() == "{1, b}");
  const auto dic12 = FiniteGroup::dicyclic(3);
  const auto qb = generated_subgroup(dic12, {dic12->b()});
  CHECK(qb.order() == 4);
  CHECK(qb.to_string() == "{1, b^2, b, ba^3}");
  CHECK(generated_subgroup(d10, {0}).order() == 1);
  CHECK(generated_subgroup(d10, {d10->a(), d10->b()}).order() == 10);
}

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(FiniteGroup::dihedral(6)).size() == 16);
  CHECK(all_subgroups(FiniteGroup::cyclic(6)).size() == 4);
  CHECK(all_subgroups(FiniteGroup::dicyclic(3)).size() == 8);
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(all_subgroups(FiniteGroup::dihedral(n)).size() == static_cast<std::size_t>(divisor_count(n) + divisor_sum(n)));
    CHECK(all_subgroups(FiniteGroup::cyclic(n)).size() == static_cast<std::size_t>(divisor_count(n)));
    if (n >= 2) {
      CHECK(all_subgroups(FiniteGroup::dicyclic(n)).size() ==
            static_cast<std::size_t>(divisor_count(2 * n) + divisor_sum(n)));
    }
  }
  CHECK_THROWS_AS(all_subgroups(FiniteGroup::dihedral(10), 16), SizeLimitError);
}

TEST_CASE("enumeration matches exhaustive subset search") {
  std::vector<GroupPtr> groups;
  for (int n = 1; n <= 8; ++n) groups.push_back(FiniteGroup::dihedral(n));
  for (int n = 1; n <= 4; ++n) groups.push_back(FiniteGroup::dicyclic(n));
  for (int n = 1; n <= 12; ++n) groups.push_back(FiniteGroup::cyclic(n));
  for (const auto& g : groups) {
    CAPTURE(g->name());
    std::set<std::vector<int>> found;
    for (const auto& h : all_subgroups(g)) found.insert(h.members());
    CHECK(found == subgroups_by_subset_search(*g));
  }
}

TEST_CASE("subgroup invariants, structure and conjugation") {
  for (int n = 1; n <= 16; ++n) {
    for (const auto& g : {FiniteGroup::dihedral(n), FiniteGroup::dicyclic(n)}) {
      CAPTURE(g->name());
      const auto subs = all_subgroups(g);
      CHECK(std::is_sorted(subs.begin(), subs.end()));
      CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
      for (const auto& h : subs) {
        CHECK(h.is_closed());
        const auto d = describe_subgroup(h);
        CHECK(d.order == h.order());
        CHECK(d.kind != SubgroupDescriptor::Kind::Unclassified);
        if (g->tag().family == Family::Dihedral) CHECK(d.kind != SubgroupDescriptor::Kind::Dicyclic);
        if (g->tag().family == Family::Dicyclic) CHECK(d.kind != SubgroupDescriptor::Kind::Dihedral);
        // realize() must produce an isomorphism onto a family model
        const auto m = realize(h);
        CHECK(m.model->order() == h.order());
        for (int x = 0; x < m.model->order(); ++x)
          for (int y = 0; y < m.model->order(); ++y)
            REQUIRE(m.to_parent[m.model->mul(x, y)] == g->mul(m.to_parent[x], m.to_parent[y]));
      }
      if (n <= 8) {
        for (const auto& h : subs)
          for (const auto& k : subs)
            if (h.order() == k.order() && are_conjugate_subgroups(g, h, k))
              CHECK(describe_subgroup(h).same_structure(describe_subgroup(k)));
      }
    }
  }
}

TEST_CASE("descriptor examples") {
  const auto d10 = FiniteGroup::dihedral(5);
  CHECK(describe_subgroup(generated_subgroup(d10, {d10->b()})).to_string() == "<b>");
  CHECK(describe_subgroup(generated_subgroup(d10, {d10->a()})).to_string() == "C5");
  CHECK(describe_subgroup(generated_subgroup(d10, {0})).to_string() == "trivial");
  CHECK(describe_subgroup(generated_subgroup(d10, {d10->a(), d10->b()})).to_string() == "D10");
  const auto dic12 = FiniteGroup::dicyclic(3);
  const auto qb = describe_subgroup(generated_subgroup(dic12, {dic12->b()}));
  CHECK(qb.kind == SubgroupDescriptor::Kind::Reflection);
  CHECK(qb.order == 4);
  CHECK(describe_subgroup(generated_subgroup(dic12, {dic12->power(dic12->b(), 2)})).to_string() == "C2");
  CHECK(describe_subgroup(generated_subgroup(dic12, {dic12->a(), dic12->b()})).to_string() == "Dic12");
}

TEST_CASE("conjugate subgroup examples") {
  const auto d10 = FiniteGroup::dihedral(5);
  const auto h1 = generated_subgroup(d10, {d10->parse("b")});
  const auto h2 = generated_subgroup(d10, {d10->parse("ba^2")});
  CHECK(are_conjugate_subgroups(d10, h1, h2));
  CHECK(are_conjugate_subgroups(d10, h1, h1));
  const auto d12 = FiniteGroup::dihedral(6);
  CHECK_FALSE(are_conjugate_subgroups(d12, generated_subgroup(d12, {d12->parse("b")}),
                                      generated_subgroup(d12, {d12->parse("ab")})));
}
