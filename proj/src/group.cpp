#include "sgp/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <random>
#include <sstream>

namespace sgp {

namespace {

std::string power_label(char letter, long k) {
  if (k == 0) return "1";
  std::string out(1, letter);
  if (k != 1) out += "^" + std::to_string(k);
  return out;
}

std::vector<std::uint64_t> empty_bits(int order) { return std::vector<std::uint64_t>((order + 63) / 64, 0); }

void set_bit(std::vector<std::uint64_t>& bits, int x) { bits[x >> 6] |= std::uint64_t{1} << (x & 63); }

bool test_bit(const std::vector<std::uint64_t>& bits, int x) { return (bits[x >> 6] >> (x & 63)) & 1U; }

bool bits_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

std::vector<int> bits_members(const std::vector<std::uint64_t>& bits, int order) {
  std::vector<int> out;
  for (int x = 0; x < order; ++x) {
    if (test_bit(bits, x)) out.push_back(x);
  }
  return out;
}

// Closure of gens under right multiplication, starting from the identity.
std::vector<std::uint64_t> closure(const FiniteGroup& g, const std::vector<int>& gens) {
  auto bits = empty_bits(g.order());
  std::vector<int> queue{g.identity()};
  set_bit(bits, g.identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!test_bit(bits, y)) {
        set_bit(bits, y);
        queue.push_back(y);
      }
    }
  }
  return bits;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
    case Family::Product: return "product";
  }
  return "unknown";
}

long family_order(Family family, int n) {
  switch (family) {
    case Family::Cyclic: return n;
    case Family::Dihedral: return 2L * n;
    case Family::Dicyclic: return 4L * n;
    case Family::Product: break;
  }
  throw InvalidParameter("products have no single parameter n");
}

Family parse_family(std::string_view name) {
  if (name == "cyclic") return Family::Cyclic;
  if (name == "dihedral") return Family::Dihedral;
  if (name == "dicyclic") return Family::Dicyclic;
  if (name == "product") return Family::Product;
  throw ParseError("unknown family '" + std::string(name) + "'");
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvalidParameter("cyclic group needs n >= 1");
  auto g = std::unique_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->tag_ = {Family::Cyclic, n};
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g->table_[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    g->labels_.push_back(power_label('a', i));
  }
  g->generators_ = {n > 1 ? 1 : 0};
  return finish(std::move(g));
}

// Elements b^j a^i, index j * r + i, with a^r = 1, b^2 = a^b_square and
// a^i b = b a^-i.
GroupPtr FiniteGroup::metacyclic(FamilyTag tag, int r, int b_square) {
  auto g = std::unique_ptr<FiniteGroup>(new FiniteGroup());
  const int order = 2 * r;
  g->order_ = order;
  g->tag_ = tag;
  g->table_.resize(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    const int j = x / r, i = x % r;
    for (int y = 0; y < order; ++y) {
      const int k = y / r, l = y % r;
      int exp = (k == 0 ? i : r - i) + l;
      int bpow = j + k;
      if (bpow == 2) {
        bpow = 0;
        exp += b_square;
      }
      g->table_[static_cast<std::size_t>(x) * order + y] = bpow * r + exp % r;
    }
  }
  for (int x = 0; x < order; ++x) {
    const int j = x / r, i = x % r;
    if (j == 0) {
      g->labels_.push_back(tag.family == Family::Dicyclic && i == tag.n ? "b^2" : power_label('a', i));
    } else {
      g->labels_.push_back(i == 0 ? "b" : "b" + power_label('a', i));
    }
  }
  g->generators_ = {r > 1 ? 1 : 0, r};
  return finish(std::move(g));
}

GroupPtr FiniteGroup::dihedral(int n) {
  if (n < 1) throw InvalidParameter("dihedral group needs n >= 1");
  return metacyclic({Family::Dihedral, n}, n, 0);
}

GroupPtr FiniteGroup::dicyclic(int n) {
  if (n < 1) throw InvalidParameter("dicyclic group needs n >= 1");
  return metacyclic({Family::Dicyclic, n}, 2 * n, n);
}

GroupPtr FiniteGroup::product(GroupPtr left, GroupPtr right) {
  if (!left || !right) throw InvalidParameter("product needs two groups");
  auto g = std::unique_ptr<FiniteGroup>(new FiniteGroup());
  const int nl = left->order(), nr = right->order();
  const int order = nl * nr;
  g->order_ = order;
  g->tag_ = {Family::Product, order};
  g->table_.resize(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int p = left->mul(x % nl, y % nl);
      const int q = right->mul(x / nl, y / nl);
      g->table_[static_cast<std::size_t>(x) * order + y] = p + nl * q;
    }
  }
  const bool letters = left->tag().family == Family::Cyclic && right->tag().family == Family::Cyclic;
  for (int x = 0; x < order; ++x) {
    const std::string& l = left->label(x % nl);
    const std::string& r = right->label(x / nl);
    if (!letters) {
      g->labels_.push_back("(" + l + "," + r + ")");
    } else if (l == "1") {
      g->labels_.push_back(r == "1" ? "1" : "b" + r.substr(1));
    } else {
      g->labels_.push_back(r == "1" ? l : l + "b" + r.substr(1));
    }
  }
  for (int s : left->generators()) g->generators_.push_back(s);
  for (int s : right->generators()) g->generators_.push_back(nl * s);
  g->left_ = std::move(left);
  g->right_ = std::move(right);
  return finish(std::move(g));
}

GroupPtr FiniteGroup::construct(Family family, int n) {
  switch (family) {
    case Family::Cyclic: return cyclic(n);
    case Family::Dihedral: return dihedral(n);
    case Family::Dicyclic: return dicyclic(n);
    case Family::Product: break;
  }
  throw InvalidParameter("products are built from two factor groups");
}

GroupPtr FiniteGroup::finish(std::unique_ptr<FiniteGroup> g) {
  const int n = g->order_;
  g->inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (g->mul(x, y) == 0) {
        g->inv_[x] = y;
        break;
      }
    }
  }
  g->element_order_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    int k = 1;
    for (int y = x; y != 0; y = g->mul(y, x)) ++k;
    g->element_order_[x] = x == 0 ? 1 : k;
  }
  g->verify_axioms();
  g->classes_ = conjugacy_classes(*g);
  return GroupPtr(std::move(g));
}

void FiniteGroup::verify_axioms() const {
  const int n = order_;
  std::vector<char> seen_row(n), seen_col(n);
  for (int x = 0; x < n; ++x) {
    std::fill(seen_row.begin(), seen_row.end(), 0);
    std::fill(seen_col.begin(), seen_col.end(), 0);
    for (int y = 0; y < n; ++y) {
      const int r = mul(x, y), c = mul(y, x);
      if (r < 0 || r >= n || c < 0 || c >= n || seen_row[r] || seen_col[c]) {
        throw InternalConsistencyError("multiplication table of " + name() + " is not a Latin square");
      }
      seen_row[r] = seen_col[c] = 1;
    }
    if (mul(0, x) != x || mul(x, 0) != x) throw InternalConsistencyError("identity law fails in " + name());
    if (inv_[x] < 0 || mul(inv_[x], x) != 0) throw InternalConsistencyError("inverse law fails in " + name());
  }
  auto check = [&](int x, int y, int z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
      throw InternalConsistencyError("associativity fails in " + name());
    }
  };
  if (n <= 64) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) check(x, y, z);
  } else {
    std::mt19937 rng(0x5ca1ab1e);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) check(pick(rng), pick(rng), pick(rng));
  }
}

int FiniteGroup::power(int x, long k) const {
  const long o = element_order_[x];
  k %= o;
  if (k < 0) k += o;
  int y = 0;
  for (long t = 0; t < k; ++t) y = mul(y, x);
  return y;
}

int FiniteGroup::b() const {
  if (generators_.size() < 2) throw DomainError(name() + " has no generator b");
  return generators_[1];
}

int FiniteGroup::rotation_order() const {
  switch (tag_.family) {
    case Family::Cyclic: return order_;
    case Family::Dihedral: return tag_.n;
    case Family::Dicyclic: return 2 * tag_.n;
    case Family::Product: break;
  }
  throw DomainError("products have no rotation subgroup");
}

bool FiniteGroup::in_rotations(int x) const {
  if (tag_.family == Family::Product) return false;
  return x < rotation_order();
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < order_; ++x)
    for (int y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::string FiniteGroup::name() const {
  switch (tag_.family) {
    case Family::Cyclic: return "C" + std::to_string(tag_.n);
    case Family::Dihedral: return "D" + std::to_string(2 * tag_.n);
    case Family::Dicyclic: return "Dic" + std::to_string(4 * tag_.n);
    case Family::Product: return left_->name() + "x" + right_->name();
  }
  return "?";
}

int FiniteGroup::parse(std::string_view word) const {
  auto fail = [&]() -> int {
    throw ParseError("cannot parse '" + std::string(word) + "' as an element of " + name());
  };
  while (!word.empty() && std::isspace(static_cast<unsigned char>(word.front()))) word.remove_prefix(1);
  while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.remove_suffix(1);
  if (word.empty()) return fail();

  if (word.front() == '(') {
    if (tag_.family != Family::Product || word.back() != ')') return fail();
    const std::string_view inner = word.substr(1, word.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        const int l = left_->parse(inner.substr(0, i));
        const int r = right_->parse(inner.substr(i + 1));
        return l + left_->order() * r;
      }
    }
    return fail();
  }
  if (word == "1") return identity();

  const bool has_b = tag_.family == Family::Dihedral || tag_.family == Family::Dicyclic ||
                     (tag_.family == Family::Product && generators_.size() == 2 &&
                      left_->tag().family == Family::Cyclic && right_->tag().family == Family::Cyclic);
  if (tag_.family == Family::Product && !has_b) return fail();

  int x = identity();
  std::size_t pos = 0;
  while (pos < word.size()) {
    const char letter = word[pos++];
    int gen;
    if (letter == 'a') {
      gen = a();
    } else if (letter == 'b' && has_b) {
      gen = b();
    } else {
      return fail();
    }
    long k = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      const char* begin = word.data() + pos;
      const char* end = word.data() + word.size();
      auto [ptr, ec] = std::from_chars(begin, end, k);
      if (ec != std::errc() || ptr == begin) return fail();
      pos += static_cast<std::size_t>(ptr - begin);
    }
    x = mul(x, power(gen, k));
  }
  return x;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  ConjugacyClasses out;
  out.class_of.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (out.class_of[g] >= 0) continue;
    const int c = out.count();
    out.reps.push_back(g);
    int size = 0;
    for (int x = 0; x < n; ++x) {
      const int y = group.conjugate(x, g);
      if (out.class_of[y] < 0) {
        out.class_of[y] = c;
        ++size;
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  bits_ = empty_bits(parent_->order());
  for (int x : members_) {
    if (x < 0 || x >= parent_->order()) throw DomainError("subgroup member outside the parent group");
    set_bit(bits_, x);
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return parent_ == other.parent_ && bits_subset(bits_, other.bits_);
}

bool Subgroup::is_closed() const {
  const auto& g = *parent_;
  if (!contains(g.identity())) return false;
  if (g.order() % order() != 0) return false;
  for (int x : members_) {
    if (!contains(g.inv(x))) return false;
    for (int y : members_) {
      if (!contains(g.mul(x, y))) return false;
    }
  }
  return true;
}

std::string Subgroup::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += parent_->label(members_[i]);
  }
  return out + "}";
}

bool operator<(const Subgroup& lhs, const Subgroup& rhs) {
  if (lhs.order() != rhs.order()) return lhs.order() < rhs.order();
  return lhs.members_ < rhs.members_;
}

Subgroup generated_subgroup(const GroupPtr& group, const std::vector<int>& gens) {
  for (int s : gens) {
    if (s < 0 || s >= group->order()) throw DomainError("generator outside the group");
  }
  return Subgroup(group, bits_members(closure(*group, gens), group->order()));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group, int max_order) {
  const int n = group->order();
  if (n > max_order) {
    throw SizeLimitError(group->name() + " has order " + std::to_string(n) + ", above the bound " +
                         std::to_string(max_order));
  }
  struct Entry {
    std::vector<std::uint64_t> bits;
    std::vector<int> gens;
  };
  std::vector<Entry> entries;
  std::map<std::vector<std::uint64_t>, std::size_t> seen;
  auto add = [&](std::vector<std::uint64_t> bits, std::vector<int> gens) {
    if (seen.count(bits)) return;
    seen.emplace(bits, entries.size());
    entries.push_back({std::move(bits), std::move(gens)});
  };

  for (int g = 0; g < n; ++g) add(closure(*group, {g}), {g});
  // Join every new subgroup with every earlier one until nothing new appears.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& bi = entries[i].bits;
      const auto& bj = entries[j].bits;
      if (bits_subset(bi, bj) || bits_subset(bj, bi)) continue;
      std::vector<int> gens = entries[i].gens;
      for (int s : entries[j].gens) {
        if (!test_bit(bi, s)) gens.push_back(s);
      }
      auto joined = closure(*group, gens);
      add(std::move(joined), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.emplace_back(group, bits_members(e.bits, n));
  std::sort(out.begin(), out.end());
  return out;
}

bool are_conjugate_subgroups(const GroupPtr& group, const Subgroup& h1, const Subgroup& h2) {
  if (h1.parent() != group || h2.parent() != group) throw DomainError("subgroups of a different group");
  if (h1.order() != h2.order()) return false;
  for (int x = 0; x < group->order(); ++x) {
    bool all = true;
    for (int h : h1.members()) {
      if (!h2.contains(group->conjugate(x, h))) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::string SubgroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Rotation: return "C" + std::to_string(order);
    case Kind::Reflection: return "<b" + (shift == 0 ? std::string() : power_label('a', shift)) + ">";
    case Kind::Dihedral: return "D" + std::to_string(order);
    case Kind::Dicyclic: return "Dic" + std::to_string(order);
    case Kind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace {

bool is_cyclic(const Subgroup& h) {
  for (int x : h.members()) {
    if (h.parent()->element_order(x) == h.order()) return true;
  }
  return false;
}

}  // namespace

SubgroupDescriptor describe_subgroup(const Subgroup& subgroup) {
  using Kind = SubgroupDescriptor::Kind;
  const auto& g = *subgroup.parent();
  SubgroupDescriptor d;
  d.order = subgroup.order();
  if (d.order == 1) {
    d.kind = Kind::Trivial;
    return d;
  }
  const Family family = g.tag().family;
  if (family == Family::Product) return d;
  if (family == Family::Cyclic) {
    d.kind = Kind::Rotation;
    return d;
  }

  const int r = g.rotation_order();
  int shift = -1;
  for (int x : subgroup.members()) {
    if (!g.in_rotations(x) && shift < 0) shift = x - r;
  }
  if (shift < 0) {
    d.kind = Kind::Rotation;
  } else if (is_cyclic(subgroup)) {
    d.kind = Kind::Reflection;
    d.shift = shift;
  } else {
    d.kind = family == Family::Dihedral ? Kind::Dihedral : Kind::Dicyclic;
  }
  return d;
}

namespace {

// Maps model generators onto the given parent elements and checks that the
// induced map is an injective homomorphism onto the subgroup.
std::optional<SubgroupModel> try_model(const Subgroup& h, GroupPtr model, const std::vector<int>& images) {
  const auto& g = *h.parent();
  const auto& m = *model;
  if (m.order() != h.order()) return std::nullopt;
  std::vector<int> to_parent(m.order(), -1);
  to_parent[m.identity()] = g.identity();
  std::vector<int> queue{m.identity()};
  const auto& gens = m.generators();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = m.mul(x, gens[k]);
      if (to_parent[y] < 0) {
        to_parent[y] = g.mul(to_parent[x], images[k]);
        queue.push_back(y);
      }
    }
  }
  std::vector<int> from_parent(g.order(), -1);
  for (int x = 0; x < m.order(); ++x) {
    const int p = to_parent[x];
    if (p < 0 || !h.contains(p) || from_parent[p] >= 0) return std::nullopt;
    from_parent[p] = x;
  }
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y)
      if (to_parent[m.mul(x, y)] != g.mul(to_parent[x], to_parent[y])) return std::nullopt;
  return SubgroupModel{h, std::move(model), std::move(to_parent), std::move(from_parent)};
}

}  // namespace

SubgroupModel realize(const Subgroup& subgroup) {
  const auto& g = *subgroup.parent();
  const int h = subgroup.order();
  const auto& members = subgroup.members();

  for (int x : members) {
    if (g.element_order(x) == h) {
      auto model = FiniteGroup::cyclic(h);
      if (auto found = try_model(subgroup, model, {x})) return *found;
    }
  }

  // Non-cyclic: look for a rotation r of order h/2 and an element s outside
  // <r> with s r s^-1 = r^-1 and s^2 = 1 (dihedral) or s^2 = r^(h/4) (dicyclic).
  if (h % 2 == 0) {
    const int half = h / 2;
    for (int r : members) {
      if (g.element_order(r) != half) continue;
      const auto inner = generated_subgroup(subgroup.parent(), {r});
      for (int s : members) {
        if (inner.contains(s) || g.conjugate(s, r) != g.inv(r)) continue;
        const int sq = g.mul(s, s);
        if (sq == g.identity()) {
          if (auto found = try_model(subgroup, FiniteGroup::dihedral(half), {half > 1 ? r : 0, s})) {
            return *found;
          }
        } else if (h % 4 == 0 && sq == g.power(r, h / 4)) {
          if (auto found = try_model(subgroup, FiniteGroup::dicyclic(h / 4), {r, s})) return *found;
        }
      }
    }
  }
  throw UnsupportedError("subgroup " + subgroup.to_string() + " of " + g.name() +
                         " is not cyclic, dihedral or dicyclic");
}

}  // namespace sgp
