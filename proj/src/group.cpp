#include "grc/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace grc {

namespace {

constexpr std::size_t kCayleyLimit = 2048;

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Closure of `start` under right multiplication by `gens`.
std::vector<Index> closure(const Group& g, std::vector<Index> start, std::span<const Index> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Index> out;
  std::deque<Index> queue;
  auto push = [&](Index x) {
    if (!seen[x]) {
      seen[x] = true;
      out.push_back(x);
      queue.push_back(x);
    }
  };
  push(0);
  for (Index x : start) push(x);
  while (!queue.empty()) {
    const Index x = queue.front();
    queue.pop_front();
    for (Index s : gens) push(g.mult(x, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm perm_identity(std::size_t degree) {
  Perm r(degree);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t size_cap() {
  if (const char* env = std::getenv("GRC_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

GroupPtr Group::from_generators(std::string name, std::vector<Perm> generators,
                                std::vector<std::string> generator_names, std::size_t cap) {
  if (generator_names.size() != generators.size()) {
    throw std::invalid_argument("one name per generator required");
  }
  std::size_t degree = 1;
  for (const auto& p : generators) degree = std::max(degree, p.size());
  for (auto& p : generators) {
    if (p.size() != degree) {
      // pad with fixed points
      for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<std::uint32_t>(i));
    }
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw GroupError("generator is not a permutation");
      hit[v] = true;
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->degree_ = degree;
  g->generator_names_ = std::move(generator_names);

  const std::size_t ngens = generators.size();
  std::vector<std::vector<Index>> right;  // right[x][i] = x * gen_i
  auto add = [&](Perm p, Index parent, std::uint32_t letter) -> Index {
    auto [it, inserted] = g->lookup_.try_emplace(p, static_cast<Index>(g->perms_.size()));
    if (inserted) {
      if (g->perms_.size() >= cap) {
        throw GroupError("group " + g->name_ + " exceeds the size cap of " + std::to_string(cap));
      }
      g->perms_.push_back(std::move(p));
      g->word_parent_.push_back(parent);
      g->word_letter_.push_back(letter);
      right.emplace_back(ngens, 0);
    }
    return it->second;
  };
  add(perm_identity(degree), 0, 0);
  for (std::size_t x = 0; x < g->perms_.size(); ++x) {
    for (std::size_t i = 0; i < ngens; ++i) {
      const Index y = add(perm_compose(g->perms_[x], generators[i]), static_cast<Index>(x),
                          static_cast<std::uint32_t>(i));
      right[x][i] = y;
    }
  }
  for (const auto& p : generators) g->generators_.push_back(g->lookup_.at(p));

  const std::size_t n = g->perms_.size();
  g->inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) g->inverse_[x] = g->lookup_.at(perm_inverse(g->perms_[x]));

  if (n <= kCayleyLimit) {
    g->table_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      Index* row = &g->table_[x * n];
      row[0] = static_cast<Index>(x);
      for (std::size_t h = 1; h < n; ++h) {
        row[h] = right[row[g->word_parent_[h]]][g->word_letter_[h]];
      }
    }
  }

  g->orders_.resize(n);
  long exp = 1;
  for (std::size_t x = 0; x < n; ++x) {
    Index k = 1;
    Index y = static_cast<Index>(x);
    while (y != 0) {
      y = g->mult(y, static_cast<Index>(x));
      ++k;
    }
    g->orders_[x] = k;
    exp = std::lcm(exp, static_cast<long>(k));
  }
  g->exponent_ = exp;

  g->abelian_ = true;
  for (Index a : g->generators_) {
    for (Index b : g->generators_) {
      if (g->mult(a, b) != g->mult(b, a)) g->abelian_ = false;
    }
  }
  g->build_classes();
  return g;
}

Index Group::mult(Index g, Index h) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(g) * perms_.size() + h];
  return lookup_.at(perm_compose(perms_[g], perms_[h]));
}

Index Group::pow(Index g, long k) const {
  const long o = orders_[g];
  k %= o;
  if (k < 0) k += o;
  Index r = 0;
  for (long i = 0; i < k; ++i) r = mult(r, g);
  return r;
}

std::optional<Index> Group::index_of(const Perm& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void Group::build_classes() {
  const std::size_t n = order();
  std::vector<std::int64_t> raw(n, -1);
  std::vector<std::vector<Index>> orbits;
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x] >= 0) continue;
    const auto id = static_cast<std::int64_t>(orbits.size());
    std::vector<Index> orbit{static_cast<Index>(x)};
    raw[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Index s : generators_) {
        const Index y = conj(orbit[i], s);
        if (raw[y] < 0) {
          raw[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::size_t> order_idx(orbits.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });
  classes_ = ConjClasses{};
  classes_.class_of.assign(n, 0);
  for (std::size_t c = 0; c < order_idx.size(); ++c) {
    auto& orbit = orbits[order_idx[c]];
    for (Index x : orbit) classes_.class_of[x] = static_cast<Index>(c);
    classes_.reps.push_back(orbit.front());
    classes_.sizes.push_back(orbit.size());
    classes_.members.push_back(std::move(orbit));
  }
  for (std::size_t c = 0; c < classes_.count(); ++c) {
    classes_.inverse_class.push_back(classes_.class_of[inverse_[classes_.reps[c]]]);
  }
}

std::string Group::word(Index g) const {
  if (g == 0) return "1";
  std::vector<std::uint32_t> letters;
  for (Index x = g; x != 0; x = word_parent_[x]) letters.push_back(word_letter_[x]);
  std::reverse(letters.begin(), letters.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (i > 0) os << '*';
    os << generator_names_[letters[i]];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

Index Group::parse_element(std::string_view text) const {
  const std::string s = trim(text);
  if (s.empty()) throw GroupError("empty element literal");
  Index result = 0;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    std::string factor = trim(std::string_view(s).substr(pos, end - pos));
    if (factor.empty()) throw GroupError("bad element literal '" + s + "'");
    long exp = 1;
    const auto caret = factor.find('^');
    std::string base = factor;
    if (caret != std::string::npos) {
      base = trim(factor.substr(0, caret));
      const std::string e = trim(factor.substr(caret + 1));
      try {
        std::size_t used = 0;
        exp = std::stol(e, &used);
        if (used != e.size()) throw GroupError("bad exponent in '" + factor + "'");
      } catch (const std::logic_error&) {
        throw GroupError("bad exponent in '" + factor + "'");
      }
    }
    Index x = 0;
    bool found = false;
    if (base == "1") {
      found = true;
    }
    for (std::size_t i = 0; !found && i < generator_names_.size(); ++i) {
      if (generator_names_[i] == base) {
        x = generators_[i];
        found = true;
      }
    }
    if (!found && base.size() > 1 && base[0] == 'g' &&
        std::all_of(base.begin() + 1, base.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const unsigned long idx = std::stoul(base.substr(1));
      if (idx >= order()) throw GroupError("element index out of range: " + base);
      x = static_cast<Index>(idx);
      found = true;
    }
    if (!found || !std::all_of(base.begin(), base.end(), is_identifier_char)) {
      throw GroupError("unknown generator '" + base + "' in group " + name_);
    }
    result = mult(result, pow(x, exp));
    pos = end + 1;
  }
  return result;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const Group& g = *parent_;
  mask_.assign(g.order(), false);
  for (Index x : members_) {
    if (x >= g.order()) throw GroupError("subgroup member out of range");
    mask_[x] = true;
  }
  if (members_.empty() || members_.front() != 0) throw GroupError("subgroup must contain the identity");
  if (g.order() % members_.size() != 0) throw GroupError("subgroup order does not divide |G|");
  for (Index a : members_) {
    if (!mask_[g.inv(a)]) throw GroupError("subset is not closed under inverses");
    for (Index b : members_) {
      if (!mask_[g.mult(a, b)]) throw GroupError("subset is not closed under multiplication");
    }
  }
  normal_ = true;
  for (Index s : g.generators()) {
    for (Index a : members_) {
      if (!mask_[g.conj(a, s)]) {
        normal_ = false;
        break;
      }
    }
    if (!normal_) break;
  }
}

std::size_t Subgroup::index() const { return parent_->order() / members_.size(); }

EmbeddedSubgroup embed(const Subgroup& u) {
  const Group& g = *u.parent();
  // greedy generating set in index order
  std::vector<Index> gens;
  std::vector<bool> covered(g.order(), false);
  covered[0] = true;
  for (Index m : u.members()) {
    if (covered[m]) continue;
    gens.push_back(m);
    for (Index y : closure(g, {}, gens)) covered[y] = true;
  }
  std::vector<Perm> perms;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    perms.push_back(g.perm(gens[i]));
    names.push_back("h" + std::to_string(i + 1));
  }
  if (perms.empty()) {
    perms.push_back(perm_identity(g.degree()));
    names.emplace_back("h1");
  }
  std::string name = g.name() + "_sub" + std::to_string(u.order());
  GroupPtr sub = Group::from_generators(name, std::move(perms), std::move(names),
                                        std::max(size_cap(), g.order()));
  EmbeddedSubgroup out{u, sub, {}, std::vector<std::int64_t>(g.order(), -1)};
  out.to_parent.resize(sub->order());
  for (Index x = 0; x < sub->order(); ++x) {
    const Index p = *g.index_of(sub->perm(x));
    out.to_parent[x] = p;
    out.from_parent[p] = x;
  }
  return out;
}

const ConjClasses& conjugacy_classes(const Group& g) { return g.classes(); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Index> all(g->order());
  std::iota(all.begin(), all.end(), 0u);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Index> gens) {
  return Subgroup(g, closure(*g, {}, gens));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Index> gens) {
  const auto& cl = g->classes();
  std::vector<bool> used(cl.count(), false);
  std::vector<Index> all;
  for (Index x : gens) {
    const Index c = cl.class_of[x];
    if (used[c]) continue;
    used[c] = true;
    all.insert(all.end(), cl.members[c].begin(), cl.members[c].end());
  }
  return subgroup_generated(g, all);
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::vector<Index> comms;
  const auto gens = g->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g->commutator(gens[i], gens[j]));
  }
  return normal_closure(g, comms);
}

Subgroup centre(const GroupPtr& g) {
  std::vector<Index> z;
  for (Index x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Index s : g->generators()) {
      if (g->mult(x, s) != g->mult(s, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return Subgroup(g, std::move(z));
}

Index element_order(const Group& g, Index x) { return g.element_order(x); }

long exponent(const Group& g) { return g.exponent(); }

std::vector<Index> left_coset_reps(const Subgroup& u) {
  const Group& g = *u.parent();
  std::vector<bool> done(g.order(), false);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (Index m : u.members()) done[g.mult(x, m)] = true;
  }
  return reps;
}

Quotient quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) throw GroupError("subgroup belongs to a different group");
  if (!n.is_normal()) throw GroupError("quotient requires a normal subgroup");
  const std::vector<Index> reps = left_coset_reps(n);
  std::vector<Index> coset(g->order());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (Index m : n.members()) coset[g->mult(reps[c], m)] = static_cast<Index>(c);
  }
  std::vector<Perm> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g->generators().size(); ++i) {
    const Index s = g->generators()[i];
    Perm p(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) p[c] = coset[g->mult(s, reps[c])];
    gens.push_back(std::move(p));
    names.push_back(g->generator_names()[i]);
  }
  if (gens.empty()) {
    gens.push_back(perm_identity(1));
    names.emplace_back("e");
  }
  GroupPtr q = Group::from_generators(g->name() + "/N" + std::to_string(n.order()), gens, names,
                                      std::max(size_cap(), g->order()));
  Quotient out{q, std::vector<Index>(g->order(), 0)};
  // The coset action of x is determined by its coset; read it off directly.
  for (Index x = 0; x < g->order(); ++x) {
    Perm p(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) p[c] = coset[g->mult(x, reps[c])];
    out.projection[x] = *q->index_of(p);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> found;
  auto consider = [&](const Subgroup& s) {
    std::vector<Index> m(s.members().begin(), s.members().end());
    if (seen.insert(m).second) found.push_back(std::move(m));
  };
  consider(trivial_subgroup(g));
  const auto& cl = g->classes();
  for (std::size_t c = 1; c < cl.count(); ++c) {
    const Index r = cl.reps[c];
    consider(normal_closure(g, std::span<const Index>(&r, 1)));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Index> u = found[i];
      u.insert(u.end(), found[j].begin(), found[j].end());
      consider(subgroup_generated(g, u));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  for (auto& m : found) out.emplace_back(g, std::move(m));
  return out;
}

std::optional<std::vector<Subgroup>> all_subgroups(const GroupPtr& g, std::size_t limit) {
  // Every subgroup is a join of cyclic subgroups; extend known subgroups one
  // cyclic generator at a time.
  std::set<std::vector<Index>> seen;
  std::vector<std::pair<std::vector<Index>, std::vector<Index>>> found;  // (members, gens)
  std::vector<Index> cyclic_gens;
  auto consider = [&](std::vector<Index> gens) -> bool {
    std::vector<Index> m = closure(*g, {}, gens);
    if (seen.insert(m).second) {
      found.emplace_back(std::move(m), std::move(gens));
      return true;
    }
    return false;
  };
  consider({});
  for (Index x = 1; x < g->order(); ++x) {
    if (consider({x})) cyclic_gens.push_back(x);
    if (found.size() > limit) return std::nullopt;
  }
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (Index c : cyclic_gens) {
      if (std::binary_search(found[i].first.begin(), found[i].first.end(), c)) continue;
      std::vector<Index> gens = found[i].second;
      gens.push_back(c);
      consider(std::move(gens));
      if (found.size() > limit) return std::nullopt;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Subgroup> out;
  for (auto& f : found) out.emplace_back(g, std::move(f.first));
  return out;
}

}  // namespace grc
