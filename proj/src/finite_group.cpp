#include "reeb_orbit/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace reeb_orbit {

namespace {

bool set_contains(const ElemSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

ElemSet sorted_unique(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

void FiniteGroup::finish(std::string name) {
  name_ = std::move(name);
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw InvariantError("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw InvariantError("multiplication table is not square: " + name_);
    for (int v : row)
      if (v < 0 || v >= n)
        throw InvariantError("multiplication table entry out of range: " + name_);
  }

  e_ = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table_[c][x] == x && table_[x][c] == x;
    if (ok) {
      e_ = c;
      break;
    }
  }
  if (e_ < 0) throw InvariantError("no identity element: " + name_);

  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table_[x][y] == e_ && table_[y][x] == e_) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw InvariantError("element without inverse: " + name_);
  }

  // Light's associativity test. Checking (x*s)*y == x*(s*y) for s in a
  // generating set suffices: the elements s for which that holds for all
  // x, y are closed under multiplication.
  std::vector<char> in(n, 0);
  in[e_] = 1;
  int covered = 1;
  std::vector<int> gens;
  for (int x = 0; x < n && covered < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    std::vector<int> queue{x};
    in[x] = 1;
    ++covered;
    // right-multiplication reach of the found elements by the new one and
    // vice versa; repeated until stable this is the generated subgroup
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int z = queue[qi];
      for (int w = 0; w < n; ++w) {
        if (!in[w]) continue;
        for (int p : {table_[z][w], table_[w][z]}) {
          if (!in[p]) {
            in[p] = 1;
            ++covered;
            queue.push_back(p);
          }
        }
      }
    }
  }
  for (int s : gens)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (table_[table_[x][s]][y] != table_[x][table_[s][y]])
          throw InvariantError("multiplication is not associative: " + name_);
}

FiniteGroup FiniteGroup::from_table(std::string name,
                                    std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.table_ = std::move(table);
  g.finish(std::move(name));
  return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw InvariantError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table("C" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(std::string name, int degree,
                                           std::vector<std::vector<int>> gens) {
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw InvariantError("permutation degree mismatch: " + name);
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw InvariantError("not a permutation: " + name);
      seen[v] = 1;
    }
  }
  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = a[b[i]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& g : gens) {
      auto p = compose(elems[qi], g);
      if (index.emplace(p, static_cast<int>(elems.size())).second)
        elems.push_back(std::move(p));
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return from_table(std::move(name), std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
  return from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup FiniteGroup::alternating4() {
  return from_permutations("A4", 4, {{1, 0, 3, 2}, {1, 2, 0, 3}});
}

FiniteGroup FiniteGroup::metacyclic2(int k, int r, std::string name) {
  if (k < 2 || (r * r) % k != 1 % k)
    throw InvariantError("metacyclic parameters need r^2 = 1 mod k");
  // elements a^s b^u with id = 2s + u; b a^s = a^(r s) b
  const int n = 2 * k;
  auto idx = [k](int s, int u) { return 2 * (((s % k) + k) % k) + u; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int s1 = 0; s1 < k; ++s1)
    for (int u1 = 0; u1 < 2; ++u1)
      for (int s2 = 0; s2 < k; ++s2)
        for (int u2 = 0; u2 < 2; ++u2)
          t[idx(s1, u1)][idx(s2, u2)] =
              idx(s1 + (u1 ? r * s2 : s2), u1 ^ u2);
  return from_table(std::move(name), std::move(t));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 3) throw InvariantError("dihedral(n) needs n >= 3");
  return metacyclic2(n, n - 1, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::dicyclic(int k) {
  if (k < 2) throw InvariantError("dicyclic(k) needs k >= 2");
  // <a, b | a^(2k) = 1, b^2 = a^k, b a b^-1 = a^-1>; a^s b^u, id = 2s + u
  const int kk = 2 * k;
  const int n = 4 * k;
  auto idx = [kk](int s, int u) { return 2 * (((s % kk) + kk) % kk) + u; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int s1 = 0; s1 < kk; ++s1)
    for (int u1 = 0; u1 < 2; ++u1)
      for (int s2 = 0; s2 < kk; ++s2)
        for (int u2 = 0; u2 < 2; ++u2) {
          int s = u1 ? s1 - s2 : s1 + s2;
          int u = u1 ^ u2;
          if (u1 && u2) s += k;  // b^2 = a^k
          t[idx(s1, u1)][idx(s2, u2)] = idx(s, u);
        }
  std::string name = k == 2 ? "Q8" : k == 4 ? "Q16" : "Dic" + std::to_string(k);
  return from_table(std::move(name), std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b,
                                        std::string name) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  if (name.empty()) name = a.name() + "x" + b.name();
  return from_table(std::move(name), std::move(t));
}

int FiniteGroup::power(int a, long k) const {
  if (k < 0) return power(inv(a), -k);
  int acc = e_, base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != e_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::abelian() const {
  const int n = order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool FiniteGroup::contains_set(const ElemSet& s) const {
  return s.empty() || (s.front() >= 0 && s.back() < order());
}

ElemSet FiniteGroup::closure(ElemSet seed) const {
  seed.push_back(e_);
  seed = sorted_unique(std::move(seed));
  if (!contains_set(seed)) throw InvariantError("element id out of range");
  std::vector<char> in(order(), 0);
  std::vector<int> members;
  for (int x : seed) {
    in[x] = 1;
    members.push_back(x);
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < members.size(); ++j) {
      for (int p : {mul(members[i], members[j]), mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  return sorted_unique(std::move(members));
}

bool FiniteGroup::is_subgroup(const ElemSet& s) const {
  if (s.empty() || !contains_set(s)) return false;
  if (!set_contains(s, e_)) return false;
  for (int x : s)
    for (int y : s)
      if (!set_contains(s, mul(x, y))) return false;
  return true;
}

ElemSet FiniteGroup::conjugate_set(int g, const ElemSet& s) const {
  ElemSet r;
  r.reserve(s.size());
  for (int x : s) r.push_back(conjugate(g, x));
  return sorted_unique(std::move(r));
}

std::vector<ElemSet> FiniteGroup::all_subgroups() const {
  std::set<ElemSet> found;
  std::vector<ElemSet> queue{ElemSet{e_}};
  found.insert(queue[0]);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    ElemSet h = queue[qi];
    for (int x = 0; x < order(); ++x) {
      if (set_contains(h, x)) continue;
      ElemSet k = h;
      k.push_back(x);
      k = closure(std::move(k));
      if (found.insert(k).second) queue.push_back(std::move(k));
    }
  }
  std::vector<ElemSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ElemSet FiniteGroup::generating_set() const {
  ElemSet gens;
  ElemSet have{e_};
  for (int x = 0; x < order(); ++x) {
    if (set_contains(have, x)) continue;
    gens.push_back(x);
    ElemSet seed = have;
    seed.push_back(x);
    have = closure(std::move(seed));
    if (static_cast<int>(have.size()) == order()) break;
  }
  return gens;
}

std::vector<long> FiniteGroup::signature() const {
  const int n = order();
  std::vector<long> sig;
  sig.push_back(n);

  ElemSet center;
  for (int x = 0; x < n; ++x) {
    bool c = true;
    for (int y = 0; y < n && c; ++y) c = mul(x, y) == mul(y, x);
    if (c) center.push_back(x);
  }
  sig.push_back(static_cast<long>(center.size()));
  std::vector<long> zorders;
  for (int x : center) zorders.push_back(element_order(x));
  std::sort(zorders.begin(), zorders.end());
  sig.insert(sig.end(), zorders.begin(), zorders.end());

  std::vector<char> marked(n, 0);
  std::vector<long> class_sizes;
  for (int x = 0; x < n; ++x) {
    if (marked[x]) continue;
    long sz = 0;
    for (int g = 0; g < n; ++g) {
      int y = conjugate(g, x);
      if (!marked[y]) {
        marked[y] = 1;
        ++sz;
      }
    }
    class_sizes.push_back(sz);
  }
  std::sort(class_sizes.begin(), class_sizes.end());
  sig.push_back(static_cast<long>(class_sizes.size()));
  sig.insert(sig.end(), class_sizes.begin(), class_sizes.end());

  ElemSet commutators;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      commutators.push_back(mul(inv(mul(y, x)), mul(x, y)));
  sig.push_back(static_cast<long>(closure(std::move(commutators)).size()));

  std::vector<long> orders(n);
  for (int x = 0; x < n; ++x) orders[x] = element_order(x);
  std::sort(orders.begin(), orders.end());
  sig.insert(sig.end(), orders.begin(), orders.end());

  // shape of the subgroup lattice; order-16 pairs like the quaternion double
  // and the semidirect square agree on everything above but differ here
  std::vector<long> shapes;
  for (const ElemSet& h : all_subgroups()) {
    bool cyclic = false, ab = true, normal = true;
    for (int x : h) {
      if (element_order(x) == static_cast<int>(h.size())) cyclic = true;
      for (int y : h)
        if (mul(x, y) != mul(y, x)) ab = false;
    }
    for (int g = 0; g < n && normal; ++g)
      for (int x : h)
        if (!std::binary_search(h.begin(), h.end(), conjugate(g, x))) {
          normal = false;
          break;
        }
    shapes.push_back(static_cast<long>(h.size()) * 8 + (cyclic ? 4 : 0) +
                     (ab ? 2 : 0) + (normal ? 1 : 0));
  }
  std::sort(shapes.begin(), shapes.end());
  sig.push_back(static_cast<long>(shapes.size()));
  sig.insert(sig.end(), shapes.begin(), shapes.end());
  return sig;
}

namespace {

void require_subgroups(const FiniteGroup& g, const ElemSet& whole,
                       const std::vector<ElemSet>& parts) {
  if (!g.is_subgroup(whole))
    throw NotASubgroupError("ambient set is not a subgroup of " + g.name());
  for (const auto& p : parts) {
    if (!g.is_subgroup(p))
      throw NotASubgroupError("factor is not a subgroup of " + g.name());
    for (int x : p)
      if (!set_contains(whole, x))
        throw NotASubgroupError("factor is not inside the ambient subgroup");
  }
}

}  // namespace

bool check_direct_product_within(const FiniteGroup& g, const ElemSet& whole,
                                 const std::vector<ElemSet>& parts) {
  require_subgroups(g, whole, parts);
  // pairwise trivial intersection
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j) {
      ElemSet meet;
      std::set_intersection(parts[i].begin(), parts[i].end(),
                            parts[j].begin(), parts[j].end(),
                            std::back_inserter(meet));
      if (meet != ElemSet{g.identity()}) return false;
    }
  // elementwise commutation across distinct factors
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j)
      for (int x : parts[i])
        for (int y : parts[j])
          if (g.mul(x, y) != g.mul(y, x)) return false;
  // the factors generate the ambient subgroup
  ElemSet all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  if (g.closure(std::move(all)) != whole) return false;
  // order product; with the above this forces unique factorizations
  unsigned long long prod = 1;
  for (const auto& p : parts) {
    prod *= p.size();
    if (prod > whole.size()) return false;
  }
  return prod == whole.size();
}

bool check_direct_product(const FiniteGroup& g, const std::vector<ElemSet>& parts) {
  ElemSet whole(g.order());
  for (int i = 0; i < g.order(); ++i) whole[i] = i;
  return check_direct_product_within(g, whole, parts);
}

bool product_map_is_isomorphism(const FiniteGroup& g, const ElemSet& whole,
                                const std::vector<ElemSet>& parts) {
  require_subgroups(g, whole, parts);
  unsigned long long dom = 1;
  for (const auto& p : parts) {
    dom *= p.size();
    if (dom > whole.size()) return false;  // cannot be injective
  }
  if (dom != whole.size()) return false;

  const size_t k = parts.size();
  auto mu = [&](const std::vector<size_t>& idx) {
    int acc = g.identity();
    for (size_t i = 0; i < k; ++i) acc = g.mul(acc, parts[i][idx[i]]);
    return acc;
  };
  std::vector<std::vector<size_t>> tuples;
  std::vector<size_t> cur(k, 0);
  for (;;) {
    tuples.push_back(cur);
    size_t i = 0;
    while (i < k && ++cur[i] == parts[i].size()) cur[i++] = 0;
    if (i == k) break;
  }
  if (k == 0) return whole == ElemSet{g.identity()};

  // bijectivity onto the ambient subgroup
  ElemSet image;
  image.reserve(tuples.size());
  for (const auto& t : tuples) image.push_back(mu(t));
  image = sorted_unique(std::move(image));
  if (image != whole) return false;

  // homomorphism for the componentwise product
  for (const auto& s : tuples)
    for (const auto& t : tuples) {
      std::vector<size_t> st(k);
      for (size_t i = 0; i < k; ++i) {
        int p = g.mul(parts[i][s[i]], parts[i][t[i]]);
        auto it = std::lower_bound(parts[i].begin(), parts[i].end(), p);
        if (it == parts[i].end() || *it != p) return false;  // not closed
        st[i] = static_cast<size_t>(it - parts[i].begin());
      }
      if (mu(st) != g.mul(mu(s), mu(t))) return false;
    }
  return true;
}

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.signature() != b.signature()) return false;
  const int n = a.order();

  ElemSet gens = b.generating_set();
  if (gens.empty()) return true;  // both trivial

  // BFS expression of every element of b as earlier-element * generator
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<int> bfs{b.identity()};
  std::vector<char> seen(n, 0);
  seen[b.identity()] = 1;
  for (size_t qi = 0; qi < bfs.size(); ++qi)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int z = b.mul(bfs[qi], gens[gi]);
      if (!seen[z]) {
        seen[z] = 1;
        parent[z] = bfs[qi];
        via[z] = static_cast<int>(gi);
        bfs.push_back(z);
      }
    }

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    int ord = b.element_order(gens[gi]);
    for (int x = 0; x < n; ++x)
      if (a.element_order(x) == ord) candidates[gi].push_back(x);
  }

  std::vector<int> img(gens.size(), -1);
  std::vector<int> phi(n, -1);
  auto attempt = [&]() {
    std::fill(phi.begin(), phi.end(), -1);
    phi[b.identity()] = a.identity();
    std::vector<char> used(n, 0);
    used[a.identity()] = 1;
    for (size_t qi = 1; qi < bfs.size(); ++qi) {
      int z = bfs[qi];
      int w = a.mul(phi[parent[z]], img[via[z]]);
      if (used[w]) return false;  // not injective
      used[w] = 1;
      phi[z] = w;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (phi[b.mul(x, y)] != a.mul(phi[x], phi[y])) return false;
    return true;
  };

  size_t depth = 0;
  std::vector<size_t> pick(gens.size(), 0);
  for (;;) {
    if (pick[depth] == candidates[depth].size()) {
      if (depth == 0) return false;
      pick[depth] = 0;
      --depth;
      ++pick[depth];
      continue;
    }
    img[depth] = candidates[depth][pick[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    if (attempt()) return true;
    ++pick[depth];
  }
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElemSet& h,
                              std::string name) {
  if (!g.is_subgroup(h))
    throw NotASubgroupError("cannot relabel a non-subgroup: " + name);
  const int n = static_cast<int>(h.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = g.mul(h[i], h[j]);
      t[i][j] = static_cast<int>(
          std::lower_bound(h.begin(), h.end(), p) - h.begin());
    }
  return FiniteGroup::from_table(std::move(name), std::move(t));
}

const std::vector<FiniteGroup>& group_corpus_up_to_16() {
  static const std::vector<FiniteGroup> corpus = [] {
    using G = FiniteGroup;
    std::vector<G> v;
    for (int n = 1; n <= 16; ++n) v.push_back(G::cyclic(n));
    const G c2 = G::cyclic(2), c4 = G::cyclic(4);
    v.push_back(G::direct_product(c2, c2));                                // 4
    v.push_back(G::symmetric3());                                          // 6
    v.push_back(G::direct_product(c4, c2));                                // 8
    v.push_back(G::direct_product(G::direct_product(c2, c2), c2, "C2xC2xC2"));
    v.push_back(G::dihedral(4));
    v.push_back(G::dicyclic(2));                                           // Q8
    v.push_back(G::direct_product(G::cyclic(3), G::cyclic(3)));            // 9
    v.push_back(G::dihedral(5));                                           // 10
    v.push_back(G::direct_product(G::cyclic(6), c2));                      // 12
    v.push_back(G::dihedral(6));
    v.push_back(G::alternating4());
    v.push_back(G::dicyclic(3));
    v.push_back(G::dihedral(7));                                           // 14
    v.push_back(G::direct_product(G::cyclic(8), c2));                      // 16
    v.push_back(G::direct_product(c4, c4));
    v.push_back(G::direct_product(G::direct_product(c4, c2), c2, "C4xC2xC2"));
    v.push_back(G::direct_product(G::direct_product(c2, c2),
                                  G::direct_product(c2, c2), "C2^4"));
    v.push_back(G::dihedral(8));
    v.push_back(G::dicyclic(4));                                           // Q16
    v.push_back(G::metacyclic2(8, 3, "SD16"));
    v.push_back(G::metacyclic2(8, 5, "M16"));
    v.push_back(G::direct_product(G::dihedral(4), c2));
    v.push_back(G::direct_product(G::dicyclic(2), c2));

    // C4 semidirect C4: b a b^-1 = a^-1; elements a^s b^t, id = 4s + t
    {
      auto idx = [](int s, int t) {
        return 4 * (((s % 4) + 4) % 4) + (((t % 4) + 4) % 4);
      };
      std::vector<std::vector<int>> t(16, std::vector<int>(16));
      for (int s1 = 0; s1 < 4; ++s1)
        for (int t1 = 0; t1 < 4; ++t1)
          for (int s2 = 0; s2 < 4; ++s2)
            for (int t2 = 0; t2 < 4; ++t2)
              t[idx(s1, t1)][idx(s2, t2)] =
                  idx(s1 + ((t1 % 2) ? -s2 : s2), t1 + t2);
      v.push_back(G::from_table("C4:C4", std::move(t)));
    }

    // (C2 x C2) semidirect C4, the generator of C4 swapping the two bits;
    // elements (v, t) with v a bit pair, id = 4v + t
    {
      auto swap_bits = [](int v) { return ((v & 1) << 1) | ((v >> 1) & 1); };
      auto idx = [](int v, int t) { return 4 * v + (((t % 4) + 4) % 4); };
      std::vector<std::vector<int>> t(16, std::vector<int>(16));
      for (int v1 = 0; v1 < 4; ++v1)
        for (int t1 = 0; t1 < 4; ++t1)
          for (int v2 = 0; v2 < 4; ++v2)
            for (int t2 = 0; t2 < 4; ++t2)
              t[idx(v1, t1)][idx(v2, t2)] =
                  idx(v1 ^ ((t1 % 2) ? swap_bits(v2) : v2), t1 + t2);
      v.push_back(G::from_table("C2^2:C4", std::move(t)));
    }

    // central product D4 o C4 (the Pauli group): pairs (d, c^t) with the
    // central c^2 identified with the rotation r^2; normal form t in {0, 1}
    {
      const G d4 = G::dihedral(4);
      const int r2 = d4.mul(2, 2);  // id of a^2 under the 2s + u layout
      auto idx = [](int d, int t) { return 2 * d + t; };
      std::vector<std::vector<int>> t(16, std::vector<int>(16));
      for (int d1 = 0; d1 < 8; ++d1)
        for (int t1 = 0; t1 < 2; ++t1)
          for (int d2 = 0; d2 < 8; ++d2)
            for (int t2 = 0; t2 < 2; ++t2) {
              int d = d4.mul(d1, d2), tt = t1 + t2;
              if (tt == 2) {
                d = d4.mul(d, r2);
                tt = 0;
              }
              t[idx(d1, t1)][idx(d2, t2)] = idx(d, tt);
            }
      v.push_back(G::from_table("D4oC4", std::move(t)));
    }
    return v;
  }();
  return corpus;
}

}  // namespace reeb_orbit
