#pragma once

#include <string>
#include <vector>

#include "reeb_orbit/errors.hpp"

namespace reeb_orbit {

// Sorted set of element ids.
using ElemSet = std::vector<int>;

// Finite group given by an explicit multiplication table. Construction
// verifies the axioms: a two-sided identity, inverses, and associativity via
// Light's test over a greedily extracted generating set (a complete
// criterion, quadratic in the order instead of cubic; the largest oracle
// groups have ~2000 elements).
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::string name,
                                std::vector<std::vector<int>> table);
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  static FiniteGroup alternating4();
  static FiniteGroup dihedral(int n);  // order 2n, n >= 3
  static FiniteGroup dicyclic(int k);  // order 4k; k = 2 gives Q8, k = 4 Q16
  // <a, b | a^k = b^2 = 1, b a b^-1 = a^r>; dihedral r = k-1, semidihedral
  // and modular families for other r with r^2 = 1 mod k.
  static FiniteGroup metacyclic2(int k, int r, std::string name);
  static FiniteGroup from_permutations(std::string name, int degree,
                                       std::vector<std::vector<int>> gens);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    std::string name = "");

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return e_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int power(int a, long k) const;
  int conjugate(int g, int x) const { return mul(mul(inv(g), x), g); }
  int element_order(int a) const;
  bool abelian() const;

  bool contains_set(const ElemSet& s) const;
  bool is_subgroup(const ElemSet& s) const;
  ElemSet closure(ElemSet seed) const;
  ElemSet conjugate_set(int g, const ElemSet& s) const;  // g^-1 S g
  // Every subgroup, deterministically ordered by (size, elements).
  std::vector<ElemSet> all_subgroups() const;
  ElemSet generating_set() const;

  // Isomorphism-invariant summary: order, center order statistics, conjugacy
  // class sizes, derived subgroup order, element order multiset and the
  // (order, cyclic, abelian, normal) shape of every subgroup. Equal for
  // isomorphic groups; a cheap non-isomorphism certificate.
  std::vector<long> signature() const;

 private:
  FiniteGroup() = default;
  void finish(std::string name);  // identity/inverses/Light's test

  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int e_ = 0;
};

// Internal direct product test: every part is a subgroup (else
// NotASubgroupError), parts pairwise intersect trivially, commute
// elementwise, generate the whole, and the order product matches.
bool check_direct_product(const FiniteGroup& g, const std::vector<ElemSet>& parts);
bool check_direct_product_within(const FiniteGroup& g, const ElemSet& whole,
                                 const std::vector<ElemSet>& parts);

// Exhaustive oracle: the multiplication map part_1 x ... x part_k -> whole,
// (x_1,...,x_k) -> x_1 ... x_k, is a bijective homomorphism. Equivalent to
// the internal direct product property; cross-validates the checker above.
bool product_map_is_isomorphism(const FiniteGroup& g, const ElemSet& whole,
                                const std::vector<ElemSet>& parts);

// Abstract isomorphism search, backtracking over generator images.
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// The subgroup relabelled as its own group (ElemSet order).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElemSet& h,
                              std::string name);

// All 42 isomorphism types of groups of order 1..16, as tables.
const std::vector<FiniteGroup>& group_corpus_up_to_16();

}  // namespace reeb_orbit
