#pragma once

#include <string>
#include <vector>

namespace reeb_orbit {

// Symbolic group description: the trivial group, a free abelian factor Z^r,
// a named atom (an opaque group identified by name plus a descriptor
// string), a finite direct product, or a wreath-type extension
// base^n x| Z where Z cyclically permutes the n base blocks.
struct GroupExpr {
  enum class Kind { Trivial, Zfree, Atom, Product, WreathZ };

  Kind kind = Kind::Trivial;
  int rank = 0;                    // Zfree
  std::string name;                // Atom
  std::string descriptor;          // Atom; equality requires both fields
  std::vector<GroupExpr> factors;  // Product; WreathZ keeps its base here
  int blocks = 0;                  // WreathZ

  static GroupExpr trivial();
  static GroupExpr zfree(int rank);  // rank >= 0; rank 0 canonicalizes away
  static GroupExpr atom(std::string name, std::string descriptor);
  static GroupExpr product(std::vector<GroupExpr> factors);
  static GroupExpr wreath_z(GroupExpr base, int blocks);  // blocks >= 1

  const GroupExpr& base() const { return factors.at(0); }
  bool operator==(const GroupExpr&) const = default;
};

// Canonical form: products are flattened, trivial factors dropped, Zfree
// factors merged into a single trailing one, remaining factors sorted by a
// total order (atoms, then wreaths, then the Zfree block); Zfree(0) becomes
// Trivial, WreathZ(Trivial, n) becomes Zfree(1) and WreathZ(G, 1) becomes
// Product([G, Zfree(1)]). Idempotent.
GroupExpr canonicalize(const GroupExpr& e);

// Abelianized expression, canonical. Atoms map to atoms named "ab(...)";
// ab(base^n x| Z) = ab(base) x Z because the permutation action identifies
// the n blocks.
GroupExpr abelianization(const GroupExpr& e);

// Deterministic text: "1", "Z", "Z^2", atom names, " x " products, and
// "base wr_n Z" with compound bases parenthesized.
std::string render(const GroupExpr& e);

}  // namespace reeb_orbit
