#pragma once

#include <string>
#include <vector>

#include "reeb_orbit/finite_group.hpp"

namespace reeb_orbit {

// Element of base^n x| Z: one base element per block and an integer shift.
struct WreathElement {
  std::vector<int> block;
  long shift = 0;
  bool operator==(const WreathElement&) const = default;
};

// The extension base^n x| Z in which conjugation by g = (e,...,e; 1) carries
// the block-i copy of the base onto the block-(i+1) copy. Multiplication:
//   (b; k) (b'; k') = (b . rot_k(b'); k + k'),  rot_k(b')_j = b'_(j+k mod n).
class WreathZ {
 public:
  WreathZ(const FiniteGroup* base, int n);

  const FiniteGroup& base() const { return *base_; }
  int blocks() const { return n_; }

  WreathElement identity() const;
  WreathElement g() const;  // (e,...,e; 1)
  WreathElement from_block(int i, int x) const;
  WreathElement mul(const WreathElement& a, const WreathElement& b) const;
  WreathElement inv(const WreathElement& a) const;
  WreathElement pow(WreathElement a, long k) const;
  WreathElement conj(const WreathElement& by, const WreathElement& x) const;

 private:
  void check(const WreathElement& x) const;
  const FiniteGroup* base_;
  int n_;
};

// Shift coordinate; as a map to Z this is a homomorphism with kernel base^n.
inline long phi_projection(const WreathElement& x) { return x.shift; }

// base^n x| Z_(n*m): the finite quotient with the shift reduced mod n*m,
// well defined because n divides n*m. Materialized as an explicit table
// group for the exhaustive oracles.
class WreathQuotient {
 public:
  WreathQuotient(const FiniteGroup* base, int n, int m);

  const FiniteGroup& base() const { return *base_; }
  int blocks() const { return n_; }
  int modulus() const { return n_ * m_; }
  int order() const;

  int encode(const WreathElement& x) const;
  WreathElement decode(int id) const;
  FiniteGroup as_finite_group(std::string name) const;

  int g_id() const;
  ElemSet block_subgroup(int i) const;      // encoded block-i copy of the base
  std::vector<int> phi_table() const;       // shift of every encoded element

 private:
  const FiniteGroup* base_;
  int n_, m_;
  WreathZ w_;
};

// A finite ambient group with a shift homomorphism phi onto Z_modulus, one
// element g with phi(g) = 1, and an embedded block-0 subgroup: the data the
// reassembly map xi consumes. l0[x] is the ambient image of base element x.
struct XiModel {
  const FiniteGroup* ambient = nullptr;
  std::vector<int> phi;
  int modulus = 0;
  int g = 0;
  std::vector<int> l0;
  int n = 0;
};

// xi(b_0,...,b_(n-1); k) = b_0 (g^-1 b_1 g) (g^-2 b_2 g^2) ... g^k evaluated
// in the ambient group, with b_i read through the block-0 embedding.
int xi_map(const XiModel& model, const WreathElement& x);

// Model of the quotient wreath product over itself: ambient is the encoded
// table group, phi the shift, l0 the block-0 embedding. xi is then the
// identity on codes, which the tests verify.
XiModel self_model(const WreathQuotient& q, const FiniteGroup* ambient);

struct LemmaReport {
  bool phi_ok = false;          // phi is a homomorphism onto Z_modulus, phi(g) = 1
  bool power_central = false;   // g^n commutes with everything in ker phi
  bool kernel_splits = false;   // ker phi = L_0 x g^-1 L_0 g x ... (n factors)
  std::string detail;
  bool ok() const { return phi_ok && power_central && kernel_splits; }
};

// Exhaustive check of the splitting hypotheses in a finite ambient group:
// when they hold, the subgroup generated by ker phi and g is the wreath
// extension of L_0 by the shift.
LemmaReport verify_lemma_hypotheses(const FiniteGroup& ambient,
                                    const std::vector<int>& phi, int modulus,
                                    const ElemSet& l0, int g, int n);

}  // namespace reeb_orbit
