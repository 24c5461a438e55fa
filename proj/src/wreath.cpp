#include "reeb_orbit/wreath.hpp"

#include <algorithm>
#include <utility>

namespace reeb_orbit {

WreathZ::WreathZ(const FiniteGroup* base, int n) : base_(base), n_(n) {
  if (!base) throw InvariantError("wreath base is null");
  if (n < 1) throw InvariantError("wreath block count must be positive");
}

void WreathZ::check(const WreathElement& x) const {
  if (static_cast<int>(x.block.size()) != n_)
    throw AlgebraMismatchError("wreath element has wrong block count");
  for (int b : x.block)
    if (b < 0 || b >= base_->order())
      throw AlgebraMismatchError("wreath block entry outside the base group");
}

WreathElement WreathZ::identity() const {
  return {std::vector<int>(n_, base_->identity()), 0};
}

WreathElement WreathZ::g() const {
  return {std::vector<int>(n_, base_->identity()), 1};
}

WreathElement WreathZ::from_block(int i, int x) const {
  if (i < 0 || i >= n_) throw AlgebraMismatchError("block index out of range");
  WreathElement e = identity();
  e.block.at(i) = x;
  check(e);
  return e;
}

WreathElement WreathZ::mul(const WreathElement& a, const WreathElement& b) const {
  check(a);
  check(b);
  WreathElement r;
  r.block.resize(n_);
  long k = ((a.shift % n_) + n_) % n_;
  for (int j = 0; j < n_; ++j)
    r.block[j] = base_->mul(a.block[j], b.block[(j + k) % n_]);
  r.shift = a.shift + b.shift;
  return r;
}

WreathElement WreathZ::inv(const WreathElement& a) const {
  check(a);
  WreathElement r;
  r.block.resize(n_);
  r.shift = -a.shift;
  long k = ((r.shift % n_) + n_) % n_;
  for (int j = 0; j < n_; ++j)
    r.block[j] = base_->inv(a.block[(j + k) % n_]);
  return r;
}

WreathElement WreathZ::pow(WreathElement a, long k) const {
  if (k < 0) return pow(inv(a), -k);
  WreathElement acc = identity();
  while (k > 0) {
    if (k & 1) acc = mul(acc, a);
    a = mul(a, a);
    k >>= 1;
  }
  return acc;
}

WreathElement WreathZ::conj(const WreathElement& by, const WreathElement& x) const {
  return mul(mul(inv(by), x), by);
}

WreathQuotient::WreathQuotient(const FiniteGroup* base, int n, int m)
    : base_(base), n_(n), m_(m), w_(base, n) {
  if (m < 1) throw InvariantError("quotient modulus factor must be positive");
}

int WreathQuotient::order() const {
  long long o = modulus();
  for (int i = 0; i < n_; ++i) {
    o *= base_->order();
    if (o > 1'000'000) throw InvariantError("quotient wreath group too large");
  }
  return static_cast<int>(o);
}

int WreathQuotient::encode(const WreathElement& x) const {
  if (static_cast<int>(x.block.size()) != n_)
    throw AlgebraMismatchError("wreath element has wrong block count");
  long long id = 0;
  for (int i = 0; i < n_; ++i) id = id * base_->order() + x.block[i];
  const int mod = modulus();
  long k = ((x.shift % mod) + mod) % mod;
  return static_cast<int>(id * mod + k);
}

WreathElement WreathQuotient::decode(int id) const {
  const int mod = modulus();
  WreathElement x;
  x.shift = id % mod;
  id /= mod;
  x.block.assign(n_, 0);
  for (int i = n_ - 1; i >= 0; --i) {
    x.block[i] = id % base_->order();
    id /= base_->order();
  }
  return x;
}

FiniteGroup WreathQuotient::as_finite_group(std::string name) const {
  const int o = order();
  std::vector<std::vector<int>> table(o, std::vector<int>(o));
  std::vector<WreathElement> elems(o);
  for (int i = 0; i < o; ++i) elems[i] = decode(i);
  for (int a = 0; a < o; ++a)
    for (int b = 0; b < o; ++b)
      table[a][b] = encode(w_.mul(elems[a], elems[b]));
  return FiniteGroup::from_table(std::move(name), std::move(table));
}

int WreathQuotient::g_id() const { return encode(w_.g()); }

ElemSet WreathQuotient::block_subgroup(int i) const {
  ElemSet s;
  s.reserve(base_->order());
  for (int x = 0; x < base_->order(); ++x) s.push_back(encode(w_.from_block(i, x)));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> WreathQuotient::phi_table() const {
  std::vector<int> phi(order());
  for (int i = 0; i < order(); ++i)
    phi[i] = static_cast<int>(decode(i).shift);
  return phi;
}

int xi_map(const XiModel& model, const WreathElement& x) {
  const FiniteGroup& g = *model.ambient;
  if (static_cast<int>(x.block.size()) != model.n)
    throw AlgebraMismatchError("wreath element does not match the model");
  int acc = g.identity();
  for (int i = 0; i < model.n; ++i) {
    int gi = g.power(model.g, i);
    acc = g.mul(acc, g.conjugate(gi, model.l0.at(x.block[i])));
  }
  long k = ((x.shift % model.modulus) + model.modulus) % model.modulus;
  return g.mul(acc, g.power(model.g, k));
}

XiModel self_model(const WreathQuotient& q, const FiniteGroup* ambient) {
  if (!ambient || ambient->order() != q.order())
    throw AlgebraMismatchError("ambient group does not match the quotient");
  XiModel m;
  m.ambient = ambient;
  m.phi = q.phi_table();
  m.modulus = q.modulus();
  m.g = q.g_id();
  m.n = q.blocks();
  m.l0.reserve(q.base().order());
  WreathZ w(&q.base(), q.blocks());
  for (int x = 0; x < q.base().order(); ++x)
    m.l0.push_back(q.encode(w.from_block(0, x)));
  return m;
}

LemmaReport verify_lemma_hypotheses(const FiniteGroup& ambient,
                                    const std::vector<int>& phi, int modulus,
                                    const ElemSet& l0, int g, int n) {
  LemmaReport rep;
  const int o = ambient.order();
  if (static_cast<int>(phi.size()) != o)
    throw AlgebraMismatchError("phi table size does not match the group");
  if (modulus < 1 || n < 1 || modulus % n != 0)
    throw AlgebraMismatchError("modulus must be a positive multiple of n");

  rep.phi_ok = phi[g] == 1 % modulus;
  std::vector<char> hit(modulus, 0);
  for (int x = 0; x < o && rep.phi_ok; ++x) {
    if (phi[x] < 0 || phi[x] >= modulus) {
      rep.phi_ok = false;
      break;
    }
    hit[phi[x]] = 1;
    for (int y = 0; y < o; ++y)
      if (phi[ambient.mul(x, y)] != (phi[x] + phi[y]) % modulus) {
        rep.phi_ok = false;
        rep.detail = "phi is not a homomorphism";
        break;
      }
  }
  if (rep.phi_ok)
    for (int v = 0; v < modulus; ++v)
      if (!hit[v]) {
        rep.phi_ok = false;
        rep.detail = "phi is not onto";
      }
  if (!rep.phi_ok) {
    if (rep.detail.empty()) rep.detail = "phi fails";
    return rep;
  }

  ElemSet kernel;
  for (int x = 0; x < o; ++x)
    if (phi[x] == 0) kernel.push_back(x);

  const int gn = ambient.power(g, n);
  rep.power_central = true;
  for (int x : kernel)
    if (ambient.mul(gn, x) != ambient.mul(x, gn)) {
      rep.power_central = false;
      rep.detail = "g^n does not centralize the kernel";
      break;
    }

  std::vector<ElemSet> factors;
  factors.reserve(n);
  for (int i = 0; i < n; ++i)
    factors.push_back(ambient.conjugate_set(ambient.power(g, i), l0));
  rep.kernel_splits = check_direct_product_within(ambient, kernel, factors);
  if (!rep.kernel_splits && rep.detail.empty())
    rep.detail = "kernel is not the direct product of the shifted copies";
  return rep;
}

}  // namespace reeb_orbit
