#include "reeb_orbit/group_expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace reeb_orbit {

GroupExpr GroupExpr::trivial() { return GroupExpr{}; }

GroupExpr GroupExpr::zfree(int rank) {
  if (rank < 0) throw std::invalid_argument("negative free rank");
  GroupExpr e;
  e.kind = Kind::Zfree;
  e.rank = rank;
  return e;
}

GroupExpr GroupExpr::atom(std::string name, std::string descriptor) {
  GroupExpr e;
  e.kind = Kind::Atom;
  e.name = std::move(name);
  e.descriptor = std::move(descriptor);
  return e;
}

GroupExpr GroupExpr::product(std::vector<GroupExpr> factors) {
  GroupExpr e;
  e.kind = Kind::Product;
  e.factors = std::move(factors);
  return e;
}

GroupExpr GroupExpr::wreath_z(GroupExpr base, int blocks) {
  if (blocks < 1) throw std::invalid_argument("wreath block count must be >= 1");
  GroupExpr e;
  e.kind = Kind::WreathZ;
  e.factors.push_back(std::move(base));
  e.blocks = blocks;
  return e;
}

namespace {

// Total order on canonical factors: atoms first, wreaths second, the merged
// Zfree block last; ties broken by a full structural serialization so the
// order stays total when renders collide.
int kind_rank(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Atom:
      return 0;
    case GroupExpr::Kind::Product:
      return 1;
    case GroupExpr::Kind::WreathZ:
      return 2;
    case GroupExpr::Kind::Zfree:
      return 3;
    case GroupExpr::Kind::Trivial:
      return 4;
  }
  return 5;
}

std::string serialize(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Trivial:
      return "1";
    case GroupExpr::Kind::Zfree:
      return "Z(" + std::to_string(e.rank) + ")";
    case GroupExpr::Kind::Atom:
      return "A(" + e.name + "|" + e.descriptor + ")";
    case GroupExpr::Kind::Product: {
      std::string s = "P(";
      for (const auto& f : e.factors) s += serialize(f) + ",";
      return s + ")";
    }
    case GroupExpr::Kind::WreathZ:
      return "W(" + std::to_string(e.blocks) + "," + serialize(e.base()) + ")";
  }
  return "?";
}

bool factor_less(const GroupExpr& a, const GroupExpr& b) {
  int ra = kind_rank(a), rb = kind_rank(b);
  if (ra != rb) return ra < rb;
  std::string la = render(a), lb = render(b);
  if (la != lb) return la < lb;
  return serialize(a) < serialize(b);
}

}  // namespace

GroupExpr canonicalize(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Trivial:
      return GroupExpr::trivial();
    case GroupExpr::Kind::Zfree:
      return e.rank == 0 ? GroupExpr::trivial() : GroupExpr::zfree(e.rank);
    case GroupExpr::Kind::Atom:
      return e;
    case GroupExpr::Kind::WreathZ: {
      GroupExpr base = canonicalize(e.base());
      if (base.kind == GroupExpr::Kind::Trivial) return GroupExpr::zfree(1);
      if (e.blocks == 1)
        return canonicalize(GroupExpr::product({base, GroupExpr::zfree(1)}));
      return GroupExpr::wreath_z(std::move(base), e.blocks);
    }
    case GroupExpr::Kind::Product: {
      std::vector<GroupExpr> flat;
      int zrank = 0;
      for (const auto& f : e.factors) {
        GroupExpr c = canonicalize(f);
        switch (c.kind) {
          case GroupExpr::Kind::Trivial:
            break;
          case GroupExpr::Kind::Zfree:
            zrank += c.rank;
            break;
          case GroupExpr::Kind::Product:
            for (auto& g : c.factors) {
              if (g.kind == GroupExpr::Kind::Zfree)
                zrank += g.rank;
              else
                flat.push_back(std::move(g));
            }
            break;
          default:
            flat.push_back(std::move(c));
        }
      }
      std::sort(flat.begin(), flat.end(), factor_less);
      if (zrank > 0) flat.push_back(GroupExpr::zfree(zrank));
      if (flat.empty()) return GroupExpr::trivial();
      if (flat.size() == 1) return flat.front();
      return GroupExpr::product(std::move(flat));
    }
  }
  return GroupExpr::trivial();
}

GroupExpr abelianization(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Trivial:
      return GroupExpr::trivial();
    case GroupExpr::Kind::Zfree:
      return canonicalize(e);
    case GroupExpr::Kind::Atom:
      // already-abelianized atoms are fixed points
      if (e.name.rfind("ab(", 0) == 0) return e;
      return GroupExpr::atom("ab(" + e.name + ")", e.descriptor);
    case GroupExpr::Kind::Product: {
      std::vector<GroupExpr> fs;
      fs.reserve(e.factors.size());
      for (const auto& f : e.factors) fs.push_back(abelianization(f));
      return canonicalize(GroupExpr::product(std::move(fs)));
    }
    case GroupExpr::Kind::WreathZ:
      return canonicalize(GroupExpr::product(
          {abelianization(e.base()), GroupExpr::zfree(1)}));
  }
  return GroupExpr::trivial();
}

std::string render(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Trivial:
      return "1";
    case GroupExpr::Kind::Zfree:
      if (e.rank == 0) return "1";
      return e.rank == 1 ? "Z" : "Z^" + std::to_string(e.rank);
    case GroupExpr::Kind::Atom:
      return e.name;
    case GroupExpr::Kind::Product: {
      if (e.factors.empty()) return "1";
      std::string s;
      for (std::size_t i = 0; i < e.factors.size(); ++i) {
        const GroupExpr& f = e.factors[i];
        if (i) s += " x ";
        bool wrap = f.kind == GroupExpr::Kind::Product ||
                    f.kind == GroupExpr::Kind::WreathZ;
        s += wrap ? "(" + render(f) + ")" : render(f);
      }
      return s;
    }
    case GroupExpr::Kind::WreathZ: {
      const GroupExpr& b = e.base();
      bool wrap = b.kind == GroupExpr::Kind::Product ||
                  b.kind == GroupExpr::Kind::WreathZ;
      std::string bs = wrap ? "(" + render(b) + ")" : render(b);
      return bs + " wr_" + std::to_string(e.blocks) + " Z";
    }
  }
  return "1";
}

}  // namespace reeb_orbit
