#include <doctest.h>

#include "reeb_orbit/group_expr.hpp"

using namespace reeb_orbit;

namespace {
GroupExpr q_atom() { return GroupExpr::atom("pi0S'(f|Q,X)", "seg"); }
}

TEST_CASE("rendering basics") {
    CHECK(render(GroupExpr::trivial()) == "1");
    CHECK(render(GroupExpr::zfree(1)) == "Z");
    CHECK(render(GroupExpr::zfree(2)) == "Z^2");
    CHECK(render(q_atom()) == "pi0S'(f|Q,X)");
    CHECK(render(canonicalize(GroupExpr::product({q_atom(), GroupExpr::zfree(1)}))) ==
          "pi0S'(f|Q,X) x Z");
    CHECK(render(canonicalize(GroupExpr::wreath_z(q_atom(), 2))) ==
          "pi0S'(f|Q,X) wr_2 Z");
    CHECK(render(canonicalize(GroupExpr::wreath_z(q_atom(), 3))) ==
          "pi0S'(f|Q,X) wr_3 Z");
}

TEST_CASE("single-block extensions flatten to a product") {
    GroupExpr e = canonicalize(GroupExpr::wreath_z(q_atom(), 1));
    CHECK(e == canonicalize(GroupExpr::product({q_atom(), GroupExpr::zfree(1)})));
    CHECK(render(e) == "pi0S'(f|Q,X) x Z");
}

TEST_CASE("canonicalize is idempotent and tidies products") {
    GroupExpr messy = GroupExpr::product(
        {GroupExpr::trivial(),
         GroupExpr::product({GroupExpr::zfree(1), q_atom()}),
         GroupExpr::zfree(0), GroupExpr::zfree(2)});
    GroupExpr once = canonicalize(messy);
    CHECK(once == canonicalize(once));
    CHECK(render(once) == "pi0S'(f|Q,X) x Z^3");

    CHECK(canonicalize(GroupExpr::zfree(0)) == GroupExpr::trivial());
    CHECK(canonicalize(GroupExpr::product({})) == GroupExpr::trivial());
    CHECK(canonicalize(GroupExpr::wreath_z(GroupExpr::trivial(), 5)) ==
          GroupExpr::zfree(1));
}

TEST_CASE("atoms with different descriptors stay distinct") {
    GroupExpr a = GroupExpr::atom("pi0S'(f|Q,X)", "code-a");
    GroupExpr b = GroupExpr::atom("pi0S'(f|Q,X)", "code-b");
    CHECK(a != b);
    CHECK(render(a) == render(b));  // the descriptor is metadata
}

TEST_CASE("abelianization") {
    CHECK(abelianization(GroupExpr::zfree(3)) == GroupExpr::zfree(3));
    CHECK(render(abelianization(q_atom())) == "ab(pi0S'(f|Q,X))");
    GroupExpr w = GroupExpr::wreath_z(q_atom(), 4);
    GroupExpr ab = abelianization(w);
    CHECK(render(ab) == "ab(pi0S'(f|Q,X)) x Z");
    CHECK(abelianization(ab) == ab);
    GroupExpr p = GroupExpr::product({GroupExpr::zfree(1), q_atom(), q_atom()});
    CHECK(render(abelianization(p)) ==
          "ab(pi0S'(f|Q,X)) x ab(pi0S'(f|Q,X)) x Z");
}
