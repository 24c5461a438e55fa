#include <doctest.h>

#include <algorithm>

#include "reeb_orbit/finite_group.hpp"
#include "reeb_orbit/wreath.hpp"

using namespace reeb_orbit;

TEST_CASE("block rotation convention") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    WreathZ w(&c2, 2);
    WreathElement a{{1, 0}, 1};
    WreathElement b{{1, 0}, 0};
    // (b . rot_1(b'))_0 picks b'_1: the product is ((1,1); 1)
    CHECK((w.mul(a, b) == WreathElement{{1, 1}, 1}));
    // zero shift on the left leaves the right block unrotated
    CHECK((w.mul(b, a) == WreathElement{{0, 0}, 1}));
    CHECK(!(w.mul(a, b) == w.mul(b, a)));
}

TEST_CASE("conjugation by the shift advances the block index") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    WreathZ w(&c3, 3);
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < 3; ++x)
            CHECK(w.conj(w.g(), w.from_block(i, x)) ==
                  w.from_block((i + 1) % 3, x));
    CHECK((w.conj(w.g(), WreathElement{{1, 2, 0}, 0}) ==
           WreathElement{{0, 1, 2}, 0}));
}

TEST_CASE("powers and inverses") {
    FiniteGroup s3 = FiniteGroup::symmetric3();
    WreathZ w(&s3, 2);
    CHECK((w.pow(w.g(), 5) == WreathElement{{s3.identity(), s3.identity()}, 5}));
    WreathElement a{{2, 4}, 3};
    CHECK(w.mul(a, w.inv(a)) == w.identity());
    CHECK(w.mul(w.inv(a), a) == w.identity());
    CHECK(w.pow(a, -1) == w.inv(a));
    CHECK(w.pow(a, 0) == w.identity());
    CHECK(phi_projection(w.mul(a, a)) == 6);
}

TEST_CASE("finite quotient is a group with the expected shape") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    WreathQuotient q(&c2, 2, 2);
    CHECK(q.modulus() == 4);
    CHECK(q.order() == 16);
    FiniteGroup fg = q.as_finite_group("quotient");
    CHECK(fg.order() == 16);
    for (int id = 0; id < q.order(); ++id)
        CHECK(q.encode(q.decode(id)) == id);
    CHECK(q.phi_table()[q.g_id()] == 1);
    ElemSet block0 = q.block_subgroup(0);
    CHECK(block0.size() == 2);
    CHECK(fg.is_subgroup(block0));
    ElemSet block1 = q.block_subgroup(1);
    CHECK(fg.conjugate_set(q.g_id(), block0) == block1);
}

TEST_CASE("xi reassembles the quotient over itself") {
    FiniteGroup c3 = FiniteGroup::cyclic(3);
    WreathQuotient q(&c3, 2, 1);
    FiniteGroup fg = q.as_finite_group("ambient");
    XiModel model = self_model(q, &fg);
    for (int id = 0; id < q.order(); ++id)
        CHECK(xi_map(model, q.decode(id)) == id);

    // arbitrary shifts reduce mod n*m before reassembly
    WreathZ w(&c3, 2);
    WreathElement far{{1, 2}, -5};
    WreathElement near{{1, 2}, ((-5 % q.modulus()) + q.modulus()) % q.modulus()};
    CHECK(xi_map(model, far) == xi_map(model, near));

    ElemSet l0(model.l0.begin(), model.l0.end());
    std::sort(l0.begin(), l0.end());
    LemmaReport rep =
        verify_lemma_hypotheses(fg, model.phi, model.modulus, l0, model.g, 2);
    CHECK(rep.phi_ok);
    CHECK(rep.power_central);
    CHECK(rep.kernel_splits);
    CHECK(rep.ok());

    // a broken shift map must be reported
    std::vector<int> flat(fg.order(), 0);
    LemmaReport bad =
        verify_lemma_hypotheses(fg, flat, model.modulus, l0, model.g, 2);
    CHECK(!bad.phi_ok);
    CHECK(!bad.ok());
}
