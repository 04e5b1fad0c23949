#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrt/catalog.hpp"
#include "lrt/mutate.hpp"
#include "lrt/triple.hpp"

using namespace lrt;

namespace {

bool triple_valid(const TripleData& t) {
    return check_almost_pre(t).all_pass() && check_pre(t).all_pass() &&
           check_triple(t).all_pass();
}

}  // namespace

TEST_CASE("all catalog entries satisfy the structural axioms") {
    for (const auto& name : catalog_names()) {
        const TripleData t = catalog_get(name);
        const SuiteReport rep = check_almost_pre(t);
        INFO(name);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("valid catalog entries pass pre and compatibility suites") {
    for (const auto& name : catalog_valid_names()) {
        const TripleData t = catalog_get(name);
        INFO(name);
        CHECK(check_pre(t).all_pass());
        CHECK(check_triple(t).all_pass());
        CHECK(check_lie_rinehart(assemble_total(t)).all_pass());
    }
}

TEST_CASE("heis with the pairing zeroed is still a valid triple") {
    // With base algebra Q all anchors vanish, so the anchor-commutator
    // identity holds for any pairing; dropping it leaves an abelian triple.
    const TripleData t = catalog_get("heis-deltazero");
    CHECK(triple_valid(t));
    CHECK(check_lie_rinehart(assemble_total(t)).all_pass());
}

TEST_CASE("assemble_total recovers the so(3) structure constants") {
    const TripleData t = catalog_get("so3");
    const TotalLie l = assemble_total(t);
    // basis order e1,e2,e3; [e2,e3] = delta = e1
    CHECK(l.bracket[1][2][0] == l.A.one());
    // [e1,e2] = e1.e2 = e3
    CHECK(l.bracket[0][1][2] == l.A.one());
    // [e1,e3] = -e2
    CHECK(l.bracket[0][2][1] == vec_scale(Rat(-1), l.A.one()));
    // skewness
    CHECK(l.bracket[2][1][0] == vec_scale(Rat(-1), l.A.one()));
}

TEST_CASE("assemble_total on heis gives the Heisenberg bracket") {
    const TotalLie l = assemble_total(catalog_get("heis"));
    // order Z,X,Y: [X,Y] = Z, everything else 0
    CHECK(l.bracket[1][2][0] == l.A.one());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if ((i == 1 && j == 2) || (i == 2 && j == 1)) continue;
            CHECK(mod_is_zero(l.bracket[i][j]));
        }
    }
}

TEST_CASE("split after assemble is the identity on the data") {
    for (const auto& name : catalog_names()) {
        const TripleData t = catalog_get(name);
        const TripleData back = split_total(assemble_total(t), t.nH);
        INFO(name);
        CHECK(back.bracketH == t.bracketH);
        CHECK(back.bracketQ == t.bracketQ);
        for (std::size_t i = 0; i < t.nQ; ++i) {
            for (std::size_t j = i + 1; j < t.nQ; ++j) {
                CHECK(back.delta[i][j] == t.delta[i][j]);
            }
        }
        CHECK(back.connHQ == t.connHQ);
        CHECK(back.connQH == t.connQH);
        for (std::size_t i = 0; i < t.nH; ++i) {
            CHECK(back.anchorH[i].mat == t.anchorH[i].mat);
        }
        for (std::size_t i = 0; i < t.nQ; ++i) {
            CHECK(back.anchorQ[i].mat == t.anchorQ[i].mat);
        }
    }
}

TEST_CASE("equivalence of the triple checks and the total Lie-Rinehart check") {
    for (const auto& name : catalog_valid_names()) {
        const TripleData t = catalog_get(name);
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            const TripleData m = mutate_random(t, seed);
            const bool triple_ok = triple_valid(m);
            const bool total_ok =
                check_lie_rinehart(assemble_total(m)).all_pass();
            INFO(name << " seed " << seed);
            CHECK(triple_ok == total_ok);
        }
    }
}

TEST_CASE("a perturbed so3 connection breaks the compatibility suite") {
    TripleData t = catalog_get("so3");
    // e1.e2 := e2 + e3
    t.connHQ[0][0] = mod_add(t.connHQ[0][0], t.qBasis(0));
    CHECK(check_almost_pre(t).all_pass());
    CHECK(!check_triple(t).all_pass());
    CHECK(!check_lie_rinehart(assemble_total(t)).all_pass());
}

TEST_CASE("invariants of the catalog entries") {
    {
        const Invariants inv = invariants(catalog_get("heis"));
        CHECK(inv.a_h.size() == 1);
        CHECK(inv.q_h.size() == 2);
        CHECK(inv.l_h.size() == 3);
        CHECK(inv.extension_ok);
        // the restricted pairing is still the full pairing
        bool nonzero = false;
        for (const auto& row : inv.cocycle) {
            for (const auto& v : row) {
                if (!mod_is_zero(v)) nonzero = true;
            }
        }
        CHECK(nonzero);
    }
    {
        const Invariants inv = invariants(catalog_get("so3"));
        CHECK(inv.q_h.empty());  // rotation action has trivial kernel
        CHECK(inv.l_h.size() == 1);
        CHECK(inv.extension_ok);
    }
    {
        const Invariants inv = invariants(catalog_get("sl2-ef"));
        REQUIRE(inv.q_h.size() == 1);
        // kernel of the action of e on Q is spanned by h
        CHECK(inv.q_h[0][0] == inv.a_h[0]);
        CHECK(mod_is_zero(ModEl{inv.q_h[0][1]}));
    }
}

TEST_CASE("trivial-action extension classification") {
    CHECK(check_trivial_action_extension(catalog_get("heis")).all_pass());
    CHECK(check_trivial_action_extension(catalog_get("abelian(3)")).all_pass());
    CHECK(!check_trivial_action_extension(catalog_get("so3")).all_pass());
    CHECK(!check_trivial_action_extension(catalog_get("sl2-ef")).all_pass());
}

TEST_CASE("product values on catalog entries") {
    {
        const TripleData t = catalog_get("so3");
        const Products P{t};
        // {e2,e3;e2} = delta(e2,e3).e2 = e1.e2 = e3
        CHECK(P.p3q(t.qBasis(0), t.qBasis(1), t.qBasis(0)) == t.qBasis(1));
        // skew slot: {e2,e2;e3} = 0
        CHECK(mod_is_zero(P.p3q(t.qBasis(0), t.qBasis(0), t.qBasis(1))));
    }
    {
        const TripleData t = catalog_get("heis");
        const Products P{t};
        // anchors vanish: {X,Y;a} = Z(a) = 0
        CHECK(vec_is_zero(P.p3a(t.qBasis(0), t.qBasis(1), t.A.one())));
    }
}

TEST_CASE("product identity suite passes on valid entries") {
    for (const auto& name : {"so3", "heis", "dual-numbers", "sl2-ef"}) {
        INFO(name);
        CHECK(check_products(catalog_get(name)).all_pass());
    }
}
