#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "n2alg/rewrite.hpp"

#include <random>

using namespace n2alg;

namespace {

const Sector kSec = Sector::N2Ramond;

Generator G(GenKind k, int idx) { return gen(k, idx, kSec); }

NormalForm single(const IndexExpr& label, const Poly& coeff) {
    NormalForm nf;
    nf.add_term({}, label, coeff);
    return nf;
}

}  // namespace

TEST_CASE("annihilator and base evaluation rules") {
    BaseLayer layer = symbolic_layer();
    IndexExpr i = IndexExpr::sym("i");
    CHECK(reduce_on_base({{G(GenKind::Gminus, 0)}, kSec}, layer, i).is_zero());
    CHECK(reduce_on_base({{G(GenKind::C, 0)}, kSec}, layer, i).is_zero());

    NormalForm l = reduce_on_base({{G(GenKind::L, 2)}, kSec}, layer, i);
    Poly coeff = Poly::var("a") + Poly(2) * Poly::var("b") + Poly::var("i");
    CHECK(l == single(i + IndexExpr::constant(2), coeff));

    NormalForm h = reduce_on_base({{G(GenKind::H, -1)}, kSec}, layer, i);
    CHECK(h == single(i + IndexExpr::constant(-1), Poly::var("c")));
}

TEST_CASE("pair annihilation gives the closed even action") {
    BaseLayer layer = symbolic_layer();
    IndexExpr i = IndexExpr::sym("i");
    NormalForm nf =
        reduce_on_base({{G(GenKind::Gminus, 0), G(GenKind::Gplus, 0)}, kSec}, layer, i);
    Poly coeff = (Poly::var("a") + Poly::var("i")).scaled(-2);
    CHECK(nf == single(i, coeff));
}

TEST_CASE("quadruple word reduces to the degeneracy factor") {
    BaseLayer layer = symbolic_layer();
    IndexExpr i = IndexExpr::sym("i");
    Word w{{G(GenKind::Gminus, 1), G(GenKind::Gminus, 0), G(GenKind::Gplus, 0),
            G(GenKind::Gplus, 1)},
           kSec};
    Poly b = Poly::var("b"), c = Poly::var("c");
    Poly d = (Poly(2) * b + c) * (Poly(2) + c - Poly(2) * b);
    CHECK(reduce_on_base(w, layer, i) == single(i + IndexExpr::constant(2), d));
}

TEST_CASE("closed even action fixed values") {
    BaseLayer layer = symbolic_layer();
    SUBCASE("concrete indices") {
        KAction ka = k_action(IndexExpr::constant(1), IndexExpr::constant(2), layer,
                              IndexExpr::constant(0));
        Poly expected = -Poly(2) * Poly::var("a") - Poly(6) * Poly::var("b") -
                        Poly::var("c");
        CHECK(ka.coeff == expected);
        CHECK(ka.label == IndexExpr::constant(3));
    }
    SUBCASE("r = s = 0 on a symbolic label") {
        IndexExpr i = IndexExpr::sym("i");
        KAction ka = k_action(IndexExpr::constant(0), IndexExpr::constant(0), layer, i);
        CHECK(ka.coeff == (Poly::var("a") + Poly::var("i")).scaled(-2));
        CHECK(ka.label == i);
    }
    SUBCASE("fully symbolic matches the engine") {
        IndexExpr r = IndexExpr::sym("r"), s = IndexExpr::sym("s"),
                  i = IndexExpr::sym("i");
        KAction ka = k_action(r, s, layer, i);
        // K_{r,s} u_i = G^-_s G^+_r u_i on the annihilator base
        Word w{{gen_expr(GenKind::Gminus, s, kSec), gen_expr(GenKind::Gplus, r, kSec)},
               kSec};
        CHECK(reduce_on_base(w, layer, i) == single(ka.label, ka.coeff));
    }
}

TEST_CASE("strategies agree on random words") {
    BaseLayer layer = symbolic_layer();
    IndexExpr i = IndexExpr::sym("i");
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(1, 6), idx(-3, 3), kind(0, 4);
    const GenKind kinds[] = {GenKind::L, GenKind::H, GenKind::Gplus, GenKind::Gminus,
                             GenKind::C};
    for (int trial = 0; trial < 1000; ++trial) {
        Word w;
        w.sector = kSec;
        int n = len(rng);
        for (int k = 0; k < n; ++k) {
            GenKind gk = kinds[kind(rng)];
            w.factors.push_back(G(gk, gk == GenKind::C ? 0 : idx(rng)));
        }
        NormalForm left = reduce_on_base(w, layer, i, Strategy::LeftInnermost);
        NormalForm right = reduce_on_base(w, layer, i, Strategy::RightInnermost);
        REQUIRE(left == right);
    }
}

TEST_CASE("reduction is linear and composes over concatenation") {
    BaseLayer layer = symbolic_layer();
    IndexExpr i = IndexExpr::sym("i");
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> len(1, 3), idx(-3, 3), kind(0, 3);
    const GenKind kinds[] = {GenKind::L, GenKind::H, GenKind::Gplus, GenKind::Gminus};
    for (int trial = 0; trial < 100; ++trial) {
        Word w1, w2;
        w1.sector = w2.sector = kSec;
        int n1 = len(rng), n2 = len(rng);
        for (int k = 0; k < n1; ++k) w1.factors.push_back(G(kinds[kind(rng)], idx(rng)));
        for (int k = 0; k < n2; ++k) w2.factors.push_back(G(kinds[kind(rng)], idx(rng)));

        Word cat;
        cat.sector = kSec;
        cat.factors = w1.factors;
        cat.factors.insert(cat.factors.end(), w2.factors.begin(), w2.factors.end());

        NormalForm inner = reduce_on_base(w2, layer, i);
        NormalForm stepwise;
        for (const auto& t : inner.terms) {
            NormalForm base;
            base.add_term(t.plus_word, t.label, Poly(1));
            NormalForm acted = base;
            for (auto it = w1.factors.rbegin(); it != w1.factors.rend(); ++it)
                acted = apply_generator(*it, acted, layer);
            stepwise.add_scaled(acted, t.coeff);
        }
        REQUIRE(stepwise == reduce_on_base(cat, layer, i));
    }
}

TEST_CASE("repeated odd raising indices vanish") {
    NormalForm nf;
    nf.add_term({IndexExpr::constant(1), IndexExpr::constant(1)}, IndexExpr::sym("i"),
                Poly(1));
    CHECK(nf.is_zero());
    // odd swap sign
    NormalForm ab, ba;
    ab.add_term({IndexExpr::constant(1), IndexExpr::constant(2)}, IndexExpr::sym("i"),
                Poly(1));
    ba.add_term({IndexExpr::constant(2), IndexExpr::constant(1)}, IndexExpr::sym("i"),
                Poly(-1));
    CHECK(ab == ba);
}

TEST_CASE("sector and kind guards") {
    BaseLayer layer = symbolic_layer();  // defaults to the integer-index sector
    Word wrong_sector{{gen2(GenKind::Gplus, 1, Sector::N2NeveuSchwarz)},
                      Sector::N2NeveuSchwarz};
    CHECK_THROWS(reduce_on_base(wrong_sector, layer, IndexExpr::sym("i")));
    Word n1_word{{gen(GenKind::G, 1, Sector::N1Ramond)}, Sector::N1Ramond};
    CHECK_THROWS(reduce_on_base(n1_word, layer, IndexExpr::sym("i")));
}
