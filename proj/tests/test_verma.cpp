#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "n2alg/verma.hpp"

using namespace n2alg;

namespace {

const Sector kSec = Sector::N2Ramond;

PbwCombination single(const PbwMonomial& m, const Poly& c) {
    PbwCombination out;
    out[m] = c;
    return out;
}

bool equal(const PbwCombination& x, const PbwCombination& y) {
    PbwCombination lhs = x;
    for (const auto& [m, c] : y) {
        lhs[m] -= c;
        if (lhs[m].is_zero()) lhs.erase(m);
    }
    for (auto it = lhs.begin(); it != lhs.end();) {
        if (it->second.is_zero()) it = lhs.erase(it);
        else ++it;
    }
    return lhs.empty();
}

}  // namespace

TEST_CASE("highest-weight action fixed values") {
    VermaState st = symbolic_verma();
    Poly h = Poly::var("h"), hp = Poly::var("hp"), cc = Poly::var("cc");

    SUBCASE("lowering then raising by L") {
        PbwMonomial lm1 = {gen(GenKind::L, -1, kSec)};
        auto r = verma_act(gen(GenKind::L, 1, kSec), lm1, st);
        CHECK(equal(r, single({}, h.scaled(-2))));
    }
    SUBCASE("the two zero modes pair into the central shift") {
        PbwMonomial g0m = {gen(GenKind::Gminus, 0, kSec)};
        auto r = verma_act(gen(GenKind::Gplus, 0, kSec), g0m, st);
        CHECK(equal(r, single({}, h.scaled(-2) - cc.scaled(Rational(1, 12)))));
    }
    SUBCASE("charge operator shifts by the odd lowering") {
        PbwMonomial gm1 = {gen(GenKind::Gminus, -1, kSec)};
        auto r = verma_act(gen(GenKind::H, 0, kSec), gm1, st);
        CHECK(equal(r, single(gm1, hp - Poly(1))));
    }
    SUBCASE("vacuum eigenvalues") {
        PbwMonomial vac;
        CHECK(equal(verma_act(gen(GenKind::L, 0, kSec), vac, st), single({}, h)));
        CHECK(equal(verma_act(gen(GenKind::H, 0, kSec), vac, st), single({}, hp)));
        CHECK(equal(verma_act(gen(GenKind::C, 0, kSec), vac, st), single({}, cc)));
        CHECK(verma_act(gen(GenKind::L, 1, kSec), vac, st).empty());
        CHECK(verma_act(gen(GenKind::Gplus, 0, kSec), vac, st).empty());
    }
}

TEST_CASE("monomial bases at low levels") {
    SUBCASE("two degree-zero states") {
        auto b = pbw_basis(kSec, 0);
        REQUIRE(b.size() == 2);
        CHECK(b[0].empty());
        REQUIRE(b[1].size() == 1);
        CHECK(b[1][0] == gen(GenKind::Gminus, 0, kSec));
    }
    SUBCASE("level one is eight-dimensional") {
        CHECK(pbw_basis(kSec, 1).size() == 8);
    }
    SUBCASE("degree-zero count per sector") {
        CHECK(pbw_basis(Sector::N1Ramond, 0).size() == 2);
        CHECK(pbw_basis(Sector::N2NeveuSchwarz, 0).size() == 1);
        CHECK(pbw_basis(Sector::N1NeveuSchwarz, 0).size() == 1);
    }
    SUBCASE("half-level of the one-supercurrent NS sector") {
        // level measured in lattice steps: step 1 holds G_{-1/2} only
        auto b = pbw_basis(Sector::N1NeveuSchwarz, 1);
        REQUIRE(b.size() == 1);
        REQUIRE(b[0].size() == 1);
        CHECK(b[0][0] == gen2(GenKind::G, -1, Sector::N1NeveuSchwarz));
        CHECK(pbw_basis(Sector::N1NeveuSchwarz, 2).size() == 1);  // L_{-1}
    }
}

TEST_CASE("odd monomial factors are squarefree and normal ordered") {
    auto key = [](const Generator& g) {
        return std::pair<std::int64_t, int>(g.index.doubled(),
                                            static_cast<int>(g.kind));
    };
    for (Sector s : {Sector::N2Ramond, Sector::N2NeveuSchwarz}) {
        for (int level = 0; level <= 6; ++level) {
            for (const auto& mono : pbw_basis(s, level)) {
                for (size_t k = 0; k + 1 < mono.size(); ++k) {
                    REQUIRE(key(mono[k]) <= key(mono[k + 1]));
                    if (is_odd_kind(mono[k].kind)) REQUIRE(!(mono[k] == mono[k + 1]));
                }
            }
        }
    }
}

TEST_CASE("weight dimensions match the series oracle") {
    for (Sector s : {Sector::N2Ramond, Sector::N2NeveuSchwarz, Sector::N1Ramond,
                     Sector::N1NeveuSchwarz}) {
        auto dims = verma_weight_dims(s, 10);
        auto oracle = character_series(s, 10);
        REQUIRE(dims.size() == 11);
        REQUIRE(oracle.size() == 11);
        for (size_t k = 0; k < dims.size(); ++k)
            REQUIRE(Integer(static_cast<long>(dims[k])) == oracle[k]);
    }
}

TEST_CASE("first dimensions frozen") {
    auto dims = verma_weight_dims(kSec, 1);
    REQUIRE(dims.size() == 2);
    CHECK(dims[0] == 2);
    CHECK(dims[1] == 8);
}

TEST_CASE("action preserves level") {
    VermaState st = symbolic_verma();
    for (int level = 0; level <= 3; ++level) {
        for (const auto& mono : pbw_basis(kSec, level)) {
            for (int m = -2; m <= 2; ++m) {
                for (GenKind k :
                     {GenKind::L, GenKind::H, GenKind::Gplus, GenKind::Gminus}) {
                    auto r = verma_act(gen(k, m, kSec), mono, st);
                    for (const auto& [out, coeff] : r) {
                        long deg = 0;
                        for (const auto& g : out) deg -= g.index.doubled() / 2;
                        REQUIRE(deg == level - m);
                    }
                }
            }
        }
    }
}
