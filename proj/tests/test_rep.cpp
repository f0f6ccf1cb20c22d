#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneadm/admissible.hpp"
#include "oneadm/catalog.hpp"
#include "oneadm/rep.hpp"

#include <random>

using namespace oneadm;

namespace {

i64 decomposition_dim(const RootDatum& g, const DecompositionList& l) {
    i64 s = 0;
    for (const auto& e : l) s += e.mult * weyl_dimension(g, e.hw);
    return s;
}

bool has_summand(const DecompositionList& l, const Coweight& hw, i64 mult) {
    return hom_multiplicity(hw, l) == mult;
}

}  // namespace

TEST_CASE("integer partitions") {
    CHECK(IntegerPartition::all_of(4, 2).size() == 3);  // 4, 3+1, 2+2
    CHECK(IntegerPartition::all_of(0, 3).size() == 1);  // empty partition
    CHECK(IntegerPartition{{3, 1}}.conjugate() == IntegerPartition{{2, 1, 1}});
    CHECK(IntegerPartition{{2, 2}}.conjugate() == IntegerPartition{{2, 2}});
    CHECK(IntegerPartition{{3, 1}}.size() == 4);
}

TEST_CASE("weyl_dimension") {
    CatalogEntry gsp4 = catalog_gsp(2);
    CHECK(weyl_dimension(gsp4.datum, Coweight{{0, 0, 0}}) == 1);
    CHECK(weyl_dimension(gsp4.datum, gsp4.gamma) == 4);           // spinor, 2^n
    CHECK(weyl_dimension(gsp4.datum, Coweight{{2, 1, 2}}) == 5);  // gamma_1, 2n+1

    CatalogEntry gsp6 = catalog_gsp(3);
    CHECK(weyl_dimension(gsp6.datum, gsp6.gamma) == 8);
    CHECK(weyl_dimension(gsp6.datum, Coweight{{2, 1, 1, 2}}) == 7);

    CatalogEntry gspin5 = catalog_gspin(2);
    CHECK(weyl_dimension(gspin5.datum, gspin5.gamma) == 4);
    CHECK(weyl_dimension(gspin5.datum, Coweight{{1, 1, 0}}) == 5);

    CHECK_THROWS_AS(weyl_dimension(gsp4.datum, Coweight{{0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("character: minuscule weights are one orbit, multiplicity free") {
    for (const char* name : {"gl4", "gsp4", "gsp6", "gspin5", "gspin7"}) {
        CAPTURE(name);
        CatalogEntry e = *catalog_lookup(name);
        CharacterMultiset c = character(e.datum, e.gamma);
        std::vector<Coweight> orbit = e.datum.weyl_orbit(e.gamma);
        CHECK(c.total == static_cast<i64>(orbit.size()));
        for (const Coweight& w : orbit) {
            REQUIRE(c.mult.count(w) == 1);
            CHECK(c.mult.at(w) == 1);
        }
    }
}

TEST_CASE("character: zero weight and W-invariance") {
    CatalogEntry gsp4 = catalog_gsp(2);
    CharacterMultiset triv = character(gsp4.datum, Coweight{{0, 0, 0}});
    CHECK(triv.total == 1);
    CHECK(triv.mult.at(Coweight{{0, 0, 0}}) == 1);

    CharacterMultiset c = character(gsp4.datum, Coweight{{2, 1, 2}});
    CHECK(c.total == 5);
    CHECK(c.mult.at(Coweight{{1, 1, 2}}) == 1);  // the central weight omega
    for (const auto& [w, m] : c.mult)
        for (int i = 0; i < gsp4.datum.num_simple(); ++i)
            CHECK(c.mult.at(gsp4.datum.reflect(i, w)) == m);
}

TEST_CASE("character respects the dimension cap") {
    CatalogEntry gsp4 = catalog_gsp(2);
    CHECK_THROWS_AS(character(gsp4.datum, Coweight{{2, 1, 2}}, 4), std::runtime_error);
}

TEST_CASE("tensor square of the spinor representation") {
    CatalogEntry gsp4 = catalog_gsp(2);
    AdmissibleDatum a = make_admissible(gsp4.datum, gsp4.gamma);
    DecompositionList l = tensor_decompose(gsp4.datum, gsp4.gamma, gsp4.gamma);
    CHECK(l.size() == 3);
    CHECK(has_summand(l, 2 * a.gamma, 1));
    CHECK(has_summand(l, a.omega, 1));
    CHECK(has_summand(l, Coweight{{2, 1, 2}}, 1));  // gamma_1
    CHECK(decomposition_dim(gsp4.datum, l) == 16);  // 10 + 1 + 5

    CatalogEntry gsp6 = catalog_gsp(3);
    AdmissibleDatum a6 = make_admissible(gsp6.datum, gsp6.gamma);
    DecompositionList l6 = tensor_decompose(gsp6.datum, gsp6.gamma, gsp6.gamma);
    CHECK(l6.size() == 4);
    CHECK(has_summand(l6, 2 * a6.gamma, 1));
    CHECK(has_summand(l6, a6.omega, 1));
    CHECK(has_summand(l6, Coweight{{2, 1, 1, 2}}, 1));  // gamma_1
    CHECK(has_summand(l6, Coweight{{2, 2, 1, 2}}, 1));  // gamma_2
    CHECK(decomposition_dim(gsp6.datum, l6) == 64);
}

TEST_CASE("tensor with the trivial representation") {
    CatalogEntry gl3 = catalog_gl(3);
    DecompositionList l =
        tensor_decompose(gl3.datum, Coweight{{2, 1, 0}}, Coweight{{0, 0, 0}});
    REQUIRE(l.size() == 1);
    CHECK(l[0].hw == Coweight{{2, 1, 0}});
    CHECK(l[0].mult == 1);
}

TEST_CASE("exterior squares from the appendix") {
    // over GSpin5 the dual group is GSp4 acting on its 4-dim representation
    CatalogEntry gspin5 = catalog_gspin(2);
    AdmissibleDatum a = make_admissible(gspin5.datum, gspin5.gamma);
    DecompositionList l =
        wedge_sym_decompose(gspin5.datum, gspin5.gamma, 2, PowerKind::exterior);
    CHECK(l.size() == 2);
    CHECK(has_summand(l, Coweight{{1, 1, 0}}, 1));  // gamma_2
    CHECK(has_summand(l, a.omega, 1));
    CHECK(decomposition_dim(gspin5.datum, l) == 6);

    // over GSp4 the dual acts on the 5-dim V^{gamma_1}; top exterior power
    CatalogEntry gsp4 = catalog_gsp(2);
    AdmissibleDatum b = make_admissible(gsp4.datum, gsp4.gamma);
    DecompositionList l2 =
        wedge_sym_decompose(gsp4.datum, Coweight{{2, 1, 2}}, 2, PowerKind::exterior);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].hw == 2 * b.gamma + b.omega);
    CHECK(l2[0].mult == 1);
    CHECK(decomposition_dim(gsp4.datum, l2) == 10);
}

TEST_CASE("exterior powers of V^{gamma_1} for GSp6") {
    CatalogEntry gsp6 = catalog_gsp(3);
    AdmissibleDatum a = make_admissible(gsp6.datum, gsp6.gamma);
    Coweight g1{{2, 1, 1, 2}}, g2{{2, 2, 1, 2}};

    DecompositionList l1 = wedge_sym_decompose(gsp6.datum, g1, 1, PowerKind::exterior);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0].hw == g1);

    DecompositionList l2 = wedge_sym_decompose(gsp6.datum, g1, 2, PowerKind::exterior);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].hw == g2 + a.omega);
    CHECK(decomposition_dim(gsp6.datum, l2) == 21);

    DecompositionList l3 = wedge_sym_decompose(gsp6.datum, g1, 3, PowerKind::exterior);
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].hw == 2 * a.gamma + 2 * a.omega);
    CHECK(decomposition_dim(gsp6.datum, l3) == 35);
}

TEST_CASE("schur functors") {
    CatalogEntry gspin5 = catalog_gspin(2);
    CharacterMultiset c = character(gspin5.datum, gspin5.gamma);

    DecompositionList id = schur_decompose(gspin5.datum, c, IntegerPartition{{1}});
    REQUIRE(id.size() == 1);
    CHECK(id[0].hw == gspin5.gamma);

    DecompositionList col = schur_decompose(gspin5.datum, c, IntegerPartition{{1, 1}});
    CHECK(col == wedge_sym_decompose(gspin5.datum, gspin5.gamma, 2, PowerKind::exterior));

    // vanishing beyond the dimension
    CharacterMultiset nothing =
        schur_character(c, IntegerPartition{{1, 1, 1, 1, 1}});
    CHECK(nothing.total == 0);

    // Sym2 + wedge2 = tensor square, for every catalog gamma
    for (const char* name : {"gl3", "gsp4", "gspin5", "gsp6"}) {
        CAPTURE(name);
        CatalogEntry e = *catalog_lookup(name);
        CharacterMultiset ch = character(e.datum, e.gamma);
        CharacterMultiset sym = schur_character(ch, IntegerPartition{{2}});
        CharacterMultiset wedge = schur_character(ch, IntegerPartition{{1, 1}});
        CHECK(sym.mult == power_character(ch, 2, PowerKind::symmetric).mult);
        CHECK(wedge.mult == power_character(ch, 2, PowerKind::exterior).mult);
        CharacterMultiset both = tensor_character(ch, ch);
        CHECK(sym.total + wedge.total == both.total);
        for (const auto& [w, m] : both.mult) {
            i64 s = sym.mult.count(w) ? sym.mult.at(w) : 0;
            i64 x = wedge.mult.count(w) ? wedge.mult.at(w) : 0;
            CHECK(s + x == m);
        }
    }
}

TEST_CASE("hom multiplicities") {
    CatalogEntry gsp4 = catalog_gsp(2);
    AdmissibleDatum a = make_admissible(gsp4.datum, gsp4.gamma);
    CharacterMultiset c = character(gsp4.datum, gsp4.gamma);

    CharacterMultiset sym2 = power_character(c, 2, PowerKind::symmetric);
    CHECK(hom_multiplicity(gsp4.datum, 2 * a.gamma, sym2) == 1);  // Cartan component

    // omega appears in exactly one of Sym^2, wedge^2
    CharacterMultiset w2 = power_character(c, 2, PowerKind::exterior);
    i64 total = hom_multiplicity(gsp4.datum, a.omega, sym2) +
                hom_multiplicity(gsp4.datum, a.omega, w2);
    CHECK(total == 1);

    DecompositionList l = tensor_decompose(gsp4.datum, gsp4.gamma, gsp4.gamma);
    CHECK(hom_multiplicity(2 * a.gamma, l) == 1);
    CHECK(hom_multiplicity(Coweight{{9, 9, 9}}, l) == 0);
}

TEST_CASE("peel orders agree") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(0, 2);
    for (const char* name : {"gl2", "gl3", "gsp4"}) {
        CAPTURE(name);
        CatalogEntry e = *catalog_lookup(name);
        for (int t = 0; t < 20; ++t) {
            Vec a(e.datum.rank), b(e.datum.rank);
            for (auto& x : a) x = coef(rng);
            for (auto& x : b) x = coef(rng);
            Coweight la = e.datum.dominantize(Coweight{a}).first;
            Coweight mu = e.datum.dominantize(Coweight{b}).first;
            DecompositionList fwd =
                tensor_decompose(e.datum, la, mu, PeelOrder::forward_lex);
            DecompositionList rev =
                tensor_decompose(e.datum, la, mu, PeelOrder::reverse_lex);
            std::sort(fwd.begin(), fwd.end());
            std::sort(rev.begin(), rev.end());
            CHECK(fwd == rev);
            i64 expect = weyl_dimension(e.datum, la) * weyl_dimension(e.datum, mu);
            CHECK(decomposition_dim(e.datum, fwd) == expect);
        }
    }
}
