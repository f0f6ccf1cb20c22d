#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oneadm/catalog.hpp"
#include "oneadm/semigroup.hpp"

#include <random>

using namespace oneadm;

namespace {

AdmissibleDatum adm(const char* name) {
    CatalogEntry e = *catalog_lookup(name);
    return make_admissible(e.datum, e.gamma);
}

bool has(const std::vector<Coweight>& v, const Coweight& x) {
    return std::count(v.begin(), v.end(), x) == 1;
}

}  // namespace

TEST_CASE("level_set basics") {
    AdmissibleDatum gl4 = adm("gl4");
    GradedLevelSet l0 = level_set(gl4, 0);
    CHECK(l0.elements == std::vector<Coweight>{Coweight{{0, 0, 0, 0}}});
    GradedLevelSet l1 = level_set(gl4, 1);
    CHECK(l1.elements == std::vector<Coweight>{gl4.gamma});

    AdmissibleDatum gsp4 = adm("gsp4");
    GradedLevelSet l2 = level_set(gsp4, 2);
    CHECK(has(l2.elements, 2 * gsp4.gamma));
    CHECK(has(l2.elements, gsp4.omega));
    CHECK(has(l2.elements, Coweight{{2, 1, 2}}));  // classical gamma_1 = (2,1;1,0)
    for (const Coweight& mu : l2.elements) {
        CHECK(gsp4.degree(mu) == 2);
        CHECK(gsp4.datum.in_pos_span(2 * gsp4.gamma - mu));
    }
}

TEST_CASE("contains: finite pairing test") {
    AdmissibleDatum gsp4 = adm("gsp4");
    CHECK(contains(gsp4, gsp4.gamma));
    CHECK(contains(gsp4, gsp4.omega));
    CHECK(contains(gsp4, Coweight{{0, 0, 0}}));
    CHECK_THROWS_AS(contains(gsp4, Coweight{{0, 1, 0}}), std::invalid_argument);

    AdmissibleDatum gl3 = adm("gl3");
    CHECK_FALSE(contains(gl3, Coweight{{2, 0, -1}}));
    CHECK_FALSE(contains(gl3, Coweight{{1, 0, -1}}));
    CHECK(contains(gl3, Coweight{{1, 1, 0}}));
}

TEST_CASE("contains agrees with level-set enumeration up to degree 3") {
    for (const char* name : {"gl2", "gl3", "gl4", "gsp4", "gsp6", "gspin5", "gspin7"}) {
        CAPTURE(name);
        AdmissibleDatum a = adm(name);
        for (i64 k = 0; k <= 3; ++k) {
            for (const Coweight& mu : level_set(a, k).elements) CHECK(contains(a, mu));
            // degree-k dominant elements near k*gamma: the pairing test
            // must agree with the order relation mu <= k*gamma
            std::mt19937 rng(5 + k);
            std::uniform_int_distribution<int> coef(-2, 2);
            for (int t = 0; t < 100; ++t) {
                Coweight v{Vec(a.datum.rank, 0)};
                for (const Coweight& cr : a.datum.simple_coroots) v = v + coef(rng) * cr;
                Coweight mu = a.datum.dominantize(k * a.gamma + v).first;
                CHECK(contains(a, mu) == a.datum.in_pos_span(k * a.gamma - mu));
            }
        }
    }
}

TEST_CASE("level-set monotonicity under addition") {
    AdmissibleDatum a = adm("gsp4");
    GradedLevelSet l1 = level_set(a, 1), l2 = level_set(a, 2);
    std::vector<Coweight> l3 = level_set(a, 3).elements;
    for (const Coweight& x : l1.elements)
        for (const Coweight& y : l2.elements) CHECK(has(l3, x + y));
}

TEST_CASE("dual cone verification") {
    for (const char* name : {"gl3", "gsp4", "gspin5"}) {
        CAPTURE(name);
        AdmissibleDatum a = adm(name);
        DualConeVerdict v = dual_cone_verify(a, 3);
        CHECK(v.ok);
        CHECK(v.bad_basis.empty());
        CHECK(v.outside_span.empty());
    }

    // corrupting a basis member is detected
    AdmissibleDatum a = adm("gl3");
    std::vector<Weight> bad = a.omega_i;
    bad[0] = bad[0] - Weight{{0, 0, 2}};  // now pairs negatively with w0(gamma)
    DualConeVerdict v = dual_cone_verify(a, 3, a.omega0, bad);
    CHECK_FALSE(v.ok);
}

TEST_CASE("weight-side semigroup is downward closed") {
    for (const char* name : {"gl3", "gsp4", "gspin5"}) {
        CAPTURE(name);
        AdmissibleDatum a = adm(name);
        const RootDatum& d = a.datum;
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> coef(0, 3);
        std::uniform_int_distribution<int> nsub(1, 4);
        std::uniform_int_distribution<size_t> pick(0, d.positive_roots.size() - 1);
        for (int t = 0; t < 200; ++t) {
            Weight lam = coef(rng) * a.omega0;
            for (const Weight& oi : a.omega_i) lam = lam + coef(rng) * oi;
            REQUIRE(dual_cone_contains(a, lam));
            Weight mu = lam;
            int s = nsub(rng);
            for (int i = 0; i < s; ++i) mu = mu - d.positive_roots[pick(rng)];
            bool dominant = true;
            for (const Coweight& cr : d.simple_coroots)
                if (pairing(cr, mu) < 0) dominant = false;
            if (dominant) CHECK(dual_cone_contains(a, mu));
        }
    }
}

TEST_CASE("hilbert basis: GL3") {
    AdmissibleDatum a = adm("gl3");
    HilbertBasisReport r = hilbert_basis(a, 4);
    REQUIRE(r.generators.size() == 3);
    CHECK(r.generators[0] == std::pair<Coweight, i64>{Coweight{{1, 0, 0}}, 1});
    CHECK(r.generators[1] == std::pair<Coweight, i64>{Coweight{{1, 1, 0}}, 2});
    CHECK(r.generators[2] == std::pair<Coweight, i64>{Coweight{{1, 1, 1}}, 3});
    CHECK(r.is_free);
    CHECK(r.representation_failures.empty());
    CHECK(r.verified_up_to == 4);
}

TEST_CASE("hilbert basis: GSp4 and GSpin5") {
    AdmissibleDatum gsp = adm("gsp4");
    HilbertBasisReport r = hilbert_basis(gsp, 4);
    REQUIRE(r.generators.size() == 3);
    CHECK(r.generators[0].first == gsp.gamma);
    CHECK(r.generators[1].first == gsp.omega);            // degree 2, (1,1,2)
    CHECK(r.generators[2].first == Coweight{{2, 1, 2}});  // gamma_1, degree 2
    CHECK(r.is_free);

    AdmissibleDatum gspin = adm("gspin5");
    HilbertBasisReport r2 = hilbert_basis(gspin, 4);
    REQUIRE(r2.generators.size() == 3);
    CHECK(r2.generators[0].first == Coweight{{1, 0, 0}});  // gamma_1 = gamma
    CHECK(r2.generators[1].first == gspin.omega);          // (0,0,1), degree 2
    CHECK(r2.generators[2].first == Coweight{{1, 1, 0}});  // gamma_2
    CHECK(r2.is_free);
}

TEST_CASE("hilbert generators are irreducible") {
    for (const char* name : {"gl4", "gsp6", "gspin7"}) {
        CAPTURE(name);
        AdmissibleDatum a = adm(name);
        HilbertBasisReport r = hilbert_basis(a, 4);
        std::vector<Coweight> all;
        for (i64 k = 1; k <= 4; ++k)
            for (const Coweight& l : level_set(a, k).elements) all.push_back(l);
        for (const auto& [g, deg] : r.generators)
            for (const Coweight& x : all)
                for (const Coweight& y : all)
                    if (!is_zero(x.c) && !is_zero(y.c)) CHECK(x + y != g);
        CHECK(r.is_free);
    }
}
