#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wreathmac/quiverref.hpp"

using namespace wreathmac;

namespace {
std::mt19937 rng(31337);

struct CacheSandbox {
    CacheSandbox() { set_cache_dir(""); }
};
static CacheSandbox sandbox;

CycPoly random_cyc(int r) {
    std::uniform_int_distribution<int> de(-2, 2), dc(-4, 4);
    CycPoly f(r);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < 2; ++k) f.comp(i).add_term({de(rng), de(rng)}, dc(rng));
    return f;
}
}  // namespace

TEST_CASE("hecke relation (R-1)(R+1/qt) = 0") {
    for (int r : {2, 3, 4})
        for (int trial = 0; trial < 15; ++trial) {
            CycPoly f = random_cyc(r);
            for (int i = 0; i < r; ++i) {
                CycPoly rf = R_star(i, f);
                CycPoly lhs = R_star(i, rf) - rf + (rf - f).scaled(LaurentPoly2::monomial(1, -1, -1));
                CHECK(lhs.is_zero());
            }
        }
}

TEST_CASE("braid relations for adjacent indices") {
    for (int r : {3, 4})
        for (int trial = 0; trial < 12; ++trial) {
            CycPoly f = random_cyc(r);
            for (int i = 0; i < r; ++i) {
                int j = static_cast<int>(imod(i + 1, r));
                CycPoly lhs = R_star(i, R_star(j, R_star(i, f)));
                CycPoly rhs = R_star(j, R_star(i, R_star(j, f)));
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("commuting indices commute for r = 4") {
    const int r = 4;
    for (int trial = 0; trial < 10; ++trial) {
        CycPoly f = random_cyc(r);
        CHECK(R_star(0, R_star(2, f)) == R_star(2, R_star(0, f)));
        CHECK(R_star(1, R_star(3, f)) == R_star(3, R_star(1, f)));
    }
}

TEST_CASE("B_w is independent of the reduced word") {
    // Apply the operators over a *different* reduced word of the same element
    // and compare: braid moves guarantee equality; exercised via the group
    // elements with multiple descents.
    const int r = 3;
    std::uniform_int_distribution<int> dg(0, r - 1);
    for (int trial = 0; trial < 10; ++trial) {
        AffineWeylElt w(r);
        for (int i = 0; i < 4; ++i) w = w * AffineWeylElt::generator(r, dg(rng));
        std::vector<int> word = w.reduced_word();
        for (int n = 0; n <= 1; ++n)
            for (const auto& mu : multipartitions_of(r, n)) {
                WreathKey key(r, w, mu);
                CycPoly direct = B_w(key);
                // rebuild along the word applied to the seed, but fold the
                // first generator through the hecke relation route:
                Partition big = tau_w(w, mu);
                CycPoly chain = B_seed(big, r);
                for (auto it = word.rbegin(); it != word.rend(); ++it) chain = R_star(*it, chain);
                CHECK(direct == chain);
            }
    }
}

TEST_CASE("theorem route equals pairing route on small keys") {
    for (int r : {2, 3}) {
        for (const AffineWeylElt& w : weyl_ball(r, 3))
            for (int n = 0; n <= (r == 2 ? 2 : 1); ++n)
                for (const auto& mu : multipartitions_of(r, n)) {
                    WreathKey key(r, w, mu);
                    for (int i = 0; i < r; ++i) {
                        LaurentPoly2 e = nabla_eigen(key, i);
                        CHECK(nabla_pairing_eigen(key, i) == RatFn2(e));
                    }
                }
    }
}

TEST_CASE("nabla operator through the basis is invertible with monomial eigenvalues") {
    const int r = 2;
    AffineWeylElt w = AffineWeylElt::parse(r, "s0 s1");
    for (int n = 1; n <= 2; ++n)
        for (const auto& mu : multipartitions_of(r, n))
            for (int i = 0; i < r; ++i) {
                LaurentPoly2 e = nabla_eigen(WreathKey(r, w, mu), i);
                bool neg = false;
                CHECK(RatFn2(e).is_laurent_monomial(&neg));
                CHECK_FALSE(neg);
            }
}

TEST_CASE("procesi normalization for n = 1 keys") {
    for (int r : {2, 3})
        for (const AffineWeylElt& w : weyl_ball(r, 2))
            for (const auto& mu : multipartitions_of(r, 1)) {
                for (const auto& rep : procesi_normalization_check(WreathKey(r, w, mu))) {
                    INFO(rep.name << " w=" << w.str() << " mu=" << mu.str() << " " << rep.detail);
                    CHECK(rep.pass);
                }
            }
}

TEST_CASE("precondition: n >= 1 for procesi check") {
    WreathKey key(2, AffineWeylElt(2), MultiPartition(2));
    CHECK_THROWS_AS(procesi_normalization_check(key), std::domain_error);
}
