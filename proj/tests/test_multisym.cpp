#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wreathmac/multisym.hpp"

using namespace wreathmac;

namespace {
std::mt19937 rng(99);

MatRF random_matrix(int r) {
    std::uniform_int_distribution<int> dc(-2, 2), de(0, 1);
    MatRF m(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            LaurentPoly2 p(VarTag::qt);
            p.add_term({de(rng), de(rng)}, dc(rng));
            m.at(i, j) = RatFn2(p);
        }
    return m;
}

MultiSymFn random_multisym(int r, int maxdeg = 3) {
    std::uniform_int_distribution<int> dd(0, maxdeg), dc(-3, 3);
    MultiSymFn f(r);
    for (int i = 0; i < 3; ++i) {
        const auto& mps = multipartitions_of(r, dd(rng));
        std::uniform_int_distribution<size_t> dp(0, mps.size() - 1);
        f += MultiSymFn::p(r, mps[dp(rng)]).scaled(RatFn2(dc(rng)));
    }
    return f;
}
}  // namespace

TEST_CASE("matrix plethysm is covariantly functorial") {
    for (int r : {2, 3})
        for (int trial = 0; trial < 6; ++trial) {
            MatRF m1 = random_matrix(r), m2 = random_matrix(r);
            MultiSymFn f = random_multisym(r);
            CHECK(matrix_plethysm(m1 * m2, f) == matrix_plethysm(m1, matrix_plethysm(m2, f)));
        }
}

TEST_CASE("omega commutes with matrix plethysms and is the signed antipode") {
    const int r = 3;
    for (int trial = 0; trial < 6; ++trial) {
        MatRF m = random_matrix(r);
        MultiSymFn f = random_multisym(r);
        CHECK(matrix_plethysm(m, f.omega()) == matrix_plethysm(m, f).omega());
        for (int dg = 0; dg <= 3; ++dg) {
            MultiSymFn part = f.homogeneous_part(dg);
            MultiSymFn signed_antipode = matrix_plethysm(-MatRF::identity(r), part).scaled(RatFn2(dg % 2 ? -1 : 1));
            CHECK(part.omega() == signed_antipode);
        }
    }
}

TEST_CASE("tensor schur reproducing kernel at degree <= 3") {
    const int r = 2;
    for (int n = 0; n <= 3; ++n) {
        const auto& mps = multipartitions_of(r, n);
        for (const auto& a : mps)
            for (const auto& b : mps)
                CHECK(MultiSymFn::schur(r, a).hall(MultiSymFn::schur(r, b)) == RatFn2(a == b ? 1 : 0));
    }
}

TEST_CASE("qt dual bases of both kinds") {
    for (int r : {2, 3})
        for (int n = 1; n <= 2; ++n) {
            const auto& mps = multipartitions_of(r, n);
            MatRF id = MatRF::identity(r);
            RatFn2 q(LaurentPoly2::var1()), t(LaurentPoly2::var2());
            MatRF m1 = mat_inverse(id - chi_matrix(r, -1).scaled(q));
            MatRF m2 = MatRF::permutation(perm_neg(r)) * mat_inverse(id - chi_matrix(r, -1).scaled(t));
            for (const auto& a : mps)
                for (const auto& b : mps) {
                    RatFn2 v1 = pair_qt(MultiSymFn::schur(r, a).substitute(A_matrix(r)), MultiSymFn::schur(r, b));
                    CHECK(v1 == RatFn2(a == b ? 1 : 0));
                    RatFn2 v2 = pair_qt(matrix_plethysm(m1, MultiSymFn::schur(r, a)),
                                        matrix_plethysm(m2, MultiSymFn::schur(r, b)));
                    CHECK(v2 == RatFn2(a == b ? 1 : 0));
                }
        }
}

TEST_CASE("pairings are bilinear and degree-diagonal") {
    const int r = 2;
    MultiSymFn f = MultiSymFn::schur(r, multipartitions_of(r, 1)[0]);
    MultiSymFn g = MultiSymFn::schur(r, multipartitions_of(r, 2)[0]);
    CHECK(pair_qt(f, g) == RatFn2(0));
    CHECK(pair_P(f, g) == RatFn2(0));
    MultiSymFn h = random_multisym(r);
    CHECK(pair_qt(f + g, h) == pair_qt(f, h) + pair_qt(g, h));
}

TEST_CASE("multisym perp is the hall adjoint") {
    const int r = 2;
    for (int trial = 0; trial < 8; ++trial) {
        MultiSymFn f = random_multisym(r, 3), g = random_multisym(r, 1), h = random_multisym(r, 3);
        CHECK(perp(g, f).hall(h) == f.hall(g * h));
    }
}

TEST_CASE("vector plethysm matches slot embedding on unit rows") {
    const int r = 3;
    SymFn s21 = SymFn::schur(Partition({2, 1}));
    for (int slot = 0; slot < r; ++slot) {
        std::vector<RatFn2> row(r, RatFn2(0));
        row[slot] = RatFn2(1);
        CHECK(vector_plethysm(s21, row) == MultiSymFn::embed_slot(r, s21, slot));
    }
}
