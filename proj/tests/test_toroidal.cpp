#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreathmac/toroidal.hpp"

using namespace wreathmac;

namespace {
struct CacheSandbox {
    CacheSandbox() { set_cache_dir(""); }
};
static CacheSandbox sandbox;

RatFn2 su(int a, int b, int sign = 1) { return RatFn2(LaurentPoly2::monomial(sign, a, b, VarTag::su)); }

std::vector<RootElt> lattice_box(int r, long lim) {
    std::vector<RootElt> out;
    std::vector<long> cur(r - 1, -lim);
    while (true) {
        out.push_back(RootElt(cur));
        int i = 0;
        while (i < r - 1 && ++cur[i] > lim) cur[i++] = -lim;
        if (i == r - 1) break;
    }
    return out;
}

// test vectors: p-monomials of degree <= maxdeg at each lattice point
std::vector<VertexVec> test_vectors(int r, long lim, int maxdeg) {
    std::vector<VertexVec> out;
    for (const RootElt& a : lattice_box(r, lim))
        for (int n = 0; n <= maxdeg; ++n)
            for (const auto& mp : multipartitions_of(r, n))
                out.push_back(VertexVec::term(r, a, MultiSymFn::p(r, mp, VarTag::su)));
    return out;
}
}  // namespace

TEST_CASE("cocycle lemmas over small coordinates") {
    for (int r : {3, 4}) {
        for (const RootElt& a : lattice_box(r, 2)) {
            // (e^a)^{-1} = s(a) e^{-a}: s(a,-a) s(a) = 1
            CHECK(cocycle_sign(a, -a) * cocycle_sign(a) == 1);
            for (const RootElt& b : lattice_box(r, 1)) {
                auto [sgn, sum] = group_mult(a, b);
                CHECK(sum == a + b);
                CHECK((sgn == 1 || sgn == -1));
                // cocycle identity s(a,b) s(a+b,c) = s(b,c) s(a,b+c) ensures associativity
                RootElt c = RootElt::simple(r, 1);
                CHECK(cocycle_sign(a, b) * cocycle_sign(a + b, c) ==
                      cocycle_sign(b, c) * cocycle_sign(a, b + c));
            }
        }
        for (int i = 1; i < r; ++i) CHECK(cocycle_sign(RootElt::simple(r, i)) == 1);
        CHECK(cocycle_sign(RootElt::simple(r, 0)) == (r % 2 ? -1 : 1));
    }
}

TEST_CASE("h modes satisfy the heisenberg relation with C_v = s^2") {
    const int r = 3;
    RatFn2 p = su(2, 0);
    RatFn2 pdiff = p - p.inverse();
    auto vecs = test_vectors(r, 1, 2);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k : {1, 2}) {
                // [h_{i,k}, h_{j,-k}] = d^{-k m_ij} (p^{k a_ij} - p^{-k a_ij}) (C^k - C^-k) / (k (p-p^-1)^2)
                int aij = i == j ? 2 : (imod(i - j, r) == 1 || imod(j - i, r) == 1 ? -1 : 0);
                int mij = imod(i - j, r) == 1 ? 1 : (imod(j - i, r) == 1 ? -1 : 0);
                RatFn2 dkm = su(0, -2 * k * mij);
                RatFn2 paij = aij == 0 ? RatFn2(0, VarTag::su) : su(2 * k * aij, 0) - su(-2 * k * aij, 0);
                RatFn2 ck = su(2 * k, 0) - su(-2 * k, 0);
                RatFn2 want = dkm * paij * ck / (pdiff * pdiff) / RatFn2(Rat(k), VarTag::su);
                for (const auto& v : vecs) {
                    VertexVec lhs = act_h(i, k, act_h(j, -k, v)) - act_h(j, -k, act_h(i, k, v));
                    CHECK(lhs == v.scaled(want));
                }
            }
}

TEST_CASE("h-e relation spot check") {
    const int r = 3;
    RatFn2 p = su(2, 0);
    RatFn2 pdiff = p - p.inverse();
    auto vecs = test_vectors(r, 1, 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k : {1, -1}) {
                const int l = 0;
                int aij = i == j ? 2 : (imod(i - j, r) == 1 || imod(j - i, r) == 1 ? -1 : 0);
                int mij = imod(i - j, r) == 1 ? 1 : (imod(j - i, r) == 1 ? -1 : 0);
                // [h_{i,k}, e_{j,l}] = (C_v^{-|k|/2} d^{-m_ij k}/k) (p^{k a_ij}-p^{-k a_ij})/(p-p^-1) e_{j,k+l}
                // C_v^{1/2} acts as s, so C_v^{-|k|/2} = s^{-|k|}.
                RatFn2 cterm = su(-std::abs(k), 0);
                RatFn2 dterm = su(0, -2 * mij * k);
                RatFn2 pa = aij == 0 ? RatFn2(0, VarTag::su) : su(2 * k * aij, 0) - su(-2 * k * aij, 0);
                RatFn2 want = cterm * dterm * pa / pdiff / RatFn2(Rat(k), VarTag::su);
                for (const auto& v : vecs) {
                    VertexVec lhs = act_h(i, k, act_e(j, l, v)) - act_e(j, l, act_h(i, k, v));
                    VertexVec rhs = act_e(j, k + l, v).scaled(want);
                    CHECK(lhs == rhs);
                }
            }
}

TEST_CASE("[e,f] relation at small modes") {
    const int r = 3;
    RatFn2 p = su(2, 0);
    RatFn2 pdiff = p - p.inverse();
    auto vecs = test_vectors(r, 1, 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k : {0, 1})
                for (int l : {0, -1}) {
                    for (const auto& v : vecs) {
                        VertexVec lhs = act_e(i, k, act_f(j, l, v)) - act_f(j, l, act_e(i, k, v));
                        if (i != j) {
                            CHECK(lhs.is_zero());
                            continue;
                        }
                        // s^{k-l} (psi^+_{i,k+l} - psi^-_{i,k+l})/(p - p^-1)
                        VertexVec rhs(r);
                        int n = k + l;
                        if (n >= 0) rhs = rhs + act_psi_plus(i, n, v);
                        if (n <= 0) rhs = rhs - act_psi_minus(i, n, v);
                        rhs = rhs.scaled(su(k - l, 0) / pdiff);
                        CHECK(lhs == rhs);
                    }
                }
}

TEST_CASE("serre relations on degree <= 1") {
    const int r = 3;
    auto vecs = test_vectors(r, 1, 1);
    RatFn2 p = su(2, 0), pinv = su(-2, 0);
    for (bool is_e : {true, false})
        for (int i = 0; i < r; ++i)
            for (int pm : {1, -1}) {
                int j = static_cast<int>(imod(i + pm, r));
                auto ap = [&](int ii, int kk, const VertexVec& w) {
                    return is_e ? act_e(ii, kk, w) : act_f(ii, kk, w);
                };
                // [x_{i,k1},[x_{i,k2}, x_{j,l}]_p]_{p^-1} + (k1 <-> k2) = 0 at k1=k2=l=0,
                // where the two summands coincide, so one vanishing suffices... it does not:
                // with k1 = k2 both terms are equal, so check 2*[x_{i,0},[x_{i,0},x_{j,0}]_p]_{p^-1} = 0.
                for (const auto& v : vecs) {
                    VertexVec inner = ap(i, 0, ap(j, 0, v)) - ap(j, 0, ap(i, 0, v)).scaled(p);
                    VertexVec lhs = ap(i, 0, inner);
                    // [x_{i,0}, inner]_{p^-1} = x_{i,0} inner - p^-1 inner x_{i,0};
                    // "inner x_{i,0}" means apply x_{i,0} first, then the inner bracket.
                    VertexVec w1 = ap(i, 0, v);
                    VertexVec inner_after = ap(i, 0, ap(j, 0, w1)) - ap(j, 0, ap(i, 0, w1)).scaled(p);
                    VertexVec serre = lhs - inner_after.scaled(pinv);
                    CHECK(serre.is_zero());
                }
            }
}

TEST_CASE("wen theorem on quotients of size <= 1 over all four cores") {
    const int r = 3;
    for (const Partition& core : {Partition(), Partition({1}), Partition({2}), Partition({1, 1})}) {
        RootVec beta = kappa_bar(core, r);
        for (int n = 0; n <= 1; ++n)
            for (const auto& quot : multipartitions_of(r, n)) {
                Partition mu = tau(quot, beta);
                VertexVec v = embed_H(mu, r);
                for (int i = 0; i < r; ++i) {
                    RatFn2 eig = RatFn2(A_component(mu, r, i, false).to_su());
                    RatFn2 eig_inv = RatFn2(A_component(mu, r, i, true).to_su());
                    CHECK(eigen_op(i, true, v) == v.scaled(eig));
                    CHECK(eigen_op(i, false, v) == v.scaled(eig_inv));
                }
            }
    }
}
