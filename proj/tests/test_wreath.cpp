#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "wreathmac/jsonio.hpp"
#include "wreathmac/macdonald.hpp"
#include "wreathmac/wreath.hpp"

using namespace wreathmac;

namespace {
struct CacheSandbox {
    CacheSandbox() { set_cache_dir(""); }
};
static CacheSandbox sandbox;

MultiPartition MP(const std::string& s) { return MultiPartition::parse(s); }
}  // namespace

TEST_CASE("defining conditions hold for solved polynomials") {
    const int r = 2;
    RatFn2 q(LaurentPoly2::var1());
    RatFn2 tinv(LaurentPoly2::monomial(1, 0, -1));
    MatRF cq = MatRF::identity(r) - chi_matrix(r, -1).scaled(q);
    MatRF ct = MatRF::identity(r) - chi_matrix(r, -1).scaled(tinv);
    for (const AffineWeylElt& w : weyl_ball(r, 2))
        for (int n = 1; n <= 2; ++n)
            for (const auto& mu : multipartitions_of(r, n)) {
                WreathKey key(r, w, mu);
                const MultiSymFn& h = solve_H(key);
                for (const auto& [lam, c] : matrix_plethysm(cq, h).schur_expansion())
                    CHECK(order_ge_w(w, lam, mu));
                for (const auto& [lam, c] : matrix_plethysm(ct, h).schur_expansion())
                    CHECK(order_ge_w(w, mu, lam));
                MultiPartition norm(r);
                norm.comp(0) = Partition({n});
                CHECK(h.schur_coeff(norm) == RatFn2(1));
            }
}

TEST_CASE("uniqueness: perturbing any schur coefficient breaks a condition") {
    const int r = 2;
    AffineWeylElt w = AffineWeylElt::parse(r, "s0");
    MultiPartition mu = MP("[[1],[1]]");
    WreathKey key(r, w, mu);
    const MultiSymFn& h = solve_H(key);
    RatFn2 q(LaurentPoly2::var1());
    RatFn2 tinv(LaurentPoly2::monomial(1, 0, -1));
    MatRF cq = MatRF::identity(r) - chi_matrix(r, -1).scaled(q);
    MatRF ct = MatRF::identity(r) - chi_matrix(r, -1).scaled(tinv);
    MultiPartition norm(r);
    norm.comp(0) = Partition({2});
    for (const auto& lam : multipartitions_of(r, 2)) {
        MultiSymFn pert = h + MultiSymFn::schur(r, lam);
        bool broken = false;
        for (const auto& [nu, c] : matrix_plethysm(cq, pert).schur_expansion())
            if (!order_ge_w(w, nu, mu)) broken = true;
        for (const auto& [nu, c] : matrix_plethysm(ct, pert).schur_expansion())
            if (!order_ge_w(w, mu, nu)) broken = true;
        if (!(pert.schur_coeff(norm) == RatFn2(1))) broken = true;
        CHECK(broken);
    }
}

TEST_CASE("orthogonality of the wreath basis") {
    for (int r : {2, 3}) {
        AffineWeylElt w = AffineWeylElt::parse(r, r == 2 ? "s1 s0" : "s2 t[1,-1,0]");
        for (int n = 1; n <= 2; ++n) {
            const auto& mps = multipartitions_of(r, n);
            for (const auto& a : mps)
                for (const auto& b : mps) {
                    if (a == b) continue;
                    MultiSymFn hb = solve_H(WreathKey(r, w, b));
                    MultiSymFn dual = perm_plethysm(perm_neg(r), hb).map_coeffs(
                        [](const RatFn2& c) { return c.subst_inverse(); });
                    CHECK(pair_qt(solve_H(WreathKey(r, w, a)), dual) == RatFn2(0));
                }
        }
    }
}

TEST_CASE("kostka invariants on a small sweep") {
    const int r = 2;
    for (const AffineWeylElt& w : weyl_ball(r, 2))
        for (int n = 0; n <= 2; ++n)
            for (const auto& mu : multipartitions_of(r, n)) {
                KostkaReport rep = check_kostka(WreathKey(r, w, mu));
                CHECK(rep.positive);
                CHECK(rep.gamma_graded);
                CHECK(rep.counts_match);
            }
}

TEST_CASE("multitableaux count formula") {
    CHECK(multitableaux_count(MP("[[],[],[]]")) == 1);
    CHECK(multitableaux_count(MP("[[1],[],[1]]")) == 2);
    CHECK(multitableaux_count(MP("[[2,1],[1]]")) == 8);
}

TEST_CASE("symmetries at r=3, n=1") {
    const int r = 3;
    for (const char* wtext : {"t[1,-1,0]", "s2 s1 t[1,-1,0]"}) {
        WreathKey key(r, AffineWeylElt::parse(r, wtext), MP("[[],[1],[]]"));
        for (const auto& rep : check_symmetries(key)) {
            INFO(rep.name << ": " << rep.detail);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("norm theorem and inversion identity, r=2") {
    const int r = 2;
    for (const AffineWeylElt& w : weyl_ball(r, 2))
        for (int n = 0; n <= 2; ++n)
            for (const auto& mu : multipartitions_of(r, n)) {
                WreathKey key(r, w, mu);
                RatFn2 b = norm_b_pairing(key);
                CHECK(b == norm_b_formula(key));
                RatFn2 qtn(LaurentPoly2::monomial(1, n, n));
                CHECK(qtn * b.subst_inverse() == b);
            }
}

TEST_CASE("wreath P is monic and P-orthogonal") {
    const int r = 2;
    AffineWeylElt w = AffineWeylElt::parse(r, "s0 s1");
    for (int n = 1; n <= 2; ++n) {
        const auto& mps = multipartitions_of(r, n);
        for (const auto& mu : mps) {
            JPResult jp = J_and_P(WreathKey(r, w, mu));
            CHECK(jp.P.schur_coeff(mu) == RatFn2(1));
            for (const auto& [lam, c] : jp.P.schur_expansion())
                CHECK(order_ge_w(w, mu, lam));
            for (const auto& nu : mps) {
                if (nu == mu) continue;
                JPResult jp2 = J_and_P(WreathKey(r, w, nu));
                MultiSymFn dual = perm_plethysm(perm_neg(r), jp2.P).map_coeffs(
                    [](const RatFn2& c) { return c.subst_inverse(); });
                CHECK(pair_P(jp.P, dual) == RatFn2(0));
            }
        }
    }
}

TEST_CASE("conjecture evidence on the small range") {
    const int r = 2;
    for (const AffineWeylElt& w : weyl_ball(r, 2))
        for (int n = 0; n <= 2; ++n)
            for (const auto& mu : multipartitions_of(r, n))
                for (const auto& rep : check_conjectures(WreathKey(r, w, mu))) {
                    INFO(rep.name << " at w=" << w.str() << " mu=" << mu.str() << ": " << rep.detail);
                    CHECK(rep.pass);
                }
}

TEST_CASE("factorization agrees with the solver at small degree") {
    const int r = 3;
    for (int n = 0; n <= 1; ++n)
        for (const auto& mu : multipartitions_of(r, n)) {
            MultiSymFn f = factor_generic(r, mu);
            CHECK(solve_H(WreathKey(r, antidominant_translation(r, n + 1), mu)) == f);
            CHECK(solve_H(WreathKey(r, antidominant_translation(r, n + 2), mu)) == f);
        }
}

TEST_CASE("disk cache round trips bit-identically") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wreathmac-test-cache";
    fs::remove_all(dir);
    set_cache_dir(dir.string());
    WreathKey key(2, AffineWeylElt::parse(2, "s0"), MP("[[1],[1]]"));
    MultiSymFn first = solve_H(key);
    REQUIRE(fs::exists(dir));
    size_t files = std::distance(fs::directory_iterator(dir), fs::directory_iterator{});
    CHECK(files == 1);
    // reread through the file
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path());
        std::stringstream buf;
        buf << in.rdbuf();
        auto [k, value] = cache_entry_from_json(buf.str(), 2);
        CHECK(k == key.canonical_json());
        CHECK(value == first);
    }
    set_cache_dir("");
    fs::remove_all(dir);
}

TEST_CASE("forward and opposite variants solve and differ as expected") {
    const int r = 3;
    WreathKey key(r, AffineWeylElt::parse(r, "t[1,-1,0]"), MP("[[],[1],[]]"));
    WreathKey fkey(r, key.w, key.mu, WreathVariant::forward);
    WreathKey okey(r, key.w, key.mu, WreathVariant::opposite);
    const MultiSymFn& h = solve_H(key);
    const MultiSymFn& hf = solve_H(fkey);
    const MultiSymFn& ho = solve_H(okey);
    CHECK_FALSE(h == hf);
    MultiSymFn invswap = h.map_coeffs([](const RatFn2& c) { return c.subst_inverse().swap_vars(); });
    CHECK(ho == invswap);
}
