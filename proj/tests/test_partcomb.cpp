#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wreathmac/quotcore.hpp"

using namespace wreathmac;

namespace {
std::mt19937 rng(777);

AffineWeylElt random_word(int r, int len) {
    std::uniform_int_distribution<int> dg(0, r - 1);
    AffineWeylElt w(r);
    for (int i = 0; i < len; ++i) w = w * AffineWeylElt::generator(r, dg(rng));
    return w;
}
}  // namespace

TEST_CASE("maya roundtrip and charge balance") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : partitions_of(n))
            for (long c : {-2L, 0L, 3L}) {
                MayaDiagram b(mu, c);
                // collect holes in a window and rebuild
                std::set<long> holes;
                long lo = c - n - 4, hi = c + n + 4;
                for (long p = lo; p < hi; ++p)
                    if (b.hole_at(p)) holes.insert(p);
                MayaDiagram back = MayaDiagram::from_holes(holes, lo, hi);
                CHECK(back.shape() == mu);
                CHECK(back.charge() == c);
                // balance: holes below charge match beads at or above it
                long nh = 0, nb = 0;
                for (long p = lo; p < c; ++p)
                    if (b.hole_at(p)) ++nh;
                for (long p = c; p < hi; ++p)
                    if (!b.hole_at(p)) ++nb;
                CHECK(nh == nb);
            }
}

TEST_CASE("transpose is an involution with equal size") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& mu : partitions_of(n)) {
            CHECK(mu.transpose().transpose() == mu);
            CHECK(mu.transpose().size() == mu.size());
        }
}

TEST_CASE("quot/core/tau roundtrips") {
    for (int r : {2, 3, 4})
        for (int n = 0; n <= 8; ++n)
            for (const Partition& mu : partitions_of(n)) {
                QuotCore qc = quot_core(mu, r);
                CHECK(mu.size() == qc.core.size() + r * qc.quot.size());
                CHECK(tau(qc.quot, qc.charges) == mu);
                CHECK(kappa_bar(mu, r) == qc.charges);
                CHECK(kappa_bar(qc.core, r) == qc.charges);
                CHECK(core_of_root(qc.charges) == qc.core);
            }
}

TEST_CASE("transpose compatibility of core and quotient") {
    for (int r : {2, 3})
        for (int n = 0; n <= 8; ++n)
            for (const Partition& mu : partitions_of(n)) {
                QuotCore a = quot_core(mu.transpose(), r);
                QuotCore b = quot_core(mu, r);
                CHECK(a.core == b.core.transpose());
                CHECK(a.quot == b.quot.star());
            }
}

TEST_CASE("Core(beta)^t = Core(-w0 beta)") {
    for (int r : {2, 3}) {
        std::vector<std::vector<long>> coords;
        std::vector<long> cur(r, 0);
        auto rec = [&](auto&& self, int idx, long sum) -> void {
            if (idx == r - 1) {
                cur[idx] = -sum;
                if (std::abs(cur[idx]) <= 2) coords.push_back(cur);
                return;
            }
            for (long v = -2; v <= 2; ++v) {
                cur[idx] = v;
                self(self, idx + 1, sum + v);
            }
        };
        rec(rec, 0, 0);
        std::vector<int> w0(r);
        for (int i = 0; i < r; ++i) w0[i] = r - 1 - i;
        for (const auto& c : coords) {
            RootVec beta(c);
            RootVec neg_w0 = -beta.permuted(w0);
            CHECK(core_of_root(beta).transpose() == core_of_root(neg_w0));
        }
    }
}

TEST_CASE("weyl group axioms") {
    for (int r : {2, 3, 4}) {
        for (int i = 0; i < r; ++i) {
            AffineWeylElt s = AffineWeylElt::generator(r, i);
            CHECK((s * s).is_identity());
            CHECK(s.star() == AffineWeylElt::generator(r, static_cast<int>(imod(-i, r))));
        }
        if (r >= 3)
            for (int i = 0; i < r; ++i) {
                int j = static_cast<int>(imod(i + 1, r));
                AffineWeylElt si = AffineWeylElt::generator(r, i), sj = AffineWeylElt::generator(r, j);
                CHECK(si * sj * si == sj * si * sj);
            }
        for (int trial = 0; trial < 10; ++trial) {
            AffineWeylElt a = random_word(r, 3), b = random_word(r, 3), c = random_word(r, 2);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a.star().star() == a);
            CHECK((a * a.inverse()).is_identity());
        }
    }
}

TEST_CASE("length agrees with BFS and reduced words multiply back") {
    for (int r : {2, 3}) {
        // BFS depth 6: record minimal word length per element
        std::map<AffineWeylElt, int> dist;
        std::vector<AffineWeylElt> frontier{AffineWeylElt(r)};
        dist[AffineWeylElt(r)] = 0;
        for (int depth = 1; depth <= 6; ++depth) {
            std::vector<AffineWeylElt> next;
            for (const auto& w : frontier)
                for (int i = 0; i < r; ++i) {
                    AffineWeylElt v = AffineWeylElt::generator(r, i) * w;
                    if (dist.emplace(v, depth).second) next.push_back(v);
                }
            frontier = std::move(next);
        }
        for (const auto& [w, len] : dist) {
            CHECK(w.length() == len);
            std::vector<int> word = w.reduced_word();
            CHECK(static_cast<int>(word.size()) == len);
            AffineWeylElt prod(r);
            for (int i : word) prod = prod * AffineWeylElt::generator(r, i);
            CHECK(prod == w);
        }
    }
}

TEST_CASE("(w lambda)^t = w* lambda^t") {
    for (int r : {2, 3})
        for (int trial = 0; trial < 12; ++trial) {
            AffineWeylElt w = random_word(r, 4);
            for (int n = 0; n <= 6; n += 3)
                for (const Partition& lam : partitions_of(n)) {
                    CHECK(weyl_act_partition(w, lam).transpose() ==
                          weyl_act_partition(w.star(), lam.transpose()));
                }
        }
}

TEST_CASE("tau is equivariant for the affine Weyl action") {
    for (int r : {2, 3})
        for (int trial = 0; trial < 10; ++trial) {
            AffineWeylElt w = random_word(r, 4);
            for (const auto& mu : multipartitions_of(r, 2)) {
                RootVec alpha = r == 2 ? RootVec({1, -1}) : RootVec({1, 0, -1});
                auto [m2, a2] = weyl_act_pair(w, mu, alpha);
                CHECK(weyl_act_partition(w, tau(mu, alpha)) == tau(m2, a2));
            }
        }
}

TEST_CASE("dominance-order pullback properties") {
    const int r = 3;
    AffineWeylElt w = random_word(r, 3);
    const auto& mps = multipartitions_of(r, 3);
    // partial order: antisymmetry and transitivity
    for (const auto& a : mps)
        for (const auto& b : mps) {
            bool ab = order_ge_w(w, a, b), ba = order_ge_w(w, b, a);
            if (ab && ba) CHECK(a == b);
            for (const auto& c : mps)
                if (ab && order_ge_w(w, b, c)) CHECK(order_ge_w(w, a, c));
        }
    // S_I equivariance: a >=_w b iff u(a) >=_{uw} u(b)
    for (int i = 1; i < r; ++i) {
        AffineWeylElt u = AffineWeylElt::generator(r, i);
        for (const auto& a : mps)
            for (const auto& b : mps) {
                CHECK(order_ge_w(w, a, b) ==
                      order_ge_w(u * w, a.permuted(u.u()), b.permuted(u.u())));
            }
    }
}
