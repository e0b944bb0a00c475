#include "wreathmac/macdonald.hpp"

#include <map>
#include <mutex>

namespace wreathmac {

const SymFn& macdonald_P(const Partition& mu) {
    static std::mutex mtx;
    static std::map<Partition, SymFn> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    // Gram-Schmidt: P_mu = m_mu - sum_{lam < mu} (<m_mu, P_lam>/<P_lam, P_lam>) P_lam,
    // over partitions strictly below mu in dominance.
    SymFn p = SymFn::monomial(mu);
    for (const Partition& lam : partitions_of(mu.size())) {
        if (lam == mu || !mu.dominates(lam)) continue;
        const SymFn& plam = macdonald_P(lam);
        RatFn2 c = SymFn::monomial(mu).qt_pairing(plam) / plam.qt_pairing(plam);
        p -= plam.scaled(c);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(mu, std::move(p)).first->second;
}

SymFn macdonald_J(const Partition& mu) {
    LaurentPoly2 q = LaurentPoly2::var1(), t = LaurentPoly2::var2(), one(Rat(1));
    RatFn2 c(1);
    for (const Cell& s : mu.cells()) {
        HookData h = mu.hook_data(s);
        c *= RatFn2(one - q.pow(h.arm) * t.pow(h.leg + 1));
    }
    return macdonald_P(mu).scaled(c);
}

const SymFn& tilde_H(const Partition& mu) {
    static std::mutex mtx;
    static std::map<Partition, SymFn> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(mu);
        if (it != cache.end()) return it->second;
    }
    LaurentPoly2 t = LaurentPoly2::var2(), one(Rat(1));
    SymFn j = macdonald_J(mu);
    SymFn h = j.pleth_sub(RatFn2(one, one - t), RatFn2(0));
    h = h.map_coeffs([](const RatFn2& c) { return c.subst_second_inverse(); });
    h = h.scaled(RatFn2(t.pow(static_cast<int>(mu.n_stat()))));
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(mu, std::move(h)).first->second;
}

NPoly macdonald_MN(int N, const NPoly& f) {
    if (f.nvars() != N) throw SizeMismatchError("macdonald_MN: variable count mismatch");
    if (!f.is_symmetric()) throw NonSymmetricError("macdonald_MN: input is not symmetric");
    LaurentPoly2 t = LaurentPoly2::var2();
    // Common denominator prod_{i<j} (x_i - x_j); the k-th summand carries
    // sign flips for the factors (x_k - x_l) with l < k.
    NPoly acc(N, VarTag::qt);
    for (int k = 0; k < N; ++k) {
        NPoly num = f.q_shift(k);
        int sign = 0;
        for (int l = 0; l < N; ++l) {
            if (l == k) continue;
            NPoly txk = NPoly::variable(N, k).scaled(RatFn2(t));
            num = num * (txk - NPoly::variable(N, l));
            if (l < k) ++sign;  // orient (x_k - x_l) as -(x_l - x_k)
        }
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                if (i == k || j == k) continue;
                num = num * (NPoly::variable(N, i) - NPoly::variable(N, j));
            }
        acc = acc + (sign % 2 ? -num : num);
    }
    NPoly vandermonde = NPoly::constant(N, RatFn2(1));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            vandermonde = vandermonde * (NPoly::variable(N, i) - NPoly::variable(N, j));
    return acc.divided_by(vandermonde);
}

SymFn apply_D0(const SymFn& f) {
    LaurentPoly2 q = LaurentPoly2::var1(), t = LaurentPoly2::var2(), one(Rat(1));
    VertexHalfSpec cr{VertexHalfSpec::Side::creation, RatFn2(t - one)};
    VertexHalfSpec an{VertexHalfSpec::Side::annihilation, RatFn2(q - one, t)};
    return vertex_mode(cr, an, 0, f);
}

SymFn apply_tilde_D0(const SymFn& f) {
    LaurentPoly2 q = LaurentPoly2::var1(), t = LaurentPoly2::var2(), one(Rat(1));
    VertexHalfSpec cr{VertexHalfSpec::Side::creation, RatFn2(-1)};
    VertexHalfSpec an{VertexHalfSpec::Side::annihilation, RatFn2((one - q) * (one - t))};
    return vertex_mode(cr, an, 0, f);
}

SymFn apply_tilde_D0_star(const SymFn& f) {
    LaurentPoly2 qi = LaurentPoly2::monomial(1, -1, 0), ti = LaurentPoly2::monomial(1, 0, -1), one(Rat(1));
    VertexHalfSpec cr{VertexHalfSpec::Side::creation, RatFn2(1)};
    VertexHalfSpec an{VertexHalfSpec::Side::annihilation, -RatFn2((one - qi) * (one - ti))};
    return vertex_mode(cr, an, 0, f);
}

LaurentPoly2 B_poly(const Partition& mu) {
    LaurentPoly2 b(VarTag::qt);
    for (const Cell& c : mu.cells()) b.add_term({c.a, c.b}, 1);
    return b;
}

LaurentPoly2 A_poly(const Partition& mu, bool inverse) {
    LaurentPoly2 one(Rat(1));
    LaurentPoly2 q = LaurentPoly2::var1(), t = LaurentPoly2::var2();
    LaurentPoly2 a = one - (one - q) * (one - t) * B_poly(mu);
    return inverse ? a.subst_inverse() : a;
}

}  // namespace wreathmac
