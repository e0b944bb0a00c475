#include "wreathmac/quiverref.hpp"

namespace wreathmac {

CycPoly R_star(int i, const CycPoly& f) {
    const int r = f.r();
    if (i < 0 || i >= r) throw std::domain_error("R_star: residue out of range");
    CycPoly g = f;
    LaurentPoly2 qinv = LaurentPoly2::monomial(1, -1, 0);
    LaurentPoly2 tinv = LaurentPoly2::monomial(1, 0, -1);
    LaurentPoly2 qtinv = LaurentPoly2::monomial(1, -1, -1);
    LaurentPoly2 next(VarTag::qt);
    if (i == 0) next.add_term({-1, -1}, 1);  // q^-1 t^-1 delta_{i0}
    next -= qtinv * f.comp(i);
    next += tinv * f.comp(i + 1);
    next += qinv * f.comp(i - 1);
    g.comp(i) = next;
    return g;
}

CycPoly B_seed(const Partition& mu, int r) {
    CycPoly b(r);
    for (const Cell& c : mu.cells()) b.comp(imod(c.b - c.a, r)).add_term({c.a, c.b}, 1);
    return b;
}

CycPoly B_w(const WreathKey& key) {
    Partition mu = tau_w(key.w, key.mu);
    CycPoly b = B_seed(mu, key.r);
    std::vector<int> word = key.w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) b = R_star(*it, b);
    return b;
}

LaurentPoly2 nabla_eigen(const WreathKey& key, int i) {
    CycPoly b = B_w(key);
    const LaurentPoly2& comp = b.comp(i);
    const int n = key.mu.size();
    long count = 0;
    for (const auto& [e, c] : comp.terms()) {
        if (c != 1) throw InvariantViolationError("nabla_eigen: chi^" + std::to_string(i) +
                                                  " component is not a +1-monomial sum: " + comp.str());
        ++count;
    }
    if (count != n)
        throw InvariantViolationError("nabla_eigen: expected " + std::to_string(n) + " monomials, got " +
                                      std::to_string(count));
    LaurentPoly2 prod(Rat(1));
    for (const auto& [e, c] : comp.terms()) prod = prod * LaurentPoly2::monomial(1, e.a, e.b);
    return prod;
}

std::vector<IdentityReport> procesi_normalization_check(const WreathKey& key) {
    const int r = key.r;
    const int n = key.mu.size();
    if (n < 1) throw std::domain_error("procesi_normalization_check: needs n >= 1");
    std::vector<IdentityReport> out;
    CycPoly b = B_w(key);
    const MultiSymFn& h = solve_H(key);
    for (int i = 0; i < r; ++i) {
        IdentityReport rep{"procesi-chi^" + std::to_string(i), false, ""};
        RatFn2 rhs(VarTag::qt);
        if (i != 0) {
            MultiSymFn probe = MultiSymFn::embed_slot(r, SymFn::schur(Partition({n - 1})), 0) *
                               MultiSymFn::embed_slot(r, SymFn::schur(Partition({1})), i);
            rhs = probe.hall(h);
        } else if (n == 1) {
            rhs = RatFn2(1);  // s_{(n-1,1)} read as 0
        } else {
            std::vector<int> parts{n - 1, 1};
            MultiSymFn probe = MultiSymFn::embed_slot(r, SymFn::schur(Partition(std::move(parts))), 0);
            rhs = RatFn2(1) + probe.hall(h);
        }
        RatFn2 lhs(b.comp(i));
        rep.pass = lhs == rhs;
        if (!rep.pass) rep.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
        out.push_back(rep);
    }
    return out;
}

}  // namespace wreathmac
