#include "wreathmac/npoly.hpp"

#include <algorithm>

namespace wreathmac {

NPoly NPoly::constant(int nvars, const RatFn2& c) {
    NPoly p(nvars, c.tag());
    p.add_term(Exps(nvars, 0), c);
    return p;
}

NPoly NPoly::variable(int nvars, int i) {
    NPoly p(nvars);
    Exps e(nvars, 0);
    e[i] = 1;
    p.add_term(e, RatFn2(1));
    return p;
}

void NPoly::add_term(const Exps& e, const RatFn2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NPoly NPoly::operator-() const {
    NPoly p(nvars_, tag_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

NPoly operator+(NPoly x, const NPoly& y) {
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
}

NPoly operator-(NPoly x, const NPoly& y) {
    for (const auto& [e, c] : y.terms_) x.add_term(e, -c);
    return x;
}

NPoly operator*(const NPoly& x, const NPoly& y) {
    NPoly p(x.nvars_, x.tag_);
    for (const auto& [e1, c1] : x.terms_)
        for (const auto& [e2, c2] : y.terms_) {
            NPoly::Exps e(e1);
            for (int i = 0; i < x.nvars_; ++i) e[i] += e2[i];
            p.add_term(e, c1 * c2);
        }
    return p;
}

NPoly NPoly::scaled(const RatFn2& c) const {
    NPoly p(nvars_, tag_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

NPoly NPoly::q_shift(int k) const {
    NPoly p(nvars_, tag_);
    LaurentPoly2 q = LaurentPoly2::var1(tag_);
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * RatFn2(q.pow(e[k])));
    return p;
}

bool NPoly::is_symmetric() const {
    for (int k = 0; k + 1 < nvars_; ++k) {
        for (const auto& [e, v] : terms_) {
            Exps f(e);
            std::swap(f[k], f[k + 1]);
            auto it = terms_.find(f);
            if (it == terms_.end() || !(it->second == v)) return false;
        }
    }
    return true;
}

NPoly NPoly::divided_by(const NPoly& g) const {
    if (g.is_zero()) throw std::domain_error("NPoly: division by zero");
    NPoly rem = *this;
    NPoly quot(nvars_, tag_);
    auto lt = [](const NPoly& p) { return std::prev(p.terms_.end()); };
    const auto git = lt(g);
    while (!rem.is_zero()) {
        auto rit = lt(rem);
        Exps d(rit->first);
        bool ok = true;
        for (int i = 0; i < nvars_; ++i) {
            d[i] -= git->first[i];
            if (d[i] < 0) ok = false;
        }
        if (!ok) throw std::domain_error("NPoly: inexact division");
        RatFn2 qc = rit->second / git->second;
        NPoly t(nvars_, tag_);
        t.add_term(d, qc);
        quot = quot + t;
        rem = rem - t * g;
    }
    return quot;
}

NPoly NPoly::monomial_sym(int nvars, const std::vector<int>& lam, VarTag tag) {
    NPoly p(nvars, tag);
    Exps e(lam);
    e.resize(nvars, 0);
    std::sort(e.begin(), e.end());
    do {
        p.add_term(e, RatFn2(1, tag));
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

}  // namespace wreathmac
