#include "wreathmac/symfn.hpp"

#include <algorithm>
#include <sstream>

namespace wreathmac {

namespace {

std::vector<int> merge_parts(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> m(a);
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return m;
}

}  // namespace

SymFn SymFn::one(VarTag tag) {
    SymFn f(tag);
    f.terms_[Partition()] = RatFn2(1, tag);
    return f;
}

SymFn SymFn::p(const Partition& rho, VarTag tag) {
    SymFn f(tag);
    f.terms_[rho] = RatFn2(1, tag);
    return f;
}

SymFn SymFn::schur(const Partition& lam, VarTag tag) {
    SymFn f(tag);
    for (const Partition& rho : partitions_of(lam.size())) {
        long long chi = sym_character(lam, rho);
        if (chi) f.terms_[rho] = RatFn2(Rat(chi) / Rat(rho.z()), tag);
    }
    return f;
}

SymFn SymFn::monomial(const Partition& lam, VarTag tag) {
    // s_lambda = sum_mu K[lambda][mu] m_mu, so the coefficient of s_nu in
    // m_lambda is (K^{-1})[lambda][nu].
    const DegreeTables& t = degree_tables(lam.size());
    int m = t.index.at(lam);
    SymFn f(tag);
    for (size_t l = 0; l < t.parts.size(); ++l) {
        const Rat& c = t.kostka_inv[m][l];
        if (c != 0) f += SymFn::schur(t.parts[l], tag).scaled(RatFn2(c, tag));
    }
    return f;
}

SymFn SymFn::complete(int k, VarTag tag) {
    SymFn f(tag);
    for (const Partition& rho : partitions_of(k)) f.terms_[rho] = RatFn2(Rat(1) / Rat(rho.z()), tag);
    return f;
}

SymFn SymFn::elementary(int k, VarTag tag) {
    SymFn f(tag);
    for (const Partition& rho : partitions_of(k)) {
        Rat c = Rat(1) / Rat(rho.z());
        if ((k - rho.length()) % 2) c = -c;
        f.terms_[rho] = RatFn2(c, tag);
    }
    return f;
}

SymFn SymFn::from_p(PMap terms, VarTag tag) {
    SymFn f(tag);
    for (auto& [rho, c] : terms)
        if (!c.is_zero()) f.terms_.emplace(rho, std::move(c));
    return f;
}

SymFn SymFn::from_schur(const PMap& terms, VarTag tag) {
    SymFn f(tag);
    for (const auto& [lam, c] : terms)
        if (!c.is_zero()) f += SymFn::schur(lam, tag).scaled(c);
    return f;
}

int SymFn::max_degree() const {
    int d = 0;
    for (const auto& [rho, c] : terms_) d = std::max(d, rho.size());
    return d;
}

SymFn SymFn::homogeneous_part(int d) const {
    SymFn f(tag_);
    for (const auto& [rho, c] : terms_)
        if (rho.size() == d) f.terms_.emplace(rho, c);
    return f;
}

void SymFn::add_p(const Partition& rho, const RatFn2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFn SymFn::operator-() const {
    SymFn f(tag_);
    for (const auto& [rho, c] : terms_) f.terms_.emplace(rho, -c);
    return f;
}

SymFn& SymFn::operator+=(const SymFn& o) {
    for (const auto& [rho, c] : o.terms_) add_p(rho, c);
    return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
    for (const auto& [rho, c] : o.terms_) add_p(rho, -c);
    return *this;
}

SymFn operator*(const SymFn& x, const SymFn& y) {
    SymFn f(x.tag());
    for (const auto& [r1, c1] : x.pterms())
        for (const auto& [r2, c2] : y.pterms())
            f.add_p(Partition(merge_parts(r1.parts(), r2.parts())), c1 * c2);
    return f;
}

SymFn SymFn::scaled(const RatFn2& c) const {
    SymFn f(tag_);
    if (c.is_zero()) return f;
    for (const auto& [rho, v] : terms_) f.terms_.emplace(rho, v * c);
    return f;
}

SymFn::PMap SymFn::schur_expansion() const {
    // <., s_lambda> against the p expansion: coefficient of s_lambda equals
    // sum_rho chi^lambda(rho) c_rho.
    PMap out;
    std::map<int, PMap> by_degree;
    for (const auto& [rho, c] : terms_) by_degree[rho.size()][rho] = c;
    for (const auto& [d, terms] : by_degree) {
        for (const Partition& lam : partitions_of(d)) {
            RatFn2 acc(tag_);
            for (const auto& [rho, c] : terms) {
                long long chi = sym_character(lam, rho);
                if (chi) acc += c * RatFn2(Rat(chi), tag_);
            }
            if (!acc.is_zero()) out[lam] = acc;
        }
    }
    return out;
}

SymFn::PMap SymFn::monomial_expansion() const {
    PMap schur = schur_expansion();
    PMap out;
    std::map<int, PMap> by_degree;
    for (const auto& [lam, c] : schur) by_degree[lam.size()][lam] = c;
    for (const auto& [d, terms] : by_degree) {
        const DegreeTables& t = degree_tables(d);
        for (const auto& [lam, c] : terms) {
            int l = t.index.at(lam);
            for (size_t m = 0; m < t.parts.size(); ++m) {
                if (t.kostka[l][m] == 0) continue;
                RatFn2 add = c * RatFn2(t.kostka[l][m], tag_);
                auto [it, inserted] = out.emplace(t.parts[m], add);
                if (!inserted) it->second += add;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

RatFn2 SymFn::schur_coeff(const Partition& lam) const {
    RatFn2 acc(tag_);
    for (const auto& [rho, c] : terms_) {
        if (rho.size() != lam.size()) continue;
        long long chi = sym_character(lam, rho);
        if (chi) acc += c * RatFn2(Rat(chi), tag_);
    }
    return acc;
}

RatFn2 SymFn::hall(const SymFn& o) const {
    RatFn2 acc(tag_);
    for (const auto& [rho, c] : terms_) {
        auto it = o.terms_.find(rho);
        if (it != o.terms_.end()) acc += c * it->second * RatFn2(Rat(rho.z()), tag_);
    }
    return acc;
}

RatFn2 SymFn::qt_pairing(const SymFn& o) const {
    if (tag_ != VarTag::qt) throw VarTagError("qt_pairing needs (q,t) values");
    RatFn2 acc(tag_);
    LaurentPoly2 q = LaurentPoly2::var1(tag_), t = LaurentPoly2::var2(tag_);
    for (const auto& [rho, c] : terms_) {
        auto it = o.terms_.find(rho);
        if (it == o.terms_.end()) continue;
        RatFn2 factor(Rat(rho.z()), tag_);
        for (int k : rho.parts()) {
            LaurentPoly2 one(Rat(1), tag_);
            factor *= RatFn2(one - q.pow(k), one - t.pow(k));
        }
        acc += c * it->second * factor;
    }
    return acc;
}

SymFn SymFn::pleth_sub(const RatFn2& A, const RatFn2& B) const {
    SymFn out(tag_);
    for (const auto& [rho, c] : terms_) {
        // expand prod_k (A(k) p_k + B(k)) over the parts of rho
        SymFn term = SymFn::one(tag_).scaled(c);
        for (int k : rho.parts()) {
            SymFn factor = SymFn::p(Partition({k}), tag_).scaled(A.power_substitute(k));
            factor += SymFn::one(tag_).scaled(B.power_substitute(k));
            term = term * factor;
        }
        out += term;
    }
    return out;
}

SymFn SymFn::omega() const {
    SymFn out(tag_);
    for (const auto& [rho, c] : terms_) {
        int sign = (rho.size() - rho.length()) % 2 ? -1 : 1;
        out.terms_.emplace(rho, sign > 0 ? c : -c);
    }
    return out;
}

SymFn SymFn::map_coeffs(const std::function<RatFn2(const RatFn2&)>& fn) const {
    SymFn out(fn(RatFn2(1, tag_)).tag());
    for (const auto& [rho, c] : terms_) {
        RatFn2 v = fn(c);
        if (!v.is_zero()) out.terms_.emplace(rho, std::move(v));
    }
    return out;
}

SymFn perp(const SymFn& g, const SymFn& f) {
    // p_rho^perp p_sigma = prod_v v^{a_v} (m_v)_{a_v falling} p_{sigma minus rho}
    SymFn out(f.tag());
    for (const auto& [rho, cg] : g.pterms()) {
        for (const auto& [sigma, cf] : f.pterms()) {
            std::map<int, int> ms;
            for (int v : sigma.parts()) ++ms[v];
            Rat scale(1);
            bool ok = true;
            std::map<int, int> mr;
            for (int v : rho.parts()) ++mr[v];
            for (auto [v, a] : mr) {
                int m = ms.count(v) ? ms[v] : 0;
                if (a > m) {
                    ok = false;
                    break;
                }
                for (int j = 0; j < a; ++j) scale *= Rat(v) * Rat(m - j);
                ms[v] = m - a;
            }
            if (!ok) continue;
            std::vector<int> rest;
            for (auto [v, m] : ms)
                for (int j = 0; j < m; ++j) rest.push_back(v);
            std::sort(rest.begin(), rest.end(), std::greater<int>());
            out.add_p(Partition(std::move(rest)), cg * cf * RatFn2(scale, f.tag()));
        }
    }
    return out;
}

SymFn vertex_mode(const VertexHalfSpec& creation, const VertexHalfSpec& annihilation, int k, const SymFn& f) {
    if (creation.side != VertexHalfSpec::Side::creation || annihilation.side != VertexHalfSpec::Side::annihilation)
        throw std::domain_error("vertex_mode: halves must be (creation, annihilation)");
    SymFn out(f.tag());
    const int n = f.max_degree();
    for (int m = std::max(0, -k); m <= n; ++m) {
        int l = m + k;
        if (l < 0) continue;
        // h_m[dX]^perp then multiply by h_l[cX]
        SymFn hm = SymFn::complete(m, f.tag()).pleth_sub(annihilation.coeff, RatFn2(0, f.tag()));
        SymFn hl = SymFn::complete(l, f.tag()).pleth_sub(creation.coeff, RatFn2(0, f.tag()));
        out += hl * perp(hm, f);
    }
    return out;
}

std::string SymFn::str() const {
    auto sch = schur_expansion();
    if (sch.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : sch) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << lam.str();
    }
    return os.str();
}

}  // namespace wreathmac
