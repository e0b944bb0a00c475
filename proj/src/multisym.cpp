#include "wreathmac/multisym.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace wreathmac {

namespace {

Partition merge_two(const Partition& a, const Partition& b) {
    std::vector<int> m(a.parts());
    m.insert(m.end(), b.parts().begin(), b.parts().end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return Partition(std::move(m));
}

Int z_multi(const MultiPartition& mp) {
    Int z(1);
    for (const auto& p : mp.comps()) z *= p.z();
    return z;
}

}  // namespace

MultiSymFn MultiSymFn::one(int r, VarTag tag) {
    MultiSymFn f(r, tag);
    f.terms_[MultiPartition(r)] = RatFn2(1, tag);
    return f;
}

MultiSymFn MultiSymFn::p(int r, const MultiPartition& mp, VarTag tag) {
    MultiSymFn f(r, tag);
    if (mp.r() != r) throw SizeMismatchError("MultiSymFn::p: wrong r");
    f.terms_[mp] = RatFn2(1, tag);
    return f;
}

MultiSymFn MultiSymFn::p_slot(int r, int k, int slot, VarTag tag) {
    MultiPartition mp(r);
    mp.comp(slot) = Partition({k});
    return p(r, mp, tag);
}

MultiSymFn MultiSymFn::embed_slot(int r, const SymFn& f, int slot) {
    MultiSymFn out(r, f.tag());
    for (const auto& [rho, c] : f.pterms()) {
        MultiPartition mp(r);
        mp.comp(slot) = rho;
        out.terms_[mp] = c;
    }
    return out;
}

MultiSymFn MultiSymFn::schur(int r, const MultiPartition& mp, VarTag tag) {
    MultiSymFn out = one(r, tag);
    for (int i = 0; i < r; ++i)
        if (!mp.comp(i).empty()) out = out * embed_slot(r, SymFn::schur(mp.comp(i), tag), i);
    return out;
}

MultiSymFn MultiSymFn::from_p(int r, PMap terms, VarTag tag) {
    MultiSymFn f(r, tag);
    for (auto& [mp, c] : terms)
        if (!c.is_zero()) f.terms_.emplace(mp, std::move(c));
    return f;
}

MultiSymFn MultiSymFn::from_schur(int r, const PMap& terms, VarTag tag) {
    MultiSymFn f(r, tag);
    for (const auto& [mp, c] : terms)
        if (!c.is_zero()) f += schur(r, mp, tag).scaled(c);
    return f;
}

int MultiSymFn::max_degree() const {
    int d = 0;
    for (const auto& [mp, c] : terms_) d = std::max(d, mp.size());
    return d;
}

MultiSymFn MultiSymFn::homogeneous_part(int d) const {
    MultiSymFn f(r_, tag_);
    for (const auto& [mp, c] : terms_)
        if (mp.size() == d) f.terms_.emplace(mp, c);
    return f;
}

void MultiSymFn::add_p(const MultiPartition& mp, const RatFn2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiSymFn MultiSymFn::operator-() const {
    MultiSymFn f(r_, tag_);
    for (const auto& [mp, c] : terms_) f.terms_.emplace(mp, -c);
    return f;
}

MultiSymFn& MultiSymFn::operator+=(const MultiSymFn& o) {
    for (const auto& [mp, c] : o.terms_) add_p(mp, c);
    return *this;
}

MultiSymFn& MultiSymFn::operator-=(const MultiSymFn& o) {
    for (const auto& [mp, c] : o.terms_) add_p(mp, -c);
    return *this;
}

MultiSymFn operator*(const MultiSymFn& x, const MultiSymFn& y) {
    if (x.r_ != y.r_) throw SizeMismatchError("MultiSymFn: mixed r");
    MultiSymFn f(x.r_, x.tag_);
    for (const auto& [m1, c1] : x.terms_)
        for (const auto& [m2, c2] : y.terms_) {
            MultiPartition m(x.r_);
            for (int i = 0; i < x.r_; ++i) m.comp(i) = merge_two(m1.comp(i), m2.comp(i));
            f.add_p(m, c1 * c2);
        }
    return f;
}

MultiSymFn MultiSymFn::scaled(const RatFn2& c) const {
    MultiSymFn f(r_, tag_);
    if (c.is_zero()) return f;
    for (const auto& [mp, v] : terms_) f.terms_.emplace(mp, v * c);
    return f;
}

MultiSymFn::PMap MultiSymFn::schur_expansion() const {
    // componentwise p -> s: coefficient of s_{lam^bullet} is
    // prod_i chi^{lam^(i)}(rho^(i)), summed over p-terms with matching
    // componentwise degrees.
    PMap out;
    for (const auto& [rho, c] : terms_) {
        // expand each slot and take the product
        std::vector<std::vector<std::pair<Partition, Rat>>> per_slot(r_);
        for (int i = 0; i < r_; ++i) {
            for (const Partition& lam : partitions_of(rho.comp(i).size())) {
                long long chi = sym_character(lam, rho.comp(i));
                if (chi) per_slot[i].emplace_back(lam, Rat(chi));
            }
        }
        std::vector<size_t> idx(r_, 0);
        while (true) {
            MultiPartition mp(r_);
            Rat coeff(1);
            for (int i = 0; i < r_; ++i) {
                mp.comp(i) = per_slot[i][idx[i]].first;
                coeff *= per_slot[i][idx[i]].second;
            }
            RatFn2 add = c * RatFn2(coeff, tag_);
            auto [it, inserted] = out.emplace(mp, add);
            if (!inserted) {
                it->second += add;
            }
            int slot = r_ - 1;
            while (slot >= 0) {
                if (++idx[slot] < per_slot[slot].size()) break;
                idx[slot] = 0;
                --slot;
            }
            if (slot < 0) break;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

RatFn2 MultiSymFn::schur_coeff(const MultiPartition& mp) const {
    RatFn2 acc(tag_);
    for (const auto& [rho, c] : terms_) {
        Rat coeff(1);
        bool ok = true;
        for (int i = 0; i < r_; ++i) {
            if (rho.comp(i).size() != mp.comp(i).size()) {
                ok = false;
                break;
            }
            long long chi = sym_character(mp.comp(i), rho.comp(i));
            if (!chi) {
                ok = false;
                break;
            }
            coeff *= chi;
        }
        if (ok) acc += c * RatFn2(coeff, tag_);
    }
    return acc;
}

RatFn2 MultiSymFn::hall(const MultiSymFn& o) const {
    RatFn2 acc(tag_);
    for (const auto& [mp, c] : terms_) {
        auto it = o.terms_.find(mp);
        if (it != o.terms_.end()) acc += c * it->second * RatFn2(Rat(z_multi(mp)), tag_);
    }
    return acc;
}

MultiSymFn MultiSymFn::substitute(const MatRF& m) const {
    if (m.r() != r_) throw SizeMismatchError("substitute: dimension mismatch");
    MultiSymFn out(r_, tag_);
    for (const auto& [mp, c] : terms_) {
        MultiSymFn term = one(r_, tag_).scaled(c);
        for (int i = 0; i < r_; ++i)
            for (int k : mp.comp(i).parts()) {
                MultiSymFn sub(r_, tag_);
                for (int j = 0; j < r_; ++j) {
                    RatFn2 mc = m.at(i, j).power_substitute(k);
                    if (!mc.is_zero()) sub += p_slot(r_, k, j, tag_).scaled(mc);
                }
                term = term * sub;
            }
        out += term;
    }
    return out;
}

MultiSymFn MultiSymFn::map_coeffs(const std::function<RatFn2(const RatFn2&)>& fn) const {
    MultiSymFn out(r_, fn(RatFn2(1, tag_)).tag());
    for (const auto& [mp, c] : terms_) {
        RatFn2 v = fn(c);
        if (!v.is_zero()) out.terms_.emplace(mp, std::move(v));
    }
    return out;
}

MultiSymFn MultiSymFn::omega() const {
    MultiSymFn out(r_, tag_);
    for (const auto& [mp, c] : terms_) {
        int tot = 0;
        for (const auto& comp : mp.comps()) tot += comp.size() - comp.length();
        out.terms_.emplace(mp, tot % 2 ? -c : c);
    }
    return out;
}

MultiSymFn MultiSymFn::permute_slots(const std::vector<int>& u) const {
    MultiSymFn out(r_, tag_);
    for (const auto& [mp, c] : terms_) out.terms_.emplace(mp.permuted(u), c);
    return out;
}

std::string MultiSymFn::str() const {
    auto sch = schur_expansion();
    if (sch.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mp, c] : sch) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << mp.str();
    }
    return os.str();
}

MultiSymFn matrix_plethysm(const MatRF& m, const MultiSymFn& f) {
    return f.substitute(m.transpose());
}

MultiSymFn perm_plethysm(const std::vector<int>& u, const MultiSymFn& f) {
    return f.permute_slots(u);
}

std::vector<int> perm_neg(int r) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = static_cast<int>(imod(r - i, r));
    return u;
}

std::vector<int> perm_w0(int r) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = r - 1 - i;
    return u;
}

std::vector<int> perm_chi(int r) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = static_cast<int>(imod(i + 1, r));
    return u;
}

MatRF chi_matrix(int r, int power) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = static_cast<int>(imod(i + power, r));
    return MatRF::permutation(u);
}

const MatRF& A_matrix(int r) {
    static std::mutex mtx;
    static std::map<int, MatRF> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    RatFn2 q(LaurentPoly2::var1()), t(LaurentPoly2::var2());
    MatRF id = MatRF::identity(r);
    MatRF a = mat_inverse(id - chi_matrix(r, -1).scaled(q)) *
              mat_inverse(id - chi_matrix(r, 1).scaled(t)) * MatRF::permutation(perm_neg(r));
    return cache.emplace(r, std::move(a)).first->second;
}

const MatRF& B_matrix(int r) {
    static std::mutex mtx;
    static std::map<int, MatRF> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    RatFn2 q(LaurentPoly2::var1());
    RatFn2 tinv(LaurentPoly2::monomial(1, 0, -1));
    MatRF id = MatRF::identity(r);
    MatRF b = mat_inverse(id - chi_matrix(r, -1).scaled(q)) *
              (id - chi_matrix(r, -1).scaled(tinv)) * MatRF::permutation(perm_neg(r));
    return cache.emplace(r, std::move(b)).first->second;
}

RatFn2 pair_qt(const MultiSymFn& f, const MultiSymFn& g) {
    static std::mutex mtx;
    static std::map<int, MatRF> ainv_cache;
    MatRF ainv(1);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = ainv_cache.find(f.r());
        if (it == ainv_cache.end()) it = ainv_cache.emplace(f.r(), mat_inverse(A_matrix(f.r()))).first;
        ainv = it->second;
    }
    return f.hall(g.substitute(ainv));
}

RatFn2 pair_P(const MultiSymFn& f, const MultiSymFn& g) {
    static std::mutex mtx;
    static std::map<int, MatRF> binv_cache;
    MatRF binv(1);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = binv_cache.find(f.r());
        if (it == binv_cache.end()) it = binv_cache.emplace(f.r(), mat_inverse(B_matrix(f.r()))).first;
        binv = it->second;
    }
    return f.hall(g.substitute(binv));
}

MultiSymFn vector_plethysm(const SymFn& f, const std::vector<RatFn2>& row) {
    const int r = static_cast<int>(row.size());
    MultiSymFn out(r, f.tag());
    for (const auto& [rho, c] : f.pterms()) {
        MultiSymFn term = MultiSymFn::one(r, f.tag()).scaled(c);
        for (int k : rho.parts()) {
            MultiSymFn sub(r, f.tag());
            for (int j = 0; j < r; ++j) {
                RatFn2 coeff = row[j].power_substitute(k);
                if (!coeff.is_zero()) sub += MultiSymFn::p_slot(r, k, j, f.tag()).scaled(coeff);
            }
            term = term * sub;
        }
        out += term;
    }
    return out;
}

MultiSymFn mult_h_alphabet(int a, const std::vector<RatFn2>& row, const MultiSymFn& f) {
    if (a == 0) return f;
    return vector_plethysm(SymFn::complete(a, f.tag()), row) * f;
}

MultiSymFn perp_h_alphabet(int a, const std::vector<RatFn2>& row, const MultiSymFn& f) {
    if (a == 0) return f;
    return perp(vector_plethysm(SymFn::complete(a, f.tag()), row), f);
}

MultiSymFn perp(const MultiSymFn& g, const MultiSymFn& f) {
    // slotwise version of the single-alphabet rule
    MultiSymFn out(f.r(), f.tag());
    for (const auto& [rho, cg] : g.pterms()) {
        for (const auto& [sigma, cf] : f.pterms()) {
            Rat scale(1);
            bool ok = true;
            MultiPartition rest(f.r());
            for (int i = 0; i < f.r() && ok; ++i) {
                std::map<int, int> ms;
                for (int v : sigma.comp(i).parts()) ++ms[v];
                std::map<int, int> mr;
                for (int v : rho.comp(i).parts()) ++mr[v];
                for (auto [v, cnt] : mr) {
                    int m = ms.count(v) ? ms[v] : 0;
                    if (cnt > m) {
                        ok = false;
                        break;
                    }
                    for (int j = 0; j < cnt; ++j) scale *= Rat(v) * Rat(m - j);
                    ms[v] = m - cnt;
                }
                if (!ok) break;
                std::vector<int> parts;
                for (auto [v, m] : ms)
                    for (int j = 0; j < m; ++j) parts.push_back(v);
                std::sort(parts.begin(), parts.end(), std::greater<int>());
                rest.comp(i) = Partition(std::move(parts));
            }
            if (!ok) continue;
            out.add_p(rest, cg * cf * RatFn2(scale, f.tag()));
        }
    }
    return out;
}

}  // namespace wreathmac
