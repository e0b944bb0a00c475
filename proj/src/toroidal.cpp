#include "wreathmac/toroidal.hpp"

#include <mutex>
#include <sstream>

namespace wreathmac {

RootElt RootElt::simple(int r, int i) {
    std::vector<long> n(r - 1, 0);
    if (imod(i, r) == 0) {
        for (auto& v : n) v = -1;  // alpha-bar_0 = -theta
    } else {
        n[imod(i, r) - 1] = 1;
    }
    return RootElt(std::move(n));
}

RootElt RootElt::operator+(const RootElt& o) const {
    std::vector<long> c(n);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.n[i];
    return RootElt(std::move(c));
}

RootElt RootElt::operator-() const {
    std::vector<long> c(n);
    for (auto& v : c) v = -v;
    return RootElt(std::move(c));
}

std::string RootElt::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) os << ",";
        os << n[i];
    }
    os << "]";
    return os.str();
}

int cocycle_sign(const RootElt& alpha, const RootElt& beta) {
    long acc = 0;
    const size_t m = alpha.n.size();
    for (size_t j = 1; j + 1 <= m; ++j) acc += alpha.n[j] * beta.n[j - 1];  // alpha_{j+1} beta_j
    return imod(acc, 2) ? -1 : 1;
}

int cocycle_sign(const RootElt& alpha) {
    return cocycle_sign(alpha, alpha);
}

std::pair<int, RootElt> group_mult(const RootElt& alpha, const RootElt& beta) {
    return {cocycle_sign(alpha, beta), alpha + beta};
}

long cartan_pairing(int r, int i, const RootElt& beta) {
    long acc = 0;
    i = static_cast<int>(imod(i, r));
    for (int j = 1; j <= r - 1; ++j) {
        long a;
        if (j == i)
            a = 2;
        else if (imod(j - i, r) == 1 || imod(i - j, r) == 1)
            a = -1;
        else
            a = 0;
        acc += a * beta.n[j - 1];
    }
    return acc;
}

long m_pairing(int r, int i, const RootElt& beta) {
    auto coeff = [&](int j) -> long {
        j = static_cast<int>(imod(j, r));
        return j == 0 ? 0 : beta.n[j - 1];
    };
    RootElt m = RootElt::zero(r);
    int lo = static_cast<int>(imod(i - 1, r)), hi = static_cast<int>(imod(i + 1, r));
    if (lo != 0) m.n[lo - 1] += coeff(i - 1);
    if (hi != 0) m.n[hi - 1] -= coeff(i + 1);
    return cartan_pairing(r, i, m);
}

VertexVec VertexVec::vacuum(int r) {
    VertexVec v(r);
    v.comps_.emplace(RootElt::zero(r), MultiSymFn::one(r, VarTag::su));
    return v;
}

VertexVec VertexVec::term(int r, const RootElt& alpha, MultiSymFn f) {
    VertexVec v(r);
    if (!f.is_zero()) v.comps_.emplace(alpha, std::move(f));
    return v;
}

bool VertexVec::is_zero() const {
    for (const auto& [a, f] : comps_)
        if (!f.is_zero()) return false;
    return true;
}

void VertexVec::add_term(const RootElt& alpha, const MultiSymFn& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = comps_.emplace(alpha, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

VertexVec VertexVec::operator+(const VertexVec& o) const {
    VertexVec v = *this;
    for (const auto& [a, f] : o.comps_) v.add_term(a, f);
    return v;
}

VertexVec VertexVec::operator-(const VertexVec& o) const {
    VertexVec v = *this;
    for (const auto& [a, f] : o.comps_) v.add_term(a, -f);
    return v;
}

VertexVec VertexVec::scaled(const RatFn2& c) const {
    VertexVec v(r_);
    if (c.is_zero()) return v;
    for (const auto& [a, f] : comps_) v.comps_.emplace(a, f.scaled(c));
    return v;
}

bool VertexVec::operator==(const VertexVec& o) const {
    return r_ == o.r_ && comps_ == o.comps_;
}

std::string VertexVec::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, f] : comps_) {
        if (!first) os << "  +  ";
        first = false;
        os << "(" << f.str() << ") @ e^" << a.str();
    }
    return os.str();
}

namespace {

RatFn2 su_mono(int a, int b, int sign = 1) {
    return RatFn2(LaurentPoly2::monomial(sign, a, b, VarTag::su));
}

// alphabet rows over slots, su coefficients
std::vector<RatFn2> row_single(int r, int slot, const RatFn2& c) {
    std::vector<RatFn2> row(r, RatFn2(VarTag::su));
    row[imod(slot, r)] = c;
    return row;
}

// c * Y^(i)(X, s^eps, u) for eps = +1 or -1
std::vector<RatFn2> row_Y(int r, int i, int eps, const RatFn2& c) {
    std::vector<RatFn2> row(r, RatFn2(VarTag::su));
    // eps=+1: (1+s^-4) X^i - s^-2 u^2 X^{i+1} - s^-2 u^-2 X^{i-1}
    // eps=-1: (1+s^4) X^i - s^2 u^2 X^{i+1} - s^2 u^-2 X^{i-1}
    int s4 = eps > 0 ? -4 : 4, s2 = eps > 0 ? -2 : 2;
    row[imod(i, r)] = c * (RatFn2(1, VarTag::su) + su_mono(s4, 0));
    row[imod(i + 1, r)] += c * su_mono(s2, 2, -1);
    row[imod(i - 1, r)] += c * su_mono(s2, -2, -1);
    return row;
}

// mode m of Omega[z c X^(i)] Omega[z^{-1} dRow X]^perp applied to f
MultiSymFn vertex_mode_slot(int r, int i, const RatFn2& c, const std::vector<RatFn2>& drow, int m,
                            const MultiSymFn& f) {
    MultiSymFn out(r, VarTag::su);
    const int n = f.max_degree();
    for (int b = 0; b <= n; ++b) {
        int a = b - m;
        if (a < 0) continue;
        MultiSymFn skew = perp_h_alphabet(b, drow, f);
        if (skew.is_zero()) continue;
        out += mult_h_alphabet(a, row_single(r, i, c), skew);
    }
    return out;
}

MultiSymFn E_mode(int r, int i, int m, const MultiSymFn& f) {
    // Omega[s^-1 z X^(i)] Omega[-s z^-1 Y^(i)(X,s,u)]^perp
    return vertex_mode_slot(r, i, su_mono(-1, 0), row_Y(r, i, +1, su_mono(1, 0, -1)), m, f);
}

MultiSymFn F_mode(int r, int i, int m, const MultiSymFn& f) {
    // Omega[-s z X^(i)] Omega[s^-1 z^-1 Y^(i)(X,s^-1,u)]^perp
    return vertex_mode_slot(r, i, su_mono(1, 0, -1), row_Y(r, i, -1, su_mono(-1, 0)), m, f);
}

}  // namespace

VertexVec act_e(int i, int k, const VertexVec& v) {
    const int r = v.r();
    i = static_cast<int>(imod(i, r));
    VertexVec out(r);
    RootElt ai = RootElt::simple(r, i);
    for (const auto& [alpha, f] : v.comps()) {
        long zpow = cartan_pairing(r, i, alpha);
        long upow = m_pairing(r, i, alpha);
        int mode = static_cast<int>(k + 1 + zpow);
        MultiSymFn g = E_mode(r, i, mode, f);
        if (g.is_zero()) continue;
        int sign = cocycle_sign(ai, alpha);
        RatFn2 c = su_mono(0, static_cast<int>(upow), sign);
        out.add_term(ai + alpha, g.scaled(c));
    }
    return out;
}

VertexVec act_f(int i, int k, const VertexVec& v) {
    const int r = v.r();
    i = static_cast<int>(imod(i, r));
    VertexVec out(r);
    RootElt ai = RootElt::simple(r, i);
    int si = cocycle_sign(ai);
    for (const auto& [alpha, f] : v.comps()) {
        long zpow = cartan_pairing(r, i, alpha);
        long upow = m_pairing(r, i, alpha);
        int mode = static_cast<int>(k + 1 - zpow);
        MultiSymFn g = F_mode(r, i, mode, f);
        if (g.is_zero()) continue;
        int sign = si * cocycle_sign(-ai, alpha);
        RatFn2 c = su_mono(0, static_cast<int>(-upow), sign);
        out.add_term((-ai) + alpha, g.scaled(c));
    }
    return out;
}

VertexVec act_h(int i, int l, const VertexVec& v) {
    if (l == 0) throw std::domain_error("act_h: l must be nonzero");
    const int r = v.r();
    i = static_cast<int>(imod(i, r));
    const int k = std::abs(l);
    VertexVec out(r);
    RatFn2 s2 = su_mono(2, 0), s2i = su_mono(-2, 0);
    RatFn2 denom = (s2 - s2i) * RatFn2(Rat(k), VarTag::su);
    for (const auto& [alpha, f] : v.comps()) {
        long apow = cartan_pairing(r, i, alpha);
        if (l < 0) {
            // multiplication by p_k[X^(i) (s^2 - s^-2)] / (k (s^2-s^-2))
            RatFn2 c = su_mono(static_cast<int>(-2 * apow), 0) * (su_mono(2 * k, 0) - su_mono(-2 * k, 0)) / denom;
            MultiSymFn g = MultiSymFn::p_slot(r, k, i, VarTag::su) * f;
            out.add_term(alpha, g.scaled(c));
        } else {
            // skew by p_k[Y^(i)(X,s,u) (s^4-1)] / (k (s^2-s^-2))
            RatFn2 c = su_mono(static_cast<int>(2 * apow), 0) * (su_mono(4 * k, 0) - RatFn2(1, VarTag::su)) / denom;
            SymFn pk = SymFn::p(Partition({k}), VarTag::su);
            MultiSymFn probe = vector_plethysm(pk, row_Y(r, i, +1, RatFn2(1, VarTag::su)));
            MultiSymFn g = perp(probe, f);
            out.add_term(alpha, g.scaled(c));
        }
    }
    return out;
}

VertexVec act_psi_plus(int i, int l, const VertexVec& v) {
    if (l < 0) throw std::domain_error("act_psi_plus: l >= 0");
    const int r = v.r();
    i = static_cast<int>(imod(i, r));
    VertexVec out(r);
    // h_l[(p^2-1) Y^(i)(X,s,u)]^perp tensor p^{partial_i}
    std::vector<RatFn2> row = row_Y(r, i, +1, su_mono(4, 0) - RatFn2(1, VarTag::su));
    for (const auto& [alpha, f] : v.comps()) {
        long apow = cartan_pairing(r, i, alpha);
        MultiSymFn g = perp_h_alphabet(l, row, f);
        if (g.is_zero()) continue;
        out.add_term(alpha, g.scaled(su_mono(static_cast<int>(2 * apow), 0)));
    }
    return out;
}

VertexVec act_psi_minus(int i, int l, const VertexVec& v) {
    if (l > 0) throw std::domain_error("act_psi_minus: l <= 0");
    const int r = v.r();
    i = static_cast<int>(imod(i, r));
    VertexVec out(r);
    // h_{-l}[-(p - p^-1) X^(i)] multiplication tensor p^{-partial_i}
    std::vector<RatFn2> row = row_single(r, i, RatFn2(0, VarTag::su) - (su_mono(2, 0) - su_mono(-2, 0)));
    for (const auto& [alpha, f] : v.comps()) {
        long apow = cartan_pairing(r, i, alpha);
        MultiSymFn g = mult_h_alphabet(-l, row, f);
        if (g.is_zero()) continue;
        out.add_term(alpha, g.scaled(su_mono(static_cast<int>(-2 * apow), 0)));
    }
    return out;
}

namespace {

struct Mode {
    int i;
    int k;
    bool is_e;
    auto operator<=>(const Mode&) const = default;
};

using Word = std::vector<Mode>;
using OpExpr = std::map<Word, RatFn2>;  // linear combination of mode words

OpExpr single(Mode m) {
    return {{Word{m}, RatFn2(1, VarTag::su)}};
}

OpExpr concat(const OpExpr& x, const OpExpr& y) {
    OpExpr out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
            Word w(wx);
            w.insert(w.end(), wy.begin(), wy.end());
            auto [it, inserted] = out.emplace(std::move(w), cx * cy);
            if (!inserted) it->second += cx * cy;
        }
    return out;
}

OpExpr comm(const OpExpr& x, const OpExpr& y, const RatFn2& c) {
    OpExpr out = concat(x, y);
    for (auto& [w, coeff] : concat(y, x)) {
        auto [it, inserted] = out.emplace(w, -(c * coeff));
        if (!inserted) it->second -= c * coeff;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// Expansion of the iterated commutator defining D-hat_1^(i) or its star.
const OpExpr& eigen_words(int r, int i, bool star) {
    static std::mutex mtx;
    static std::map<std::tuple<int, int, bool>, OpExpr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(r, i, star);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RatFn2 p = RatFn2(LaurentPoly2::monomial(1, 2, 0, VarTag::su));
    RatFn2 pinv = RatFn2(LaurentPoly2::monomial(1, -2, 0, VarTag::su));
    OpExpr expr;
    if (star) {
        if (i != 0) {
            expr = single(Mode{0, 0, true});  // y = e_{0,0}
            // x_1..x_m: reversed display (e_{i,0}, e_{i-1,0}..e_{1,0}, e_{i+1,0}..e_{r-1,0})
            std::vector<int> xs;
            for (int j = r - 1; j >= i + 1; --j) xs.push_back(j);
            for (int j = 1; j <= i - 1; ++j) xs.push_back(j);
            xs.push_back(i);
            for (size_t t = 0; t < xs.size(); ++t) {
                RatFn2 c = (t + 1 == xs.size()) ? pinv * pinv : pinv;
                expr = comm(single(Mode{xs[t], 0, true}), expr, c);
            }
        } else {
            expr = single(Mode{1, -1, true});  // y = e_{1,-1}
            std::vector<std::pair<Mode, RatFn2>> xs;
            for (int j = 2; j <= r - 1; ++j) xs.push_back({Mode{j, 0, true}, pinv});
            xs.push_back({Mode{0, 1, true}, pinv * pinv});
            for (const auto& [m, c] : xs) expr = comm(single(m), expr, c);
        }
    } else {
        if (i != 0) {
            expr = single(Mode{0, 0, false});  // x = f_{0,0}
            std::vector<int> ys;
            for (int j = r - 1; j >= i + 1; --j) ys.push_back(j);
            for (int j = 1; j <= i - 1; ++j) ys.push_back(j);
            ys.push_back(i);
            for (size_t t = 0; t < ys.size(); ++t) {
                RatFn2 c = (t + 1 == ys.size()) ? p * p : p;
                expr = comm(expr, single(Mode{ys[t], 0, false}), c);
            }
        } else {
            expr = single(Mode{1, 1, false});  // x = f_{1,1}
            std::vector<std::pair<Mode, RatFn2>> ys;
            for (int j = 2; j <= r - 1; ++j) ys.push_back({Mode{j, 0, false}, p});
            ys.push_back({Mode{0, -1, false}, p * p});
            for (const auto& [m, c] : ys) expr = comm(expr, single(m), c);
        }
    }
    return cache.emplace(key, std::move(expr)).first->second;
}

}  // namespace

VertexVec eigen_op(int i, bool star, const VertexVec& v) {
    const int r = v.r();
    i = static_cast<int>(imod(i, r));
    const OpExpr& expr = eigen_words(r, i, star);
    VertexVec out(r);
    for (const auto& [word, coeff] : expr) {
        VertexVec cur = v;
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = it->is_e ? act_e(it->i, it->k, cur) : act_f(it->i, it->k, cur);
        out = out + cur.scaled(coeff);
    }
    // c_i(u) / c_i^*(u)
    int a, sign = 1;
    if (star) {
        if (i != 0) {
            a = 2 * i - r;
            sign = (r - i - 1) % 2 ? -1 : 1;
        } else {
            a = r - 2;
        }
    } else {
        if (i != 0) {
            a = r - 2 * i;
            sign = (r - i - 1) % 2 ? -1 : 1;
        } else {
            a = 2 - r;
        }
    }
    return out.scaled(RatFn2(LaurentPoly2::monomial(sign, 0, a, VarTag::su)));
}

VertexVec embed_H(const Partition& mu, int r) {
    QuotCore qc = quot_core(mu, r);
    WreathKey key(r, AffineWeylElt::translation_minus(qc.charges), qc.quot);
    MultiSymFn h = solve_H(key).map_coeffs([](const RatFn2& c) { return c.to_su(); });
    std::vector<long> simple = qc.charges.simple_coords();
    return VertexVec::term(r, RootElt(std::move(simple)), std::move(h));
}

LaurentPoly2 A_component(const Partition& mu, int r, int i, bool inverse) {
    // A_mu(q chi^-1, t chi) = 1 - (1 - q chi^-1)(1 - t chi) B_mu(q chi^-1, t chi)
    CycPoly b(r);
    for (const Cell& c : mu.cells()) b.comp(imod(c.b - c.a, r)).add_term({c.a, c.b}, 1);
    CycPoly qchi = CycPoly::monomial(r, 1, 1, 0, -1);
    CycPoly tchi = CycPoly::monomial(r, 1, 0, 1, 1);
    CycPoly one = CycPoly::one(r);
    CycPoly a = one - (one - qchi) * (one - tchi) * b;
    LaurentPoly2 comp = a.comp(i);
    return inverse ? comp.subst_inverse() : comp;
}

RatFn2 xi_dagger(int r) {
    return RatFn2(LaurentPoly2::monomial(r % 2 ? -1 : 1, 2, -r, VarTag::su));
}

RatFn2 FockWeight::h_eigenvalue(int l) const {
    if (l == 0) throw std::domain_error("h_eigenvalue: l != 0");
    RatFn2 p2 = RatFn2(LaurentPoly2::monomial(1, 4, 0, VarTag::su));
    RatFn2 pdiff = RatFn2(LaurentPoly2::monomial(1, 2, 0, VarTag::su)) -
                   RatFn2(LaurentPoly2::monomial(1, -2, 0, VarTag::su));
    RatFn2 acc(VarTag::su);
    const int k = std::abs(l);
    for (const auto& [c, e] : factors) {
        RatFn2 ck = c.power_substitute(k);
        RatFn2 term;
        if (l > 0) {
            // [z^-l] log phi(cz) = (c^-l / l)(1 - p^{2l})
            term = ck.inverse() * (RatFn2(1, VarTag::su) - p2.power_substitute(k));
        } else {
            // [z^l] log phi(cz) = (c^l / l)(1 - p^{-2l})
            term = ck * (RatFn2(1, VarTag::su) - p2.power_substitute(k).inverse());
        }
        acc += term.scaled(Rat(e));
    }
    acc = acc / RatFn2(Rat(k), VarTag::su);
    // psi^+(z) = psi_0 exp(+(p-p^-1) sum_{l>0} h_l z^-l);
    // psi^-(z) = psi_0 exp(-(p-p^-1) sum_{l<0} h_l z^-l).
    if (l > 0) return acc / pdiff;
    return acc.scaled(Rat(-1)) / pdiff;
}

std::pair<std::vector<RatFn2>, std::vector<RatFn2>> FockWeight::as_z_ratfn() const {
    // phi(cz) = (p - p^-1 c z)/(1 - c z)
    RatFn2 p = RatFn2(LaurentPoly2::monomial(1, 2, 0, VarTag::su));
    RatFn2 pinv = RatFn2(LaurentPoly2::monomial(1, -2, 0, VarTag::su));
    std::vector<RatFn2> num{RatFn2(1, VarTag::su)}, den{RatFn2(1, VarTag::su)};
    auto mul_linear = [](std::vector<RatFn2>& poly, const RatFn2& a0, const RatFn2& a1) {
        std::vector<RatFn2> out(poly.size() + 1, RatFn2(VarTag::su));
        for (size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i] * a0;
            out[i + 1] += poly[i] * a1;
        }
        poly = std::move(out);
    };
    for (const auto& [c, e] : factors) {
        if (e > 0) {
            mul_linear(num, p, -(pinv * c));
            mul_linear(den, RatFn2(1, VarTag::su), -c);
        } else {
            mul_linear(den, p, -(pinv * c));
            mul_linear(num, RatFn2(1, VarTag::su), -c);
        }
    }
    return {num, den};
}

FockWeight fock_weight(const Partition& mu, int r, int i) {
    FockWeight w;
    w.r = r;
    RatFn2 xd = xi_dagger(r);
    RatFn2 qt = RatFn2(LaurentPoly2::monomial(1, 1, 1).to_su());
    for (const Cell& c : mu.addable(r, i)) {
        RatFn2 base = RatFn2(LaurentPoly2::monomial(1, -c.a, -c.b).to_su());
        w.factors.emplace_back(base * qt / xd, -1);
    }
    for (const Cell& c : mu.removable(r, i)) {
        RatFn2 base = RatFn2(LaurentPoly2::monomial(1, -c.a, -c.b).to_su());
        w.factors.emplace_back(base / xd, +1);
    }
    return w;
}

}  // namespace wreathmac
