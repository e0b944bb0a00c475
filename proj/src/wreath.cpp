#include "wreathmac/wreath.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "wreathmac/jsonio.hpp"
#include "wreathmac/linalg.hpp"
#include "wreathmac/macdonald.hpp"

namespace wreathmac {

const char* variant_name(WreathVariant v) {
    switch (v) {
        case WreathVariant::standard: return "standard";
        case WreathVariant::forward: return "forward";
        case WreathVariant::opposite: return "opposite";
    }
    return "?";
}

WreathVariant variant_from_name(const std::string& name) {
    if (name == "standard") return WreathVariant::standard;
    if (name == "forward") return WreathVariant::forward;
    if (name == "opposite") return WreathVariant::opposite;
    throw ParseError("unknown variant '" + name + "'");
}

std::string WreathKey::canonical_json() const {
    std::ostringstream os;
    os << "{\"beta\":" << w.beta().str() << ",\"mu\":" << mu.str() << ",\"r\":" << r << ",\"u\":[";
    for (int i = 0; i < r; ++i) {
        if (i) os << ",";
        os << w.u()[i];
    }
    os << "],\"variant\":\"" << variant_name(variant) << "\"}";
    return os.str();
}

namespace {

std::mutex g_cache_mutex;
std::optional<std::string> g_cache_dir;

std::string resolved_cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_cache_dir) return *g_cache_dir;
    const char* env = std::getenv("WREATHMAC_CACHE");
    return env ? std::string(env) : std::string(".wreathmac-cache");
}

// Schur matrix of the matrix plethysm P_M in degree n: column nu gives the
// expansion of P_M(s_nu).  Entries are Laurent polynomials.
const PolyMatrix& plethysm_schur_matrix(int r, int n, const MatRF& m, const std::string& kind) {
    static std::mutex mtx;
    static std::map<std::string, PolyMatrix> cache;
    std::ostringstream key;
    key << r << "|" << n << "|" << kind;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key.str());
        if (it != cache.end()) return it->second;
    }
    const auto& basis = multipartitions_of(r, n);
    const size_t N = basis.size();
    std::map<MultiPartition, size_t> index;
    for (size_t i = 0; i < N; ++i) index[basis[i]] = i;
    PolyMatrix out(N, std::vector<LaurentPoly2>(N, LaurentPoly2(VarTag::qt)));
    for (size_t c = 0; c < N; ++c) {
        MultiSymFn img = matrix_plethysm(m, MultiSymFn::schur(r, basis[c]));
        for (const auto& [mp, coeff] : img.schur_expansion()) out[index.at(mp)][c] = coeff.poly();
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(key.str(), std::move(out)).first->second;
}

MatRF triangularity_matrix(int r, bool tside, bool forward) {
    MatRF id = MatRF::identity(r);
    MatRF rot = chi_matrix(r, forward ? 1 : -1);
    RatFn2 coeff = tside ? RatFn2(LaurentPoly2::monomial(1, 0, -1)) : RatFn2(LaurentPoly2::var1());
    return id - rot.scaled(coeff);
}

MultiSymFn solve_H_uncached(const WreathKey& key) {
    const int r = key.r;
    const int n = key.mu.size();
    const auto& basis = multipartitions_of(r, n);
    const size_t N = basis.size();
    std::map<MultiPartition, size_t> index;
    for (size_t i = 0; i < N; ++i) index[basis[i]] = i;

    const bool forward = key.variant == WreathVariant::forward;
    const bool opposite = key.variant == WreathVariant::opposite;
    const auto& cq = plethysm_schur_matrix(r, n, triangularity_matrix(r, false, forward),
                                           forward ? "q-fwd" : "q-bwd");
    const auto& ct = plethysm_schur_matrix(r, n, triangularity_matrix(r, true, forward),
                                           forward ? "t-fwd" : "t-bwd");

    std::vector<bool> geq(N), leq(N);
    for (size_t i = 0; i < N; ++i) {
        geq[i] = order_ge_w(key.w, basis[i], key.mu);
        leq[i] = order_ge_w(key.w, key.mu, basis[i]);
    }
    if (opposite) std::swap(geq, leq);

    PolyMatrix rows;
    for (size_t i = 0; i < N; ++i) {
        if (!geq[i]) rows.push_back(cq[i]);
        if (!leq[i]) rows.push_back(ct[i]);
    }
    MultiPartition norm_slot(r);
    norm_slot.comp(0) = n > 0 ? Partition({n}) : Partition();
    const size_t pin = index.at(norm_slot);

    std::vector<RatFn2> x;
    if (rows.empty()) {
        if (N != 1) throw SolverDegenerateError("solve_H: no constraints but dim > 1");
        x.assign(1, RatFn2(1));
    } else {
        x = kernel_vector_pinned(rows, pin);
    }

    MultiSymFn::PMap schur;
    for (size_t i = 0; i < N; ++i)
        if (!x[i].is_zero()) schur[basis[i]] = x[i];
    MultiSymFn h = MultiSymFn::from_schur(r, schur);

    // The leading coefficients of both plethysm images must be nonzero.
    const size_t mslot = index.at(key.mu);
    RatFn2 lead_q(VarTag::qt), lead_t(VarTag::qt);
    for (size_t j = 0; j < N; ++j) {
        if (!x[j].is_zero()) {
            lead_q += RatFn2(cq[mslot][j]) * x[j];
            lead_t += RatFn2(ct[mslot][j]) * x[j];
        }
    }
    if (lead_q.is_zero() || lead_t.is_zero())
        throw SolverDegenerateError("solve_H: vanishing leading term at mu");
    return h;
}

}  // namespace

void set_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache_dir = dir;
}

std::string cache_dir() {
    return resolved_cache_dir();
}

const MultiSymFn& solve_H(const WreathKey& key) {
    static std::mutex mtx;
    static std::map<WreathKey, MultiSymFn> memory;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memory.find(key);
        if (it != memory.end()) return it->second;
    }
    const std::string dir = resolved_cache_dir();
    const std::string keyjson = key.canonical_json();
    std::filesystem::path file;
    if (!dir.empty()) {
        std::ostringstream name;
        name << std::hex << fnv1a64(keyjson) << ".json";
        file = std::filesystem::path(dir) / name.str();
        std::error_code ec;
        if (std::filesystem::exists(file, ec)) {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                auto [storedkey, value] = cache_entry_from_json(buf.str(), key.r);
                if (storedkey == keyjson) {
                    std::lock_guard<std::mutex> lock(mtx);
                    return memory.emplace(key, std::move(value)).first->second;
                }
            } catch (const std::exception&) {
                // unreadable entry: fall through and recompute
            }
        }
    }
    MultiSymFn h = solve_H_uncached(key);
    if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        static std::mt19937_64 rng(std::random_device{}());
        uint64_t nonce;
        {
            std::lock_guard<std::mutex> lock(mtx);
            nonce = rng();
        }
        std::ostringstream tmpname;
        tmpname << file.string() << ".tmp-" << std::hex << nonce;
        {
            std::ofstream out(tmpname.str());
            out << cache_entry_to_json(keyjson, h);
        }
        std::filesystem::rename(tmpname.str(), file, ec);
        if (ec) std::filesystem::remove(tmpname.str(), ec);
    }
    std::lock_guard<std::mutex> lock(mtx);
    return memory.emplace(key, std::move(h)).first->second;
}

std::map<MultiPartition, LaurentPoly2> kostka(const WreathKey& key) {
    std::map<MultiPartition, LaurentPoly2> out;
    for (const auto& [mp, c] : solve_H(key).schur_expansion()) {
        if (!c.is_polynomial())
            throw InvariantViolationError("kostka: coefficient at " + mp.str() + " is not a Laurent polynomial");
        out.emplace(mp, c.poly());
    }
    return out;
}

Int multitableaux_count(const MultiPartition& mp) {
    const int n = mp.size();
    Int fact(1);
    for (int i = 2; i <= n; ++i) fact *= i;
    Int denom(1);
    for (const auto& comp : mp.comps()) {
        Int cf(1);
        for (int i = 2; i <= comp.size(); ++i) cf *= i;
        denom *= cf;
    }
    Int count = fact / denom;
    for (const auto& comp : mp.comps()) count *= comp.num_standard_tableaux();
    return count;
}

KostkaReport check_kostka(const WreathKey& key) {
    KostkaReport rep;
    auto table = kostka(key);
    std::ostringstream detail;
    for (const auto& [lam, poly] : table) {
        if (!poly.has_nonneg_int_coeffs()) {
            rep.positive = false;
            detail << "negative/non-integer coefficient at " << lam.str() << "; ";
        }
        long gdeg = 0;
        for (int i = 0; i < key.r; ++i) gdeg += static_cast<long>(lam.comp(i).size()) * i;
        gdeg = imod(gdeg, key.r);
        for (const auto& [e, c] : poly.terms()) {
            if (imod(e.b - e.a, key.r) != gdeg) {
                rep.gamma_graded = false;
                detail << "Gamma-degree violation at " << lam.str() << "; ";
                break;
            }
        }
        if (poly.eval(1, 1) != Rat(multitableaux_count(lam))) {
            rep.counts_match = false;
            detail << "K(1,1) mismatch at " << lam.str() << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

namespace {

MultiSymFn msf_swap(const MultiSymFn& f) {
    return f.map_coeffs([](const RatFn2& c) { return c.swap_vars(); });
}

MultiSymFn msf_inv(const MultiSymFn& f) {
    return f.map_coeffs([](const RatFn2& c) { return c.subst_inverse(); });
}

MultiSymFn msf_down(const MultiSymFn& f) {
    return msf_inv(perm_plethysm(perm_neg(f.r()), f.omega()));
}

// Normalization coefficient <s_n[X^(0)], f>.
RatFn2 norm_coeff(const MultiSymFn& f, int n) {
    MultiPartition slot(f.r());
    if (n > 0) slot.comp(0) = Partition({n});
    return f.schur_coeff(slot);
}

IdentityReport prop_identity(const std::string& name, const MultiSymFn& lhs, const MultiSymFn& rhs, int n,
                             bool expect_equal = false) {
    IdentityReport rep{name, false, ""};
    RatFn2 c = norm_coeff(lhs, n);
    std::ostringstream os;
    if (expect_equal && !(c == RatFn2(1, c.tag()))) {
        os << "normalization scalar " << c.str() << " != 1";
        rep.detail = os.str();
        return rep;
    }
    bool neg = false;
    if (!c.is_laurent_monomial(&neg) || neg) {
        os << "proportionality scalar " << c.str() << " is not a Laurent monomial";
        rep.detail = os.str();
        return rep;
    }
    if (!(lhs == rhs.scaled(c))) {
        os << "sides differ (scalar " << c.str() << ")";
        rep.detail = os.str();
        return rep;
    }
    rep.pass = true;
    rep.detail = "scalar " + c.str();
    return rep;
}

}  // namespace

std::vector<IdentityReport> check_symmetries(const WreathKey& key) {
    std::vector<IdentityReport> out;
    const int r = key.r;
    const int n = key.mu.size();
    const MultiSymFn& h = solve_H(key);

    {
        MultiSymFn lhs = msf_swap(perm_plethysm(perm_neg(r), h));
        WreathKey k2(r, key.w.star(), key.mu.star(), key.variant);
        out.push_back(prop_identity("swap-neg", lhs, solve_H(k2), n, true));
    }
    {
        MultiSymFn lhs = msf_down(h);
        WreathKey k2(r, AffineWeylElt::longest_finite(r) * key.w, key.mu.permuted(perm_w0(r)), key.variant);
        out.push_back(prop_identity("inversion", lhs, solve_H(k2), n));
    }
    {
        MultiSymFn lhs = perm_plethysm(perm_chi(r), h);
        WreathKey k2(r, AffineWeylElt::rotation(r) * key.w, key.mu.permuted(perm_chi(r)), key.variant);
        out.push_back(prop_identity("rotation", lhs, solve_H(k2), n));
    }
    {
        WreathKey kf(r, key.w, key.mu, WreathVariant::forward);
        MultiSymFn lhs = solve_H(kf);
        WreathKey k2(r, AffineWeylElt::longest_finite(r) * key.w, key.mu.permuted(perm_w0(r)), WreathVariant::standard);
        MultiSymFn rhs = perm_plethysm(perm_w0(r), solve_H(k2));
        out.push_back(prop_identity("forward", lhs, rhs, n));
    }
    {
        WreathKey ko(r, key.w, key.mu, WreathVariant::opposite);
        MultiSymFn lhs = solve_H(ko);
        MultiSymFn rhs = msf_inv(msf_swap(h));
        out.push_back(prop_identity("opposite-order", lhs, rhs, n, true));
    }
    {
        // down nabla^(0) down = (nabla^(0))^{-1} on this basis vector
        IdentityReport rep{"down-nabla-involution", false, ""};
        AffineWeylElt w0w = AffineWeylElt::longest_finite(r) * key.w;
        MultiPartition w0mu = key.mu.permuted(perm_w0(r));
        RatFn2 e_inner = nabla_pairing_eigen(WreathKey(r, w0w, w0mu, key.variant), 0);
        RatFn2 e_outer = nabla_pairing_eigen(key, 0);
        bool neg = false;
        if (!e_inner.is_laurent_monomial(&neg) || !e_outer.is_laurent_monomial(&neg)) {
            rep.detail = "nabla eigenvalue is not a Laurent monomial";
        } else {
            MultiSymFn lhs = msf_down(msf_down(h).scaled(e_inner));
            MultiSymFn rhs = h.scaled(e_outer.inverse());
            rep.pass = lhs == rhs;
            if (!rep.pass) rep.detail = "sides differ";
        }
        out.push_back(rep);
    }
    return out;
}

RatFn2 norm_b_pairing(const WreathKey& key) {
    const MultiSymFn& h = solve_H(key);
    return pair_qt(h, msf_inv(perm_plethysm(perm_neg(key.r), h)));
}

RatFn2 norm_b_formula(const WreathKey& key) {
    Partition mu = tau_w(key.w, key.mu);
    LaurentPoly2 one(Rat(1));
    RatFn2 prod(1);
    for (const Cell& s : mu.cells()) {
        HookData hd = mu.hook_data(s);
        if (hd.hook % key.r != 0) continue;
        prod *= RatFn2(one - LaurentPoly2::monomial(1, 1 + hd.arm, -hd.leg));
        prod *= RatFn2(one - LaurentPoly2::monomial(1, -hd.arm, 1 + hd.leg));
    }
    return prod;
}

JPResult J_and_P(const WreathKey& key) {
    const MultiSymFn& h = solve_H(key);
    MultiSymFn j = matrix_plethysm(triangularity_matrix(key.r, true, key.variant == WreathVariant::forward), h);
    RatFn2 c = j.schur_coeff(key.mu);
    if (c.is_zero()) throw InvariantViolationError("J_and_P: vanishing leading coefficient");
    return JPResult{j, c, j.scaled(c.inverse())};
}

std::vector<IdentityReport> check_conjectures(const WreathKey& key) {
    std::vector<IdentityReport> out;
    const int r = key.r;
    Partition mu = tau_w(key.w, key.mu);
    LaurentPoly2 one(Rat(1));
    JPResult jp = J_and_P(key);

    {
        IdentityReport rep{"P-pairing", false, ""};
        RatFn2 lhs = pair_P(jp.P, msf_inv(perm_plethysm(perm_neg(r), jp.P)));
        RatFn2 rhs(1);
        for (const Cell& s : mu.cells()) {
            HookData hd = mu.hook_data(s);
            if (hd.hook % r != 0) continue;
            rhs *= RatFn2(one - LaurentPoly2::monomial(1, 1 + hd.arm, -hd.leg),
                          one - LaurentPoly2::monomial(1, hd.arm, -1 - hd.leg));
        }
        rep.pass = lhs == rhs;
        if (!rep.pass) rep.detail = "lhs=" + lhs.str() + " rhs=" + rhs.str();
        out.push_back(rep);
    }
    {
        IdentityReport rep{"J-to-P-coefficient", false, ""};
        RatFn2 diag = solve_H(key).schur_coeff(key.mu);
        if (!diag.is_polynomial()) {
            rep.detail = "diagonal Kostka not polynomial";
            out.push_back(rep);
            return out;
        }
        // terms with the maximum power of t
        const LaurentPoly2& kp = diag.poly();
        int maxb = 0;
        bool first = true;
        for (const auto& [e, c] : kp.terms()) {
            if (first || e.b > maxb) maxb = e.b;
            first = false;
        }
        LaurentPoly2 f(VarTag::qt);
        for (const auto& [e, c] : kp.terms())
            if (e.b == maxb) f.add_term(e, c);
        bool neg = false;
        if (first || !RatFn2(f).is_laurent_monomial(&neg) || neg) {
            rep.detail = "max-t part " + f.str() + " is not a single monomial";
            out.push_back(rep);
            return out;
        }
        RatFn2 rhs(f);
        for (const Cell& s : mu.cells()) {
            HookData hd = mu.hook_data(s);
            if (hd.hook % r != 0) continue;
            rhs *= RatFn2(one - LaurentPoly2::monomial(1, hd.arm, -1 - hd.leg));
        }
        rep.pass = jp.c == rhs;
        if (!rep.pass) rep.detail = "c=" + jp.c.str() + " rhs=" + rhs.str();
        out.push_back(rep);
    }
    return out;
}

MatRF Mminus_matrix(int r) {
    MatRF m(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            m.at(i, j) = RatFn2(i >= j ? LaurentPoly2::monomial(1, 0, j) : LaurentPoly2::monomial(1, r - j, 0));
    return m;
}

AffineWeylElt antidominant_translation(int r, int depth) {
    if (((r - 1) * depth) % 2) ++depth;
    std::vector<long> g(r);
    for (int j = 0; j < r; ++j) g[j] = static_cast<long>(depth) * (r - 1 - 2 * j) / 2;
    return AffineWeylElt::translation_minus(RootVec(std::move(g)));
}

MultiSymFn factor_generic(int r, const MultiPartition& mu_bullet) {
    if (mu_bullet.r() != r) throw SizeMismatchError("factor_generic: wrong r");
    MatRF m = Mminus_matrix(r);
    MultiSymFn out = MultiSymFn::one(r);
    for (int i = 0; i < r; ++i) {
        const Partition& nu = mu_bullet.comp(i);
        if (nu.empty()) continue;
        // parameters q_i = q^{r-i} t^{-i}, t_i = q^{-i} t^{r-i}
        LaurentPoly2 qi = LaurentPoly2::monomial(1, r - i, -i);
        LaurentPoly2 ti = LaurentPoly2::monomial(1, -i, r - i);
        SymFn h = tilde_H(nu).map_coeffs([&](const RatFn2& c) {
            // substitute (q,t) -> (q_i, t_i): monomial exponent map
            RatFn2 outc(0);
            auto sub = [&](const LaurentPoly2& p) {
                LaurentPoly2 acc(VarTag::qt);
                for (const auto& [e, v] : p.terms()) {
                    LaurentPoly2 term(v);
                    term = term * (e.a >= 0 ? qi.pow(e.a) : qi.subst_inverse().pow(-e.a));
                    term = term * (e.b >= 0 ? ti.pow(e.b) : ti.subst_inverse().pow(-e.b));
                    acc += term;
                }
                return acc;
            };
            return RatFn2(sub(c.num()), sub(c.den()));
        });
        std::vector<RatFn2> row(r, RatFn2(0));
        for (int j = 0; j < r; ++j) row[j] = m.at(i, j);
        out = out * vector_plethysm(h, row);
    }
    return out;
}

RatFn2 nabla_pairing_eigen(const WreathKey& key, int slot) {
    const int n = key.mu.size();
    MultiSymFn en = MultiSymFn::embed_slot(key.r, SymFn::elementary(n), slot);
    return en.hall(solve_H(key));
}

}  // namespace wreathmac
