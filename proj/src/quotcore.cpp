#include "wreathmac/quotcore.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wreathmac {

int MultiPartition::size() const {
    int n = 0;
    for (const auto& p : comps_) n += p.size();
    return n;
}

bool MultiPartition::all_empty() const {
    for (const auto& p : comps_)
        if (!p.empty()) return false;
    return true;
}

MultiPartition MultiPartition::permuted(const std::vector<int>& u) const {
    MultiPartition out(r());
    for (int i = 0; i < r(); ++i) out.comps_[u[i]] = comps_[i];
    return out;
}

MultiPartition MultiPartition::star() const {
    MultiPartition out(r());
    for (int i = 0; i < r(); ++i) out.comps_[r() - 1 - i] = comps_[i].transpose();
    return out;
}

MultiPartition MultiPartition::transposed() const {
    MultiPartition out(r());
    for (int i = 0; i < r(); ++i) out.comps_[i] = comps_[i].transpose();
    return out;
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r(); ++i) {
        if (i) os << ",";
        os << comps_[i].str();
    }
    os << "]";
    return os.str();
}

MultiPartition MultiPartition::parse(const std::string& text) {
    std::vector<Partition> comps;
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("MultiPartition: expected '[' in " + text);
    ++pos;
    skip();
    while (pos < text.size() && text[pos] != ']') {
        if (text[pos] != '[') throw ParseError("MultiPartition: expected '[' in " + text);
        size_t end = text.find(']', pos);
        if (end == std::string::npos) throw ParseError("MultiPartition: missing ']' in " + text);
        comps.push_back(Partition::parse(text.substr(pos, end - pos + 1)));
        pos = end + 1;
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip();
        }
    }
    if (pos >= text.size()) throw ParseError("MultiPartition: missing ']' in " + text);
    return MultiPartition(std::move(comps));
}

const std::vector<MultiPartition>& multipartitions_of(int r, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<MultiPartition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(r, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(r);
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == r - 1) {
            cur[slot] = Partition();
            for (const auto& p : partitions_of(rest)) {
                cur[slot] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int k = 0; k <= rest; ++k)
            for (const auto& p : partitions_of(k)) {
                cur[slot] = p;
                self(self, slot + 1, rest - k);
            }
    };
    if (r >= 1 && n >= 0) rec(rec, 0, n);
    return cache.emplace(key, std::move(out)).first->second;
}

QuotCore quot_core(const Partition& mu, int r) {
    if (r < 1) throw std::domain_error("quot_core: r must be >= 1");
    MayaDiagram b(mu, 0);
    // Window big enough to see all structure on every runner.
    long pad = static_cast<long>(mu.size()) + static_cast<long>(r) + 2;
    long lo = -pad * r, hi = pad * r;
    std::vector<std::set<long>> runner_holes(r);
    for (long p = lo; p < hi; ++p)
        if (b.hole_at(p)) {
            long i = imod(p, r);
            runner_holes[i].insert((p - i) / r);
        }
    std::vector<Partition> quot(r);
    std::vector<long> charges(r);
    for (int i = 0; i < r; ++i) {
        MayaDiagram bi = MayaDiagram::from_holes(runner_holes[i], -pad, pad);
        quot[i] = bi.shape();
        charges[i] = bi.charge();
    }
    QuotCore out{MultiPartition(std::move(quot)), Partition(), RootVec(std::move(charges))};
    out.core = core_of_root(out.charges);
    if (mu.size() != out.core.size() + r * out.quot.size())
        throw InvariantViolationError("quot_core: size bookkeeping failed");
    return out;
}

RootVec kappa_bar(const Partition& mu, int r) {
    std::vector<long> counts(r, 0);
    for (const Cell& c : mu.cells()) ++counts[cell_residue(c, r)];
    std::vector<long> coords(r, 0);
    for (int j = 0; j < r; ++j) coords[j] = counts[j] - counts[imod(j + 1, r)];
    return RootVec(std::move(coords));
}

Partition tau(const MultiPartition& mu_bullet, const RootVec& beta) {
    const int r = mu_bullet.r();
    if (beta.r() != r) throw SizeMismatchError("tau: mixed r");
    // Runner i is all holes from slot beta_i + len_i on, all beads strictly
    // below slot beta_i - mu^(i)_1.
    long K = 0, kmin = 0;
    for (int i = 0; i < r; ++i) {
        K = std::max(K, beta.coord(i) + mu_bullet.comp(i).length());
        kmin = std::min(kmin, beta.coord(i) - mu_bullet.comp(i).part(0));
    }
    std::set<long> holes;
    for (int i = 0; i < r; ++i) {
        MayaDiagram bi(mu_bullet.comp(i), beta.coord(i));
        for (long k : bi.holes_below(K)) holes.insert(k * r + i);
    }
    MayaDiagram b = MayaDiagram::from_holes(holes, kmin * r - r, K * r);
    if (b.charge() != 0) throw InvariantViolationError("tau: charge must be zero");
    return b.shape();
}

Partition core_of_root(const RootVec& beta) {
    return tau(MultiPartition(beta.r()), beta);
}

std::pair<MultiPartition, RootVec> weyl_act_pair(const AffineWeylElt& w,
                                                 const MultiPartition& mu_bullet,
                                                 const RootVec& alpha) {
    // w = u t_{-beta^vee} = t_{-(u beta)^vee} u, and t_{gamma^vee} u acts by
    // (mu, alpha) -> (u(mu), gamma + u(alpha)).
    MultiPartition m = mu_bullet.permuted(w.u());
    RootVec a = (alpha - w.beta()).permuted(w.u());
    return {std::move(m), std::move(a)};
}

Partition weyl_act_partition(const AffineWeylElt& w, const Partition& lam) {
    QuotCore qc = quot_core(lam, w.r());
    auto [m, a] = weyl_act_pair(w, qc.quot, qc.charges);
    return tau(m, a);
}

Partition simple_reflect_partition(int r, int i, const Partition& lam) {
    std::vector<Cell> add = lam.addable(r, i), rem = lam.removable(r, i);
    // Build the new diagram row by row.
    std::map<int, int> width;
    for (int b = 0; b < lam.length(); ++b) width[b] = lam.parts()[b];
    for (const Cell& c : rem) width[c.b] = c.a;
    for (const Cell& c : add) width[c.b] = c.a + 1;
    std::vector<int> parts;
    for (int b = 0;; ++b) {
        auto it = width.find(b);
        int wdt = it == width.end() ? 0 : it->second;
        if (wdt == 0 && b >= lam.length()) break;
        parts.push_back(wdt);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition tau_w(const AffineWeylElt& w, const MultiPartition& mu_bullet) {
    auto [m, a] = weyl_act_pair(w.inverse(), mu_bullet, RootVec::zero(w.r()));
    return tau(m, a);
}

bool order_ge_w(const AffineWeylElt& w, const MultiPartition& lam_bullet, const MultiPartition& mu_bullet) {
    if (lam_bullet.size() != mu_bullet.size())
        throw SizeMismatchError("order_ge_w: multipartitions must have equal size");
    return tau_w(w, lam_bullet).dominates(tau_w(w, mu_bullet));
}

}  // namespace wreathmac
