#include "wreathmac/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace wreathmac {

namespace {

std::vector<int> identity_perm(int r) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = i;
    return u;
}

std::vector<int> inverse_perm(const std::vector<int>& u) {
    std::vector<int> v(u.size());
    for (size_t i = 0; i < u.size(); ++i) v[u[i]] = static_cast<int>(i);
    return v;
}

}  // namespace

AffineWeylElt::AffineWeylElt(int r) : u_(identity_perm(r)), beta_(RootVec::zero(r)) {
    if (r < 1) throw std::domain_error("AffineWeylElt: r must be >= 1");
}

AffineWeylElt::AffineWeylElt(std::vector<int> u, RootVec beta) : u_(std::move(u)), beta_(std::move(beta)) {
    if (static_cast<int>(u_.size()) != beta_.r()) throw SizeMismatchError("AffineWeylElt: size mismatch");
}

AffineWeylElt AffineWeylElt::generator(int r, int i) {
    if (r == 1) return AffineWeylElt(1);  // degenerate: s_0 trivial group
    if (i < 0 || i >= r) throw std::domain_error("AffineWeylElt::generator: index out of range");
    if (i >= 1) {
        auto u = identity_perm(r);
        std::swap(u[i - 1], u[i]);
        return AffineWeylElt(std::move(u), RootVec::zero(r));
    }
    // s_0 = t_{theta^vee} s_theta = s_theta t_{-theta^vee} with theta = eps_0 - eps_{r-1}.
    auto u = identity_perm(r);
    std::swap(u[0], u[r - 1]);
    std::vector<long> theta(r, 0);
    theta[0] = 1;
    theta[r - 1] = -1;
    return AffineWeylElt(std::move(u), RootVec(std::move(theta)));
}

AffineWeylElt AffineWeylElt::longest_finite(int r) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = r - 1 - i;
    return AffineWeylElt(std::move(u), RootVec::zero(r));
}

AffineWeylElt AffineWeylElt::rotation(int r) {
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = static_cast<int>(imod(i + 1, r));
    return AffineWeylElt(std::move(u), RootVec::zero(r));
}

AffineWeylElt AffineWeylElt::translation_minus(const RootVec& beta) {
    return AffineWeylElt(identity_perm(beta.r()), beta);
}

AffineWeylElt operator*(const AffineWeylElt& x, const AffineWeylElt& y) {
    if (x.r() != y.r()) throw SizeMismatchError("AffineWeylElt: mixed r");
    // (u1 t_{-b1}) (u2 t_{-b2}) = (u1 u2) t_{-(u2^{-1}(b1) + b2)}
    const int r = x.r();
    std::vector<int> u(r);
    for (int i = 0; i < r; ++i) u[i] = x.u_[y.u_[i]];
    RootVec b = x.beta_.permuted(inverse_perm(y.u_)) + y.beta_;
    return AffineWeylElt(std::move(u), std::move(b));
}

AffineWeylElt AffineWeylElt::inverse() const {
    // (u t_{-b})^{-1} = t_{b} u^{-1} = u^{-1} t_{-(-u(b))}
    std::vector<int> v = inverse_perm(u_);
    RootVec b = (-beta_).permuted(u_);
    return AffineWeylElt(std::move(v), std::move(b));
}

AffineWeylElt AffineWeylElt::star() const {
    const int r = this->r();
    // u* = w0 u w0, beta* = -w0(beta)
    std::vector<int> w0(r);
    for (int i = 0; i < r; ++i) w0[i] = r - 1 - i;
    std::vector<int> ustar(r);
    for (int i = 0; i < r; ++i) ustar[i] = w0[u_[w0[i]]];
    RootVec bstar = (-beta_).permuted(w0);
    return AffineWeylElt(std::move(ustar), std::move(bstar));
}

bool AffineWeylElt::is_identity() const {
    return beta_.is_zero() && u_ == identity_perm(r());
}

long AffineWeylElt::act_position(long p) const {
    const int r = this->r();
    long i = imod(p, r);
    long k = (p - i) / r;
    // t_{-beta^vee} shifts runner i by -beta_i, then u relabels runners.
    return (k - beta_.coord(static_cast<int>(i))) * r + u_[i];
}

bool AffineWeylElt::has_left_descent(int i) const {
    // l(s_i w) < l(w) iff w^{-1} inverts the adjacent value pair
    // (v, v+1) with v = i-1 mod r; equivalently w^{-1}(v) > w^{-1}(v+1).
    AffineWeylElt winv = inverse();
    long v = i - 1;  // may be -1 when i = 0
    return winv.act_position(v) > winv.act_position(v + 1);
}

int AffineWeylElt::length() const {
    return static_cast<int>(reduced_word().size());
}

std::vector<int> AffineWeylElt::reduced_word() const {
    std::vector<int> word;
    AffineWeylElt w = *this;
    const int r = this->r();
    if (r == 1) return word;
    while (!w.is_identity()) {
        int found = -1;
        for (int i = 0; i < r; ++i)
            if (w.has_left_descent(i)) {
                found = i;
                break;
            }
        if (found < 0) throw std::logic_error("reduced_word: non-identity element without descent");
        word.push_back(found);
        w = generator(r, found) * w;
    }
    return word;
}

std::string AffineWeylElt::str() const {
    std::ostringstream os;
    os << "u=[";
    for (int i = 0; i < r(); ++i) {
        if (i) os << ",";
        os << u_[i];
    }
    os << "] beta=" << beta_.str();
    return os.str();
}

AffineWeylElt AffineWeylElt::parse(int r, const std::string& text) {
    AffineWeylElt w(r);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "w0") {
            w = w * longest_finite(r);
        } else if (tok.size() >= 2 && tok[0] == 's') {
            int i;
            try {
                i = std::stoi(tok.substr(1));
            } catch (...) {
                throw ParseError("Weyl: bad generator token '" + tok + "'");
            }
            if (i < 0 || i >= r) throw ParseError("Weyl: generator index out of range in '" + tok + "'");
            w = w * generator(r, i);
        } else if (tok.size() >= 2 && tok[0] == 't' && tok[1] == '[') {
            std::string body = tok.substr(2);
            if (body.empty() || body.back() != ']') throw ParseError("Weyl: bad translation token '" + tok + "'");
            body.pop_back();
            std::vector<long> c;
            std::istringstream bs(body);
            std::string num;
            while (std::getline(bs, num, ',')) {
                try {
                    c.push_back(std::stol(num));
                } catch (...) {
                    throw ParseError("Weyl: bad integer in '" + tok + "'");
                }
            }
            if (static_cast<int>(c.size()) != r) throw ParseError("Weyl: translation vector must have r entries");
            w = w * translation_minus(RootVec(std::move(c)));
        } else {
            throw ParseError("Weyl: unknown token '" + tok + "'");
        }
    }
    return w;
}

std::vector<AffineWeylElt> weyl_ball(int r, int maxlen) {
    std::vector<AffineWeylElt> out;
    std::set<AffineWeylElt> seen;
    std::deque<std::pair<AffineWeylElt, int>> queue;
    AffineWeylElt id(r);
    queue.emplace_back(id, 0);
    seen.insert(id);
    out.push_back(id);
    while (!queue.empty()) {
        auto [w, len] = queue.front();
        queue.pop_front();
        if (len == maxlen) continue;
        for (int i = 0; i < r; ++i) {
            AffineWeylElt next = AffineWeylElt::generator(r, i) * w;
            if (seen.insert(next).second) {
                out.push_back(next);
                queue.emplace_back(next, len + 1);
            }
        }
    }
    return out;
}

}  // namespace wreathmac
