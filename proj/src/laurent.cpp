#include "wreathmac/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wreathmac {

Rat rat_pow(const Rat& x, long k) {
    if (k == 0) return Rat(1);
    Rat base = x;
    if (k < 0) {
        if (x == 0) throw std::domain_error("rat_pow: 0^negative");
        base = Rat(x.get_den(), x.get_num());
        base.canonicalize();
        k = -k;
    }
    Rat acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

const char* var_name(VarTag tag, int which) {
    if (tag == VarTag::qt) return which == 0 ? "q" : "t";
    return which == 0 ? "s" : "u";
}

VarTag join_tags(const LaurentPoly2& x, const LaurentPoly2& y) {
    if (x.tag_ == y.tag_) return x.tag_;
    if (x.is_constant()) return y.tag_;
    if (y.is_constant()) return x.tag_;
    throw VarTagError("mixing (q,t)- and (s,u)-tagged values; call to_su first");
}

LaurentPoly2::LaurentPoly2(const Rat& c, VarTag tag) : tag_(tag) {
    if (c != 0) terms_[{0, 0}] = c;
}

LaurentPoly2::LaurentPoly2(long c, VarTag tag) : LaurentPoly2(Rat(c), tag) {}

LaurentPoly2 LaurentPoly2::monomial(const Rat& c, int a, int b, VarTag tag) {
    LaurentPoly2 p(tag);
    if (c != 0) p.terms_[{a, b}] = c;
    return p;
}

LaurentPoly2 LaurentPoly2::var1(VarTag tag) { return monomial(1, 1, 0, tag); }
LaurentPoly2 LaurentPoly2::var2(VarTag tag) { return monomial(1, 0, 1, tag); }

bool LaurentPoly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0});
}

bool LaurentPoly2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0} && terms_.begin()->second == 1;
}

bool LaurentPoly2::has_nonneg_int_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0 || c.get_den() != 1) return false;
    return true;
}

Rat LaurentPoly2::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rat(0) : it->second;
}

std::pair<Exp2, Rat> LaurentPoly2::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Exp2 LaurentPoly2::min_exps() const {
    if (terms_.empty()) throw std::logic_error("min_exps of zero");
    Exp2 m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.a = std::min(m.a, e.a);
        m.b = std::min(m.b, e.b);
    }
    return m;
}

Exp2 LaurentPoly2::max_exps() const {
    if (terms_.empty()) throw std::logic_error("max_exps of zero");
    Exp2 m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.a = std::max(m.a, e.a);
        m.b = std::max(m.b, e.b);
    }
    return m;
}

void LaurentPoly2::add_term(const Exp2& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 out(tag_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    tag_ = join_tags(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    tag_ = join_tags(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
    LaurentPoly2 out(join_tags(x, y));
    if (x.is_zero() || y.is_zero()) return out;
    for (const auto& [e1, c1] : x.terms())
        for (const auto& [e2, c2] : y.terms())
            out.add_term({e1.a + e2.a, e1.b + e2.b}, c1 * c2);
    return out;
}

LaurentPoly2 LaurentPoly2::scaled(const Rat& c) const {
    LaurentPoly2 out(tag_);
    if (c == 0) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

LaurentPoly2 LaurentPoly2::shifted(int da, int db) const {
    LaurentPoly2 out(tag_);
    for (const auto& [e, v] : terms_) out.terms_[{e.a + da, e.b + db}] = v;
    return out;
}

LaurentPoly2 LaurentPoly2::pow(int k) const {
    if (k < 0) throw std::domain_error("LaurentPoly2::pow: negative exponent");
    LaurentPoly2 acc(Rat(1), tag_);
    LaurentPoly2 base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool LaurentPoly2::operator==(const LaurentPoly2& o) const {
    return terms_ == o.terms_;
}

LaurentPoly2 LaurentPoly2::power_substitute(int k) const {
    if (k < 1) throw std::domain_error("power_substitute: k must be >= 1");
    LaurentPoly2 out(tag_);
    for (const auto& [e, c] : terms_) out.terms_[{e.a * k, e.b * k}] = c;
    return out;
}

LaurentPoly2 LaurentPoly2::subst_inverse() const {
    LaurentPoly2 out(tag_);
    for (const auto& [e, c] : terms_) out.terms_[{-e.a, -e.b}] = c;
    return out;
}

LaurentPoly2 LaurentPoly2::subst_second_inverse() const {
    LaurentPoly2 out(tag_);
    for (const auto& [e, c] : terms_) out.terms_[{e.a, -e.b}] = c;
    return out;
}

LaurentPoly2 LaurentPoly2::swap_vars() const {
    LaurentPoly2 out(tag_);
    for (const auto& [e, c] : terms_) out.terms_[{e.b, e.a}] = c;
    return out;
}

LaurentPoly2 LaurentPoly2::to_su() const {
    if (tag_ == VarTag::su) throw VarTagError("to_su: value is already (s,u)-tagged");
    LaurentPoly2 out(VarTag::su);
    for (const auto& [e, c] : terms_)
        out.add_term({2 * (e.a + e.b), 2 * (e.a - e.b)}, c);
    return out;
}

Rat LaurentPoly2::eval(const Rat& v1, const Rat& v2) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) acc += c * rat_pow(v1, e.a) * rat_pow(v2, e.b);
    return acc;
}

Rat LaurentPoly2::content() const {
    if (terms_.empty()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

std::optional<LaurentPoly2> LaurentPoly2::divided_by(const LaurentPoly2& g) const {
    if (g.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly2(tag_);
    if (g.is_monomial()) {
        auto [ge, gc] = g.leading_term();
        LaurentPoly2 out(tag_);
        for (const auto& [e, c] : terms_) out.terms_[{e.a - ge.a, e.b - ge.b}] = c / gc;
        return out;
    }
    // Long division w.r.t. the (a,b)-lex order; exact iff remainder is 0.
    // Lex order is multiplicative, so in an exact division every quotient
    // exponent lies between trailing(f)-trailing(g) and leading(f)-leading(g).
    LaurentPoly2 rem = *this;
    LaurentPoly2 quot(tag_);
    auto [ge, gc] = g.leading_term();
    Exp2 ft = terms_.begin()->first, gt = g.terms_.begin()->first;
    Exp2 dmin{ft.a - gt.a, ft.b - gt.b};
    size_t cap = 4 * (num_terms() + g.num_terms()) + 4096;
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term();
        Exp2 d{re.a - ge.a, re.b - ge.b};
        if (d < dmin) return std::nullopt;
        Rat qc = rc / gc;
        quot.add_term(d, qc);
        rem -= g.shifted(d.a, d.b).scaled(qc);
        if (--cap == 0) return std::nullopt;
    }
    return quot;
}

std::vector<Exp2> LaurentPoly2::strip_binomial_factors(int max_span) {
    std::vector<Exp2> found;
    if (is_zero() || is_monomial()) return found;
    // A factor (1 - q^a t^b) vanishes at q=t=1, so a polynomial with nonzero
    // value there has no such factor.
    if (eval(1, 1) != 0) return found;
    Exp2 lo = min_exps(), hi = max_exps();
    int span_a = hi.a - lo.a, span_b = hi.b - lo.b;
    if (span_a > max_span || span_b > max_span) return found;
    for (int a = -span_a; a <= span_a; ++a) {
        for (int b = -span_b; b <= span_b; ++b) {
            if (a < 0 || (a == 0 && b <= 0)) continue;  // lex-positive (a,b)
            LaurentPoly2 bin(Rat(1), tag_);
            bin.add_term({a, b}, Rat(-1));
            while (true) {
                auto q = divided_by(bin);
                if (!q) break;
                *this = *q;
                found.push_back({a, b});
                if (is_monomial()) return found;
                if (eval(1, 1) != 0) return found;
            }
        }
    }
    return found;
}

std::string LaurentPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat ac = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool havevar = (e.a != 0 || e.b != 0);
        if (!havevar || ac != 1) {
            os << rat_str(ac);
            if (havevar) os << "*";
        }
        if (e.a != 0) {
            os << var_name(tag_, 0);
            if (e.a != 1) os << "^" << e.a;
            if (e.b != 0) os << "*";
        }
        if (e.b != 0) {
            os << var_name(tag_, 1);
            if (e.b != 1) os << "^" << e.b;
        }
    }
    return os.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of polynomial text");
        return s[pos++];
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer at position " + std::to_string(pos) + " in \"" + s + "\"");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
};

}  // namespace

LaurentPoly2 LaurentPoly2::parse(const std::string& text, VarTag tag) {
    LaurentPoly2 out(tag);
    PolyLexer lx(text);
    if (lx.eof()) throw ParseError("empty polynomial text");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(lx.pos));
        }
        first = false;
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            long num = lx.integer();
            long den = 1;
            if (lx.peek() == '/') {
                lx.get();
                den = lx.integer();
            }
            coeff = Rat(num, den);
            coeff.canonicalize();
            have_coeff = true;
            if (lx.peek() == '*') lx.get();
        }
        int ea = 0, eb = 0;
        bool have_var = false;
        while (true) {
            char v = lx.peek();
            int which;
            if (v == var_name(tag, 0)[0])
                which = 0;
            else if (v == var_name(tag, 1)[0])
                which = 1;
            else
                break;
            lx.get();
            have_var = true;
            int e = 1;
            if (lx.peek() == '^') {
                lx.get();
                e = static_cast<int>(lx.integer());
            }
            (which == 0 ? ea : eb) += e;
            if (lx.peek() == '*')
                lx.get();
            else
                break;
        }
        if (!have_coeff && !have_var)
            throw ParseError("expected term at position " + std::to_string(lx.pos) + " in \"" + text + "\"");
        out.add_term({ea, eb}, sign > 0 ? coeff : Rat(-coeff));
    }
    return out;
}

}  // namespace wreathmac
