#include "wreathmac/ratfn.hpp"

#include <sstream>

namespace wreathmac {

RatFn2::RatFn2(const LaurentPoly2& num, const LaurentPoly2& den) : num_(num), den_(den) {
    if (den.is_zero()) throw std::domain_error("RatFn2: zero denominator");
    canonicalize();
}

void RatFn2::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly2(Rat(1), den_.tag());
        return;
    }
    if (!den_.is_one()) {
        if (auto q = num_.divided_by(den_)) {
            num_ = *q;
            den_ = LaurentPoly2(Rat(1), den_.tag());
        }
    }
    if (!den_.is_one()) {
        // Monomials are units; push the denominator's monomial content into num.
        Exp2 dm = den_.min_exps();
        if (dm.a != 0 || dm.b != 0) {
            den_ = den_.shifted(-dm.a, -dm.b);
            num_ = num_.shifted(-dm.a, -dm.b);
        }
        if (!den_.is_monomial()) {
            LaurentPoly2 d = den_;
            auto dfac = d.strip_binomial_factors();
            if (!dfac.empty()) {
                LaurentPoly2 n = num_;
                for (const Exp2& e : dfac) {
                    LaurentPoly2 bin(Rat(1), den_.tag());
                    bin.add_term(e, Rat(-1));
                    auto q = n.divided_by(bin);
                    if (!q) {
                        d = d * bin;  // factor stays in the denominator
                    } else {
                        n = *q;
                    }
                }
                num_ = n;
                den_ = d;
            }
        }
    }
    Rat c = den_.content();
    auto [le, lc] = den_.leading_term();
    (void)le;
    if (lc < 0) c = -c;
    if (c != 1) {
        den_ = den_.scaled(Rat(1) / c);
        num_ = num_.scaled(Rat(1) / c);
    }
    if (den_.is_monomial() && !den_.is_one()) {
        auto [e, lc2] = den_.leading_term();
        num_ = num_.shifted(-e.a, -e.b).scaled(Rat(1) / lc2);
        den_ = LaurentPoly2(Rat(1), den_.tag());
    }
}

const LaurentPoly2& RatFn2::poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFn2::poly: value is not a Laurent polynomial: " + str());
    return num_;
}

bool RatFn2::is_laurent_monomial(bool* negative) const {
    if (!den_.is_one() || !num_.is_monomial()) return false;
    Rat c = num_.leading_term().second;
    if (c != 1 && c != -1) return false;
    if (negative) *negative = (c == -1);
    return true;
}

RatFn2 RatFn2::operator-() const {
    RatFn2 out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFn2 operator+(const RatFn2& x, const RatFn2& y) {
    RatFn2 out(x.tag());
    if (x.den_ == y.den_) {
        out.num_ = x.num_ + y.num_;
        out.den_ = x.den_;
    } else {
        out.num_ = x.num_ * y.den_ + y.num_ * x.den_;
        out.den_ = x.den_ * y.den_;
    }
    out.canonicalize();
    return out;
}

RatFn2 operator-(const RatFn2& x, const RatFn2& y) {
    return x + (-y);
}

RatFn2 operator*(const RatFn2& x, const RatFn2& y) {
    RatFn2 out(x.tag());
    out.num_ = x.num_ * y.num_;
    out.den_ = x.den_ * y.den_;
    out.canonicalize();
    return out;
}

RatFn2 operator/(const RatFn2& x, const RatFn2& y) {
    return x * y.inverse();
}

RatFn2 RatFn2::scaled(const Rat& c) const {
    RatFn2 out = *this;
    out.num_ = out.num_.scaled(c);
    if (c == 0) out.den_ = LaurentPoly2(Rat(1), tag());
    return out;
}

RatFn2 RatFn2::inverse() const {
    if (num_.is_zero()) throw std::domain_error("RatFn2::inverse of zero");
    RatFn2 out(tag());
    out.num_ = den_;
    out.den_ = num_;
    out.canonicalize();
    return out;
}

bool RatFn2::operator==(const RatFn2& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

RatFn2 RatFn2::power_substitute(int k) const {
    RatFn2 out(tag());
    out.num_ = num_.power_substitute(k);
    out.den_ = den_.power_substitute(k);
    out.canonicalize();
    return out;
}

RatFn2 RatFn2::subst_inverse() const {
    RatFn2 out(tag());
    out.num_ = num_.subst_inverse();
    out.den_ = den_.subst_inverse();
    out.canonicalize();
    return out;
}

RatFn2 RatFn2::subst_second_inverse() const {
    RatFn2 out(tag());
    out.num_ = num_.subst_second_inverse();
    out.den_ = den_.subst_second_inverse();
    out.canonicalize();
    return out;
}

RatFn2 RatFn2::swap_vars() const {
    RatFn2 out(tag());
    out.num_ = num_.swap_vars();
    out.den_ = den_.swap_vars();
    out.canonicalize();
    return out;
}

RatFn2 RatFn2::to_su() const {
    RatFn2 out(VarTag::su);
    out.num_ = num_.to_su();
    out.den_ = den_.to_su();
    out.canonicalize();
    return out;
}

Rat RatFn2::eval(const Rat& v1, const Rat& v2) const {
    Rat d = den_.eval(v1, v2);
    if (d == 0) throw std::domain_error("RatFn2::eval: denominator vanishes");
    return num_.eval(v1, v2) / d;
}

std::string RatFn2::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFn2 RatFn2::parse(const std::string& text, VarTag tag) {
    auto slash = text.find(")/(");
    if (!text.empty() && text.front() == '(' && slash != std::string::npos && text.back() == ')') {
        LaurentPoly2 n = LaurentPoly2::parse(text.substr(1, slash - 1), tag);
        LaurentPoly2 d = LaurentPoly2::parse(text.substr(slash + 3, text.size() - slash - 4), tag);
        return RatFn2(n, d);
    }
    return RatFn2(LaurentPoly2::parse(text, tag));
}

}  // namespace wreathmac
