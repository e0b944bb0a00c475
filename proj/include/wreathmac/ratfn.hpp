#pragma once

#include "wreathmac/laurent.hpp"

namespace wreathmac {

// Rational function in two variables, stored as num/den with den a primitive
// integer polynomial of positive lex-leading coefficient.  Canonicalization
// cancels the obvious common factors (direct exact division, monomial and
// integer content, binomials 1 - q^a t^b); equality always falls back to
// cross multiplication.
class RatFn2 {
  public:
    RatFn2() : num_(VarTag::qt), den_(Rat(1), VarTag::qt) {}
    explicit RatFn2(VarTag tag) : num_(tag), den_(Rat(1), tag) {}
    RatFn2(long c, VarTag tag = VarTag::qt) : num_(Rat(c), tag), den_(Rat(1), tag) {}
    RatFn2(const Rat& c, VarTag tag = VarTag::qt) : num_(c, tag), den_(Rat(1), tag) {}
    RatFn2(const LaurentPoly2& p) : num_(p), den_(Rat(1), p.tag()) {}
    RatFn2(const LaurentPoly2& num, const LaurentPoly2& den);

    const LaurentPoly2& num() const { return num_; }
    const LaurentPoly2& den() const { return den_; }
    VarTag tag() const { return num_.tag(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }
    // The Laurent polynomial value; throws unless den == 1.
    const LaurentPoly2& poly() const;
    // True when the value is c * q^a t^b with c = +1 or -1 (sign recorded).
    bool is_laurent_monomial(bool* negative = nullptr) const;

    RatFn2 operator-() const;
    friend RatFn2 operator+(const RatFn2& x, const RatFn2& y);
    friend RatFn2 operator-(const RatFn2& x, const RatFn2& y);
    friend RatFn2 operator*(const RatFn2& x, const RatFn2& y);
    friend RatFn2 operator/(const RatFn2& x, const RatFn2& y);
    RatFn2& operator+=(const RatFn2& o) { return *this = *this + o; }
    RatFn2& operator-=(const RatFn2& o) { return *this = *this - o; }
    RatFn2& operator*=(const RatFn2& o) { return *this = *this * o; }
    RatFn2& operator/=(const RatFn2& o) { return *this = *this / o; }
    RatFn2 inverse() const;
    RatFn2 scaled(const Rat& c) const;

    bool operator==(const RatFn2& o) const;
    bool operator!=(const RatFn2& o) const { return !(*this == o); }

    RatFn2 power_substitute(int k) const;
    RatFn2 subst_inverse() const;         // q,t -> q^-1,t^-1
    RatFn2 subst_second_inverse() const;  // t -> t^-1
    RatFn2 swap_vars() const;             // q <-> t
    RatFn2 to_su() const;                 // q -> s^2u^2, t -> s^2u^-2

    Rat eval(const Rat& v1, const Rat& v2) const;

    std::string str() const;
    static RatFn2 parse(const std::string& text, VarTag tag = VarTag::qt);

  private:
    LaurentPoly2 num_, den_;
    void canonicalize();
};

}  // namespace wreathmac
