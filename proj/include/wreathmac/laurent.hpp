#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreathmac/basics.hpp"

namespace wreathmac {

// Which pair of formal variables a value lives in.  Values tagged qt and su
// may not be mixed without an explicit to_su conversion; constants are
// tag-agnostic.
enum class VarTag { qt, su };

const char* var_name(VarTag tag, int which);

struct Exp2 {
    int a = 0;  // exponent of q (resp. s)
    int b = 0;  // exponent of t (resp. u)
    auto operator<=>(const Exp2&) const = default;
};

// Laurent polynomial in two variables over arbitrary-precision rationals.
// Terms are kept in ascending (a,b)-lexicographic order with no zero
// coefficients stored.
class LaurentPoly2 {
  public:
    using Terms = std::map<Exp2, Rat>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(VarTag tag) : tag_(tag) {}
    LaurentPoly2(const Rat& c, VarTag tag = VarTag::qt);
    LaurentPoly2(long c, VarTag tag = VarTag::qt);

    static LaurentPoly2 monomial(const Rat& c, int a, int b, VarTag tag = VarTag::qt);
    // First (a=1) or second (b=1) variable.
    static LaurentPoly2 var1(VarTag tag = VarTag::qt);
    static LaurentPoly2 var2(VarTag tag = VarTag::qt);

    VarTag tag() const { return tag_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // True when every coefficient is a nonnegative integer.
    bool has_nonneg_int_coeffs() const;
    size_t num_terms() const { return terms_.size(); }

    Rat coeff(int a, int b) const;
    Rat constant_term() const { return coeff(0, 0); }
    // Largest term in (a,b)-lex order; poly must be nonzero.
    std::pair<Exp2, Rat> leading_term() const;
    // Componentwise min/max of the exponent support; poly must be nonzero.
    Exp2 min_exps() const;
    Exp2 max_exps() const;

    void add_term(const Exp2& e, const Rat& c);

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 x, const LaurentPoly2& y) { return x += y; }
    friend LaurentPoly2 operator-(LaurentPoly2 x, const LaurentPoly2& y) { return x -= y; }
    friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }
    LaurentPoly2 scaled(const Rat& c) const;
    LaurentPoly2 shifted(int da, int db) const;  // multiply by q^da t^db
    LaurentPoly2 pow(int k) const;               // k >= 0

    bool operator==(const LaurentPoly2& o) const;

    // v1 -> v1^k, v2 -> v2^k (k >= 1).
    LaurentPoly2 power_substitute(int k) const;
    // v1 -> v1^-1, v2 -> v2^-1.
    LaurentPoly2 subst_inverse() const;
    // v2 -> v2^-1 only.
    LaurentPoly2 subst_second_inverse() const;
    // exchange the two variables.
    LaurentPoly2 swap_vars() const;
    // q -> s^2 u^2, t -> s^2 u^-2; input must be qt-tagged.
    LaurentPoly2 to_su() const;

    Rat eval(const Rat& v1, const Rat& v2) const;

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients. Zero poly gives 1.
    Rat content() const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<LaurentPoly2> divided_by(const LaurentPoly2& g) const;

    // Repeatedly strips factors (1 - q^a t^b), lex-positive (a,b), from the
    // polynomial.  Returns the stripped factors (with multiplicity) and
    // leaves the cofactor in *this.
    std::vector<Exp2> strip_binomial_factors(int max_span = 64);

    std::string str() const;
    static LaurentPoly2 parse(const std::string& text, VarTag tag = VarTag::qt);

  private:
    VarTag tag_ = VarTag::qt;
    Terms terms_;

    friend VarTag join_tags(const LaurentPoly2& x, const LaurentPoly2& y);
};

}  // namespace wreathmac
