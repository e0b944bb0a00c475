#pragma once

#include <map>
#include <vector>

#include "wreathmac/ratfn.hpp"

namespace wreathmac {

// Dense-exponent polynomial in x_1..x_N over RatFn2, for the finite-variable
// Macdonald operator.
class NPoly {
  public:
    using Exps = std::vector<int>;

    explicit NPoly(int nvars, VarTag tag = VarTag::qt) : nvars_(nvars), tag_(tag) {}

    static NPoly constant(int nvars, const RatFn2& c);
    static NPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::map<Exps, RatFn2>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& e, const RatFn2& c);

    NPoly operator-() const;
    friend NPoly operator+(NPoly x, const NPoly& y);
    friend NPoly operator-(NPoly x, const NPoly& y);
    friend NPoly operator*(const NPoly& x, const NPoly& y);
    NPoly scaled(const RatFn2& c) const;
    bool operator==(const NPoly& o) const { return terms_ == o.terms_; }

    // x_k -> q x_k
    NPoly q_shift(int k) const;
    bool is_symmetric() const;
    // exact division; throws when not divisible
    NPoly divided_by(const NPoly& g) const;

    // monomial symmetric polynomial m_lam[x_1..x_N]
    static NPoly monomial_sym(int nvars, const std::vector<int>& lam, VarTag tag = VarTag::qt);

  private:
    int nvars_;
    VarTag tag_;
    std::map<Exps, RatFn2> terms_;
};

}  // namespace wreathmac
