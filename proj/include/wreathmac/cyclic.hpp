#pragma once

#include <vector>

#include "wreathmac/laurent.hpp"

namespace wreathmac {

// Element of Z[q^{+-1},t^{+-1}][chi] with chi^r = 1: one Laurent polynomial
// per power of chi.
class CycPoly {
  public:
    explicit CycPoly(int r) : r_(r), comps_(r, LaurentPoly2(VarTag::qt)) {
        if (r < 1) throw std::domain_error("CycPoly: r must be >= 1");
    }
    CycPoly(int r, std::vector<LaurentPoly2> comps) : r_(r), comps_(std::move(comps)) {
        if (static_cast<int>(comps_.size()) != r_) throw SizeMismatchError("CycPoly: wrong component count");
    }

    int r() const { return r_; }
    // Coefficient of chi^i, index taken mod r.
    const LaurentPoly2& comp(int i) const { return comps_[imod(i, r_)]; }
    LaurentPoly2& comp(int i) { return comps_[imod(i, r_)]; }

    // c * q^a t^b chi^i
    static CycPoly monomial(int r, const Rat& c, int a, int b, int i);
    static CycPoly one(int r) { return monomial(r, 1, 0, 0, 0); }

    bool is_zero() const;
    bool operator==(const CycPoly& o) const;

    CycPoly operator-() const;
    friend CycPoly operator+(const CycPoly& x, const CycPoly& y);
    friend CycPoly operator-(const CycPoly& x, const CycPoly& y);
    friend CycPoly operator*(const CycPoly& x, const CycPoly& y);
    CycPoly& operator+=(const CycPoly& o) { return *this = *this + o; }
    CycPoly& operator-=(const CycPoly& o) { return *this = *this - o; }
    CycPoly scaled(const LaurentPoly2& c) const;

    // q,t -> q^-1,t^-1 on coefficients (chi untouched).
    CycPoly subst_inverse() const;

    std::string str() const;

  private:
    int r_;
    std::vector<LaurentPoly2> comps_;
};

}  // namespace wreathmac
