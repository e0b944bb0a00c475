#include "wreathmac/cyclic.hpp"

#include <sstream>

namespace wreathmac {

CycPoly CycPoly::monomial(int r, const Rat& c, int a, int b, int i) {
    CycPoly out(r);
    out.comp(i).add_term({a, b}, c);
    return out;
}

bool CycPoly::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

bool CycPoly::operator==(const CycPoly& o) const {
    return r_ == o.r_ && comps_ == o.comps_;
}

CycPoly CycPoly::operator-() const {
    CycPoly out(r_);
    for (int i = 0; i < r_; ++i) out.comps_[i] = -comps_[i];
    return out;
}

CycPoly operator+(const CycPoly& x, const CycPoly& y) {
    if (x.r_ != y.r_) throw SizeMismatchError("CycPoly: mixed r");
    CycPoly out(x.r_);
    for (int i = 0; i < x.r_; ++i) out.comps_[i] = x.comps_[i] + y.comps_[i];
    return out;
}

CycPoly operator-(const CycPoly& x, const CycPoly& y) {
    return x + (-y);
}

CycPoly operator*(const CycPoly& x, const CycPoly& y) {
    if (x.r_ != y.r_) throw SizeMismatchError("CycPoly: mixed r");
    CycPoly out(x.r_);
    for (int i = 0; i < x.r_; ++i) {
        if (x.comps_[i].is_zero()) continue;
        for (int j = 0; j < x.r_; ++j) {
            if (y.comps_[j].is_zero()) continue;
            out.comp(i + j) += x.comps_[i] * y.comps_[j];
        }
    }
    return out;
}

CycPoly CycPoly::scaled(const LaurentPoly2& c) const {
    CycPoly out(r_);
    for (int i = 0; i < r_; ++i) out.comps_[i] = comps_[i] * c;
    return out;
}

CycPoly CycPoly::subst_inverse() const {
    CycPoly out(r_);
    for (int i = 0; i < r_; ++i) out.comps_[i] = comps_[i].subst_inverse();
    return out;
}

std::string CycPoly::str() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        if (i) os << " ; ";
        os << "(" << comps_[i].str() << ")*chi^" << i;
    }
    return os.str();
}

}  // namespace wreathmac
