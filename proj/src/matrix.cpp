#include "wreathmac/matrix.hpp"

namespace wreathmac {

MatRF MatRF::identity(int r, VarTag tag) {
    MatRF m(r, tag);
    for (int i = 0; i < r; ++i) m.at(i, i) = RatFn2(1, tag);
    return m;
}

MatRF MatRF::permutation(const std::vector<int>& u, VarTag tag) {
    MatRF m(static_cast<int>(u.size()), tag);
    for (int j = 0; j < m.r(); ++j) m.at(u[j], j) = RatFn2(1, tag);
    return m;
}

MatRF MatRF::operator-() const {
    MatRF out(r_, tag_);
    for (int i = 0; i < r_ * r_; ++i) out.entries_[i] = -entries_[i];
    return out;
}

MatRF operator+(const MatRF& x, const MatRF& y) {
    if (x.r_ != y.r_) throw SizeMismatchError("MatRF: dimension mismatch");
    MatRF out(x.r_, x.tag_);
    for (int i = 0; i < x.r_ * x.r_; ++i) out.entries_[i] = x.entries_[i] + y.entries_[i];
    return out;
}

MatRF operator-(const MatRF& x, const MatRF& y) {
    return x + (-y);
}

MatRF operator*(const MatRF& x, const MatRF& y) {
    if (x.r_ != y.r_) throw SizeMismatchError("MatRF: dimension mismatch");
    MatRF out(x.r_, x.tag_);
    for (int i = 0; i < x.r_; ++i)
        for (int j = 0; j < x.r_; ++j) {
            RatFn2 acc(x.tag_);
            for (int k = 0; k < x.r_; ++k) acc += x.at(i, k) * y.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

MatRF MatRF::scaled(const RatFn2& c) const {
    MatRF out(r_, tag_);
    for (int i = 0; i < r_ * r_; ++i) out.entries_[i] = entries_[i] * c;
    return out;
}

MatRF MatRF::transpose() const {
    MatRF out(r_, tag_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool MatRF::operator==(const MatRF& o) const {
    if (r_ != o.r_) return false;
    for (int i = 0; i < r_ * r_; ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

MatRF MatRF::map_entries(RatFn2 (RatFn2::*fn)() const) const {
    MatRF out(r_, tag_);
    for (int i = 0; i < r_ * r_; ++i) out.entries_[i] = (entries_[i].*fn)();
    return out;
}

MatRF MatRF::power_substitute(int k) const {
    MatRF out(r_, tag_);
    for (int i = 0; i < r_ * r_; ++i) out.entries_[i] = entries_[i].power_substitute(k);
    return out;
}

RatFn2 MatRF::det() const {
    // Gaussian elimination over the fraction field.
    MatRF m = *this;
    RatFn2 d(1, tag_);
    for (int k = 0; k < r_; ++k) {
        int piv = -1;
        for (int i = k; i < r_; ++i)
            if (!m.at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return RatFn2(0, tag_);
        if (piv != k) {
            for (int j = 0; j < r_; ++j) std::swap(m.at(piv, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        RatFn2 inv = m.at(k, k).inverse();
        for (int i = k + 1; i < r_; ++i) {
            if (m.at(i, k).is_zero()) continue;
            RatFn2 f = m.at(i, k) * inv;
            for (int j = k; j < r_; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

MatRF mat_inverse(const MatRF& m) {
    const int r = m.r();
    MatRF a = m;
    MatRF inv = MatRF::identity(r, m.tag());
    for (int k = 0; k < r; ++k) {
        int piv = -1;
        for (int i = k; i < r; ++i)
            if (!a.at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrixError("mat_inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < r; ++j) {
                std::swap(a.at(piv, j), a.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        RatFn2 p = a.at(k, k).inverse();
        for (int j = 0; j < r; ++j) {
            a.at(k, j) *= p;
            inv.at(k, j) *= p;
        }
        for (int i = 0; i < r; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            RatFn2 f = a.at(i, k);
            for (int j = 0; j < r; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

}  // namespace wreathmac
