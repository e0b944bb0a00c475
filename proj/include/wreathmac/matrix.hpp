#pragma once

#include <vector>

#include "wreathmac/ratfn.hpp"

namespace wreathmac {

// Square matrix of rational functions, indexed by I x I.
class MatRF {
  public:
    explicit MatRF(int r, VarTag tag = VarTag::qt)
        : r_(r), tag_(tag), entries_(r * r, RatFn2(tag)) {
        if (r < 1) throw std::domain_error("MatRF: r must be >= 1");
    }

    static MatRF identity(int r, VarTag tag = VarTag::qt);
    // Permutation matrix sending basis column vector e_i to e_{u(i)}.
    static MatRF permutation(const std::vector<int>& u, VarTag tag = VarTag::qt);

    int r() const { return r_; }
    VarTag tag() const { return tag_; }
    const RatFn2& at(int i, int j) const { return entries_[i * r_ + j]; }
    RatFn2& at(int i, int j) { return entries_[i * r_ + j]; }

    MatRF operator-() const;
    friend MatRF operator+(const MatRF& x, const MatRF& y);
    friend MatRF operator-(const MatRF& x, const MatRF& y);
    friend MatRF operator*(const MatRF& x, const MatRF& y);
    MatRF scaled(const RatFn2& c) const;
    MatRF transpose() const;
    bool operator==(const MatRF& o) const;

    MatRF map_entries(RatFn2 (RatFn2::*fn)() const) const;
    // Entrywise substitution of (q^k, t^k).
    MatRF power_substitute(int k) const;

    RatFn2 det() const;

  private:
    int r_;
    VarTag tag_;
    std::vector<RatFn2> entries_;
};

// Exact inverse; throws SingularMatrixError when det = 0.
MatRF mat_inverse(const MatRF& m);

}  // namespace wreathmac
