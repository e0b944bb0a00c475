#pragma once

#include <string>
#include <vector>

#include "wreathmac/basics.hpp"

namespace wreathmac {

// Element of the sl_r root lattice Q, stored in the epsilon basis as a
// zero-sum integer vector indexed by I; simple roots are
// alpha_i = eps_{i-1} - eps_i for 1 <= i <= r-1.
class RootVec {
  public:
    RootVec() = default;
    explicit RootVec(std::vector<long> coords);
    static RootVec zero(int r) { return RootVec(std::vector<long>(r, 0)); }
    static RootVec simple(int r, int i);  // alpha_i, 1 <= i <= r-1
    // from coefficients (n_1, ..., n_{r-1}) on the simple roots
    static RootVec from_simple_coords(int r, const std::vector<long>& n);

    int r() const { return static_cast<int>(coords_.size()); }
    long coord(int i) const { return coords_[imod(i, r())]; }
    const std::vector<long>& coords() const { return coords_; }
    std::vector<long> simple_coords() const;  // (n_1, ..., n_{r-1})

    RootVec operator-() const;
    friend RootVec operator+(const RootVec& x, const RootVec& y);
    friend RootVec operator-(const RootVec& x, const RootVec& y);
    RootVec scaled(long k) const;
    // coordinate permutation: result[u(i)] = coords[i]
    RootVec permuted(const std::vector<int>& u) const;

    bool is_zero() const;
    auto operator<=>(const RootVec&) const = default;

    std::string str() const;

  private:
    std::vector<long> coords_;
};

}  // namespace wreathmac
