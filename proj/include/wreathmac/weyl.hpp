#pragma once

#include <string>
#include <vector>

#include "wreathmac/rootvec.hpp"

namespace wreathmac {

// Element of the affine Weyl group of type A_{r-1}, in the canonical form
// w = u t_{-beta^vee} with u a permutation of I and beta in Q.  Generators
// s_i for 1 <= i <= r-1 exchange i-1 and i; s_0 = t_{theta^vee} s_theta.
//
// Internally the group also carries its affine-permutation picture: w acts
// on bead positions of the 1-runner abacus by an r-periodic bijection of Z
// with window sigma(i) = u(i) - r beta_i.
class AffineWeylElt {
  public:
    explicit AffineWeylElt(int r);  // identity
    AffineWeylElt(std::vector<int> u, RootVec beta);

    static AffineWeylElt identity(int r) { return AffineWeylElt(r); }
    static AffineWeylElt generator(int r, int i);  // s_i, 0 <= i <= r-1
    static AffineWeylElt longest_finite(int r);    // w_0: i -> r-1-i
    static AffineWeylElt rotation(int r);          // chi: i -> i+1
    // t_{-beta^vee}
    static AffineWeylElt translation_minus(const RootVec& beta);

    int r() const { return static_cast<int>(u_.size()); }
    const std::vector<int>& u() const { return u_; }
    const RootVec& beta() const { return beta_; }

    friend AffineWeylElt operator*(const AffineWeylElt& x, const AffineWeylElt& y);
    AffineWeylElt inverse() const;
    // star involution s_i -> s_{-i}
    AffineWeylElt star() const;

    bool is_identity() const;
    bool operator==(const AffineWeylElt& o) const { return u_ == o.u_ && beta_ == o.beta_; }
    auto operator<=>(const AffineWeylElt&) const = default;

    // Action of w on a bead position p in Z.
    long act_position(long p) const;

    int length() const;
    // A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}, found by
    // repeated left-descent stripping (smallest descent index first).
    std::vector<int> reduced_word() const;
    bool has_left_descent(int i) const;

    std::string str() const;

    // Text grammar: whitespace-separated tokens "s0".."s{r-1}", "w0",
    // "t[c0,...,c{r-1}]" (the token denotes t_{-c^vee}), composed left to
    // right; empty input is the identity.
    static AffineWeylElt parse(int r, const std::string& text);

  private:
    std::vector<int> u_;  // u_[i] = image of i
    RootVec beta_;
};

// All elements with length <= maxlen (BFS over the Cayley graph), grouped in
// one flat list; lengths sorted ascending.
std::vector<AffineWeylElt> weyl_ball(int r, int maxlen);

}  // namespace wreathmac
