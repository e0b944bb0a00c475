#pragma once

#include "wreathmac/matrix.hpp"
#include "wreathmac/multipartition.hpp"
#include "wreathmac/symfn.hpp"

namespace wreathmac {

// Element of the I-fold tensor power of symmetric functions, stored in the
// tensor power-sum basis p_{lam^bullet} = prod_i p_{lam^(i)}[X^(i)].
class MultiSymFn {
  public:
    using PMap = std::map<MultiPartition, RatFn2>;

    MultiSymFn() = default;
    explicit MultiSymFn(int r, VarTag tag = VarTag::qt) : r_(r), tag_(tag) {}

    static MultiSymFn zero(int r, VarTag tag = VarTag::qt) { return MultiSymFn(r, tag); }
    static MultiSymFn one(int r, VarTag tag = VarTag::qt);
    static MultiSymFn p(int r, const MultiPartition& mp, VarTag tag = VarTag::qt);
    // single power sum p_k[X^(i)]
    static MultiSymFn p_slot(int r, int k, int slot, VarTag tag = VarTag::qt);
    static MultiSymFn schur(int r, const MultiPartition& mp, VarTag tag = VarTag::qt);
    // f placed in tensor slot i
    static MultiSymFn embed_slot(int r, const SymFn& f, int slot);
    static MultiSymFn from_p(int r, PMap terms, VarTag tag = VarTag::qt);
    static MultiSymFn from_schur(int r, const PMap& terms, VarTag tag = VarTag::qt);

    int r() const { return r_; }
    VarTag tag() const { return tag_; }
    const PMap& pterms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    MultiSymFn homogeneous_part(int d) const;

    MultiSymFn operator-() const;
    MultiSymFn& operator+=(const MultiSymFn& o);
    MultiSymFn& operator-=(const MultiSymFn& o);
    friend MultiSymFn operator+(MultiSymFn x, const MultiSymFn& y) { return x += y; }
    friend MultiSymFn operator-(MultiSymFn x, const MultiSymFn& y) { return x -= y; }
    friend MultiSymFn operator*(const MultiSymFn& x, const MultiSymFn& y);
    MultiSymFn scaled(const RatFn2& c) const;
    bool operator==(const MultiSymFn& o) const { return terms_ == o.terms_; }

    PMap schur_expansion() const;
    RatFn2 schur_coeff(const MultiPartition& mp) const;

    // tensor Hall pairing
    RatFn2 hall(const MultiSymFn& o) const;

    // Alphabet substitution g[M X^bullet]: p_k[X^(i)] -> sum_j M_ij(q^k,t^k) p_k[X^(j)].
    MultiSymFn substitute(const MatRF& m) const;
    MultiSymFn map_coeffs(const std::function<RatFn2(const RatFn2&)>& fn) const;
    // omega: componentwise p_n -> (-1)^{n-1} p_n.
    MultiSymFn omega() const;
    // slot relabeling p_k[X^(i)] -> p_k[X^(u(i))].
    MultiSymFn permute_slots(const std::vector<int>& u) const;

    void add_p(const MultiPartition& mp, const RatFn2& c);

    std::string str() const;

  private:
    int r_ = 0;
    VarTag tag_ = VarTag::qt;
    PMap terms_;
};

// The matrix plethysm P_M = (g -> g[M^t X^bullet]); covariantly functorial.
MultiSymFn matrix_plethysm(const MatRF& m, const MultiSymFn& f);
// Permutation plethysm P_u: p_k[X^(i)] -> p_k[X^(u(i))].
MultiSymFn perm_plethysm(const std::vector<int>& u, const MultiSymFn& f);

// neg (i -> r-i), w0 (i -> r-1-i), chi (i -> i+1) as slot permutations.
std::vector<int> perm_neg(int r);
std::vector<int> perm_w0(int r);
std::vector<int> perm_chi(int r);

// A = (id - q chi^{-1})^{-1} (id - t chi)^{-1} neg, and
// B = (id - q chi^{-1})^{-1} (id - t^{-1} chi^{-1}) neg.  Cached.
const MatRF& A_matrix(int r);
const MatRF& B_matrix(int r);
// chi as a matrix (column i to column i+1); pass power -1 for chi^{-1}.
MatRF chi_matrix(int r, int power = 1);

// <f, g>_{q,t} = <f, g[A^{-1} X]> and the P-pairing with B^{-1}.
RatFn2 pair_qt(const MultiSymFn& f, const MultiSymFn& g);
RatFn2 pair_P(const MultiSymFn& f, const MultiSymFn& g);

// Vector plethysm f[sum_j a_j X^(j)]: p_k -> sum_j a_j(q^k,t^k) p_k[X^(j)].
MultiSymFn vector_plethysm(const SymFn& f, const std::vector<RatFn2>& row);

// Multiply f by h_a of the row alphabet, or apply (h_a of it)^perp.
MultiSymFn mult_h_alphabet(int a, const std::vector<RatFn2>& row, const MultiSymFn& f);
MultiSymFn perp_h_alphabet(int a, const std::vector<RatFn2>& row, const MultiSymFn& f);

// Hall-adjoint of multiplication by g.
MultiSymFn perp(const MultiSymFn& g, const MultiSymFn& f);

}  // namespace wreathmac
