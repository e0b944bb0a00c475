#pragma once

#include "wreathmac/wreath.hpp"

namespace wreathmac {

// Element of the sl_r root lattice in simple-root coordinates (n_1..n_{r-1});
// carrier of the twisted group algebra basis e^alpha.
struct RootElt {
    std::vector<long> n;
    explicit RootElt(std::vector<long> coords) : n(std::move(coords)) {}
    static RootElt zero(int r) { return RootElt(std::vector<long>(r - 1, 0)); }
    static RootElt simple(int r, int i);  // alpha-bar_i for any i in I (i=0 gives -theta)
    int r() const { return static_cast<int>(n.size()) + 1; }
    RootElt operator+(const RootElt& o) const;
    RootElt operator-() const;
    auto operator<=>(const RootElt&) const = default;
    std::string str() const;
};

// cocycle s(alpha, beta) = (-1)^{sum_{j=1}^{r-2} alpha_{j+1} beta_j}
int cocycle_sign(const RootElt& alpha, const RootElt& beta);
// s(alpha) = s(alpha, alpha); s(alpha_i) = 1 for i != 0, s(alpha_0) = (-1)^r
int cocycle_sign(const RootElt& alpha);
// e^alpha e^beta = sign e^{alpha+beta}
std::pair<int, RootElt> group_mult(const RootElt& alpha, const RootElt& beta);

// <alpha-bar_i^vee, beta> via the affine Cartan matrix of sl-hat_r.
long cartan_pairing(int r, int i, const RootElt& beta);
// <alpha-bar_i^vee, M_i beta> with M_i beta = n_{i-1} a_{i-1} - n_{i+1} a_{i+1}.
long m_pairing(int r, int i, const RootElt& beta);

// Vector in V = Lambda^{tensor I} tensor F{Q} over Q(s,u).
class VertexVec {
  public:
    explicit VertexVec(int r) : r_(r) {
        if (r < 3) throw std::domain_error("VertexVec: vertex representation needs r >= 3");
    }
    static VertexVec vacuum(int r);  // 1 tensor e^0
    static VertexVec term(int r, const RootElt& alpha, MultiSymFn f);

    int r() const { return r_; }
    const std::map<RootElt, MultiSymFn>& comps() const { return comps_; }
    bool is_zero() const;

    void add_term(const RootElt& alpha, const MultiSymFn& f);
    VertexVec operator+(const VertexVec& o) const;
    VertexVec operator-(const VertexVec& o) const;
    VertexVec scaled(const RatFn2& c) const;
    bool operator==(const VertexVec& o) const;

    std::string str() const;

  private:
    int r_;
    std::map<RootElt, MultiSymFn> comps_;
};

// Mode operators of Saito's vertex representation.
VertexVec act_e(int i, int k, const VertexVec& v);
VertexVec act_f(int i, int k, const VertexVec& v);
VertexVec act_h(int i, int l, const VertexVec& v);  // l != 0
VertexVec act_psi_plus(int i, int l, const VertexVec& v);   // l >= 0
VertexVec act_psi_minus(int i, int l, const VertexVec& v);  // l <= 0

// Wreath Macdonald eigenoperators D~_1^(i) (star=false, f-modes) and
// D~_1^(i)* (star=true, e-modes), including the c_i(u) scalars.
VertexVec eigen_op(int i, bool star, const VertexVec& v);

// H~_mu = H~^{t_{-beta}}_{mu^bullet} tensor e^beta with beta = kappa-bar(mu).
VertexVec embed_H(const Partition& mu, int r);

// [chi^i] A_mu(q chi^-1, t chi), optionally with (q,t) -> (1/q,1/t).
LaurentPoly2 A_component(const Partition& mu, int r, int i, bool inverse);

// Eigenvalue of psi_i^{+-}(z) on |mu>: a product of phi-factors
// phi(c z)^{e}, plus the constant prefactor from phi(z) = (p - p^-1 z)/(1-z).
struct FockWeight {
    int r = 3;
    std::vector<std::pair<RatFn2, int>> factors;  // (c, +-1): phi(c z)^{+-1}
    // <h_{i,l}> for l != 0, from the z->infinity (l>0) or z->0 (l<0) series.
    RatFn2 h_eigenvalue(int l) const;
    // numerator/denominator coefficient lists in z (index = power of z)
    std::pair<std::vector<RatFn2>, std::vector<RatFn2>> as_z_ratfn() const;
};
FockWeight fock_weight(const Partition& mu, int r, int i);

// xi-dagger = (-1)^r s^2 u^{-r}
RatFn2 xi_dagger(int r);

}  // namespace wreathmac
