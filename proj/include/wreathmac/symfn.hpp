#pragma once

#include <functional>
#include <map>

#include "wreathmac/ratfn.hpp"
#include "wreathmac/symtables.hpp"

namespace wreathmac {

// Symmetric function over the two-parameter rational function field, stored
// in the power-sum basis.
class SymFn {
  public:
    using PMap = std::map<Partition, RatFn2>;

    SymFn() = default;
    explicit SymFn(VarTag tag) : tag_(tag) {}

    static SymFn zero(VarTag tag = VarTag::qt) { return SymFn(tag); }
    static SymFn one(VarTag tag = VarTag::qt);
    static SymFn p(const Partition& rho, VarTag tag = VarTag::qt);
    static SymFn schur(const Partition& lam, VarTag tag = VarTag::qt);
    static SymFn monomial(const Partition& lam, VarTag tag = VarTag::qt);
    static SymFn complete(int k, VarTag tag = VarTag::qt);    // h_k
    static SymFn elementary(int k, VarTag tag = VarTag::qt);  // e_k
    static SymFn from_p(PMap terms, VarTag tag = VarTag::qt);
    static SymFn from_schur(const PMap& terms, VarTag tag = VarTag::qt);

    VarTag tag() const { return tag_; }
    const PMap& pterms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const;
    SymFn homogeneous_part(int d) const;

    SymFn operator-() const;
    SymFn& operator+=(const SymFn& o);
    SymFn& operator-=(const SymFn& o);
    friend SymFn operator+(SymFn x, const SymFn& y) { return x += y; }
    friend SymFn operator-(SymFn x, const SymFn& y) { return x -= y; }
    friend SymFn operator*(const SymFn& x, const SymFn& y);
    SymFn scaled(const RatFn2& c) const;
    bool operator==(const SymFn& o) const { return terms_ == o.terms_; }

    PMap schur_expansion() const;
    PMap monomial_expansion() const;
    RatFn2 schur_coeff(const Partition& lam) const;

    // Hall pairing (diagonal z_rho in the p basis).
    RatFn2 hall(const SymFn& o) const;
    // Macdonald's (q,t)-deformed pairing: <p_rho, p_rho> = z_rho prod (1-q^k)/(1-t^k).
    RatFn2 qt_pairing(const SymFn& o) const;

    // f[A X + B]: p_n -> A(q^n,t^n) p_n + B(q^n,t^n).
    SymFn pleth_sub(const RatFn2& A, const RatFn2& B) const;
    // omega involution: p_n -> (-1)^{n-1} p_n.
    SymFn omega() const;
    SymFn map_coeffs(const std::function<RatFn2(const RatFn2&)>& fn) const;

    std::string str() const;  // schur expansion, "s[...]"-keyed

  private:
    VarTag tag_ = VarTag::qt;
    PMap terms_;

    void add_p(const Partition& rho, const RatFn2& c);
    friend SymFn perp(const SymFn& g, const SymFn& f);
};

// Hall-adjoint of multiplication by g, applied to f.
SymFn perp(const SymFn& g, const SymFn& f);

// Half of a vertex operator: a scalar alphabet c X, either multiplying
// (creation) or skewing (annihilation).
struct VertexHalfSpec {
    enum class Side { creation, annihilation };
    Side side = Side::creation;
    RatFn2 coeff;
};

// Mode V_k of V(z) = Omega[z c X] Omega[z^{-1} d X]^perp (z^k coefficient),
// applied to f: sum over l - m = k of h_l[cX] h_m[dX]^perp f.
SymFn vertex_mode(const VertexHalfSpec& creation, const VertexHalfSpec& annihilation, int k, const SymFn& f);

}  // namespace wreathmac
