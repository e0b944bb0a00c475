#pragma once

#include "wreathmac/cyclic.hpp"
#include "wreathmac/wreath.hpp"

namespace wreathmac {

// Bigraded reflection operator on R(Gamma x T): only the chi^i component
// changes, by g^(i) = q^-1 t^-1 delta_{i0} - q^-1 t^-1 f^(i) + t^-1 f^(i+1)
// + q^-1 f^(i-1).
CycPoly R_star(int i, const CycPoly& f);

// B_mu(q chi^-1, t chi) as an element of R(Gamma x T).
CycPoly B_seed(const Partition& mu, int r);

// Tautological character: R*-chain over a reduced word of w applied to the
// seed of mu = tau_w(mu_bullet).
CycPoly B_w(const WreathKey& key);

// e_n of the chi^i component (product of its n unit monomials); checks the
// +1-monomial-sum structure first.
LaurentPoly2 nabla_eigen(const WreathKey& key, int i);

// Procesi normalization identities relating [chi^i] B to pairings with H.
std::vector<IdentityReport> procesi_normalization_check(const WreathKey& key);

}  // namespace wreathmac
