#pragma once

#include "wreathmac/npoly.hpp"
#include "wreathmac/symfn.hpp"

namespace wreathmac {

// Macdonald P, monic on m_mu and orthogonal for the (q,t)-deformed Hall
// pairing; computed by Gram-Schmidt against dominance order.  Cached.
const SymFn& macdonald_P(const Partition& mu);

// J_mu = prod_{s in mu} (1 - q^{arm} t^{leg+1}) P_mu.
SymFn macdonald_J(const Partition& mu);

// Modified Macdonald function t^{n(mu)} J_mu[X/(1-t)] |_{t -> 1/t}.  Cached.
const SymFn& tilde_H(const Partition& mu);

// Finite-variable Macdonald operator M_N applied to a symmetric polynomial.
NPoly macdonald_MN(int N, const NPoly& f);

// Zero modes of the classical vertex operators.
SymFn apply_D0(const SymFn& f);
SymFn apply_tilde_D0(const SymFn& f);
SymFn apply_tilde_D0_star(const SymFn& f);

// B_mu and A_mu = 1 - (1-q)(1-t) B_mu; inverse substitutes (1/q, 1/t).
LaurentPoly2 B_poly(const Partition& mu);
LaurentPoly2 A_poly(const Partition& mu, bool inverse = false);

}  // namespace wreathmac
