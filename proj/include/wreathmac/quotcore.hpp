#pragma once

#include "wreathmac/maya.hpp"
#include "wreathmac/multipartition.hpp"
#include "wreathmac/weyl.hpp"

namespace wreathmac {

struct QuotCore {
    MultiPartition quot;
    Partition core;
    RootVec charges;  // beta in Q (epsilon coordinates)
};

// r-quotient, r-core and runner charges of mu, through the charge-0 Maya
// diagram and runner uninterleaving.
QuotCore quot_core(const Partition& mu, int r);

// kappa-bar: negative classical restriction of sum of alpha_{residue}.
RootVec kappa_bar(const Partition& mu, int r);

// tau: inverse of (quot, charges); interleaves runner i = (mu^(i), beta_i).
Partition tau(const MultiPartition& mu_bullet, const RootVec& beta);

// Core(beta) = tau(empty multipartition, beta) = t_{beta^vee} . empty.
Partition core_of_root(const RootVec& beta);

// Affine Weyl action on charged quotient pairs, per
// t_{beta^vee} u . (mu_bullet, alpha) = (u(mu_bullet), beta + u(alpha)).
std::pair<MultiPartition, RootVec> weyl_act_pair(const AffineWeylElt& w,
                                                 const MultiPartition& mu_bullet,
                                                 const RootVec& alpha);

// Action on partitions through the equivariant bijection tau.
Partition weyl_act_partition(const AffineWeylElt& w, const Partition& lam);

// Direct generator action: remove all removable and add all addable cells of
// residue i (used to cross-check weyl_act_partition).
Partition simple_reflect_partition(int r, int i, const Partition& lam);

// tau_w(mu_bullet) = tau(w^{-1}(mu_bullet, 0)).
Partition tau_w(const AffineWeylElt& w, const MultiPartition& mu_bullet);

// The partial order: lam_bullet >=_w mu_bullet iff tau_w(lam) dominates
// tau_w(mu).  Sizes must agree.
bool order_ge_w(const AffineWeylElt& w, const MultiPartition& lam_bullet, const MultiPartition& mu_bullet);

}  // namespace wreathmac
