#pragma once

#include <map>

#include "wreathmac/partition.hpp"

namespace wreathmac {

// Irreducible symmetric group character chi^lambda(rho), by Murnaghan-
// Nakayama border-strip recursion (memoized).
long long sym_character(const Partition& lambda, const Partition& rho);

// Per-degree transition data between the p, s, m bases.  Row/column order is
// partitions_of(n) (descending lex, refines dominance).
struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<Int> zvals;
    // kostka[l][m] = K_{lambda mu}; unitriangular for this order.
    std::vector<std::vector<Rat>> kostka;
    std::vector<std::vector<Rat>> kostka_inv;
};

const DegreeTables& degree_tables(int n);

// h_mu expanded in the power-sum basis: coefficient of p_rho.
const std::map<Partition, Rat>& complete_in_p(const Partition& mu);

}  // namespace wreathmac
