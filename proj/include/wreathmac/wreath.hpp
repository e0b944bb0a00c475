#pragma once

#include <optional>

#include "wreathmac/multisym.hpp"
#include "wreathmac/quotcore.hpp"

namespace wreathmac {

enum class WreathVariant { standard, forward, opposite };

const char* variant_name(WreathVariant v);
WreathVariant variant_from_name(const std::string& name);

// Key of a wreath Macdonald polynomial; w is held in canonical (u, beta) form.
struct WreathKey {
    int r;
    AffineWeylElt w;
    MultiPartition mu;
    WreathVariant variant = WreathVariant::standard;

    WreathKey(int r_, AffineWeylElt w_, MultiPartition mu_, WreathVariant v = WreathVariant::standard)
        : r(r_), w(std::move(w_)), mu(std::move(mu_)), variant(v) {}

    std::string canonical_json() const;
    auto operator<=>(const WreathKey&) const = default;
};

// Optional on-disk cache; directory resolved from WREATHMAC_CACHE unless set
// explicitly (empty string disables).
void set_cache_dir(const std::string& dir);
std::string cache_dir();

// The wreath Macdonald polynomial determined by the two triangularity
// conditions and the normalization <s_n[X^(0)], H> = 1.
const MultiSymFn& solve_H(const WreathKey& key);

// Schur expansion of solve_H; throws InvariantViolationError when a
// coefficient fails Laurent-polynomiality.
std::map<MultiPartition, LaurentPoly2> kostka(const WreathKey& key);

Int multitableaux_count(const MultiPartition& mp);

// Kostka coefficient invariants from the positivity theorem and the
// Gamma-grading: nonnegative integers, Gamma-degree sum |lam^(i)| * i.
struct KostkaReport {
    bool positive = true;
    bool gamma_graded = true;
    bool counts_match = true;
    std::string detail;
};
KostkaReport check_kostka(const WreathKey& key);

// One named identity check; scalar holds a proportionality constant when the
// identity is of "equal up to monomial" type.
struct IdentityReport {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Symmetries: swap/neg, inversion (down arrow), rotation, forward variant,
// opposite order, and the down-nabla involution.
std::vector<IdentityReport> check_symmetries(const WreathKey& key);

// Norm pairing <H, inv neg H>_{q,t} and the hook-product formula.
RatFn2 norm_b_pairing(const WreathKey& key);
RatFn2 norm_b_formula(const WreathKey& key);

struct JPResult {
    MultiSymFn J;
    RatFn2 c;
    MultiSymFn P;
};
JPResult J_and_P(const WreathKey& key);

// Evidence checkers for the two open conjectures.
std::vector<IdentityReport> check_conjectures(const WreathKey& key);

// Generic-stability factorization (u = v = id): product over slots of
// classical modified Macdonald polynomials under the vector plethysm by the
// rows of M^-, with parameters (q_i, t_i).
MultiSymFn factor_generic(int r, const MultiPartition& mu_bullet);
// M^-_{ij} = t^j if i >= j else q^{r-j}.
MatRF Mminus_matrix(int r);
// Translation t_{-gamma^vee} with <gamma^vee, alpha_i> = depth for all i
// (requires (r-1)*depth even); deep enough for stability when depth >= n+1.
AffineWeylElt antidominant_translation(int r, int depth);

// e_n-eigenvalue data through the Hall pairing (Theorem route); the quiver
// route lives in quiverref.
RatFn2 nabla_pairing_eigen(const WreathKey& key, int slot);

}  // namespace wreathmac
