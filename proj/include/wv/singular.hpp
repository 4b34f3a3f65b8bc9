#pragma once

#include "wv/embedding.hpp"
#include "wv/formal.hpp"

namespace wv {

struct SingularEntry {
    WeylElement u;
    int sign;        // epsilon(u)
    Weight carrier;  // pi_atilde[u(mu+rho)-rho] + D_perp
    Weight perp_hw;  // pi_perp[u(mu+rho)-rho] - D_perp
};

struct SingularDecomposition {
    Weight mu;
    std::vector<SingularEntry> entries;
};

/// Weyl-numerator singular element: sum over W of eps(w) e^{w(mu+rho)-rho}.
/// Exactly |W| terms with coefficients +/-1. Requires mu dominant integral.
FormalElement singular_element(const RootDatum& d, const Weight& mu);

/// Singular element of a subsystem (its Weyl group acting in ambient
/// coordinates): sum over W_sub of eps(v) e^{v(nu+rho_sub)-rho_sub}.
FormalElement sub_singular_element(const RootDatum& ambient, const SubRootSystem& sub,
                                   const std::vector<WeylElement>& sub_weyl, const Weight& nu);

/// Coset representatives u with mu_perp(u) in the closed a_perp-chamber; for
/// dominant integral mu the shifted weight is a_perp-regular, so membership is
/// tested strictly and picks exactly one element per class.
std::vector<WeylElement> compute_U(const EmbeddingSpec& spec, const Weight& mu);

/// Lemma-1 decomposition of the singular element across U.
SingularDecomposition decompose(const EmbeddingSpec& spec, const Weight& mu);

/// Expands a decomposition back into a formal element (the reconstruction side
/// of Lemma 1): sum of eps(u) e^{carrier} Psi_perp^{perp_hw}.
FormalElement expand_decomposition(const EmbeddingSpec& spec, const SingularDecomposition& dec);

} // namespace wv
