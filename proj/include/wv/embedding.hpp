#pragma once

#include "wv/rootspace.hpp"
#include "wv/weyl.hpp"

#include <vector>

namespace wv {

/// Root data of a regular subsystem, kept in ambient coordinates.
/// Covers reducible systems (several orthogonal components) and the empty one.
struct SubRootSystem {
    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;
    Weight rho;

    int rank() const { return static_cast<int>(simple_roots.size()); }
    bool empty() const { return simple_roots.empty(); }
    bool is_dominant(const Weight& x) const;
    bool is_strictly_dominant(const Weight& x) const;
    std::vector<Rat> dynkin_labels(const Weight& x) const;
    bool is_integral(const Weight& x) const;
    bool contains_root(const Weight& x) const;
};

/// A regular reductive subalgebra a inside g, its orthogonal partner a_perp,
/// the splitting h = h_a + h_aperp + h_perp, projections and defects.
struct EmbeddingSpec {
    RootDatum ambient;
    std::vector<std::vector<long long>> a_root_coords; // inputs, in simple-root coordinates
    SubRootSystem a;
    SubRootSystem perp;
    std::vector<Weight> h_perp_basis;
    Weight defect_a;     // rho_a - pi_a(rho)
    Weight defect_perp;  // rho_perp - pi_perp(rho)
    std::vector<WeylElement> perp_weyl; // W_{a_perp} inside the ambient group

    Weight project_a(const Weight& x) const;
    Weight project_perp(const Weight& x) const;
    Weight project_hperp(const Weight& x) const;
    Weight project_atilde(const Weight& x) const; // onto span(a) + h_perp

    /// Dominance for a-tilde = a + h_perp: non-negative pairings with the
    /// a-simple roots, h_perp unconstrained.
    bool is_atilde_dominant(const Weight& x) const { return a.is_dominant(x); }

    /// Coordinates of the h_perp component in h_perp_basis.
    std::vector<Rat> hperp_coords(const Weight& x) const;

    std::string descriptor() const;

  private:
    friend EmbeddingSpec build_embedding(const RootDatum&, const std::vector<std::vector<long long>>&);
    std::vector<std::vector<Rat>> proj_a_, proj_perp_, proj_hperp_;
};

/// Builds the spec from a-simple roots given as integer coefficient vectors in
/// the ambient simple-root basis. The inputs must be positive roots forming
/// the simple system of a closed subsystem; anything else is rejected.
EmbeddingSpec build_embedding(const RootDatum& ambient, const std::vector<std::vector<long long>>& a_roots);

/// W_{a_perp} as elements of the ambient Weyl group (closed under composition).
std::vector<WeylElement> orthogonal_weyl_subgroup(const EmbeddingSpec& spec);

} // namespace wv
