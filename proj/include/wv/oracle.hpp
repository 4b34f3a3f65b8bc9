#pragma once

#include "wv/embedding.hpp"
#include "wv/formal.hpp"

#include <map>

namespace wv {

/// Full weight-multiplicity table of an irreducible highest weight module.
struct WeightDiagram {
    Weight hw;
    std::map<Weight, long long> multiplicities;

    long long dimension() const;
    long long mult(const Weight& w) const {
        auto it = multiplicities.find(w);
        return it == multiplicities.end() ? 0 : it->second;
    }
};

/// Whole root system of d viewed as a SubRootSystem (shared entry point for
/// the subsystem-generic routines below).
SubRootSystem full_system(const RootDatum& d);

/// Freudenthal recursion over the dominant chamber, mirrored W-invariantly.
/// Works for any regular subsystem, including reducible and empty ones.
WeightDiagram sub_freudenthal(const SubRootSystem& sub, const Weight& mu);
WeightDiagram freudenthal(const RootDatum& d, const Weight& mu);

/// Weyl dimension formula (exact; throws if the result does not fit or is
/// non-integral, which signals a bug).
long long sub_weyl_dimension(const SubRootSystem& sub, const Weight& mu);
long long weyl_dimension(const RootDatum& d, const Weight& mu);

/// Projection-and-peel branching: projects the full ambient diagram by
/// pi_atilde and repeatedly strips the highest remaining a-tilde character.
/// The optional precomputed ambient diagram only short-cuts the first step.
std::map<Weight, long long> brute_force_branch(const EmbeddingSpec& spec, const Weight& mu,
                                               const WeightDiagram* ambient_diagram = nullptr);

/// Weyl-Kac character by formal division of singular elements, truncated to
/// the window height(mu - xi) <= depth.
FormalElement character_by_division(const RootDatum& d, const Weight& mu, long long depth);

/// Dominant representative machinery for subsystems (exposed for tests).
Weight sub_dominant_representative(const SubRootSystem& sub, const Weight& x);
std::vector<Weight> sub_orbit(const SubRootSystem& sub, const Weight& x);

} // namespace wv
