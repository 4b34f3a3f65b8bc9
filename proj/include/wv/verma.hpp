#pragma once

#include "wv/embedding.hpp"
#include "wv/formal.hpp"
#include "wv/singular.hpp"

namespace wv {

/// Identification of Delta_perp+ with a standard parabolic Delta_I+.
///
/// levi_roots and nilradical_roots live in the original frame (that is where
/// the character identities hold); `witness` maps the perp simple system onto
/// the simple-root subset I and certifies the parabolic type.
struct ParabolicData {
    RootDatum ambient;
    SubRootSystem levi;                   // = Delta_perp+ with its simple system
    std::vector<WeylElement> levi_weyl;   // W_{a_perp}
    std::vector<int> levi_subset;         // I, 0-based indices into S
    WeylElement witness;
    std::vector<Weight> nilradical_roots; // Delta+ minus levi_roots
};

/// Finds I and the witness by searching W; throws if no identification exists.
ParabolicData parabolic_data(const EmbeddingSpec& spec);

/// Truncated character of a generalized Verma module M_I^lambda:
/// ch L_levi^lambda expanded against the nilradical denominator.
struct GVChar {
    Weight highest_weight;
    FormalElement terms;
    long long depth = 0;
    LatticeSeries lattice; // same data keyed by root coordinates relative to hw
};

GVChar gv_character(const ParabolicData& pd, const Weight& lambda, long long depth);

struct GVEntry {
    WeylElement u;
    int sign;
    Weight carrier;
    GVChar gv;
};

/// Signed generalized Verma characters whose Euler sum gives ch L^mu.
std::vector<GVEntry> weyl_verma_decompose(const EmbeddingSpec& spec, const Weight& mu, long long depth);

/// Rewrites M_I^lambda as the alternating sum of ordinary Verma characters
/// over W_{a_perp}, truncated to the same window.
FormalElement gv_to_ordinary(const ParabolicData& pd, const Weight& lambda, long long depth);

/// Alternating sum of ordinary Verma characters over the full Weyl group,
/// truncated to the window height(mu - xi) <= depth.
FormalElement standard_weyl_verma(const RootDatum& d, const Weight& mu, long long depth);

/// Windowed Weyl-Kac character by dividing the singular elements.
FormalElement character_window(const RootDatum& d, const Weight& mu, long long depth);

/// Sum of sign * e^{carrier} * gv over the entries, truncated relative to mu.
FormalElement euler_sum(const RootDatum& d, const std::vector<GVEntry>& entries, const Weight& mu,
                        long long depth);

/// Restriction of f to the window height(mu - xi) <= depth.
FormalElement truncate_to_window(const RootDatum& d, const FormalElement& f, const Weight& mu,
                                 long long depth);

} // namespace wv
