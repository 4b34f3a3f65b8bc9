#pragma once

#include "wv/embedding.hpp"
#include "wv/formal.hpp"
#include "wv/singular.hpp"

#include <map>

namespace wv {

/// Injection fan: the signed weight set s(gamma) driving the branching
/// recurrence. Stored relative to gamma0, the lowest carrier (by ambient
/// height, ties broken lexicographically); the zero shift is excluded.
struct Fan {
    Weight gamma0;
    long long s0 = 0;                    // s(gamma0), never zero
    std::map<Weight, long long> shifts;  // gamma -> s(gamma + gamma0)
    long long depth = 0;                 // truncation bound for geometric factors
    bool exact = true;                   // false only when a factor was truncated
};

/// Expands the defining product over Delta+ \ Delta_perp+ of
/// (1 - e^{-pi_atilde(alpha)})^(count - mult_a) grouped by projected value.
/// Exponents are non-negative for finite regular embeddings, so the expansion
/// is exact; negative exponents (kept as a hook) expand geometrically up to
/// `depth`.
Fan compute_fan(const EmbeddingSpec& spec, long long depth);

/// Expansion of (1 - e^{-xi})^power as a map gamma -> coefficient of e^{-gamma};
/// negative powers produce the geometric series truncated at `depth` steps.
std::map<Weight, long long> fan_factor(const Weight& xi, long long power, long long depth);

struct BranchingResult {
    Weight mu;
    Fan fan;
    std::map<Weight, long long> k_table; // evaluated recurrence coefficients
    std::map<Weight, long long> b;       // dominant a-tilde weight -> multiplicity
};

/// Weyl dimension of the a_perp module attached to a representative u.
long long perp_dimension(const EmbeddingSpec& spec, const WeylElement& u, const Weight& mu);

/// Lazily evaluated branching recurrence. k() answers arbitrary points; the
/// b-extraction window is derived from the orbit hull, so it is complete
/// independently of any caller-supplied depth.
class BranchingRun {
  public:
    BranchingRun(const EmbeddingSpec& spec, const Weight& mu, long long fan_depth);

    long long k(const Weight& xi);
    std::map<Weight, long long> extract_b();
    const Fan& fan() const { return fan_; }
    const std::map<Weight, long long>& source_positions() const { return sources_; }
    const std::map<Weight, long long>& k_table() const { return memo_; }

    /// phi functional: strictly positive on every fan shift, used as the
    /// sweep grading. Exposed for the resolution reconstruction.
    Rat phi(const Weight& x) const;

  private:
    const EmbeddingSpec& spec_;
    Weight mu_;
    Fan fan_;
    std::map<Weight, long long> sources_; // source position -> sum of eps(u) dim
    std::map<Weight, long long> memo_;
    Weight phi_vec_;
    Rat phi_top_;
};

/// Branching coefficients via the fan recurrence. depth 0 selects the default
/// window (height of 2 pi_atilde(mu+rho), plus margin); an explicit depth that
/// fails to cover the support raises an error.
BranchingResult branch(const EmbeddingSpec& spec, const Weight& mu, long long depth = 0);

} // namespace wv
