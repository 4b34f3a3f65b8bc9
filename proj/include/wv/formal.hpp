#pragma once

#include "wv/rootspace.hpp"

#include <map>
#include <vector>

namespace wv {

/// Finite integer-valued map on weights: characters, singular elements,
/// k-tables. Zero coefficients are never stored.
struct FormalElement {
    std::map<Weight, long long> terms;

    void add_term(const Weight& w, long long c) {
        if (c == 0) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    void add(const FormalElement& other, long long scale = 1) {
        for (const auto& [w, c] : other.terms) add_term(w, scale * c);
    }

    /// Adds scale * e^shift * other.
    void add_shifted(const FormalElement& other, const Weight& shift, long long scale) {
        for (const auto& [w, c] : other.terms) add_term(wadd(w, shift), scale * c);
    }

    long long coeff(const Weight& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? 0 : it->second;
    }

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    bool operator==(const FormalElement&) const = default;
};

FormalElement formal_one(std::size_t dim);
FormalElement formal_mul(const FormalElement& a, const FormalElement& b);

/// Truncated series on the lattice base - N-span(simple roots), keyed by the
/// simple-root coordinates of (base - weight). The grading is coordinate sum.
/// Cheap integer keys make deep window computations affordable.
struct LatticeSeries {
    Weight base;
    std::map<std::vector<int>, long long> terms;

    long long coeff(const std::vector<int>& q) const {
        auto it = terms.find(q);
        return it == terms.end() ? 0 : it->second;
    }
    void add_term(const std::vector<int>& q, long long c) {
        if (c == 0) return;
        auto it = terms.find(q);
        if (it == terms.end()) {
            terms.emplace(q, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    bool operator==(const LatticeSeries&) const = default;
};

long long key_height(const std::vector<int>& q);
std::vector<int> key_add(const std::vector<int>& a, const std::vector<int>& b);

/// Integer simple-root coordinates of x (throws if any coordinate is not an
/// integer or x is outside span S).
std::vector<int> lattice_key(const RootDatum& d, const Weight& x);

LatticeSeries lattice_unit(const Weight& base, int rank);

/// a += scale * e^{-offset} * b, keeping keys with height <= depth.
/// Bases must agree; offset is in key coordinates.
void lattice_add_shifted(LatticeSeries& a, const LatticeSeries& b, const std::vector<int>& offset,
                         long long scale, long long depth);

/// Multiplies in place by 1/(1 - e^{-eta}) truncated at depth; eta is the key
/// vector of a positive root (strictly positive height).
void lattice_mul_inv_linear(LatticeSeries& a, const std::vector<int>& eta, long long depth);

/// Multiplies in place by (1 - e^{-eta}).
void lattice_mul_linear(LatticeSeries& a, const std::vector<int>& eta, long long depth);

/// Drops all keys with height > depth.
void lattice_truncate(LatticeSeries& a, long long depth);

/// Divides numer by denom up to depth. denom must have coefficient +/-1 at
/// key 0 and all other keys of strictly positive height.
LatticeSeries lattice_divide(const LatticeSeries& numer, const LatticeSeries& denom, long long depth);

FormalElement lattice_to_formal(const RootDatum& d, const LatticeSeries& s);

} // namespace wv
