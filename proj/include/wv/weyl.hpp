#pragma once

#include "wv/rootspace.hpp"

#include <vector>

namespace wv {

/// A Weyl-group element as a reduced word in simple reflections.
///
/// act() applies the word right to left: word {i,j} means s_i(s_j(x)).
/// Two elements of the same group are equal iff they move rho identically
/// (rho is regular), so rho_image doubles as the canonical key.
struct WeylElement {
    std::vector<int> word;   // simple-reflection indices, 0-based, reduced
    Weight rho_image;        // action on the Weyl vector

    int length() const { return static_cast<int>(word.size()); }
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    bool operator==(const WeylElement& o) const { return rho_image == o.rho_image; }
    bool operator<(const WeylElement& o) const { return rho_image < o.rho_image; }
    std::string word_str() const;
};

Weight reflect_simple(const RootDatum& d, int i, const Weight& x);
/// Reflection in an arbitrary root beta (beta need not be simple).
Weight reflect_root(const RootDatum& d, const Weight& beta, const Weight& x);

Weight act(const RootDatum& d, const WeylElement& w, const Weight& x);

WeylElement identity_element(const RootDatum& d);

/// Element with the given image of rho; the word is recovered canonically
/// (deterministic ascent picking the smallest negative label first).
WeylElement element_from_rho_image(const RootDatum& d, const Weight& rho_image);

WeylElement compose(const RootDatum& d, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootDatum& d, const WeylElement& w);

/// The reflection w_beta as a group element.
WeylElement reflection_element(const RootDatum& d, const Weight& beta);

/// All |W| elements, enumerated by breadth-first closure; deterministic order
/// (by length, then by rho image).
std::vector<WeylElement> enumerate_group(const RootDatum& d);

/// Number of positive roots sent to negative ones; equals word length for
/// reduced words. Computed from the action, independent of the word.
int length_by_inversions(const RootDatum& d, const WeylElement& w);

struct DominantResult {
    Weight dominant;
    WeylElement w;   // act(w, x) == dominant, minimal length
    int sign;        // (-1)^length(w)
};

DominantResult to_dominant(const RootDatum& d, const Weight& x);

std::vector<Weight> orbit(const RootDatum& d, const Weight& x);

} // namespace wv
