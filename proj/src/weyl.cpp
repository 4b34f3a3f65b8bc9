#include "wv/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wv {

std::string WeylElement::word_str() const {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ".";
        s += "s" + std::to_string(word[i] + 1);
    }
    return s;
}

Weight reflect_simple(const RootDatum& d, int i, const Weight& x) {
    if (i < 0 || i >= d.rank()) throw Error("simple reflection index out of range");
    const Weight& a = d.simple_roots[static_cast<std::size_t>(i)];
    Rat c = Rat(2) * wdot(x, a) / wdot(a, a);
    return wsub(x, wscale(c, a));
}

Weight reflect_root(const RootDatum& d, const Weight& beta, const Weight& x) {
    if (wis_zero(beta)) throw Error("reflection in zero vector");
    if (static_cast<int>(beta.size()) != d.ambient_dim) throw Error("root dimension mismatch");
    Rat c = Rat(2) * wdot(x, beta) / wdot(beta, beta);
    return wsub(x, wscale(c, beta));
}

Weight act(const RootDatum& d, const WeylElement& w, const Weight& x) {
    Weight y = x;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) y = reflect_simple(d, *it, y);
    return y;
}

WeylElement identity_element(const RootDatum& d) { return WeylElement{{}, d.rho}; }

WeylElement element_from_rho_image(const RootDatum& d, const Weight& rho_image) {
    // Ascend rho_image to rho; the inverse of the ascent word is the element.
    Weight y = rho_image;
    std::vector<int> ascent;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < d.rank(); ++i) {
            if (wdot(y, d.simple_roots[static_cast<std::size_t>(i)]) < Rat(0)) {
                neg = i;
                break;
            }
        }
        if (neg < 0) break;
        y = reflect_simple(d, neg, y);
        ascent.push_back(neg);
    }
    if (y != d.rho) throw Error("weight is not in the Weyl orbit of rho");
    // ascent applied left to right maps rho_image to rho; the element itself
    // is the inverse, whose right-to-left word is ascent in original order.
    return WeylElement{ascent, rho_image};
}

WeylElement compose(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
    return element_from_rho_image(d, act(d, a, b.rho_image));
}

WeylElement inverse(const RootDatum& d, const WeylElement& w) {
    std::vector<int> rev(w.word.rbegin(), w.word.rend());
    WeylElement inv{rev, d.rho};
    inv.rho_image = act(d, inv, d.rho);
    return element_from_rho_image(d, inv.rho_image);
}

WeylElement reflection_element(const RootDatum& d, const Weight& beta) {
    return element_from_rho_image(d, reflect_root(d, beta, d.rho));
}

std::vector<WeylElement> enumerate_group(const RootDatum& d) {
    std::set<Weight> seen{d.rho};
    std::vector<WeylElement> out{identity_element(d)};
    std::vector<WeylElement> frontier = out;
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const WeylElement& w : frontier) {
            for (int i = 0; i < d.rank(); ++i) {
                Weight img = reflect_simple(d, i, w.rho_image);
                if (seen.insert(img).second) {
                    WeylElement ext;
                    ext.word.reserve(w.word.size() + 1);
                    ext.word.push_back(i);
                    ext.word.insert(ext.word.end(), w.word.begin(), w.word.end());
                    ext.rho_image = img;
                    next.push_back(ext);
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

int length_by_inversions(const RootDatum& d, const WeylElement& w) {
    int n = 0;
    for (const auto& [root, mult] : d.positive_roots) {
        Weight img = act(d, w, root);
        if (d.is_positive_root(wneg(img))) ++n;
    }
    return n;
}

DominantResult to_dominant(const RootDatum& d, const Weight& x) {
    // Greedy ascent: each step fixes one negative pairing, so the step count
    // equals |{alpha > 0 : <x, alpha> < 0}|, the minimal possible length.
    Weight y = x;
    std::vector<int> steps;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < d.rank(); ++i) {
            if (wdot(y, d.simple_roots[static_cast<std::size_t>(i)]) < Rat(0)) {
                neg = i;
                break;
            }
        }
        if (neg < 0) break;
        y = reflect_simple(d, neg, y);
        steps.push_back(neg);
    }
    // steps applied in order map x to y; as a right-to-left word that is the
    // reverse sequence.
    WeylElement w{std::vector<int>(steps.rbegin(), steps.rend()), d.rho};
    w.rho_image = act(d, w, d.rho);
    return DominantResult{y, w, w.sign()};
}

std::vector<Weight> orbit(const RootDatum& d, const Weight& x) {
    std::set<Weight> seen{x};
    std::vector<Weight> frontier{x};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const Weight& y : frontier)
            for (int i = 0; i < d.rank(); ++i) {
                Weight img = reflect_simple(d, i, y);
                if (seen.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

} // namespace wv
